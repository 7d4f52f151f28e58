#include "filtval/instance.hpp"

#include <atomic>

namespace filtval {

FilteredInstance::FilteredInstance(std::string id, bool finite, bool stabilizes_to_zero,
                                   std::optional<int> stabilization_depth,
                                   std::optional<std::uint64_t> ring_size,
                                   std::optional<std::uint64_t> module_size)
    : id_(std::move(id)),
      tag_(next_tag()),
      finite_(finite),
      stabilizes_to_zero_(stabilizes_to_zero),
      stabilization_depth_(stabilization_depth),
      ring_size_(ring_size),
      module_size_(module_size) {}

std::uint32_t FilteredInstance::next_tag() {
    static std::atomic<std::uint32_t> counter{1};
    return counter.fetch_add(1);
}

std::vector<Element> FilteredInstance::ring_elements() const {
    throw CapabilityError(id_ + ": ring carrier is not enumerable");
}

std::vector<Element> FilteredInstance::module_elements() const {
    throw CapabilityError(id_ + ": module carrier is not enumerable");
}

Element FilteredInstance::sample_ring_element(Rng&) const {
    throw CapabilityError(id_ + ": no ring sampler");
}

Element FilteredInstance::sample_module_element(Rng&) const {
    throw CapabilityError(id_ + ": no module sampler");
}

std::optional<Element> FilteredInstance::sample_ring_at_level(int, Rng&) const { return std::nullopt; }
std::optional<Element> FilteredInstance::sample_module_at_level(int, Rng&) const { return std::nullopt; }

void FilteredInstance::require_ring_element(const Element& a) const {
    if (a.instance_tag != ring_tag())
        throw ForeignElement(id_ + ": ring element belongs to another instance");
}

void FilteredInstance::require_module_element(const Element& x) const {
    if (x.instance_tag != tag_)
        throw ForeignElement(id_ + ": module element belongs to another instance");
}

} // namespace filtval
