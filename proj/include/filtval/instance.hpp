#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "filtval/element.hpp"
#include "filtval/errors.hpp"
#include "filtval/strategy.hpp"
#include "filtval/value.hpp"

namespace filtval {

/// A filtered ring R together with a filtered R-module M, both presented as
/// oracles: exact arithmetic, a total element order, enumeration when the
/// carrier is finite, and level membership for the two descending filtrations
/// {R_n} and {M_n}. Filtrations are predicates, not stored subgroup lattices,
/// so finite and infinite carriers are handled uniformly.
///
/// Instances are immutable after construction and safe to share across
/// threads.
class FilteredInstance {
public:
    virtual ~FilteredInstance() = default;

    FilteredInstance(const FilteredInstance&) = delete;
    FilteredInstance& operator=(const FilteredInstance&) = delete;

    const std::string& id() const { return id_; }
    std::uint32_t tag() const { return tag_; }
    // Tag carried by ring elements; differs from tag() when the ring is
    // borrowed from a component instance (direct sums).
    virtual std::uint32_t ring_tag() const { return tag_; }

    bool finite() const { return finite_; }
    std::optional<std::uint64_t> ring_size() const { return ring_size_; }
    std::optional<std::uint64_t> module_size() const { return module_size_; }

    /// Metadata: the intersection of all module levels is {0}.
    bool stabilizes_to_zero() const { return stabilizes_to_zero_; }
    /// Metadata: level membership is constant for levels >= depth.
    std::optional<int> stabilization_depth() const { return stabilization_depth_; }

    // --- ring arithmetic ---
    virtual Element ring_zero() const = 0;
    virtual Element ring_one() const = 0;
    virtual Element ring_add(const Element& a, const Element& b) const = 0;
    virtual Element ring_negate(const Element& a) const = 0;
    virtual Element ring_multiply(const Element& a, const Element& b) const = 0;

    // --- module arithmetic ---
    virtual Element module_zero() const = 0;
    virtual Element module_add(const Element& x, const Element& y) const = 0;
    virtual Element module_negate(const Element& x) const = 0;
    /// Action of a ring element on a module element.
    virtual Element scalar(const Element& a, const Element& x) const = 0;

    // --- canonical order ---
    virtual bool ring_less(const Element& a, const Element& b) const = 0;
    virtual bool module_less(const Element& x, const Element& y) const = 0;

    // --- enumeration (finite carriers only; element order) ---
    virtual std::vector<Element> ring_elements() const;
    virtual std::vector<Element> module_elements() const;

    // --- filtration oracles ---
    virtual bool ring_level_member(const Element& a, int level) const = 0;
    virtual bool module_level_member(const Element& x, int level) const = 0;

    // --- canonical strings ---
    virtual std::string ring_to_string(const Element& a) const = 0;
    virtual Element ring_parse(std::string_view s) const = 0;
    virtual std::string module_to_string(const Element& x) const = 0;
    virtual Element module_parse(std::string_view s) const = 0;

    // --- seeded sampling ---
    // Finite carriers default to uniform draws from the enumeration; infinite
    // instances override with bounded generators so composed products stay in
    // exact range.
    virtual Element sample_ring_element(Rng& rng) const;
    virtual Element sample_module_element(Rng& rng) const;
    /// A (not necessarily uniform) member of the given ring level.
    virtual std::optional<Element> sample_ring_at_level(int level, Rng& rng) const;
    virtual std::optional<Element> sample_module_at_level(int level, Rng& rng) const;

    // --- closed forms / hints (infinite instances) ---
    /// Exact value orbit {nu(a y) : a in R} when the instance knows it.
    virtual std::optional<ValueSet> orbit_closed_form(const Element& y) const { (void)y; return std::nullopt; }
    /// Exact membership in A_nu (strict=false) / P_nu (strict=true).
    virtual std::optional<bool> pair_membership_closed_form(const Element& a, bool strict) const {
        (void)a; (void)strict;
        return std::nullopt;
    }
    /// Exact membership in (nu^-1(inf) : M).
    virtual std::optional<bool> colon_core_closed_form(const Element& a) const { (void)a; return std::nullopt; }
    /// Designated units tried first in existential searches.
    virtual std::vector<Element> unit_hints() const { return {}; }
    /// Factor a level-(n+m) target as (ring level n) * (level m), when the
    /// instance knows how. module_side selects R_n * M_m vs R_n * R_m.
    virtual std::optional<std::pair<Element, Element>> strong_factor(const Element& target, int n, int m,
                                                                     bool module_side) const {
        (void)target; (void)n; (void)m; (void)module_side;
        return std::nullopt;
    }

    // --- guards ---
    void require_ring_element(const Element& a) const;
    void require_module_element(const Element& x) const;

protected:
    FilteredInstance(std::string id, bool finite, bool stabilizes_to_zero,
                     std::optional<int> stabilization_depth, std::optional<std::uint64_t> ring_size,
                     std::optional<std::uint64_t> module_size);

    static std::uint32_t next_tag();

private:
    std::string id_;
    std::uint32_t tag_;
    bool finite_;
    bool stabilizes_to_zero_;
    std::optional<int> stabilization_depth_;
    std::optional<std::uint64_t> ring_size_;
    std::optional<std::uint64_t> module_size_;
};

using InstancePtr = std::shared_ptr<const FilteredInstance>;

} // namespace filtval
