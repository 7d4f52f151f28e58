#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "filtval/instance.hpp"

namespace filtval {

/// R = M = Z/p^k with levels the images of (p^n). Stabilizes at level k.
InstancePtr make_zmod_padic(std::int64_t p, int k);

/// R = M = F_q[x]/(x^N) with levels the images of (x^n). Stabilizes at N.
InstancePtr make_poly_truncated(std::int64_t q, int N);

/// R = M = Z with levels (p^n). Infinite carrier; intersection of the levels
/// is {0}; exact closed forms for orbits, the valuation pair and (core : M).
InstancePtr make_int_padic(std::int64_t p);

/// R = M = F_q with R_0 = F_q and R_n = {0} for n >= 1.
InstancePtr make_field_trivial_tail(std::int64_t q);

/// R = M = Z/m with R_n = R for every n: strong and degenerate.
InstancePtr make_trivial_strong(std::int64_t m);

/// Same ring as the component; module is the direct sum of `copies` copies of
/// the component module with componentwise levels. Only copies == 2 is
/// supported.
InstancePtr make_direct_sum(const InstancePtr& component, int copies);

/// Frozen catalog: i1 = zmod_padic(3,2), i2 = zmod_padic(2,3),
/// i3 = poly_truncated(5,4), i4 = int_padic(3), i5 = field_trivial_tail(7),
/// i6 = trivial_strong(4), i7 = direct_sum(i1, 2).
const std::vector<std::string>& catalog_ids();
InstancePtr make_catalog_instance(const std::string& id);

/// Inline constructor spec: {"kind": "...", ...params}. Accepts catalog ids
/// via {"kind": "catalog", "id": "i1"} as well.
InstancePtr make_instance_from_spec(const nlohmann::json& spec);

bool is_prime(std::int64_t n);

} // namespace filtval
