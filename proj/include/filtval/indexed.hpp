#pragma once

#include <unordered_map>
#include <vector>

#include "filtval/instance.hpp"
#include "filtval/valuation.hpp"

namespace filtval {

/// Index-based tabulation of a finite instance: carriers in element order,
/// operation tables, level membership up to a depth, and the derived
/// valuation per module element. Pure memoization of the instance oracles.
struct Indexed {
    Indexed(const InstancePtr& inst, const DerivedValuation& nu, int depth);

    const InstancePtr inst;
    int depth; // levels tabulated: 0..depth inclusive

    std::vector<Element> R, M;
    int r_zero = 0, r_one = 0, m_zero = 0;

    std::vector<std::vector<int>> radd, rmul, madd, act; // act[a][x]
    std::vector<int> rneg, mneg;

    std::vector<ExtendedValue> nu_m; // per module index

    // lvl[level][index]
    std::vector<std::vector<char>> r_lvl, m_lvl;

    int r_of(const Element& a) const;
    int m_of(const Element& x) const;

    bool r_member(int a, int level) const;
    bool m_member(int x, int level) const;

    bool nu_all_exact() const { return nu_all_exact_; }

private:
    std::unordered_map<Encoding, int, EncodingHash> r_index_, m_index_;
    bool nu_all_exact_ = true;
};

} // namespace filtval
