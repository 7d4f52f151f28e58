#include "filtval/indexed.hpp"

namespace filtval {

Indexed::Indexed(const InstancePtr& instance, const DerivedValuation& nu, int depth_arg)
    : inst(instance), depth(depth_arg) {
    if (!inst->finite()) throw CapabilityError(inst->id() + ": exhaustive tables need a finite carrier");

    R = inst->ring_elements();
    M = inst->module_elements();
    const int nr = static_cast<int>(R.size());
    const int nm = static_cast<int>(M.size());

    for (int i = 0; i < nr; ++i) r_index_.emplace(R[i].enc, i);
    for (int i = 0; i < nm; ++i) m_index_.emplace(M[i].enc, i);

    r_zero = r_of(inst->ring_zero());
    r_one = r_of(inst->ring_one());
    m_zero = m_of(inst->module_zero());

    radd.assign(nr, std::vector<int>(nr));
    rmul.assign(nr, std::vector<int>(nr));
    rneg.resize(nr);
    for (int i = 0; i < nr; ++i) {
        rneg[i] = r_of(inst->ring_negate(R[i]));
        for (int j = 0; j < nr; ++j) {
            radd[i][j] = r_of(inst->ring_add(R[i], R[j]));
            rmul[i][j] = r_of(inst->ring_multiply(R[i], R[j]));
        }
    }

    madd.assign(nm, std::vector<int>(nm));
    mneg.resize(nm);
    for (int i = 0; i < nm; ++i) {
        mneg[i] = m_of(inst->module_negate(M[i]));
        for (int j = 0; j < nm; ++j) madd[i][j] = m_of(inst->module_add(M[i], M[j]));
    }

    act.assign(nr, std::vector<int>(nm));
    for (int a = 0; a < nr; ++a)
        for (int x = 0; x < nm; ++x) act[a][x] = m_of(inst->scalar(R[a], M[x]));

    nu_m.reserve(static_cast<std::size_t>(nm));
    for (int x = 0; x < nm; ++x) {
        nu_m.push_back(nu(M[x]));
        if (!nu_m.back().exact()) nu_all_exact_ = false;
    }

    r_lvl.assign(static_cast<std::size_t>(depth) + 1, std::vector<char>(nr));
    m_lvl.assign(static_cast<std::size_t>(depth) + 1, std::vector<char>(nm));
    for (int n = 0; n <= depth; ++n) {
        for (int i = 0; i < nr; ++i) r_lvl[n][i] = inst->ring_level_member(R[i], n) ? 1 : 0;
        for (int i = 0; i < nm; ++i) m_lvl[n][i] = inst->module_level_member(M[i], n) ? 1 : 0;
    }
}

int Indexed::r_of(const Element& a) const {
    auto it = r_index_.find(a.enc);
    if (it == r_index_.end()) throw ForeignElement(inst->id() + ": ring element not in carrier");
    return it->second;
}

int Indexed::m_of(const Element& x) const {
    auto it = m_index_.find(x.enc);
    if (it == m_index_.end()) throw ForeignElement(inst->id() + ": module element not in carrier");
    return it->second;
}

bool Indexed::r_member(int a, int level) const {
    if (level <= depth) return r_lvl[static_cast<std::size_t>(level)][static_cast<std::size_t>(a)] != 0;
    return inst->ring_level_member(R[static_cast<std::size_t>(a)], level);
}

bool Indexed::m_member(int x, int level) const {
    if (level <= depth) return m_lvl[static_cast<std::size_t>(level)][static_cast<std::size_t>(x)] != 0;
    return inst->module_level_member(M[static_cast<std::size_t>(x)], level);
}

} // namespace filtval
