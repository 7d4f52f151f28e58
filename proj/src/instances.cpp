#include "filtval/instances.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

namespace filtval {

namespace {

std::int64_t parse_int64(std::string_view s, const std::string& what) {
    std::int64_t v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw ConfigError("not an integer " + what + ": '" + std::string(s) + "'");
    return v;
}

std::string strip_spaces(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (c != ' ' && c != '\t') out.push_back(c);
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer product out of range");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer sum out of range");
    return r;
}

// p^n as int64; nullopt when it does not fit.
std::optional<std::int64_t> pow_checked(std::int64_t p, int n) {
    std::int64_t r = 1;
    for (int i = 0; i < n; ++i) {
        if (__builtin_mul_overflow(r, p, &r)) return std::nullopt;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Residue carriers Z/m (ring == module).
// ---------------------------------------------------------------------------

class ZmodBase : public FilteredInstance {
public:
    Element ring_zero() const override { return make(0); }
    Element ring_one() const override { return make(1); }
    Element ring_add(const Element& a, const Element& b) const override {
        require_ring_element(a);
        require_ring_element(b);
        return make(a.enc[0] + b.enc[0]);
    }
    Element ring_negate(const Element& a) const override {
        require_ring_element(a);
        return make(-a.enc[0]);
    }
    Element ring_multiply(const Element& a, const Element& b) const override {
        require_ring_element(a);
        require_ring_element(b);
        return make(a.enc[0] * b.enc[0]);
    }

    Element module_zero() const override { return ring_zero(); }
    Element module_add(const Element& x, const Element& y) const override { return ring_add(x, y); }
    Element module_negate(const Element& x) const override { return ring_negate(x); }
    Element scalar(const Element& a, const Element& x) const override { return ring_multiply(a, x); }

    bool ring_less(const Element& a, const Element& b) const override { return a.enc[0] < b.enc[0]; }
    bool module_less(const Element& x, const Element& y) const override { return ring_less(x, y); }

    std::vector<Element> ring_elements() const override {
        std::vector<Element> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (std::int64_t v = 0; v < m_; ++v) out.push_back(make(v));
        return out;
    }
    std::vector<Element> module_elements() const override { return ring_elements(); }

    bool module_level_member(const Element& x, int level) const override {
        return ring_level_member(x, level);
    }

    std::string ring_to_string(const Element& a) const override {
        require_ring_element(a);
        return std::to_string(a.enc[0]);
    }
    Element ring_parse(std::string_view s) const override {
        return make(parse_int64(strip_spaces(s), "residue"));
    }
    std::string module_to_string(const Element& x) const override { return ring_to_string(x); }
    Element module_parse(std::string_view s) const override { return ring_parse(s); }

    std::int64_t modulus() const { return m_; }

protected:
    ZmodBase(std::string id, std::int64_t m, bool stab_zero, std::optional<int> depth)
        : FilteredInstance(std::move(id), true, stab_zero, depth, static_cast<std::uint64_t>(m),
                           static_cast<std::uint64_t>(m)),
          m_(m) {}

    Element make(std::int64_t v) const { return Element{tag(), {((v % m_) + m_) % m_}}; }

    std::int64_t m_;
};

class ZmodPadicInstance final : public ZmodBase {
public:
    ZmodPadicInstance(std::int64_t p, int k, std::int64_t m, std::string id)
        : ZmodBase(std::move(id), m, /*stab_zero=*/true, /*depth=*/k), p_(p), k_(k) {}

    bool ring_level_member(const Element& a, int level) const override {
        require_ring_element(a);
        if (level <= 0) return true;
        int e = std::min(level, k_);
        std::int64_t q = *pow_checked(p_, e); // p^k == m fits by construction
        return a.enc[0] % q == 0;
    }

private:
    std::int64_t p_;
    int k_;
};

class FieldTrivialTailInstance final : public ZmodBase {
public:
    explicit FieldTrivialTailInstance(std::int64_t q)
        : ZmodBase("field_trivial_tail(" + std::to_string(q) + ")", q, /*stab_zero=*/true,
                   /*depth=*/1) {}

    bool ring_level_member(const Element& a, int level) const override {
        require_ring_element(a);
        return level <= 0 || a.enc[0] == 0;
    }
};

class TrivialStrongInstance final : public ZmodBase {
public:
    explicit TrivialStrongInstance(std::int64_t m)
        : ZmodBase("trivial_strong(" + std::to_string(m) + ")", m, /*stab_zero=*/false,
                   /*depth=*/0) {}

    bool ring_level_member(const Element& a, int) const override {
        require_ring_element(a);
        return true;
    }
};

// ---------------------------------------------------------------------------
// F_q[x]/(x^N), elements as trimmed low-to-high coefficient lists.
// ---------------------------------------------------------------------------

class PolyTruncatedInstance final : public FilteredInstance {
public:
    PolyTruncatedInstance(std::int64_t q, int n, std::uint64_t size, std::string id)
        : FilteredInstance(std::move(id), true, true, n, size, size), q_(q), n_(n) {}

    Element ring_zero() const override { return Element{tag(), {}}; }
    Element ring_one() const override { return Element{tag(), {1}}; }

    Element ring_add(const Element& a, const Element& b) const override {
        require_ring_element(a);
        require_ring_element(b);
        Encoding out(std::max(a.enc.size(), b.enc.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i) {
            std::int64_t c = 0;
            if (i < a.enc.size()) c += a.enc[i];
            if (i < b.enc.size()) c += b.enc[i];
            out[i] = c % q_;
        }
        trim(out);
        return Element{tag(), std::move(out)};
    }

    Element ring_negate(const Element& a) const override {
        require_ring_element(a);
        Encoding out(a.enc);
        for (auto& c : out) c = (q_ - c) % q_;
        trim(out);
        return Element{tag(), std::move(out)};
    }

    Element ring_multiply(const Element& a, const Element& b) const override {
        require_ring_element(a);
        require_ring_element(b);
        if (a.enc.empty() || b.enc.empty()) return ring_zero();
        Encoding out(std::min<std::size_t>(a.enc.size() + b.enc.size() - 1,
                                           static_cast<std::size_t>(n_)),
                     0);
        for (std::size_t i = 0; i < a.enc.size(); ++i) {
            if (a.enc[i] == 0) continue;
            for (std::size_t j = 0; j < b.enc.size() && i + j < out.size(); ++j)
                out[i + j] = (out[i + j] + a.enc[i] * b.enc[j]) % q_;
        }
        trim(out);
        return Element{tag(), std::move(out)};
    }

    Element module_zero() const override { return ring_zero(); }
    Element module_add(const Element& x, const Element& y) const override { return ring_add(x, y); }
    Element module_negate(const Element& x) const override { return ring_negate(x); }
    Element scalar(const Element& a, const Element& x) const override { return ring_multiply(a, x); }

    // degree first, then coefficient lists lexicographically (constant term first)
    bool ring_less(const Element& a, const Element& b) const override {
        if (a.enc.size() != b.enc.size()) return a.enc.size() < b.enc.size();
        return std::lexicographical_compare(a.enc.begin(), a.enc.end(), b.enc.begin(), b.enc.end());
    }
    bool module_less(const Element& x, const Element& y) const override { return ring_less(x, y); }

    std::vector<Element> ring_elements() const override {
        std::vector<Element> out;
        out.push_back(ring_zero());
        for (int d = 0; d < n_; ++d) {
            // odometer with c0 most significant so the stream is in order
            Encoding c(static_cast<std::size_t>(d) + 1, 0);
            c[d] = 1;
            while (true) {
                out.push_back(Element{tag(), c});
                int i = d;
                while (i >= 0) {
                    if (++c[i] < q_) break;
                    c[i] = 0;
                    --i;
                }
                if (i < 0) break;
                if (c[d] == 0) c[d] = 1; // leading coefficient stays nonzero
            }
        }
        return out;
    }
    std::vector<Element> module_elements() const override { return ring_elements(); }

    bool ring_level_member(const Element& a, int level) const override {
        require_ring_element(a);
        if (level <= 0) return true;
        if (a.enc.empty()) return true; // zero lies in every level
        if (level >= n_) return false;  // (x^level) = {0} once level reaches N
        if (a.enc.size() <= static_cast<std::size_t>(level)) return false;
        for (int i = 0; i < level; ++i)
            if (a.enc[static_cast<std::size_t>(i)] != 0) return false;
        return true;
    }
    bool module_level_member(const Element& x, int level) const override {
        return ring_level_member(x, level);
    }

    std::string ring_to_string(const Element& a) const override {
        require_ring_element(a);
        if (a.enc.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < a.enc.size(); ++i) {
            std::int64_t c = a.enc[i];
            if (c == 0) continue;
            if (!out.empty()) out += "+";
            if (i == 0) {
                out += std::to_string(c);
            } else {
                if (c != 1) out += std::to_string(c);
                out += "x";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    Element ring_parse(std::string_view raw) const override {
        std::string s = strip_spaces(raw);
        if (s.empty()) throw ConfigError("empty polynomial string");
        if (s == "0") return ring_zero();
        Encoding coeffs(static_cast<std::size_t>(n_), 0);
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t end = s.find('+', pos);
            if (end == std::string::npos) end = s.size();
            std::string_view term(s.data() + pos, end - pos);
            if (term.empty()) throw ConfigError("malformed polynomial: '" + s + "'");
            parse_term(term, coeffs, s);
            pos = end + 1;
        }
        trim(coeffs);
        return Element{tag(), std::move(coeffs)};
    }

    std::string module_to_string(const Element& x) const override { return ring_to_string(x); }
    Element module_parse(std::string_view s) const override { return ring_parse(s); }

private:
    void parse_term(std::string_view term, Encoding& coeffs, const std::string& whole) const {
        std::int64_t coef = 1;
        std::size_t i = 0;
        if (i < term.size() && (std::isdigit(static_cast<unsigned char>(term[i])))) {
            std::size_t j = i;
            while (j < term.size() && std::isdigit(static_cast<unsigned char>(term[j]))) ++j;
            coef = parse_int64(term.substr(i, j - i), "coefficient");
            i = j;
        }
        std::int64_t exp = 0;
        if (i < term.size()) {
            if (term[i] != 'x') throw ConfigError("malformed polynomial: '" + whole + "'");
            ++i;
            exp = 1;
            if (i < term.size()) {
                if (term[i] != '^') throw ConfigError("malformed polynomial: '" + whole + "'");
                ++i;
                if (i >= term.size()) throw ConfigError("malformed polynomial: '" + whole + "'");
                exp = parse_int64(term.substr(i), "exponent");
                i = term.size();
                if (exp < 0) throw ConfigError("negative exponent in '" + whole + "'");
            }
        }
        if (i != term.size()) throw ConfigError("malformed polynomial: '" + whole + "'");
        if (exp >= n_) return; // x^N == 0
        coeffs[static_cast<std::size_t>(exp)] =
            (coeffs[static_cast<std::size_t>(exp)] + ((coef % q_) + q_) % q_) % q_;
    }

    static void trim(Encoding& e) {
        while (!e.empty() && e.back() == 0) e.pop_back();
    }

    std::int64_t q_;
    int n_;
};

// ---------------------------------------------------------------------------
// Z with the (p^n) filtration. Infinite carrier; bounded samplers keep every
// composed product inside int64. Closed forms for orbits, pair and (core:M).
// ---------------------------------------------------------------------------

class IntPadicInstance final : public FilteredInstance {
public:
    explicit IntPadicInstance(std::int64_t p)
        : FilteredInstance("int_padic(" + std::to_string(p) + ")", false, true, std::nullopt,
                           std::nullopt, std::nullopt),
          p_(p) {}

    Element ring_zero() const override { return make(0); }
    Element ring_one() const override { return make(1); }
    Element ring_add(const Element& a, const Element& b) const override {
        require_ring_element(a);
        require_ring_element(b);
        return make(checked_add(a.enc[0], b.enc[0]));
    }
    Element ring_negate(const Element& a) const override {
        require_ring_element(a);
        if (a.enc[0] == INT64_MIN) throw OverflowError("negation out of range");
        return make(-a.enc[0]);
    }
    Element ring_multiply(const Element& a, const Element& b) const override {
        require_ring_element(a);
        require_ring_element(b);
        return make(checked_mul(a.enc[0], b.enc[0]));
    }

    Element module_zero() const override { return ring_zero(); }
    Element module_add(const Element& x, const Element& y) const override { return ring_add(x, y); }
    Element module_negate(const Element& x) const override { return ring_negate(x); }
    Element scalar(const Element& a, const Element& x) const override { return ring_multiply(a, x); }

    bool ring_less(const Element& a, const Element& b) const override { return a.enc[0] < b.enc[0]; }
    bool module_less(const Element& x, const Element& y) const override { return ring_less(x, y); }

    bool ring_level_member(const Element& a, int level) const override {
        require_ring_element(a);
        if (level <= 0) return true;
        if (a.enc[0] == 0) return true;
        auto q = pow_checked(p_, level);
        if (!q) return false; // |a| < p^level for any representable a
        return a.enc[0] % *q == 0;
    }
    bool module_level_member(const Element& x, int level) const override {
        return ring_level_member(x, level);
    }

    std::string ring_to_string(const Element& a) const override {
        require_ring_element(a);
        return std::to_string(a.enc[0]);
    }
    Element ring_parse(std::string_view s) const override {
        return make(parse_int64(strip_spaces(s), "integer"));
    }
    std::string module_to_string(const Element& x) const override { return ring_to_string(x); }
    Element module_parse(std::string_view s) const override { return ring_parse(s); }

    // x = u * p^e with |u| <= 99 and e <= 8: any triple product of samples
    // stays far from the int64 boundary.
    Element sample_ring_element(Rng& rng) const override {
        std::int64_t u = rng.uniform(-99, 99);
        int e = static_cast<int>(rng.uniform(0, 8));
        return make(u * *pow_checked(p_, e));
    }
    Element sample_module_element(Rng& rng) const override { return sample_ring_element(rng); }

    std::optional<Element> sample_ring_at_level(int level, Rng& rng) const override {
        auto q = pow_checked(p_, level);
        if (!q || *q > (INT64_MAX / 128)) return std::nullopt;
        return make(rng.uniform(-99, 99) * *q);
    }
    std::optional<Element> sample_module_at_level(int level, Rng& rng) const override {
        return sample_ring_at_level(level, rng);
    }

    std::optional<ValueSet> orbit_closed_form(const Element& y) const override {
        require_module_element(y);
        ValueSet s;
        s.exact = true;
        s.contains_infinity = true; // a = 0 always contributes
        if (y.enc[0] != 0) s.ray_from = padic_exponent(y.enc[0]);
        return s;
    }

    std::optional<bool> pair_membership_closed_form(const Element& a, bool strict) const override {
        require_ring_element(a);
        if (!strict) return true;          // nu(ax) = nu(a) + nu(x) >= nu(x)
        return a.enc[0] % p_ == 0;         // strict iff nu(a) >= 1
    }

    std::optional<bool> colon_core_closed_form(const Element& a) const override {
        require_ring_element(a);
        return a.enc[0] == 0; // torsion-free: aM in {0} forces a = 0
    }

    std::vector<Element> unit_hints() const override { return {make(1), make(-1)}; }

    std::optional<std::pair<Element, Element>> strong_factor(const Element& target, int n, int m,
                                                             bool) const override {
        require_module_element(target);
        auto q = pow_checked(p_, n);
        if (!q) return std::nullopt;
        if (target.enc[0] % *q != 0) return std::nullopt;
        (void)m;
        return std::make_pair(make(*q), make(target.enc[0] / *q));
    }

private:
    Element make(std::int64_t v) const { return Element{tag(), {v}}; }

    int padic_exponent(std::int64_t v) const {
        int e = 0;
        while (v % p_ == 0) {
            v /= p_;
            ++e;
        }
        return e;
    }

    std::int64_t p_;
};

// ---------------------------------------------------------------------------
// Direct sum: same ring as the component, module = component module squared,
// levels componentwise. Encoding is length-prefixed concatenation.
// ---------------------------------------------------------------------------

class DirectSumInstance final : public FilteredInstance {
public:
    DirectSumInstance(InstancePtr comp, std::string id)
        : FilteredInstance(std::move(id), comp->finite(), comp->stabilizes_to_zero(),
                           comp->stabilization_depth(), comp->ring_size(),
                           square(comp->module_size())),
          comp_(std::move(comp)) {}

    std::uint32_t ring_tag() const override { return comp_->ring_tag(); }

    Element ring_zero() const override { return comp_->ring_zero(); }
    Element ring_one() const override { return comp_->ring_one(); }
    Element ring_add(const Element& a, const Element& b) const override { return comp_->ring_add(a, b); }
    Element ring_negate(const Element& a) const override { return comp_->ring_negate(a); }
    Element ring_multiply(const Element& a, const Element& b) const override {
        return comp_->ring_multiply(a, b);
    }
    bool ring_less(const Element& a, const Element& b) const override { return comp_->ring_less(a, b); }
    std::vector<Element> ring_elements() const override { return comp_->ring_elements(); }
    bool ring_level_member(const Element& a, int level) const override {
        return comp_->ring_level_member(a, level);
    }
    std::string ring_to_string(const Element& a) const override { return comp_->ring_to_string(a); }
    Element ring_parse(std::string_view s) const override { return comp_->ring_parse(s); }

    Element module_zero() const override { return pack(comp_->module_zero(), comp_->module_zero()); }
    Element module_add(const Element& x, const Element& y) const override {
        auto [x1, x2] = unpack(x);
        auto [y1, y2] = unpack(y);
        return pack(comp_->module_add(x1, y1), comp_->module_add(x2, y2));
    }
    Element module_negate(const Element& x) const override {
        auto [x1, x2] = unpack(x);
        return pack(comp_->module_negate(x1), comp_->module_negate(x2));
    }
    Element scalar(const Element& a, const Element& x) const override {
        auto [x1, x2] = unpack(x);
        return pack(comp_->scalar(a, x1), comp_->scalar(a, x2));
    }

    bool module_less(const Element& x, const Element& y) const override {
        auto [x1, x2] = unpack(x);
        auto [y1, y2] = unpack(y);
        if (comp_->module_less(x1, y1)) return true;
        if (comp_->module_less(y1, x1)) return false;
        return comp_->module_less(x2, y2);
    }

    std::vector<Element> module_elements() const override {
        auto base = comp_->module_elements();
        std::vector<Element> out;
        out.reserve(base.size() * base.size());
        for (const auto& a : base)
            for (const auto& b : base) out.push_back(pack(a, b));
        return out;
    }

    bool module_level_member(const Element& x, int level) const override {
        auto [x1, x2] = unpack(x);
        return comp_->module_level_member(x1, level) && comp_->module_level_member(x2, level);
    }

    std::string module_to_string(const Element& x) const override {
        auto [x1, x2] = unpack(x);
        return "(" + comp_->module_to_string(x1) + "," + comp_->module_to_string(x2) + ")";
    }

    Element module_parse(std::string_view raw) const override {
        std::string s = strip_spaces(raw);
        if (s.size() < 2 || s.front() != '(' || s.back() != ')')
            throw ConfigError("pair element must look like '(a,b)': '" + s + "'");
        std::string_view inner(s.data() + 1, s.size() - 2);
        int depth = 0;
        std::size_t comma = std::string::npos;
        for (std::size_t i = 0; i < inner.size(); ++i) {
            if (inner[i] == '(') ++depth;
            else if (inner[i] == ')') --depth;
            else if (inner[i] == ',' && depth == 0) {
                comma = i;
                break;
            }
        }
        if (comma == std::string::npos) throw ConfigError("pair element needs a comma: '" + s + "'");
        return pack(comp_->module_parse(inner.substr(0, comma)),
                    comp_->module_parse(inner.substr(comma + 1)));
    }

private:
    static std::optional<std::uint64_t> square(std::optional<std::uint64_t> n) {
        if (!n) return std::nullopt;
        return *n * *n;
    }

    Element pack(const Element& a, const Element& b) const {
        Encoding e;
        e.reserve(a.enc.size() + b.enc.size() + 2);
        e.push_back(static_cast<std::int64_t>(a.enc.size()));
        e.insert(e.end(), a.enc.begin(), a.enc.end());
        e.push_back(static_cast<std::int64_t>(b.enc.size()));
        e.insert(e.end(), b.enc.begin(), b.enc.end());
        return Element{tag(), std::move(e)};
    }

    std::pair<Element, Element> unpack(const Element& x) const {
        require_module_element(x);
        const Encoding& e = x.enc;
        std::size_t n1 = static_cast<std::size_t>(e.at(0));
        Element a{comp_->tag(), Encoding(e.begin() + 1, e.begin() + 1 + n1)};
        std::size_t off = 1 + n1;
        std::size_t n2 = static_cast<std::size_t>(e.at(off));
        Element b{comp_->tag(), Encoding(e.begin() + off + 1, e.begin() + off + 1 + n2)};
        return {a, b};
    }

    InstancePtr comp_;
};

} // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

InstancePtr make_zmod_padic(std::int64_t p, int k) {
    if (!is_prime(p)) throw BadParameter("zmod_padic: p must be prime, got " + std::to_string(p));
    if (k < 1) throw BadParameter("zmod_padic: k must be >= 1");
    auto m = pow_checked(p, k);
    if (!m || *m > (1 << 20)) throw BadParameter("zmod_padic: p^k too large");
    return std::make_shared<ZmodPadicInstance>(
        p, k, *m, "zmod_padic(" + std::to_string(p) + "," + std::to_string(k) + ")");
}

InstancePtr make_poly_truncated(std::int64_t q, int n) {
    if (!is_prime(q)) throw BadParameter("poly_truncated: q must be prime, got " + std::to_string(q));
    if (n < 1) throw BadParameter("poly_truncated: N must be >= 1");
    std::uint64_t size = 1;
    for (int i = 0; i < n; ++i) {
        size *= static_cast<std::uint64_t>(q);
        if (size > (1 << 20)) throw BadParameter("poly_truncated: q^N too large");
    }
    return std::make_shared<PolyTruncatedInstance>(
        q, n, size, "poly_truncated(" + std::to_string(q) + "," + std::to_string(n) + ")");
}

InstancePtr make_int_padic(std::int64_t p) {
    if (!is_prime(p)) throw BadParameter("int_padic: p must be prime, got " + std::to_string(p));
    return std::make_shared<IntPadicInstance>(p);
}

InstancePtr make_field_trivial_tail(std::int64_t q) {
    if (!is_prime(q)) throw BadParameter("field_trivial_tail: q must be prime, got " + std::to_string(q));
    return std::make_shared<FieldTrivialTailInstance>(q);
}

InstancePtr make_trivial_strong(std::int64_t m) {
    if (m < 2) throw BadParameter("trivial_strong: modulus must be >= 2");
    if (m > (1 << 20)) throw BadParameter("trivial_strong: modulus too large");
    return std::make_shared<TrivialStrongInstance>(m);
}

InstancePtr make_direct_sum(const InstancePtr& component, int copies) {
    if (!component) throw BadParameter("direct_sum: null component");
    if (copies != 2) throw BadParameter("direct_sum: only copies == 2 is supported");
    return std::make_shared<DirectSumInstance>(component,
                                               "direct_sum(" + component->id() + ",2)");
}

const std::vector<std::string>& catalog_ids() {
    static const std::vector<std::string> ids{"i1", "i2", "i3", "i4", "i5", "i6", "i7"};
    return ids;
}

InstancePtr make_catalog_instance(const std::string& id) {
    if (id == "i1") return make_zmod_padic(3, 2);
    if (id == "i2") return make_zmod_padic(2, 3);
    if (id == "i3") return make_poly_truncated(5, 4);
    if (id == "i4") return make_int_padic(3);
    if (id == "i5") return make_field_trivial_tail(7);
    if (id == "i6") return make_trivial_strong(4);
    if (id == "i7") return make_direct_sum(make_zmod_padic(3, 2), 2);
    throw ConfigError("unknown catalog instance id '" + id + "'");
}

namespace {

std::int64_t spec_int(const nlohmann::json& spec, const char* key) {
    if (!spec.contains(key) || !spec[key].is_number_integer())
        throw ConfigError(std::string("instance spec: missing integer field '") + key + "'");
    return spec[key].get<std::int64_t>();
}

} // namespace

InstancePtr make_instance_from_spec(const nlohmann::json& spec) {
    if (spec.is_string()) return make_catalog_instance(spec.get<std::string>());
    if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string())
        throw ConfigError("instance spec must be a catalog id or {\"kind\": ...} object");
    const std::string kind = spec["kind"].get<std::string>();
    if (kind == "catalog") {
        if (!spec.contains("id") || !spec["id"].is_string())
            throw ConfigError("instance spec: catalog kind needs string field 'id'");
        return make_catalog_instance(spec["id"].get<std::string>());
    }
    if (kind == "zmod_padic")
        return make_zmod_padic(spec_int(spec, "p"), static_cast<int>(spec_int(spec, "k")));
    if (kind == "poly_truncated")
        return make_poly_truncated(spec_int(spec, "q"), static_cast<int>(spec_int(spec, "N")));
    if (kind == "int_padic") return make_int_padic(spec_int(spec, "p"));
    if (kind == "field_trivial_tail") return make_field_trivial_tail(spec_int(spec, "q"));
    if (kind == "trivial_strong") return make_trivial_strong(spec_int(spec, "m"));
    if (kind == "direct_sum") {
        if (!spec.contains("component"))
            throw ConfigError("instance spec: direct_sum needs field 'component'");
        int copies = spec.contains("copies") ? static_cast<int>(spec_int(spec, "copies")) : 2;
        return make_direct_sum(make_instance_from_spec(spec["component"]), copies);
    }
    throw ConfigError("unknown instance kind '" + kind + "'");
}

} // namespace filtval
