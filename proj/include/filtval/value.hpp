#pragma once

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace filtval {

/// A point of the value domain: a non-negative level or infinity.
///
/// Infinity carries an exactness flag. An inexact infinity is produced by a
/// level scan that hit its cap without a proof of membership in every level;
/// it orders exactly like a proved infinity, but any verdict that depends on
/// it is tainted and must be reported INCONCLUSIVE rather than PASS/FAIL.
class ExtendedValue {
public:
    static ExtendedValue finite(int n) {
        if (n < 0) throw std::logic_error("finite value must be >= 0");
        return ExtendedValue(n, true, true);
    }
    static ExtendedValue infinity(bool exact) { return ExtendedValue(0, false, exact); }

    bool is_finite() const { return finite_; }
    bool is_infinite() const { return !finite_; }
    // Finite values are always exact.
    bool exact() const { return exact_; }

    int finite_value() const {
        if (!finite_) throw std::logic_error("finite_value() on infinity");
        return value_;
    }

    std::string to_string() const {
        if (finite_) return std::to_string(value_);
        return exact_ ? "inf(exact)" : "inf(capped)";
    }

    // Total order; the two infinities are order-equal regardless of exactness.
    friend std::strong_ordering order_compare(const ExtendedValue& a, const ExtendedValue& b) {
        if (a.finite_ && b.finite_) return a.value_ <=> b.value_;
        if (a.finite_) return std::strong_ordering::less;
        if (b.finite_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
        return order_compare(a, b) == std::strong_ordering::equal;
    }
    friend bool operator!=(const ExtendedValue& a, const ExtendedValue& b) { return !(a == b); }
    friend bool operator<(const ExtendedValue& a, const ExtendedValue& b) {
        return order_compare(a, b) == std::strong_ordering::less;
    }
    friend bool operator<=(const ExtendedValue& a, const ExtendedValue& b) {
        return order_compare(a, b) != std::strong_ordering::greater;
    }
    friend bool operator>(const ExtendedValue& a, const ExtendedValue& b) { return b < a; }
    friend bool operator>=(const ExtendedValue& a, const ExtendedValue& b) { return b <= a; }

    // Order-equal and same exactness flag.
    static bool identical(const ExtendedValue& a, const ExtendedValue& b) {
        return a.finite_ == b.finite_ && a.value_ == b.value_ && a.exact_ == b.exact_;
    }

    // True when either side is a capped infinity.
    static bool taints(const ExtendedValue& a) { return !a.exact_; }

private:
    ExtendedValue(int v, bool finite, bool exact) : value_(v), finite_(finite), exact_(exact) {}
    int value_;
    bool finite_;
    bool exact_;
};

inline ExtendedValue min_value(const ExtendedValue& a, const ExtendedValue& b) {
    return a <= b ? a : b;
}

/// A set of values: finitely many points, an optional upward-closed ray, and
/// an optional infinity. Represents value orbits exactly where possible.
struct ValueSet {
    std::set<int> finite_points;
    std::optional<int> ray_from;
    bool contains_infinity = false;
    bool exact = true;

    bool contains_finite(int v) const {
        if (finite_points.count(v)) return true;
        return ray_from && v >= *ray_from;
    }

    bool contains(const ExtendedValue& v) const {
        if (v.is_infinite()) return contains_infinity;
        return contains_finite(v.finite_value());
    }

    bool operator==(const ValueSet& other) const = default;
};

} // namespace filtval
