#include <doctest.h>

#include "filtval/strategy.hpp"
#include "filtval/value.hpp"

using filtval::ExtendedValue;
using filtval::ValueSet;

TEST_CASE("extended value ordering") {
    auto f2 = ExtendedValue::finite(2);
    auto f5 = ExtendedValue::finite(5);
    auto big = ExtendedValue::finite(1000000);
    auto inf = ExtendedValue::infinity(true);
    auto capped = ExtendedValue::infinity(false);

    CHECK(f2 < f5);
    CHECK(big < inf);
    CHECK(inf == capped); // order-equal, exactness aside
    CHECK(!ExtendedValue::identical(inf, capped));
    CHECK(ExtendedValue::taints(capped));
    CHECK(!ExtendedValue::taints(inf));
    CHECK(!ExtendedValue::taints(f2));
    CHECK(f2.to_string() == "2");
    CHECK(inf.to_string() == "inf(exact)");
    CHECK(capped.to_string() == "inf(capped)");
}

TEST_CASE("ordering is total on a random sample") {
    filtval::Rng rng(7);
    std::vector<ExtendedValue> vals;
    for (int i = 0; i < 50; ++i) {
        int roll = static_cast<int>(rng.uniform(0, 9));
        if (roll == 0) vals.push_back(ExtendedValue::infinity(true));
        else if (roll == 1) vals.push_back(ExtendedValue::infinity(false));
        else vals.push_back(ExtendedValue::finite(static_cast<int>(rng.uniform(0, 20))));
    }
    for (const auto& a : vals) {
        CHECK(a <= a);
        for (const auto& b : vals) {
            CHECK((a <= b || b <= a));
            if (a <= b && b <= a) CHECK(a == b);
            for (const auto& c : vals)
                if (a <= b && b <= c) CHECK(a <= c);
        }
    }
}

TEST_CASE("value set membership") {
    ValueSet s;
    s.finite_points = {1, 4};
    s.ray_from = 10;
    s.contains_infinity = true;

    CHECK(s.contains(ExtendedValue::finite(1)));
    CHECK(s.contains(ExtendedValue::finite(4)));
    CHECK(!s.contains(ExtendedValue::finite(5)));
    CHECK(s.contains(ExtendedValue::finite(10)));
    CHECK(s.contains(ExtendedValue::finite(123)));
    CHECK(s.contains(ExtendedValue::infinity(true)));

    ValueSet empty;
    CHECK(!empty.contains(ExtendedValue::finite(0)));
    CHECK(!empty.contains(ExtendedValue::infinity(true)));
}

TEST_CASE("seeded rng replays") {
    filtval::Rng a(42), b(42), c(43);
    bool all_equal = true, any_diff = false;
    for (int i = 0; i < 200; ++i) {
        auto va = a.uniform(-50, 50);
        auto vb = b.uniform(-50, 50);
        auto vc = c.uniform(-50, 50);
        if (va != vb) all_equal = false;
        if (va != vc) any_diff = true;
    }
    CHECK(all_equal);
    CHECK(any_diff);
}
