#include <catch2/catch.hpp>

#include "ffdyn/poly.hpp"
#include "helpers.hpp"

using namespace ffdyn;

TEST_CASE("poly normalization and degree sentinel", "[poly]") {
    FieldCtx f3(3, 1);
    Poly z = poly_from_ints(f3, {0, 0, 0});
    CHECK(z.is_zero());
    CHECK(z.deg() == Poly::kZeroDeg);
    CHECK(z.deg() < poly_one(f3).deg());
    CHECK(poly_from_ints(f3, {1, 2, 0, 0}).deg() == 1);
}

TEST_CASE("ring examples", "[poly]") {
    FieldCtx f2(2, 1), f3(3, 1);
    CHECK(poly_mul(f2, poly_from_ints(f2, {1, 1}), poly_from_ints(f2, {1, 1, 1}))
          == poly_from_ints(f2, {1, 0, 0, 1}));
    CHECK(poly_rem(f3, poly_xn_minus_1(f3, 5), poly_from_ints(f3, {2, 1})).is_zero());
    Poly ym1 = poly_from_ints(f3, {2, 1});
    CHECK(poly_mul(f3, ym1, ym1) == poly_from_ints(f3, {1, 1, 1}));
    CHECK_THROWS_AS(poly_divmod(f3, ym1, poly_zero()), std::domain_error);
}

TEST_CASE("gcd examples, including the per-field pair", "[poly]") {
    FieldCtx f2(2, 1), f3(3, 1);
    // gcd(1, sum y^i) = 1 in any field
    for (unsigned n : {3u, 5u, 7u}) {
        Poly allones = Poly::from_coeffs(std::vector<FieldElement>(n, f3.one()));
        CHECK(poly_is_one(f3, poly_gcd(f3, poly_one(f3), allones)));
    }
    CHECK(poly_gcd(f3, poly_from_ints(f3, {2, 1}), poly_from_ints(f3, {2, 0, 1}))
          == poly_from_ints(f3, {2, 1}));  // gcd(y-1, y^2-1) monic = y+2
    // y+1 divides y^5+1 over F_2 but the analogous gcd over F_3 is trivial
    CHECK(poly_gcd(f2, poly_from_ints(f2, {0, 1, 1}), poly_xn_minus_1(f2, 5))
          == poly_from_ints(f2, {1, 1}));
    CHECK(poly_is_one(f3, poly_gcd(f3, poly_from_ints(f3, {0, 1, 1}), poly_xn_minus_1(f3, 5))));
    CHECK_THROWS_AS(poly_gcd(f3, poly_zero(), poly_zero()), std::domain_error);
    CHECK(poly_gcd(f3, poly_from_ints(f3, {0, 2}), poly_zero()) == poly_from_ints(f3, {0, 1}));
}

TEST_CASE("modpow examples", "[poly]") {
    FieldCtx f3(3, 1);
    Poly ym1 = poly_from_ints(f3, {2, 1});
    Poly yp1sq = poly_mul(f3, poly_from_ints(f3, {1, 1}), poly_from_ints(f3, {1, 1}));
    CHECK(poly_is_one(f3, poly_modpow(f3, ym1, 3, yp1sq)));
    CHECK_FALSE(poly_is_one(f3, poly_modpow(f3, ym1, 2, yp1sq)));
    CHECK(poly_is_one(f3, poly_modpow(f3, poly_zero(), 0, yp1sq)));
    CHECK_THROWS_AS(poly_modpow(f3, ym1, 2, poly_one(f3)), std::invalid_argument);
}

TEST_CASE("division invariant on random pairs", "[poly][property]") {
    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 9ull}) {
        auto [p, d] = factor_prime_power(q);
        FieldCtx F(p, d);
        detail::SplitMix64 rng(q + 17);
        for (int t = 0; t < 150; ++t) {
            Poly a = test_helpers::random_poly(F, 1 + rng.below(10), rng);
            Poly b = test_helpers::random_poly(F, 1 + rng.below(8), rng);
            if (b.is_zero()) continue;
            auto [quot, rem] = poly_divmod(F, a, b);
            CHECK(poly_add(F, poly_mul(F, quot, b), rem) == a);
            CHECK(rem.deg() < b.deg());
            Poly g = poly_gcd(F, a, b);
            if (!a.is_zero()) {
                CHECK(poly_rem(F, a, g).is_zero());
                CHECK(poly_rem(F, b, g).is_zero());
            }
        }
    }
}
