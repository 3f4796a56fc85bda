#include <catch2/catch.hpp>

#include "ffdyn/intfactor.hpp"
#include "ffdyn/detail/rng.hpp"

using namespace ffdyn;

TEST_CASE("small factorizations", "[intfactor]") {
    auto f = int_factor(72);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<mpz_class, unsigned>{2, 3});
    CHECK(f.factors[1] == std::pair<mpz_class, unsigned>{3, 2});

    auto g = int_factor(80);
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0] == std::pair<mpz_class, unsigned>{2, 4});
    CHECK(g.factors[1] == std::pair<mpz_class, unsigned>{5, 1});

    CHECK(int_factor(1).factors.empty());
    CHECK(int_factor(2).factors.size() == 1);
    CHECK_THROWS_AS(int_factor(0), std::invalid_argument);
}

TEST_CASE("the Mersenne cofactor from the q=2 table", "[intfactor]") {
    auto f = int_factor(8388607);  // 2^23 - 1
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<mpz_class, unsigned>{47, 1});
    CHECK(f.factors[1] == std::pair<mpz_class, unsigned>{178481, 1});
}

TEST_CASE("pollard rho handles post-trial-division survivors", "[intfactor]") {
    // both prime factors above the trial bound
    mpz_class n = mpz_class(1000003) * 1000033;
    auto f = int_factor(n);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == 1000003);
    CHECK(f.factors[1].first == 1000033);

    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 3, 42);
    big -= 1;  // the largest group order the tables need
    auto fb = int_factor(big);
    CHECK(fb.value() == big);
    for (const auto& [p, e] : fb.factors) CHECK(miller_rabin_is_prime(p));
}

TEST_CASE("miller-rabin on knowns", "[intfactor]") {
    CHECK(miller_rabin_is_prime(2));
    CHECK(miller_rabin_is_prime(178481));
    CHECK(miller_rabin_is_prime(mpz_class("2305843009213693951")));  // 2^61 - 1
    CHECK_FALSE(miller_rabin_is_prime(1));
    CHECK_FALSE(miller_rabin_is_prime(3215031751));  // strong pseudoprime to 2,3,5,7
    CHECK_FALSE(miller_rabin_is_prime(mpz_class("2305843009213693953")));
}

TEST_CASE("random values re-multiply and certify", "[intfactor][property]") {
    detail::SplitMix64 rng(424242);
    for (int t = 0; t < 60; ++t) {
        mpz_class n = mpz_class(static_cast<unsigned long>(rng.next() >> 20)) + 2;
        auto f = int_factor(n);
        CHECK(f.value() == n);
        mpz_class prev = 0;
        for (const auto& [p, e] : f.factors) {
            CHECK(miller_rabin_is_prime(p));
            CHECK(p > prev);
            prev = p;
        }
    }
}
