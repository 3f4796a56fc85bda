#include <catch2/catch.hpp>

#include "ffdyn/field.hpp"
#include "helpers.hpp"

using namespace ffdyn;

TEST_CASE("field construction picks the canonical modulus", "[field]") {
    FieldCtx f2(2, 1);
    CHECK(f2.modulus() == std::vector<std::uint64_t>{0, 1});  // plain z for d = 1
    FieldCtx f4(2, 2);
    CHECK(f4.modulus() == std::vector<std::uint64_t>{1, 1, 1});  // z^2+z+1, the only choice
    FieldCtx f9(3, 2);
    CHECK(f9.modulus() == std::vector<std::uint64_t>{1, 0, 1});  // z^2+1 beats z^2+z+2, z^2+2z+2
    FieldCtx f8(2, 3);
    CHECK(f8.modulus() == std::vector<std::uint64_t>{1, 1, 0, 1});  // z^3+z+1
}

TEST_CASE("field construction rejects bad parameters", "[field]") {
    CHECK_THROWS_AS(FieldCtx(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx(9, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx(3, 0), std::invalid_argument);
}

TEST_CASE("arithmetic matches hand values", "[field]") {
    FieldCtx f3(3, 1), f4(2, 2), f5(5, 1);
    CHECK(f3.to_int(f3.mul(f3.from_int(2), f3.from_int(2))) == 1);
    CHECK(f4.to_int(f4.mul(f4.from_int(2), f4.from_int(3))) == 1);  // z * (z+1) = 1
    CHECK(f5.to_int(f5.inv(f5.from_int(3))) == 2);
    CHECK_THROWS_AS(f5.inv(f5.zero()), std::domain_error);
}

TEST_CASE("encode/decode is the base-p bijection", "[field]") {
    FieldCtx f9(3, 2);
    CHECK(f9.from_int(5).coeffs() == std::vector<std::uint32_t>{2, 1});  // 5 = 2 + 1*3
    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 8ull, 9ull, 13ull, 25ull}) {
        auto [p, d] = factor_prime_power(q);
        FieldCtx F(p, d);
        CHECK(F.to_int(F.zero()) == 0);
        CHECK(F.to_int(F.one()) == 1);
        for (std::uint64_t v = 0; v < q; ++v) CHECK(F.to_int(F.from_int(v)) == v);
        CHECK_THROWS_AS(F.from_int(q), std::invalid_argument);
    }
}

TEST_CASE("field axioms on random triples", "[field][property]") {
    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 9ull, 13ull, 27ull}) {
        auto [p, d] = factor_prime_power(q);
        FieldCtx F(p, d);
        detail::SplitMix64 rng(q * 7919 + 1);
        for (int t = 0; t < 200; ++t) {
            FieldElement a = test_helpers::random_element(F, rng);
            FieldElement b = test_helpers::random_element(F, rng);
            FieldElement c = test_helpers::random_element(F, rng);
            CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.mul(a, b) == F.mul(b, a));
            if (!a.is_zero()) CHECK(F.mul(a, F.inv(a)) == F.one());
            CHECK(F.add(a, F.neg(a)) == F.zero());
        }
    }
}

TEST_CASE("Frobenius a^q = a, exhaustively for q <= 81", "[field][property]") {
    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 7ull, 8ull, 9ull, 16ull, 25ull, 27ull, 49ull, 81ull}) {
        auto [p, d] = factor_prime_power(q);
        FieldCtx F(p, d);
        for (std::uint64_t v = 0; v < q; ++v) {
            FieldElement a = F.from_int(v);
            CHECK(F.pow(a, q) == a);
        }
    }
}

TEST_CASE("prime power splitting", "[field]") {
    CHECK(factor_prime_power(8) == std::pair<std::uint64_t, unsigned>{2, 3});
    CHECK(factor_prime_power(9) == std::pair<std::uint64_t, unsigned>{3, 2});
    CHECK(factor_prime_power(7) == std::pair<std::uint64_t, unsigned>{7, 1});
    CHECK_THROWS_AS(factor_prime_power(6), std::invalid_argument);
    CHECK_THROWS_AS(factor_prime_power(1), std::invalid_argument);
}
