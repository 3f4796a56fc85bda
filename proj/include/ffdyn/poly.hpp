/*
   Copyright 2026 The ffdyn authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <gmpxx.h>

#include <stdexcept>
#include <utility>
#include <vector>

#include "ffdyn/field.hpp"

namespace ffdyn {

/// Dense polynomial over F_q. coeffs()[i] is the coefficient of y^i.
/// Normalized: the zero polynomial is the empty list, otherwise the last
/// coefficient is nonzero. deg() of the zero polynomial is the sentinel -1,
/// which sorts below every true degree.
class Poly {
public:
    static constexpr int kZeroDeg = -1;

    Poly() = default;

    static Poly from_coeffs(std::vector<FieldElement> coeffs) {
        Poly r;
        r.c_ = std::move(coeffs);
        r.normalize();
        return r;
    }

    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<FieldElement>& coeffs() const { return c_; }

    /// Coefficient of y^i; zero (of the right arity) past the degree.
    FieldElement coeff(const FieldCtx& F, std::size_t i) const {
        return i < c_.size() ? c_[i] : F.zero();
    }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<FieldElement> c_;
};

inline Poly poly_zero() { return Poly(); }

inline Poly poly_one(const FieldCtx& F) { return Poly::from_coeffs({F.one()}); }

inline Poly poly_const(FieldElement c) { return Poly::from_coeffs({std::move(c)}); }

/// c * y^k
inline Poly poly_monomial(const FieldCtx& F, FieldElement c, std::size_t k) {
    std::vector<FieldElement> v(k + 1, F.zero());
    v[k] = std::move(c);
    return Poly::from_coeffs(std::move(v));
}

inline Poly poly_y(const FieldCtx& F) { return poly_monomial(F, F.one(), 1); }

/// Build from encoded integer coefficients, low degree first.
inline Poly poly_from_ints(const FieldCtx& F, const std::vector<std::uint64_t>& enc) {
    std::vector<FieldElement> v;
    v.reserve(enc.size());
    for (auto e : enc) v.push_back(F.from_int(e));
    return Poly::from_coeffs(std::move(v));
}

inline Poly poly_xn_minus_1(const FieldCtx& F, unsigned n) {
    std::vector<FieldElement> v(n + 1, F.zero());
    v[0] = F.neg(F.one());
    v[n] = F.one();
    return Poly::from_coeffs(std::move(v));
}

inline bool poly_is_one(const FieldCtx& F, const Poly& a) {
    return a.deg() == 0 && a.coeffs()[0] == F.one();
}

inline Poly poly_add(const FieldCtx& F, const Poly& a, const Poly& b) {
    std::vector<FieldElement> v(std::max(a.coeffs().size(), b.coeffs().size()), F.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.add(a.coeff(F, i), b.coeff(F, i));
    return Poly::from_coeffs(std::move(v));
}

inline Poly poly_sub(const FieldCtx& F, const Poly& a, const Poly& b) {
    std::vector<FieldElement> v(std::max(a.coeffs().size(), b.coeffs().size()), F.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(a.coeff(F, i), b.coeff(F, i));
    return Poly::from_coeffs(std::move(v));
}

inline Poly poly_neg(const FieldCtx& F, const Poly& a) { return poly_sub(F, poly_zero(), a); }

inline Poly poly_scale(const FieldCtx& F, const FieldElement& s, const Poly& a) {
    std::vector<FieldElement> v = a.coeffs();
    for (auto& c : v) c = F.mul(s, c);
    return Poly::from_coeffs(std::move(v));
}

inline Poly poly_mul(const FieldCtx& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return poly_zero();
    std::vector<FieldElement> v(a.coeffs().size() + b.coeffs().size() - 1, F.zero());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            v[i + j] = F.add(v[i + j], F.mul(a.coeffs()[i], b.coeffs()[j]));
    }
    return Poly::from_coeffs(std::move(v));
}

struct PolyDivMod {
    Poly quot;
    Poly rem;
};

/// Long division: a = quot*b + rem with deg(rem) < deg(b).
inline PolyDivMod poly_divmod(const FieldCtx& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    if (a.deg() < b.deg()) return {poly_zero(), a};
    const FieldElement lead_inv = F.inv(b.coeffs().back());
    std::vector<FieldElement> rem = a.coeffs();
    std::vector<FieldElement> quot(a.coeffs().size() - b.coeffs().size() + 1, F.zero());
    for (std::size_t k = rem.size(); k-- > b.coeffs().size() - 1;) {
        std::size_t shift = k + 1 - b.coeffs().size();
        if (rem[k].is_zero()) continue;
        FieldElement c = F.mul(rem[k], lead_inv);
        quot[shift] = c;
        for (std::size_t i = 0; i < b.coeffs().size(); ++i)
            rem[shift + i] = F.sub(rem[shift + i], F.mul(c, b.coeffs()[i]));
    }
    return {Poly::from_coeffs(std::move(quot)), Poly::from_coeffs(std::move(rem))};
}

inline Poly poly_rem(const FieldCtx& F, const Poly& a, const Poly& b) {
    return poly_divmod(F, a, b).rem;
}

inline Poly poly_monic(const FieldCtx& F, const Poly& a) {
    if (a.is_zero()) return a;
    return poly_scale(F, F.inv(a.coeffs().back()), a);
}

/// Monic greatest common divisor via Euclid. gcd(a, 0) = monic(a); gcd(0, 0) is an error.
inline Poly poly_gcd(const FieldCtx& F, Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("poly_gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Poly r = poly_rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

/// a^e mod m by square-and-multiply; a^0 = 1. The exponent is arbitrary precision.
inline Poly poly_modpow(const FieldCtx& F, const Poly& a, const mpz_class& e, const Poly& m) {
    if (m.is_zero() || m.deg() < 1) throw std::invalid_argument("poly_modpow: modulus must have degree >= 1");
    if (e < 0) throw std::invalid_argument("poly_modpow: negative exponent");
    Poly base = poly_rem(F, a, m);
    Poly r = poly_rem(F, poly_one(F), m);
    if (e == 0) return r;
    const mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (mp_bitcnt_t i = bits; i-- > 0;) {
        r = poly_rem(F, poly_mul(F, r, r), m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = poly_rem(F, poly_mul(F, r, base), m);
    }
    return r;
}

inline FieldElement poly_eval(const FieldCtx& F, const Poly& a, const FieldElement& x) {
    FieldElement acc = F.zero();
    for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = F.add(F.mul(acc, x), a.coeffs()[i]);
    return acc;
}

/// P^k by repeated squaring (small k, exact).
inline Poly poly_pow_ui(const FieldCtx& F, const Poly& a, unsigned k) {
    Poly r = poly_one(F);
    Poly base = a;
    while (k > 0) {
        if (k & 1) r = poly_mul(F, r, base);
        k >>= 1;
        if (k > 0) base = poly_mul(F, base, base);
    }
    return r;
}

}  // namespace ffdyn
