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

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ffdyn/detail/rng.hpp"
#include "ffdyn/errors.hpp"
#include "ffdyn/intfactor.hpp"
#include "ffdyn/poly.hpp"

namespace ffdyn {

/// y^n - 1 = prod P_j^{beta_j} with the P_j monic, irreducible and pairwise
/// distinct. Every beta_j equals p^m, where n = p^m n' and p does not divide n'.
struct Factorization {
    struct Entry {
        Poly P;
        unsigned beta;
    };
    std::vector<Entry> factors;
    unsigned n = 0;
};

namespace detail {

/// Sort key: (degree, encoded coefficients from the constant term up).
inline bool poly_less(const FieldCtx& F, const Poly& a, const Poly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        std::uint64_t av = F.to_int(a.coeffs()[i]), bv = F.to_int(b.coeffs()[i]);
        if (av != bv) return av < bv;
    }
    return false;
}

inline Poly random_poly_below(const FieldCtx& F, SplitMix64& rng, int max_deg) {
    std::vector<FieldElement> c;
    c.reserve(static_cast<std::size_t>(max_deg));
    for (int i = 0; i < max_deg; ++i) c.push_back(F.from_int(rng.below(F.q())));
    return Poly::from_coeffs(std::move(c));
}

/// Equal-degree splitting of a monic squarefree product of irreducibles of
/// degree w. Odd q uses Cantor-Zassenhaus; characteristic 2 uses the trace map.
inline void equal_degree_split(const FieldCtx& F, const Poly& g, unsigned w,
                               SplitMix64& rng, std::vector<Poly>& out) {
    if (g.deg() == static_cast<int>(w)) {
        out.push_back(poly_monic(F, g));
        return;
    }
    for (;;) {
        Poly t = random_poly_below(F, rng, g.deg());
        if (t.deg() < 1) continue;
        Poly u;
        if (F.p() != 2) {
            mpz_class e;
            mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(F.q()), w);
            e = (e - 1) / 2;
            u = poly_sub(F, poly_modpow(F, t, e, g), poly_one(F));
        } else {
            // trace map over F_2: sum of t^{2^i}, i < d*w
            Poly s = poly_rem(F, t, g);
            u = s;
            for (unsigned i = 1; i < F.d() * w; ++i) {
                s = poly_rem(F, poly_mul(F, s, s), g);
                u = poly_add(F, u, s);
            }
        }
        if (u.is_zero()) continue;
        Poly d = poly_gcd(F, u, g);
        if (d.deg() > 0 && d.deg() < g.deg()) {
            equal_degree_split(F, d, w, rng, out);
            equal_degree_split(F, poly_divmod(F, g, d).quot, w, rng, out);
            return;
        }
    }
}

/// Distinct-degree then equal-degree factorization of a monic squarefree f.
/// The random element stream is seeded from (q, n, degree) so the whole
/// factorization is reproducible run-to-run.
inline std::vector<Poly> factor_squarefree(const FieldCtx& F, Poly f, unsigned n_seed) {
    std::vector<Poly> out;
    Poly y = poly_y(F);
    Poly h = y;
    unsigned w = 1;
    while (f.deg() >= static_cast<int>(2 * w)) {
        h = poly_modpow(F, h, mpz_class(static_cast<unsigned long>(F.q())), f);
        Poly g = poly_gcd(F, poly_sub(F, h, y), f);
        if (g.deg() > 0) {
            SplitMix64 rng = SplitMix64::from({F.q(), n_seed, w});
            equal_degree_split(F, g, w, rng, out);
            f = poly_divmod(F, f, g).quot;
            h = poly_rem(F, h, f);
        }
        ++w;
    }
    if (f.deg() > 0) out.push_back(poly_monic(F, f));
    return out;
}

}  // namespace detail

/// Factor y^n - 1 over F_q. Writes n = p^m n' with n' coprime to p; y^{n'} - 1
/// is squarefree and is factored by distinct-degree/equal-degree splitting;
/// each irreducible then carries exponent p^m. Factors are sorted by
/// (degree, coefficient order) and the product is re-expanded and checked.
inline Factorization factor_xn_minus_1(const FieldCtx& F, unsigned n) {
    if (n < 1) throw std::invalid_argument("factor_xn_minus_1: n must be >= 1");
    unsigned beta = 1, nprime = n;
    while (nprime % F.p() == 0) {
        nprime /= static_cast<unsigned>(F.p());
        beta *= static_cast<unsigned>(F.p());
    }
    std::vector<Poly> irr = detail::factor_squarefree(F, poly_xn_minus_1(F, nprime), n);
    std::sort(irr.begin(), irr.end(),
              [&](const Poly& a, const Poly& b) { return detail::poly_less(F, a, b); });
    Factorization fac;
    fac.n = n;
    for (auto& P : irr) fac.factors.push_back({std::move(P), beta});
    Poly check = poly_one(F);
    for (const auto& e : fac.factors) check = poly_mul(F, check, poly_pow_ui(F, e.P, e.beta));
    if (check != poly_xn_minus_1(F, n))
        throw internal_error("factor_xn_minus_1: product of factors does not re-expand to y^n - 1");
    return fac;
}

/// Exact multiplicative order of a unit a in F_q[y]/(modulus), given the order
/// of the unit group: start from the group order and keep dividing out prime
/// factors while the power stays 1.
inline mpz_class multiplicative_order(const FieldCtx& F, const Poly& a, const Poly& modulus,
                                      const mpz_class& group_order) {
    Poly ar = poly_rem(F, a, modulus);
    if (ar.is_zero() || !poly_is_one(F, poly_gcd(F, ar, modulus)))
        throw std::invalid_argument("multiplicative_order: element is not a unit modulo the given polynomial");
    if (!poly_is_one(F, poly_modpow(F, ar, group_order, modulus)))
        throw std::invalid_argument("multiplicative_order: group_order is not an exponent multiple");
    mpz_class o = group_order;
    IntFactorization fac = int_factor(group_order);
    for (const auto& [prime, mult] : fac.factors)
        for (unsigned i = 0; i < mult; ++i) {
            if (!mpz_divisible_p(o.get_mpz_t(), prime.get_mpz_t())) break;
            mpz_class cand = o / prime;
            if (poly_is_one(F, poly_modpow(F, ar, cand, modulus)))
                o = cand;
            else
                break;
        }
    return o;
}

/// Order lift formula: base_order * p^k with k = ceil(log_p j); j = 1 gives
/// base_order unchanged. Exact for the finite-differences element y - 1; a
/// general unit needs the stepwise lift in unit_order_tower instead.
inline mpz_class order_lift(const mpz_class& base_order, unsigned j, std::uint64_t p) {
    if (j < 1) throw std::invalid_argument("order_lift: j must be >= 1");
    mpz_class lift = 1;
    std::uint64_t reach = 1;
    while (reach < j) {
        // careful with overflow on reach; j is small in practice
        if (reach > (std::uint64_t(1) << 62) / p) {
            lift *= p;
            break;
        }
        reach *= p;
        lift *= p;
    }
    return base_order * lift;
}

/// Exact orders s_i of a unit op modulo P^i for i = 1..beta.
/// s_1 comes from the group order q^{deg P} - 1; each further level either
/// keeps the order or multiplies it by p, which is decided by one modpow:
/// op^{s_{i-1}} = 1 + P^{i-1} u implies op^{p s_{i-1}} = 1 mod P^{p(i-1)},
/// and p(i-1) >= i for i >= 2, so s_i is s_{i-1} or p s_{i-1}.
inline std::vector<mpz_class> unit_order_tower(const FieldCtx& F, const Poly& op, const Poly& P,
                                               unsigned beta) {
    mpz_class d1;
    mpz_ui_pow_ui(d1.get_mpz_t(), static_cast<unsigned long>(F.q()),
                  static_cast<unsigned long>(P.deg()));
    d1 -= 1;
    std::vector<mpz_class> tower;
    tower.reserve(beta);
    mpz_class s = multiplicative_order(F, op, P, d1);
    tower.push_back(s);
    Poly Pi = P;
    for (unsigned i = 2; i <= beta; ++i) {
        Pi = poly_mul(F, Pi, P);
        if (!poly_is_one(F, poly_modpow(F, op, s, Pi))) {
            s *= F.p();
            if (!poly_is_one(F, poly_modpow(F, op, s, Pi)))
                throw internal_error("unit_order_tower: order did not lift by a single factor of p");
        }
        tower.push_back(s);
    }
    return tower;
}

}  // namespace ffdyn
