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
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffdyn/circulant.hpp"
#include "ffdyn/field.hpp"
#include "ffdyn/poly.hpp"

namespace ffdyn {

enum class SeqKind { delta, arithmetic_log, multiplicative, trivial_mult, explicit_vec };

/// Declarative description of one of the distinguished length-n sequences.
struct SequenceSpec {
    SeqKind kind;
    unsigned n = 0;
    unsigned k = 0;        // delta only: 1 <= k <= n
    FieldElement g;        // multiplicative only: an (n-1)-th root of unity
    StateVector explicit_x;

    static SequenceSpec delta(unsigned n, unsigned k) { return {SeqKind::delta, n, k, {}, {}}; }
    static SequenceSpec arithlog(unsigned n) { return {SeqKind::arithmetic_log, n, 0, {}, {}}; }
    static SequenceSpec mult(unsigned n, FieldElement g) {
        return {SeqKind::multiplicative, n, 0, std::move(g), {}};
    }
    static SequenceSpec trivial(unsigned n) { return {SeqKind::trivial_mult, n, 0, {}, {}}; }
    static SequenceSpec explicit_vector(StateVector x) {
        return {SeqKind::explicit_vec, static_cast<unsigned>(x.size()), 0, {}, std::move(x)};
    }
};

namespace detail {

inline void require_odd_prime(unsigned n, const char* who) {
    if (n < 3 || n % 2 == 0 || !is_small_prime(n))
        throw std::invalid_argument(std::string(who) + ": n = " + std::to_string(n) +
                                    " must be an odd prime");
}

/// The set of nonzero quadratic residues modulo an odd prime n.
inline std::set<unsigned> quadratic_residues(unsigned n) {
    std::set<unsigned> qr;
    for (unsigned long i = 1; i < n; ++i) qr.insert(static_cast<unsigned>((i * i) % n));
    return qr;
}

/// Smallest generator of the multiplicative group modulo the odd prime n.
inline unsigned smallest_primitive_root(unsigned n) {
    IntFactorization fac = int_factor(mpz_class(n - 1));
    for (unsigned a = 2; a < n; ++a) {
        bool primitive = true;
        for (const auto& [prime, e] : fac.factors) {
            mpz_class exp = mpz_class(n - 1) / prime;
            mpz_class base = a, r, mod = n;
            mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
            if (r == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return a;
    }
    throw internal_error("smallest_primitive_root: no generator found");
}

}  // namespace detail

/// Materialize a sequence spec as the state vector (f(1), ..., f(n)).
///
/// delta(k):        f(i) = 0 at i = k, 1 elsewhere.
/// arithmetic_log:  f(i) = 0 on quadratic residues mod n, 1 on nonresidues,
///                  extended by f(n) = 0; values are the 0 and 1 of F_q.
/// multiplicative:  f(a^t mod n) = g^t for the smallest primitive root a,
///                  f(n) = 0; requires n an odd prime, n != p, g^{n-1} = 1.
/// trivial_mult:    f = 1 on 1..n-1, f(n) = 0.
inline StateVector realize(const FieldCtx& F, const SequenceSpec& spec) {
    switch (spec.kind) {
        case SeqKind::delta: {
            if (spec.n < 1) throw std::invalid_argument("realize: delta needs n >= 1");
            if (spec.k < 1 || spec.k > spec.n)
                throw std::invalid_argument("realize: delta position k must satisfy 1 <= k <= n");
            StateVector x(spec.n, F.one());
            x[spec.k - 1] = F.zero();
            return x;
        }
        case SeqKind::arithmetic_log: {
            detail::require_odd_prime(spec.n, "realize(arithmetic_log)");
            auto qr = detail::quadratic_residues(spec.n);
            StateVector x(spec.n, F.zero());
            for (unsigned i = 1; i < spec.n; ++i) x[i - 1] = qr.count(i) ? F.zero() : F.one();
            return x;  // x[n-1] stays 0: the f(n) = f(0) = 0 extension
        }
        case SeqKind::multiplicative: {
            detail::require_odd_prime(spec.n, "realize(multiplicative)");
            if (spec.n == F.p())
                throw std::invalid_argument("realize(multiplicative): n must differ from the field characteristic");
            if (spec.g.coeffs().size() != F.d())
                throw std::invalid_argument("realize(multiplicative): g does not belong to the field");
            if (F.pow(spec.g, spec.n - 1) != F.one())
                throw std::invalid_argument("realize(multiplicative): g is not an (n-1)-th root of unity");
            unsigned a = detail::smallest_primitive_root(spec.n);
            StateVector x(spec.n, F.zero());
            FieldElement val = F.one();
            std::uint64_t pos = 1;
            for (unsigned t = 0; t + 1 < spec.n; ++t) {
                x[pos - 1] = val;
                pos = (pos * a) % spec.n;
                val = F.mul(val, spec.g);
            }
            return x;  // x[n-1] stays 0
        }
        case SeqKind::trivial_mult: {
            detail::require_odd_prime(spec.n, "realize(trivial_mult)");
            StateVector x(spec.n, F.one());
            x[spec.n - 1] = F.zero();
            return x;
        }
        case SeqKind::explicit_vec: {
            if (spec.explicit_x.empty())
                throw std::invalid_argument("realize: explicit vector must be nonempty");
            return spec.explicit_x;
        }
    }
    throw std::invalid_argument("realize: unknown sequence kind");
}

/// All multiplicative functions on {1..n-1} with values in F_q: exactly
/// gcd(n-1, q-1) of them, one per (n-1)-th root of unity g, the g = 1 one
/// flagged as trivial. Requires n an odd prime different from p.
inline std::vector<SequenceSpec> enumerate_multiplicative(const FieldCtx& F, unsigned n) {
    detail::require_odd_prime(n, "enumerate_multiplicative");
    if (n == F.p())
        throw std::invalid_argument("enumerate_multiplicative: n must differ from the field characteristic");
    if (F.q() > (1ULL << 20))
        throw std::invalid_argument("enumerate_multiplicative: field too large to scan");
    std::vector<SequenceSpec> out;
    for (std::uint64_t v = 1; v < F.q(); ++v) {
        FieldElement g = F.from_int(v);
        if (F.pow(g, n - 1) != F.one()) continue;
        out.push_back(v == 1 ? SequenceSpec::trivial(n) : SequenceSpec::mult(n, g));
    }
    mpz_class expect;
    mpz_gcd_ui(expect.get_mpz_t(), mpz_class(n - 1).get_mpz_t(),
               static_cast<unsigned long>(F.q() - 1));
    if (expect != static_cast<unsigned long>(out.size()))
        throw internal_error("enumerate_multiplicative: count does not match gcd(n-1, q-1)");
    return out;
}

/// The arithmetic-logarithm maximal-complexity criterion, stated on the
/// characteristic p (gcd(p^d, m) = 1 iff p does not divide m):
///   n = 4k+1: p must not divide 2k
///   n = 4k+3: p must divide neither k+1 nor 2k+1
inline bool theorem1_condition(unsigned n, const FieldCtx& F) {
    detail::require_odd_prime(n, "theorem1_condition");
    const std::uint64_t p = F.p();
    if (n % 4 == 1) {
        std::uint64_t k = (n - 1) / 4;
        return (2 * k) % p != 0;
    }
    std::uint64_t k = (n - 3) / 4;
    return (k + 1) % p != 0 && (2 * k + 1) % p != 0;
}

/// The h-vector of H(y) = F(y) F^-(y) mod (y^n - 1) for a nontrivial
/// multiplicative f, where F(y) = sum_{i=1}^{n-1} f(i) y^i and F^- uses the
/// pointwise inverses. Verifies, and then returns h with:
///   h(1) = ... = h(n-1),   h(1) = -f(-1),
///   h(0) - h(1) = n f(-1) != 0,   sum h(i) = 0.
inline std::vector<FieldElement> mult_proof_invariants(const FieldCtx& F, const SequenceSpec& spec) {
    if (spec.kind != SeqKind::multiplicative)
        throw std::invalid_argument("mult_proof_invariants: needs a nontrivial multiplicative spec");
    if (spec.g == F.one())
        throw std::invalid_argument("mult_proof_invariants: the trivial function is excluded");
    const unsigned n = spec.n;
    StateVector f = realize(F, spec);
    std::vector<FieldElement> fc(n, F.zero()), fic(n, F.zero());
    for (unsigned i = 1; i < n; ++i) {
        fc[i] = f[i - 1];
        fic[i] = F.inv(f[i - 1]);
    }
    Poly Fp = Poly::from_coeffs(fc);
    Poly Fm = Poly::from_coeffs(fic);
    CycPoly H = CycPoly::reduce(F, n, poly_mul(F, Fp, Fm), Convention::row);
    std::vector<FieldElement> h(n, F.zero());
    for (std::size_t i = 0; i < H.poly().coeffs().size(); ++i) h[i] = H.poly().coeffs()[i];

    for (unsigned i = 2; i < n; ++i)
        if (h[i] != h[1]) throw internal_error("mult_proof_invariants: h(1..n-1) not constant");
    FieldElement f_minus1 = f[n - 2];  // f(n-1)
    if (h[1] != F.neg(f_minus1)) throw internal_error("mult_proof_invariants: h(1) != -f(-1)");
    FieldElement n_f = F.mul(F.from_int(n % F.p()), f_minus1);
    if (F.sub(h[0], h[1]) != n_f || n_f.is_zero())
        throw internal_error("mult_proof_invariants: h(0) - h(1) != n f(-1) or vanishes");
    FieldElement sum = F.zero();
    for (const auto& v : h) sum = F.add(sum, v);
    if (!sum.is_zero()) throw internal_error("mult_proof_invariants: sum h(i) != 0");
    return h;
}

}  // namespace ffdyn
