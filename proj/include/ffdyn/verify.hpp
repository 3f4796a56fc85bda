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
#include <sstream>
#include <string>
#include <vector>

#include "ffdyn/detail/rng.hpp"
#include "ffdyn/dynamics.hpp"
#include "ffdyn/textio.hpp"

namespace ffdyn {

struct VerifyResult {
    unsigned long cases = 0;
    unsigned long failures = 0;
    std::string report;

    bool ok() const { return failures == 0; }
};

namespace detail {

inline std::vector<unsigned> odd_primes_up_to(unsigned n_max) {
    std::vector<unsigned> out;
    for (unsigned n = 3; n <= n_max; n += 2)
        if (is_small_prime(n)) out.push_back(n);
    return out;
}

inline CycPoly delta_operator(const FieldCtx& F, unsigned n) {
    return CycPoly::reduce(F, n, poly_sub(F, poly_y(F), poly_one(F)), Convention::row);
}

inline CycPoly all_ones_operator(const FieldCtx& F, unsigned n) {
    return CycPoly(n, Poly::from_coeffs(std::vector<FieldElement>(n, F.one())), Convention::row);
}

inline Poly deterministic_random_poly(const FieldCtx& F, unsigned n, SplitMix64& rng) {
    std::vector<FieldElement> c;
    c.reserve(n);
    for (unsigned i = 0; i < n; ++i) c.push_back(F.from_int(rng.below(F.q())));
    return Poly::from_coeffs(std::move(c));
}

}  // namespace detail

/// Criterion for the arithmetic logarithm: the closed-form gcd predicate must
/// coincide with circulant nondegeneracy of the realized sequence, and with
/// the integer determinant's nonvanishing mod p.
inline VerifyResult verify_theorem1(const std::vector<std::uint64_t>& q_set, unsigned n_max) {
    VerifyResult res;
    std::ostringstream os;
    for (std::uint64_t q : q_set) {
        auto [p, d] = factor_prime_power(q);
        FieldCtx F(p, d);
        for (unsigned n : detail::odd_primes_up_to(n_max)) {
            bool cond = theorem1_condition(n, F);
            StateVector x = realize(F, SequenceSpec::arithlog(n));
            bool nondeg = is_nondegenerate(F, vector_to_cycpoly(F, x, Convention::column));
            mpz_class det = legendre_det_formula(n);
            bool det_nonzero_mod_p = !mpz_divisible_ui_p(det.get_mpz_t(), static_cast<unsigned long>(p));
            ++res.cases;
            bool pass = (cond == nondeg) && (cond == det_nonzero_mod_p);
            if (!pass) ++res.failures;
            os << "theorem1 q=" << q << " n=" << n << " predicate=" << (cond ? "T" : "F")
               << " nondegenerate=" << (nondeg ? "T" : "F")
               << " det!=0_mod_p=" << (det_nonzero_mod_p ? "T" : "F") << " "
               << (pass ? "ok" : "MISMATCH") << "\n";
        }
    }
    os << "theorem1: " << res.cases - res.failures << "/" << res.cases << " cases consistent\n";
    res.report = os.str();
    return res;
}

/// Multiplicative sequences under operators B*Delta: the verdict must land in
/// {most, almost_most}, and must be "most" exactly when gcd(B, sum y^i) != 1.
inline VerifyResult verify_theorem2(const std::vector<std::uint64_t>& q_set, unsigned n_max,
                                    unsigned draws = 50) {
    VerifyResult res;
    std::ostringstream os;
    for (std::uint64_t q : q_set) {
        auto [p, d] = factor_prime_power(q);
        FieldCtx F(p, d);
        for (unsigned n : detail::odd_primes_up_to(n_max)) {
            if (n == p) continue;
            std::vector<SequenceSpec> specs = enumerate_multiplicative(F, n);
            unsigned long nontrivial = 0;
            for (const auto& s : specs)
                if (s.kind == SeqKind::multiplicative) ++nontrivial;
            if (nontrivial == 0) {
                os << "theorem2 q=" << q << " n=" << n << " no nontrivial functions (vacuous)\n";
                continue;
            }
            Poly ones = Poly::from_coeffs(std::vector<FieldElement>(n, F.one()));
            Poly delta = poly_sub(F, poly_y(F), poly_one(F));
            detail::SplitMix64 rng = detail::SplitMix64::from({q, n, 0x7e2});
            unsigned long pair_fail = 0, pair_total = 0;
            for (unsigned t = 0; t <= draws; ++t) {
                Poly B = t == 0 ? poly_one(F) : detail::deterministic_random_poly(F, n, rng);
                CycPoly op = CycPoly::reduce(F, n, poly_mul(F, B, delta), Convention::row);
                bool expect_most = !poly_is_one(F, poly_gcd(F, B, ones));
                for (const auto& s : specs) {
                    if (s.kind != SeqKind::multiplicative) continue;
                    ComplexityReport r = classify(F, op, s);
                    ++pair_total;
                    bool in_range = r.verdict != Verdict::neither;
                    bool iff_ok = (r.verdict == Verdict::most) == expect_most;
                    if (!in_range || !iff_ok) ++pair_fail;
                }
            }
            res.cases += pair_total;
            res.failures += pair_fail;
            os << "theorem2 q=" << q << " n=" << n << " functions=" << nontrivial << " ops="
               << draws + 1 << " " << (pair_fail == 0 ? "ok" : "MISMATCH") << "\n";
        }
    }
    os << "theorem2: " << res.cases - res.failures << "/" << res.cases << " (op, f) pairs consistent\n";
    res.report = os.str();
    return res;
}

/// remark4_check over a list of (q, n) pairs; a pair counts as failed when the
/// check returns false.
inline VerifyResult verify_remark4(const std::vector<std::pair<std::uint64_t, unsigned>>& pairs) {
    VerifyResult res;
    std::ostringstream os;
    for (const auto& [q, n] : pairs) {
        auto [p, d] = factor_prime_power(q);
        FieldCtx F(p, d);
        bool pass = remark4_check(F, n);
        ++res.cases;
        if (!pass) ++res.failures;
        os << "remark4 q=" << q << " n=" << n << " " << (pass ? "holds" : "FAILS") << "\n";
    }
    os << "remark4: " << res.cases - res.failures << "/" << res.cases << " pairs hold\n";
    res.report = os.str();
    return res;
}

/// Exhaustive oracle: for every (q, n) within the state cap, the algebraic
/// decomposition must equal the brute-force graph for delta, shift and a
/// batch of deterministic random operators; algebraic orbit statistics are
/// also spot-checked against Brent iteration.
inline VerifyResult verify_oracle(const std::vector<std::uint64_t>& q_set, std::uint64_t cap,
                                  std::uint64_t budget = 1000000, unsigned random_ops = 20,
                                  unsigned orbit_samples = 20) {
    VerifyResult res;
    std::ostringstream os;
    for (std::uint64_t q : q_set) {
        auto [p, d] = factor_prime_power(q);
        FieldCtx F(p, d);
        for (unsigned n = 1;; ++n) {
            mpz_class qn;
            mpz_ui_pow_ui(qn.get_mpz_t(), static_cast<unsigned long>(q), n);
            if (qn > static_cast<unsigned long>(cap)) break;
            std::vector<CycPoly> ops;
            ops.push_back(detail::delta_operator(F, n));
            ops.push_back(CycPoly::reduce(F, n, poly_y(F), Convention::row));
            detail::SplitMix64 rng = detail::SplitMix64::from({q, n, 0xacce55});
            for (unsigned t = 0; t < random_ops; ++t)
                ops.push_back(CycPoly(n, detail::deterministic_random_poly(F, n, rng), Convention::row));
            unsigned long mismatches = 0;
            for (const auto& op : ops) {
                GraphDecomposition a = decompose(F, op);
                GraphDecomposition b = brute_force_graph(F, op, cap);
                ++res.cases;
                if (!(a.cycles == b.cycles && a.tree == b.tree)) {
                    ++res.failures;
                    ++mismatches;
                }
            }
            Factorization fact = factor_xn_minus_1(F, n);
            for (unsigned t = 0; t < orbit_samples; ++t) {
                CycPoly op(n, detail::deterministic_random_poly(F, n, rng), Convention::row);
                CycPoly seed(n, detail::deterministic_random_poly(F, n, rng), Convention::row);
                OrbitStats alg = orbit_stats_algebraic(F, op, seed, fact);
                OrbitStats itr = orbit_stats_iterative(F, op, seed, budget);
                ++res.cases;
                if (!(alg == itr)) {
                    ++res.failures;
                    ++mismatches;
                }
            }
            os << "oracle q=" << q << " n=" << n << " ops=" << ops.size() << " orbits="
               << orbit_samples << " " << (mismatches == 0 ? "ok" : "MISMATCH") << "\n";
        }
    }
    os << "oracle: " << res.cases - res.failures << "/" << res.cases << " comparisons agree\n";
    res.report = os.str();
    return res;
}

}  // namespace ffdyn
