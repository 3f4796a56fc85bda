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

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffdyn/circulant.hpp"
#include "ffdyn/factor.hpp"
#include "ffdyn/sequence.hpp"

namespace ffdyn {

/// Transient length and eventual cycle length of an orbit x, Ax, A^2 x, ...
struct OrbitStats {
    unsigned long preperiod = 0;
    mpz_class period = 1;

    friend bool operator==(const OrbitStats&, const OrbitStats&) = default;
};

/// Formal sum of cycles: cycle length -> number of cycles of that length.
struct CycleSum {
    std::map<mpz_class, mpz_class> terms;

    mpz_class component_count() const {
        mpz_class c = 0;
        for (const auto& [len, mult] : terms) c += mult;
        return c;
    }

    mpz_class attractor_size() const {
        mpz_class s = 0;
        for (const auto& [len, mult] : terms) s += len * mult;
        return s;
    }

    friend bool operator==(const CycleSum&, const CycleSum&) = default;
};

/// The common shape of the tree hanging off every attractor point:
/// cum_counts[i] = q^{r_i} vertices within the first i levels, cum_counts[0] = 1.
struct TreeShape {
    unsigned levels = 0;
    std::vector<mpz_class> cum_counts{1};
    std::vector<unsigned> r{0};

    const mpz_class& size() const { return cum_counts.back(); }

    friend bool operator==(const TreeShape& a, const TreeShape& b) {
        return a.levels == b.levels && a.cum_counts == b.cum_counts;
    }
};

/// Full functional-graph decomposition of one operator.
struct GraphDecomposition {
    CycleSum cycles;
    TreeShape tree;
    unsigned n = 0;
    std::uint64_t q = 0;
};

enum class Verdict { most, almost_most, neither };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::most: return "most";
        case Verdict::almost_most: return "almost_most";
        case Verdict::neither: return "neither";
    }
    return "?";
}

struct ComplexityReport {
    unsigned long max_preperiod = 0;
    mpz_class max_period = 1;
    unsigned long f_preperiod = 0;
    mpz_class f_period = 1;
    Verdict verdict = Verdict::neither;
    bool theorem_hypotheses_ok = true;  // n coprime to q
};

namespace detail {

/// P-adic valuation of a residue, capped at beta (zero residue counts as beta).
inline unsigned valuation_capped(const FieldCtx& F, Poly a, const Poly& P, unsigned beta) {
    unsigned v = 0;
    while (v < beta) {
        if (a.is_zero()) return beta;
        PolyDivMod dm = poly_divmod(F, a, P);
        if (!dm.rem.is_zero()) return v;
        a = std::move(dm.quot);
        ++v;
    }
    return beta;
}

inline unsigned long ceil_div(unsigned long a, unsigned long b) { return (a + b - 1) / b; }

}  // namespace detail

/// Orbit statistics of one seed restricted to the local ring F_q[y]/(P^beta).
/// With v the valuation of the operator and w that of the seed (capped):
///   v >= 1: the orbit hits 0 after ceil((beta - w)/v) steps, then stays; and
///   v = 0:  purely periodic, period = order of op modulo P^{beta-w}.
inline OrbitStats local_orbit_stats(const FieldCtx& F, const Poly& op, const Poly& seed,
                                    const Poly& P, unsigned beta) {
    Poly Pbeta = poly_pow_ui(F, P, beta);
    Poly op_r = poly_rem(F, op, Pbeta);
    Poly seed_r = poly_rem(F, seed, Pbeta);
    unsigned v = detail::valuation_capped(F, op_r, P, beta);
    unsigned w = detail::valuation_capped(F, seed_r, P, beta);
    OrbitStats st;
    if (v >= 1) {
        st.preperiod = w >= beta ? 0 : detail::ceil_div(beta - w, v);
        st.period = 1;
        return st;
    }
    unsigned e = beta - w;
    st.preperiod = 0;
    st.period = e == 0 ? mpz_class(1) : unit_order_tower(F, op_r, P, e).back();
    return st;
}

/// Exact preperiod and period of op^m x seed in F_q[y]/(y^n - 1), assembled
/// factorwise: the global preperiod is the max and the global period the lcm
/// of the local ones.
inline OrbitStats orbit_stats_algebraic(const FieldCtx& F, const Poly& op, const Poly& seed,
                                        const Factorization& fact) {
    OrbitStats global;
    global.preperiod = 0;
    global.period = 1;
    for (const auto& entry : fact.factors) {
        OrbitStats local = local_orbit_stats(F, op, seed, entry.P, entry.beta);
        global.preperiod = std::max(global.preperiod, local.preperiod);
        mpz_lcm(global.period.get_mpz_t(), global.period.get_mpz_t(), local.period.get_mpz_t());
    }
    return global;
}

inline OrbitStats orbit_stats_algebraic(const FieldCtx& F, const CycPoly& op, const CycPoly& seed,
                                        const Factorization& fact) {
    if (op.n() != seed.n()) throw std::invalid_argument("orbit_stats_algebraic: dimension mismatch");
    CycPoly opr = to_convention(F, op, Convention::row);
    CycPoly sr = to_convention(F, seed, Convention::row);
    return orbit_stats_algebraic(F, opr.poly(), sr.poly(), fact);
}

/// Brent cycle detection on the actual sequence; exact but bounded by an
/// iteration budget. The algebraic path is the production route, this is the
/// cross-check.
inline OrbitStats orbit_stats_iterative(const FieldCtx& F, const CycPoly& op, const CycPoly& seed,
                                        std::uint64_t budget = 1000000) {
    if (op.n() != seed.n()) throw std::invalid_argument("orbit_stats_iterative: dimension mismatch");
    CycPoly opr = to_convention(F, op, Convention::row);
    CycPoly x0 = to_convention(F, seed, Convention::row);
    std::uint64_t spent = 0;
    auto step = [&](const CycPoly& x) {
        if (++spent > budget) throw budget_exceeded("orbit_stats_iterative: budget exhausted");
        return cyc_mul(F, opr, x);
    };
    std::uint64_t power = 1, lam = 1;
    CycPoly tortoise = x0;
    CycPoly hare = step(x0);
    while (!(tortoise == hare)) {
        if (power == lam) {
            tortoise = hare;
            power *= 2;
            lam = 0;
        }
        hare = step(hare);
        ++lam;
    }
    CycPoly t2 = x0, h2 = x0;
    for (std::uint64_t i = 0; i < lam; ++i) h2 = step(h2);
    unsigned long mu = 0;
    while (!(t2 == h2)) {
        t2 = step(t2);
        h2 = step(h2);
        ++mu;
    }
    return {mu, mpz_class(static_cast<unsigned long>(lam))};
}

/// The identity-seed orbit dominates every other orbit (A^m = A^l propagates
/// to A^m Z = A^l Z for all Z), so its statistics are the per-operator maxima.
inline OrbitStats max_orbit_stats(const FieldCtx& F, const CycPoly& op, const Factorization& fact) {
    CycPoly opr = to_convention(F, op, Convention::row);
    return orbit_stats_algebraic(F, opr.poly(), poly_one(F), fact);
}

/// Levels and cumulative vertex counts of the attractor trees. The factors
/// dividing the operator contribute r_i = sum min(beta_j, i v_j) deg P_j,
/// i.e. the degree of gcd(A^i, prod P_j^{beta_j}) computed by valuations.
inline TreeShape tree_shape(const FieldCtx& F, const CycPoly& op, const Factorization& fact) {
    CycPoly opr = to_convention(F, op, Convention::row);
    struct Div {
        unsigned beta, v, degree;
    };
    std::vector<Div> dividing;
    for (const auto& entry : fact.factors) {
        Poly Pbeta = poly_pow_ui(F, entry.P, entry.beta);
        unsigned v = detail::valuation_capped(F, poly_rem(F, opr.poly(), Pbeta), entry.P, entry.beta);
        if (v >= 1) dividing.push_back({entry.beta, v, static_cast<unsigned>(entry.P.deg())});
    }
    TreeShape t;
    if (dividing.empty()) return t;  // invertible operator: single-vertex "tree"
    unsigned long l = 0;
    for (const auto& d : dividing) l = std::max(l, detail::ceil_div(d.beta, d.v));
    t.levels = static_cast<unsigned>(l);
    t.cum_counts.clear();
    t.r.clear();
    for (unsigned i = 0; i <= t.levels; ++i) {
        unsigned ri = 0;
        for (const auto& d : dividing) ri += std::min(d.beta, i * d.v) * d.degree;
        mpz_class cnt;
        mpz_ui_pow_ui(cnt.get_mpz_t(), static_cast<unsigned long>(F.q()), ri);
        t.r.push_back(ri);
        t.cum_counts.push_back(cnt);
    }
    return t;
}

/// Combination rule for cycles of coprime dynamics:
/// O_m x O_l = gcd(m, l) O_{lcm(m, l)}, extended bilinearly.
inline CycleSum cycle_sum_product(const CycleSum& a, const CycleSum& b) {
    CycleSum out;
    for (const auto& [m, cm] : a.terms)
        for (const auto& [l, cl] : b.terms) {
            mpz_class g, lc;
            mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), l.get_mpz_t());
            mpz_lcm(lc.get_mpz_t(), m.get_mpz_t(), l.get_mpz_t());
            out.terms[lc] += cm * cl * g;
        }
    return out;
}

/// Cycle contribution of one factor P^beta the operator is coprime to:
/// O_1 plus, for each level i, the d_i = q^{i deg P} - q^{(i-1) deg P} states
/// of exact covaluation i, which split into d_i / s_i cycles of length
/// s_i = ord(op mod P^i).
inline CycleSum cycle_structure_for_factor(const FieldCtx& F, const Poly& op_row, const Poly& P,
                                           unsigned beta) {
    CycleSum cs;
    cs.terms[1] = 1;
    std::vector<mpz_class> tower = unit_order_tower(F, op_row, P, beta);
    for (unsigned i = 1; i <= beta; ++i) {
        mpz_class qi, qim1;
        mpz_ui_pow_ui(qi.get_mpz_t(), static_cast<unsigned long>(F.q()),
                      static_cast<unsigned long>(i) * P.deg());
        mpz_ui_pow_ui(qim1.get_mpz_t(), static_cast<unsigned long>(F.q()),
                      static_cast<unsigned long>(i - 1) * P.deg());
        mpz_class d = qi - qim1;
        const mpz_class& s = tower[i - 1];
        if (!mpz_divisible_p(d.get_mpz_t(), s.get_mpz_t()))
            throw internal_error("cycle_structure: order does not divide the unit-group order");
        cs.terms[s] += d / s;
    }
    return cs;
}

/// Product over all coprime factors; no coprime factor leaves the single
/// fixed point O_1.
inline CycleSum cycle_structure(const FieldCtx& F, const CycPoly& op, const Factorization& fact) {
    CycPoly opr = to_convention(F, op, Convention::row);
    CycleSum acc;
    acc.terms[1] = 1;
    for (const auto& entry : fact.factors) {
        if (!poly_is_one(F, poly_gcd(F, poly_rem(F, opr.poly(), entry.P), entry.P))) continue;
        acc = cycle_sum_product(acc, cycle_structure_for_factor(F, opr.poly(), entry.P, entry.beta));
    }
    return acc;
}

/// The whole functional graph of op on F_q^n: every component is a cycle with
/// one shared tree shape attached at each cycle point. The conservation law
/// (sum c_m m) * |T| = q^n is checked before returning.
inline GraphDecomposition decompose(const FieldCtx& F, const CycPoly& op) {
    Factorization fact = factor_xn_minus_1(F, op.n());
    GraphDecomposition g;
    g.n = op.n();
    g.q = F.q();
    g.cycles = cycle_structure(F, op, fact);
    g.tree = tree_shape(F, op, fact);
    mpz_class total = g.cycles.attractor_size() * g.tree.size();
    mpz_class qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), static_cast<unsigned long>(F.q()), g.n);
    if (total != qn) throw internal_error("decompose: conservation (sum c_m m) |T| = q^n violated");
    return g;
}

/// Exhaustive oracle: enumerate all q^n states, build the functional graph,
/// read off cycle lengths and per-attractor tree profiles. Refuses when
/// q^n exceeds the cap. Also asserts that all attractor points carry the
/// same level profile.
inline GraphDecomposition brute_force_graph(const FieldCtx& F, const CycPoly& op,
                                            std::uint64_t cap = 65536) {
    const unsigned n = op.n();
    mpz_class qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), static_cast<unsigned long>(F.q()), n);
    if (qn > static_cast<unsigned long>(cap))
        throw std::invalid_argument("brute_force_graph: q^n exceeds the cap of " + std::to_string(cap));
    if (qn > (1UL << 28))
        throw std::invalid_argument("brute_force_graph: state space too large to enumerate");
    const std::uint64_t N = qn.get_ui();
    const std::uint64_t q = F.q();

    // encoded first column of the operator matrix
    CycPoly opc = to_convention(F, op, Convention::column);
    std::vector<std::uint64_t> col(n, 0);
    for (std::size_t i = 0; i < opc.poly().coeffs().size(); ++i)
        col[i] = F.to_int(opc.poly().coeffs()[i]);

    // small-field add/mul tables keep the state sweep cheap
    const bool tables = q <= 256;
    std::vector<std::uint8_t> addt, mult;
    if (tables) {
        addt.resize(q * q);
        mult.resize(q * q);
        for (std::uint64_t a = 0; a < q; ++a)
            for (std::uint64_t b = 0; b < q; ++b) {
                addt[a * q + b] = static_cast<std::uint8_t>(F.to_int(F.add(F.from_int(a), F.from_int(b))));
                mult[a * q + b] = static_cast<std::uint8_t>(F.to_int(F.mul(F.from_int(a), F.from_int(b))));
            }
    }

    std::vector<std::uint32_t> next(N);
    std::vector<std::uint64_t> digits(n), out(n);
    for (std::uint64_t s = 0; s < N; ++s) {
        std::uint64_t t = s;
        for (unsigned i = 0; i < n; ++i) {
            digits[i] = t % q;
            t /= q;
        }
        if (tables) {
            for (unsigned i = 0; i < n; ++i) {
                std::uint64_t acc = 0;
                for (unsigned j = 0; j < n; ++j) {
                    std::uint64_t aij = col[(i + n - j) % n];
                    acc = addt[acc * q + mult[aij * q + digits[j]]];
                }
                out[i] = acc;
            }
        } else {
            for (unsigned i = 0; i < n; ++i) {
                FieldElement acc = F.zero();
                for (unsigned j = 0; j < n; ++j)
                    acc = F.add(acc, F.mul(F.from_int(col[(i + n - j) % n]), F.from_int(digits[j])));
                out[i] = F.to_int(acc);
            }
        }
        std::uint64_t enc = 0;
        for (unsigned i = n; i-- > 0;) enc = enc * q + out[i];
        next[s] = static_cast<std::uint32_t>(enc);
    }

    // functional-graph decomposition: colors 0 unseen / 1 on path / 2 done
    std::vector<std::uint8_t> color(N, 0);
    std::vector<std::uint32_t> dist(N, 0), entry(N, 0);
    std::vector<bool> on_cycle(N, false);
    std::vector<std::uint64_t> cycle_lengths;
    std::vector<std::uint32_t> path;
    for (std::uint64_t s = 0; s < N; ++s) {
        if (color[s] != 0) continue;
        path.clear();
        std::uint64_t u = s;
        while (color[u] == 0) {
            color[u] = 1;
            path.push_back(static_cast<std::uint32_t>(u));
            u = next[u];
        }
        if (color[u] == 1) {
            // closed a new cycle at u
            std::uint64_t len = 0, w = u;
            do {
                on_cycle[w] = true;
                dist[w] = 0;
                entry[w] = static_cast<std::uint32_t>(w);
                ++len;
                w = next[w];
            } while (w != u);
            cycle_lengths.push_back(len);
        }
        for (std::size_t i = path.size(); i-- > 0;) {
            std::uint32_t v = path[i];
            color[v] = 2;
            if (!on_cycle[v]) {
                dist[v] = dist[next[v]] + 1;
                entry[v] = entry[next[v]];
            }
        }
    }

    GraphDecomposition g;
    g.n = n;
    g.q = F.q();
    for (std::uint64_t len : cycle_lengths) ++g.cycles.terms[mpz_class(static_cast<unsigned long>(len))];

    // per-attractor level profile, which must be shared by every cycle point
    std::uint32_t max_level = 0;
    for (std::uint64_t v = 0; v < N; ++v) max_level = std::max(max_level, dist[v]);
    std::map<std::uint32_t, std::vector<std::uint64_t>> profiles;
    for (std::uint64_t v = 0; v < N; ++v) {
        if (on_cycle[v]) profiles.try_emplace(static_cast<std::uint32_t>(v),
                                              std::vector<std::uint64_t>(max_level + 1, 0));
    }
    for (std::uint64_t v = 0; v < N; ++v) {
        if (dist[v] > 0) ++profiles[entry[v]][dist[v]];
        else ++profiles[entry[v]][0];
    }
    const std::vector<std::uint64_t>* ref = nullptr;
    for (const auto& [root, prof] : profiles) {
        if (!ref) ref = &prof;
        else if (*ref != prof)
            throw internal_error("brute_force_graph: attractor points carry different tree profiles");
    }
    g.tree.levels = max_level;
    g.tree.cum_counts.clear();
    g.tree.r.clear();
    mpz_class cum = 0;
    for (std::uint32_t lvl = 0; lvl <= max_level; ++lvl) {
        cum += (*ref)[lvl];
        g.tree.cum_counts.push_back(cum);
        // every cumulative count must be an exact power of q
        mpz_class t = cum;
        unsigned ri = 0;
        while (t > 1 && mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(q))) {
            mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(q));
            ++ri;
        }
        if (t != 1) throw internal_error("brute_force_graph: cumulative tree count is not a power of q");
        g.tree.r.push_back(ri);
    }
    mpz_class total = g.cycles.attractor_size() * g.tree.size();
    if (total != qn) throw internal_error("brute_force_graph: conservation violated");
    return g;
}

/// Complexity classification of a sequence against the per-operator maxima.
inline ComplexityReport classify(const FieldCtx& F, const CycPoly& op, const SequenceSpec& spec) {
    StateVector x = realize(F, spec);
    if (x.size() != op.n()) throw std::invalid_argument("classify: sequence length does not match n");
    Factorization fact = factor_xn_minus_1(F, op.n());
    CycPoly opr = to_convention(F, op, Convention::row);
    CycPoly seed = to_convention(F, vector_to_cycpoly(F, x, Convention::column), Convention::row);
    OrbitStats fs = orbit_stats_algebraic(F, opr.poly(), seed.poly(), fact);
    OrbitStats mx = orbit_stats_algebraic(F, opr.poly(), poly_one(F), fact);
    ComplexityReport r;
    r.max_preperiod = mx.preperiod;
    r.max_period = mx.period;
    r.f_preperiod = fs.preperiod;
    r.f_period = fs.period;
    if (fs.period == mx.period && fs.preperiod == mx.preperiod)
        r.verdict = Verdict::most;
    else if (fs.period == mx.period && fs.preperiod + 1 == mx.preperiod)
        r.verdict = Verdict::almost_most;
    else
        r.verdict = Verdict::neither;
    r.theorem_hypotheses_ok = (op.n() % F.p()) != 0;
    return r;
}

/// For the all-ones operator I + delta + ... + delta^{n-1}: does every
/// nontrivial multiplicative sequence fall short of the operator's maximal
/// period? Requires nontrivial multiplicative functions to exist.
inline bool remark4_check(const FieldCtx& F, unsigned n) {
    std::vector<SequenceSpec> specs = enumerate_multiplicative(F, n);
    bool any = false;
    Poly ones = Poly::from_coeffs(std::vector<FieldElement>(n, F.one()));
    CycPoly op(n, ones, Convention::row);
    for (const auto& s : specs) {
        if (s.kind != SeqKind::multiplicative) continue;
        any = true;
        ComplexityReport r = classify(F, op, s);
        if (!(r.f_period < r.max_period)) return false;
    }
    if (!any)
        throw std::invalid_argument("remark4_check: no nontrivial multiplicative functions for this (q, n)");
    return true;
}

}  // namespace ffdyn
