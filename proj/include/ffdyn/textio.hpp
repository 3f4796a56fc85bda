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

#include <json.hpp>

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffdyn/dynamics.hpp"

namespace ffdyn {

using ordered_json = nlohmann::ordered_json;

/// "y^4+y^3+2": monomials high degree first, coefficients as encoded integers
/// in [0, q), coefficient 1 omitted on y-terms. "0" for the zero polynomial.
inline std::string render_poly(const FieldCtx& F, const Poly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        std::uint64_t c = F.to_int(a.coeffs()[i]);
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "y";
            if (i != 1) os << "^" << i;
        }
    }
    return os.str();
}

/// Parser for "+"-separated monomials "c*y^k", "y^k", "c" in any order.
/// Duplicate degrees and out-of-range coefficients are rejected.
inline Poly parse_poly(const FieldCtx& F, const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("parse_poly: empty polynomial string");
    std::vector<std::string> tokens;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == '+') {
            if (i == start) throw std::invalid_argument("parse_poly: empty monomial in '" + text + "'");
            tokens.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    auto parse_uint = [&](const std::string& t) -> std::uint64_t {
        if (t.empty()) throw std::invalid_argument("parse_poly: missing integer near '" + text + "'");
        std::uint64_t v = 0;
        for (char ch : t) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw std::invalid_argument("parse_poly: bad token '" + t + "'");
            v = v * 10 + static_cast<std::uint64_t>(ch - '0');
            if (v > (1ULL << 62)) throw std::invalid_argument("parse_poly: integer too large in '" + t + "'");
        }
        return v;
    };
    std::map<std::size_t, std::uint64_t> terms;
    for (const std::string& tok : tokens) {
        std::uint64_t coeff = 1;
        std::size_t deg = 0;
        std::size_t ypos = tok.find('y');
        if (ypos == std::string::npos) {
            coeff = parse_uint(tok);
            deg = 0;
        } else {
            std::string pre = tok.substr(0, ypos);
            if (!pre.empty()) {
                if (pre.back() != '*')
                    throw std::invalid_argument("parse_poly: bad token '" + tok + "' (expected 'c*y^k')");
                coeff = parse_uint(pre.substr(0, pre.size() - 1));
            }
            std::string post = tok.substr(ypos + 1);
            if (post.empty()) {
                deg = 1;
            } else {
                if (post[0] != '^')
                    throw std::invalid_argument("parse_poly: bad token '" + tok + "'");
                deg = static_cast<std::size_t>(parse_uint(post.substr(1)));
            }
        }
        if (coeff >= F.q())
            throw std::invalid_argument("parse_poly: coefficient " + std::to_string(coeff) +
                                        " out of range [0, q) in '" + tok + "'");
        if (terms.count(deg))
            throw std::invalid_argument("parse_poly: duplicate degree " + std::to_string(deg) +
                                        " in '" + text + "'");
        terms[deg] = coeff;
    }
    std::vector<FieldElement> c(terms.empty() ? 0 : terms.rbegin()->first + 1, F.zero());
    for (const auto& [deg, coeff] : terms) c[deg] = F.from_int(coeff);
    return Poly::from_coeffs(std::move(c));
}

enum class TermOrder { ascending, descending };

/// "c(O_m*T_s)" terms joined by "+", c omitted when 1, s the tree size.
/// The ascending order is the running-text notation; tables list the largest
/// cycle first.
inline std::string render_decomposition(const GraphDecomposition& g,
                                        TermOrder order = TermOrder::ascending) {
    const std::string ts = g.tree.size().get_str();
    std::ostringstream os;
    auto emit = [&](const mpz_class& len, const mpz_class& mult, bool first) {
        if (!first) os << "+";
        if (mult != 1) os << mult.get_str();
        os << "(O_" << len.get_str() << "*T_" << ts << ")";
    };
    bool first = true;
    if (order == TermOrder::ascending) {
        for (const auto& [len, mult] : g.cycles.terms) {
            emit(len, mult, first);
            first = false;
        }
    } else {
        for (auto it = g.cycles.terms.rbegin(); it != g.cycles.terms.rend(); ++it) {
            emit(it->first, it->second, first);
            first = false;
        }
    }
    return os.str();
}

/// {q, n, op, tree:{levels, cum_counts}, cycles:[{len, mult}]}; every big
/// value is a plain decimal string.
inline ordered_json decomposition_to_json(const GraphDecomposition& g, const std::string& op_str) {
    ordered_json j;
    j["q"] = g.q;
    j["n"] = g.n;
    j["op"] = op_str;
    ordered_json tree;
    tree["levels"] = g.tree.levels;
    ordered_json cum = ordered_json::array();
    for (const auto& c : g.tree.cum_counts) cum.push_back(c.get_str());
    tree["cum_counts"] = cum;
    j["tree"] = tree;
    ordered_json cycles = ordered_json::array();
    for (const auto& [len, mult] : g.cycles.terms) {
        ordered_json t;
        t["len"] = len.get_str();
        t["mult"] = mult.get_str();
        cycles.push_back(t);
    }
    j["cycles"] = cycles;
    return j;
}

/// Inverse of decomposition_to_json, for round-trip checks and consumers.
inline GraphDecomposition decomposition_from_json(const ordered_json& j) {
    GraphDecomposition g;
    g.q = j.at("q").get<std::uint64_t>();
    g.n = j.at("n").get<unsigned>();
    g.tree.levels = j.at("tree").at("levels").get<unsigned>();
    g.tree.cum_counts.clear();
    g.tree.r.clear();
    for (const auto& c : j.at("tree").at("cum_counts"))
        g.tree.cum_counts.emplace_back(c.get<std::string>());
    for (const auto& t : j.at("cycles"))
        g.cycles.terms[mpz_class(t.at("len").get<std::string>())] =
            mpz_class(t.at("mult").get<std::string>());
    return g;
}

/// Per-factor order towers of the operator, one line per coprime factor:
/// "orders (P): s_1,...,s_beta". Factors follow the canonical factor order.
inline std::vector<std::string> render_orders(const FieldCtx& F, const CycPoly& op,
                                              const Factorization& fact) {
    CycPoly opr = to_convention(F, op, Convention::row);
    std::vector<std::string> lines;
    for (const auto& entry : fact.factors) {
        if (!poly_is_one(F, poly_gcd(F, poly_rem(F, opr.poly(), entry.P), entry.P))) continue;
        std::vector<mpz_class> tower = unit_order_tower(F, opr.poly(), entry.P, entry.beta);
        std::ostringstream os;
        os << "orders (" << render_poly(F, entry.P) << "): ";
        for (std::size_t i = 0; i < tower.size(); ++i) {
            if (i) os << ",";
            os << tower[i].get_str();
        }
        lines.push_back(os.str());
    }
    return lines;
}

/// One table row: "n count decomposition", largest cycle first.
inline std::string render_table_row(const FieldCtx& F, unsigned n) {
    CycPoly delta = CycPoly::reduce(F, n, poly_sub(F, poly_y(F), poly_one(F)), Convention::row);
    GraphDecomposition g = decompose(F, delta);
    std::ostringstream os;
    os << n << " " << g.cycles.component_count().get_str() << " "
       << render_decomposition(g, TermOrder::descending);
    return os.str();
}

}  // namespace ffdyn
