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

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "ffdyn/ffdyn.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct FieldArgs {
    std::uint64_t q = 0;
    std::uint64_t p = 0;
    unsigned d = 1;

    ffdyn::FieldCtx make() const {
        if (q != 0) {
            auto [pp, dd] = ffdyn::factor_prime_power(q);
            return ffdyn::FieldCtx(pp, dd);
        }
        if (p == 0) throw std::invalid_argument("specify --q or --p/--d");
        return ffdyn::FieldCtx(p, d);
    }
};

void add_field_opts(CLI::App* cmd, FieldArgs& fa) {
    cmd->add_option("--q", fa.q, "field size as a prime power p^d");
    cmd->add_option("--p", fa.p, "field characteristic (alternative to --q)");
    cmd->add_option("--d", fa.d, "extension degree (with --p)");
}

ffdyn::CycPoly parse_operator(const ffdyn::FieldCtx& F, unsigned n, const std::string& text,
                              const std::string& convention) {
    using namespace ffdyn;
    // the named shorthands denote operators, so the convention flag does not
    // reinterpret them
    if (text == "delta")
        return CycPoly::reduce(F, n, poly_sub(F, poly_y(F), poly_one(F)), Convention::row);
    if (text == "shift") return CycPoly::reduce(F, n, poly_y(F), Convention::row);
    if (text == "allones")
        return CycPoly(n, Poly::from_coeffs(std::vector<FieldElement>(n, F.one())), Convention::row);
    Convention conv = convention == "column" ? Convention::column : Convention::row;
    return to_convention(F, CycPoly::reduce(F, n, parse_poly(F, text), conv), Convention::row);
}

ffdyn::SequenceSpec parse_sequence(const ffdyn::FieldCtx& F, unsigned n, const std::string& text) {
    using namespace ffdyn;
    auto after = [&](const std::string& prefix) { return text.substr(prefix.size()); };
    if (text == "arithlog") return SequenceSpec::arithlog(n);
    if (text == "trivial") return SequenceSpec::trivial(n);
    if (text.rfind("delta:", 0) == 0) {
        unsigned long k = std::stoul(after("delta:"));
        return SequenceSpec::delta(n, static_cast<unsigned>(k));
    }
    if (text.rfind("mult:", 0) == 0) {
        unsigned long g = std::stoul(after("mult:"));
        return SequenceSpec::mult(n, F.from_int(g));
    }
    if (text.rfind("explicit:", 0) == 0) {
        std::string body = after("explicit:");
        StateVector x;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= body.size(); ++i)
            if (i == body.size() || body[i] == ',') {
                if (i == start) throw std::invalid_argument("--seq explicit: empty entry");
                x.push_back(F.from_int(std::stoull(body.substr(start, i - start))));
                start = i + 1;
            }
        if (x.size() != n)
            throw std::invalid_argument("--seq explicit: expected " + std::to_string(n) + " entries");
        return SequenceSpec::explicit_vector(std::move(x));
    }
    throw std::invalid_argument("unknown sequence selector '" + text + "'");
}

std::uint64_t env_brute_cap(std::uint64_t fallback) {
    const char* env = std::getenv("FFDYN_BRUTE_CAP");
    if (!env || !*env) return fallback;
    return std::stoull(env);
}

int run_decompose(const FieldArgs& fa, unsigned n, const std::string& op_str,
                  const std::string& convention, bool json, bool orders) {
    using namespace ffdyn;
    FieldCtx F = fa.make();
    CycPoly op = parse_operator(F, n, op_str, convention);
    GraphDecomposition g = decompose(F, op);
    if (orders && !json) {
        Factorization fact = factor_xn_minus_1(F, n);
        for (const auto& line : render_orders(F, op, fact)) std::cout << line << "\n";
    }
    if (json)
        std::cout << decomposition_to_json(g, render_poly(F, op.poly())).dump(2) << "\n";
    else
        std::cout << render_decomposition(g, TermOrder::ascending) << "\n";
    return kExitOk;
}

int run_classify(const FieldArgs& fa, unsigned n, const std::string& op_str,
                 const std::string& convention, const std::string& seq, bool json) {
    using namespace ffdyn;
    FieldCtx F = fa.make();
    CycPoly op = parse_operator(F, n, op_str, convention);
    SequenceSpec spec = parse_sequence(F, n, seq);
    ComplexityReport r = classify(F, op, spec);
    if (json) {
        ordered_json j;
        j["q"] = F.q();
        j["n"] = n;
        j["op"] = render_poly(F, op.poly());
        j["seq"] = seq;
        j["max_preperiod"] = r.max_preperiod;
        j["max_period"] = r.max_period.get_str();
        j["f_preperiod"] = r.f_preperiod;
        j["f_period"] = r.f_period.get_str();
        j["verdict"] = to_string(r.verdict);
        j["theorem_hypotheses"] = r.theorem_hypotheses_ok;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "max: preperiod=" << r.max_preperiod << " period=" << r.max_period.get_str()
                  << "\n";
        std::cout << "f:   preperiod=" << r.f_preperiod << " period=" << r.f_period.get_str()
                  << "\n";
        std::cout << "verdict: " << to_string(r.verdict) << "\n";
        if (!r.theorem_hypotheses_ok)
            std::cout << "note: n is divisible by the characteristic; outside theorem hypotheses\n";
    }
    return kExitOk;
}

int run_table(const FieldArgs& fa, const std::vector<unsigned>& n_list, unsigned jobs, bool json) {
    using namespace ffdyn;
    FieldCtx F = fa.make();
    if (n_list.empty()) throw std::invalid_argument("table: provide --n-list");
    std::vector<std::string> rows(n_list.size());
    std::vector<std::string> errors(n_list.size());
    std::atomic<std::size_t> cursor{0};
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    auto worker = [&]() {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= n_list.size()) return;
            try {
                if (json) {
                    CycPoly delta =
                        CycPoly::reduce(F, n_list[i], poly_sub(F, poly_y(F), poly_one(F)), Convention::row);
                    GraphDecomposition g = decompose(F, delta);
                    ordered_json j = decomposition_to_json(g, render_poly(F, delta.poly()));
                    j["count"] = g.cycles.component_count().get_str();
                    rows[i] = j.dump();
                } else {
                    rows[i] = render_table_row(F, n_list[i]);
                }
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    bool any_failed = false;
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        if (!errors[i].empty()) {
            any_failed = true;
            std::cerr << "n=" << n_list[i] << " failed: " << errors[i] << "\n";
        } else {
            std::cout << rows[i] << "\n";
        }
    }
    return any_failed ? kExitInternal : kExitOk;
}

int run_verify(const std::string& which, std::vector<std::uint64_t> q_set, unsigned n_max,
               std::uint64_t cap, std::uint64_t budget, unsigned draws) {
    using namespace ffdyn;
    VerifyResult res;
    if (which == "theorem1") {
        if (q_set.empty()) q_set = {2, 3, 4, 5, 7, 8, 9};
        if (n_max == 0) n_max = 23;
        res = verify_theorem1(q_set, n_max);
    } else if (which == "theorem2") {
        if (q_set.empty()) q_set = {3, 4, 5, 9};
        if (n_max == 0) n_max = 13;
        res = verify_theorem2(q_set, n_max, draws);
    } else if (which == "remark4") {
        res = verify_remark4({{3, 7}, {3, 13}, {4, 13}, {5, 11}});
    } else if (which == "oracle") {
        if (q_set.empty()) q_set = {2, 3};
        res = verify_oracle(q_set, cap, budget);
    } else {
        throw std::invalid_argument("verify: unknown suite '" + which +
                                    "' (expected theorem1|theorem2|remark4|oracle)");
    }
    std::cout << res.report;
    return res.ok() ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact functional-graph analysis of translation-invariant linear operators on F_q^n"};
    app.require_subcommand(1);

    FieldArgs fa_dec, fa_cls, fa_tab;
    unsigned n_dec = 0, n_cls = 0;
    std::string op_dec = "delta", op_cls = "delta";
    std::string conv_dec = "row", conv_cls = "row";
    std::string seq_cls;
    bool json_dec = false, json_cls = false, json_tab = false, orders_dec = false;
    std::vector<unsigned> n_list;
    unsigned jobs = 0;
    std::string verify_which;
    std::vector<std::uint64_t> q_set;
    unsigned n_max = 0;
    std::uint64_t cap = env_brute_cap(65536);
    std::uint64_t budget = 1000000;
    unsigned draws = 50;

    CLI::App* dec = app.add_subcommand("decompose", "decompose the functional graph of an operator");
    add_field_opts(dec, fa_dec);
    dec->add_option("--n", n_dec, "ring dimension")->required();
    dec->add_option("--op", op_dec, "operator polynomial or delta|shift|allones");
    dec->add_option("--convention", conv_dec, "row|column reading of --op")
        ->check(CLI::IsMember({"row", "column"}));
    dec->add_flag("--json", json_dec, "emit JSON");
    dec->add_flag("--orders", orders_dec, "print per-factor multiplicative order towers");

    CLI::App* cls = app.add_subcommand("classify", "classify a sequence against the operator maxima");
    add_field_opts(cls, fa_cls);
    cls->add_option("--n", n_cls, "ring dimension")->required();
    cls->add_option("--op", op_cls, "operator polynomial or delta|shift|allones");
    cls->add_option("--convention", conv_cls, "row|column reading of --op")
        ->check(CLI::IsMember({"row", "column"}));
    cls->add_option("--seq", seq_cls, "delta:k|arithlog|mult:g|trivial|explicit:a,b,...")->required();
    cls->add_flag("--json", json_cls, "emit JSON");

    CLI::App* tab = app.add_subcommand("table", "decomposition rows for the finite-differences operator");
    add_field_opts(tab, fa_tab);
    tab->add_option("--n-list", n_list, "dimensions, one row each")->delimiter(',');
    tab->add_option("--jobs", jobs, "worker threads (default: hardware)");
    tab->add_flag("--json", json_tab, "emit JSON rows");

    CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("which", verify_which, "theorem1|theorem2|remark4|oracle")->required();
    ver->add_option("--q-set", q_set, "field sizes to sweep")->delimiter(',');
    ver->add_option("--n-max", n_max, "largest dimension to sweep");
    ver->add_option("--cap", cap, "brute-force state cap (or FFDYN_BRUTE_CAP)");
    ver->add_option("--budget", budget, "iteration budget for orbit cross-checks");
    ver->add_option("--draws", draws, "random operator draws per case");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (dec->parsed()) return run_decompose(fa_dec, n_dec, op_dec, conv_dec, json_dec, orders_dec);
        if (cls->parsed()) return run_classify(fa_cls, n_cls, op_cls, conv_cls, seq_cls, json_cls);
        if (tab->parsed()) return run_table(fa_tab, n_list, jobs, json_tab);
        if (ver->parsed()) return run_verify(verify_which, q_set, n_max, cap, budget, draws);
    } catch (const ffdyn::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
