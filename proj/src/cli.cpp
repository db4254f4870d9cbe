#include "motzkin/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "motzkin/cellmod.hpp"
#include "motzkin/json_io.hpp"
#include "motzkin/schurweyl.hpp"

namespace motzkin::cli {

namespace {

struct Options {
    std::string format = "text";
    unsigned seed = 12345;
    int threads = 1;
    bool slow = false;
};

bool json_mode(const Options& o) { return o.format == "json"; }

// Diagram argument: inline JSON or a path to a JSON file.
MotzkinDiagram load_diagram(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] != '{') {
        std::ifstream in(arg);
        if (!in) throw CLI::ValidationError("diagram", "cannot open file '" + arg + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return diagram_from_json(json::parse(text));
    } catch (const std::exception& e) {
        throw CLI::ValidationError("diagram", e.what());
    }
}

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
};

class CheckList {
public:
    void add(const std::string& name, bool pass, const std::string& details = "") {
        results_.push_back({name, pass, details});
    }
    bool all_pass() const {
        for (const auto& r : results_)
            if (!r.pass) return false;
        return true;
    }
    void emit(int k, const Options& opts, std::ostream& out) const {
        if (json_mode(opts)) {
            json arr = json::array();
            for (const auto& r : results_) {
                json item{{"k", k}, {"check", r.name}, {"pass", r.pass}};
                if (!r.details.empty()) item["details"] = r.details;
                arr.push_back(item);
            }
            out << arr.dump(2) << "\n";
        } else {
            for (const auto& r : results_) {
                out << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
                if (!r.details.empty()) out << "  (" << r.details << ")";
                out << "\n";
            }
        }
    }

private:
    std::vector<CheckResult> results_;
};

std::vector<MotzkinDiagram> generator_diagrams(int k) {
    std::vector<MotzkinDiagram> gens{MotzkinDiagram::identity(k)};
    for (int i = 1; i < k; ++i) {
        gens.push_back(gen_t(k, i));
        gens.push_back(gen_l(k, i));
        gens.push_back(gen_r(k, i));
    }
    for (int i = 1; i <= k; ++i) gens.push_back(gen_p(k, i));
    return gens;
}

void run_cellularity(int k, const Options& opts, CheckList& checks) {
    // (C1) injectivity of (p, q) -> d_p^q
    {
        std::set<MotzkinDiagram> seen;
        size_t pairs = 0;
        for (int r = 0; r <= k; ++r) {
            auto paths = enumerate_paths(k, r);
            for (const auto& p : paths)
                for (const auto& q : paths) {
                    seen.insert(diagram_from_paths(p, q));
                    ++pairs;
                }
        }
        checks.add("c1-cell-basis-injective", seen.size() == pairs,
                   std::to_string(pairs) + " pairs");
    }
    // (C2) involution is an anti-automorphism and flips d_p^q
    {
        auto diagrams = enumerate_diagrams(k);
        std::mt19937 rng(opts.seed);
        std::uniform_int_distribution<size_t> pick(0, diagrams.size() - 1);
        size_t trials = diagrams.size() <= 9 ? diagrams.size() * diagrams.size() : 400;
        bool ok = true;
        for (size_t t = 0; t < trials && ok; ++t) {
            const MotzkinDiagram& d1 = diagrams.size() <= 9 ? diagrams[t / diagrams.size()]
                                                            : diagrams[pick(rng)];
            const MotzkinDiagram& d2 = diagrams.size() <= 9 ? diagrams[t % diagrams.size()]
                                                            : diagrams[pick(rng)];
            DiagramProduct lhs = multiply(d1, d2);
            DiagramProduct rhs = multiply(d2.involution(), d1.involution());
            ok = lhs.loops == rhs.loops && lhs.diagram.involution() == rhs.diagram &&
                 d1.involution().involution() == d1;
        }
        for (int r = 0; r <= k && ok; ++r) {
            auto paths = enumerate_paths(k, r);
            for (const auto& p : paths)
                for (const auto& q : paths)
                    ok = ok && diagram_from_paths(p, q).involution() == diagram_from_paths(q, p);
        }
        checks.add("c2-involution-antiautomorphism", ok);
    }
    // (C3) mu tables independent of the bottom path, and equal to the cell action
    {
        const PolyX x = PolyX::x();
        bool ok = true;
        for (int r = 0; r <= k && ok; ++r) {
            auto paths = enumerate_paths(k, r);
            if (paths.empty()) continue;
            for (const auto& g : generator_diagrams(k)) {
                AlgebraElement<PolyX> a(g);
                Matrix<PolyX> ref = cell_coefficient_table(a, r, paths[0], x);
                for (size_t i = 1; i < paths.size() && ok; ++i)
                    ok = cell_coefficient_table(a, r, paths[i], x) == ref;
                if (!ok) break;
                // columns of mu match the cell action on basis paths
                for (size_t j = 0; j < paths.size() && ok; ++j) {
                    PathVector<PolyX> acted = cell_act(g, paths[j], x);
                    for (size_t i = 0; i < paths.size() && ok; ++i)
                        ok = ref(static_cast<int>(i), static_cast<int>(j)) ==
                             acted.coeff(paths[i]);
                }
            }
        }
        checks.add("c3-mu-independent-of-p", ok);
    }
}

void run_basic_construction(int k, const Options& opts, CheckList& checks) {
    if (k < 2) {
        checks.add("basic-construction-applicable", false, "needs k >= 2");
        return;
    }
    const std::vector<Rational> xs{Rational(2), Rational(3), Rational(-1)};
    {
        bool ok = true;
        for (const auto& x : xs) {
            AlgebraElement<Rational> e = jones_idempotent(k, x);
            ok = ok && elem_mul(e, e, x) == e;
        }
        checks.add("jones-idempotent", ok);
    }
    {
        bool ok = true;
        for (const auto& x : xs)
            ok = ok && basic_construction_embed(MotzkinDiagram::identity(k - 2), k, x) ==
                           jones_idempotent(k, x);
        checks.add("unit-maps-to-idempotent", ok);
    }
    {
        auto diagrams = enumerate_diagrams(k - 2);
        std::mt19937 rng(opts.seed);
        std::uniform_int_distribution<size_t> pick(0, diagrams.size() - 1);
        const bool exhaustive = diagrams.size() <= 9;
        const size_t trials = exhaustive ? diagrams.size() * diagrams.size() : 100;
        bool ok = true;
        for (const auto& x : xs) {
            for (size_t t = 0; t < trials && ok; ++t) {
                const MotzkinDiagram& a =
                    exhaustive ? diagrams[t / diagrams.size()] : diagrams[pick(rng)];
                const MotzkinDiagram& b =
                    exhaustive ? diagrams[t % diagrams.size()] : diagrams[pick(rng)];
                DiagramProduct ab = multiply(a, b);
                AlgebraElement<Rational> lhs =
                    elem_mul(basic_construction_embed(a, k, x), basic_construction_embed(b, k, x), x);
                AlgebraElement<Rational> rhs =
                    basic_construction_embed(ab.diagram, k, x) * x.pow(ab.loops);
                ok = lhs == rhs;
            }
        }
        checks.add("embedding-multiplicative", ok);
    }
    checks.add("matrix-units-mod-ideal", matrix_unit_check(k));
    checks.add("quotient-dimension", quotient_dimension(k) == k * k + 1,
               "expect k^2+1 = " + std::to_string(k * k + 1));
}

void run_schur_weyl(int k, const Options& opts, CheckList& checks) {
    if (k < 2) {
        checks.add("schur-weyl-applicable", false, "needs k >= 2");
        return;
    }
    const Rational s_default(5, 7);
    {
        bool ok = true;
        const LaurentS zeta = zeta_q();
        for (int i = 1; i < k && ok; ++i) {
            auto t_i = diagram_operator(gen_t(k, i));
            ok = t_i.compose(t_i) == zeta * t_i;
        }
        checks.add("t-squared-is-zeta-t", ok);
    }
    {
        bool ok = k <= 3 ? commutation_check(k) : commutation_check_evaluated(k, s_default);
        checks.add(k <= 3 ? "commutation-symbolic" : "commutation-evaluated", ok);
    }
    {
        std::vector<std::pair<MotzkinDiagram, MotzkinDiagram>> pairs;
        bool ok = true;
        if (k == 2) {
            auto diagrams = enumerate_diagrams(2);
            for (const auto& a : diagrams)
                for (const auto& b : diagrams) pairs.emplace_back(a, b);
            ok = representation_check(pairs);
        } else if (k == 3) {
            auto gens = generator_diagrams(3);
            for (const auto& a : gens)
                for (const auto& b : gens) pairs.emplace_back(a, b);
            ok = representation_check(pairs);
        } else {
            auto diagrams = enumerate_diagrams(k);
            std::mt19937 rng(opts.seed);
            std::uniform_int_distribution<size_t> pick(0, diagrams.size() - 1);
            for (int t = 0; t < 200; ++t) pairs.emplace_back(diagrams[pick(rng)], diagrams[pick(rng)]);
            for (const auto& s : {Rational(5, 7), Rational(2, 3), Rational(3, 2)})
                ok = ok && representation_check_evaluated(pairs, s);
        }
        checks.add("representation-homomorphism", ok, std::to_string(pairs.size()) + " pairs");
    }
    if (k <= 3 || opts.slow) {
        bool ok = true;
        const BigInt expected = motzkin_number(2 * k);
        for (const auto& s : {Rational(5, 7), Rational(2, 3), Rational(3, 2)})
            ok = ok && BigInt(faithfulness_rank(k, s)) == expected;
        checks.add("faithfulness-rank", ok, "rank " + expected.get_str());
    }
}

void run_highest_weight(int k, const Options& opts, CheckList& checks) {
    const Rational s_default(5, 7);
    {
        bool ok = true;
        if (k <= 3) {
            for (const auto& p : enumerate_paths(k)) ok = ok && highest_weight_claims(p);
        } else {
            const auto e_op = evaluate(qgroup_operator(QGen::E, k), s_default);
            const auto k_op = evaluate(qgroup_operator(QGen::K, k), s_default);
            const Rational q = s_default * s_default;
            for (const auto& p : enumerate_paths(k)) {
                TensorVector<Rational> w = evaluate(highest_weight_vector(p), s_default);
                TensorVector<Rational> expected = w;
                expected *= q.pow(p.rank());
                ok = ok && !w.is_zero() && e_op.apply(w).is_zero() && k_op.apply(w) == expected;
            }
        }
        checks.add(k <= 3 ? "hw-claims-symbolic" : "hw-claims-evaluated", ok);
    }
    if (k <= 3) {
        bool ok = true;
        for (const auto& p : enumerate_paths(k)) ok = ok && f_string_check(p);
        checks.add("f-string-lengths", ok);
    }
    {
        size_t expected = enumerate_paths(k).size();
        int got = highest_weight_independence_rank(k, s_default);
        checks.add("hw-independence-rank", static_cast<size_t>(got) == expected,
                   "rank " + std::to_string(got));
    }
    if (k <= 4) {
        DecompositionReport rep = decomposition_audit(k);
        std::string mults;
        for (size_t r = 0; r < rep.multiplicities.size(); ++r) {
            if (r) mults += ",";
            mults += rep.multiplicities[r].get_str();
        }
        checks.add("decomposition-multiplicities", rep.pass,
                   "(" + mults + "), dim " + rep.weighted_dimension.get_str());
    }
    (void)opts;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in the Motzkin algebra M_k(x)"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Options opts;
    if (const char* env = std::getenv("MOTZKIN_THREADS")) opts.threads = std::atoi(env);
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", opts.seed, "Seed for sampled checks")->capture_default_str();
    app.add_option("--threads", opts.threads, "Worker threads for parallel-friendly steps");
    app.add_flag("--slow", opts.slow, "Enable expensive opt-in checks");

    int k = 2, r = -1;
    std::string x_text = "0", s_text = "5/7", kind = "diagrams", suite = "all";
    std::string left_arg, right_arg, diagram_arg;
    bool art = false;

    auto* count = app.add_subcommand("count", "Motzkin/Catalan numbers and the m_{k,r} table");
    count->add_option("--k", k, "Size")->required()->check(CLI::Range(0, 40));

    auto* enumerate = app.add_subcommand("enumerate", "List diagrams or paths");
    enumerate->add_option("--kind", kind, "diagrams | paths")
        ->check(CLI::IsMember({"diagrams", "paths"}));
    enumerate->add_option("--k", k, "Size")->required()->check(CLI::Range(0, 8));
    enumerate->add_option("--r", r, "Rank filter for paths");
    enumerate->add_flag("--art", art, "Draw diagrams as ASCII art");

    auto* mul = app.add_subcommand("multiply", "Product of two diagrams with loop count");
    mul->add_option("--left", left_arg, "Left diagram (JSON or file)")->required();
    mul->add_option("--right", right_arg, "Right diagram (JSON or file)")->required();

    auto* factor = app.add_subcommand("factor", "RTL factorization d = r t l");
    factor->add_option("--diagram", diagram_arg, "Diagram (JSON or file)")->required();

    auto* gram = app.add_subcommand("gram", "Gram matrix of the cell module C_k^(r)");
    gram->add_option("--k", k, "Size")->required()->check(CLI::Range(1, 8));
    gram->add_option("--r", r, "Rank")->required();

    auto* gramdet = app.add_subcommand("gramdet", "Gram determinant, direct and by formula");
    gramdet->add_option("--k", k, "Size")->required()->check(CLI::Range(1, 8));
    gramdet->add_option("--r", r, "Rank")->required();

    auto* semi = app.add_subcommand("semisimple", "Semisimplicity criterion at a rational x");
    semi->add_option("--k", k, "Size")->required()->check(CLI::Range(1, 64));
    semi->add_option("--x", x_text, "Rational parameter value p/q")->required();

    auto* chars = app.add_subcommand("characters", "Character table chi_k^(r)(1_{l,k})");
    chars->add_option("--k", k, "Size")->required()->check(CLI::Range(0, 7));

    auto* verify = app.add_subcommand("verify", "Run a named verification suite");
    verify->add_option("suite", suite, "cellularity | basic-construction | schur-weyl | highest-weight | all")
        ->check(CLI::IsMember({"cellularity", "basic-construction", "schur-weyl", "highest-weight", "all"}));
    verify->add_option("--k", k, "Size")->required()->check(CLI::Range(1, 6));

    std::vector<std::string> argv_like{"motzkin"};
    argv_like.insert(argv_like.end(), args.begin(), args.end());
    std::vector<char*> argv;
    argv.reserve(argv_like.size());
    for (auto& a : argv_like) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (json_mode(opts))
            err << json{{"error", e.what()}}.dump() << "\n";
        else
            err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (count->parsed()) {
            json j{{"k", k},
                   {"motzkin_k", motzkin_number(k).get_str()},
                   {"motzkin_2k", motzkin_number(2 * k).get_str()},
                   {"catalan_k", catalan(k).get_str()}};
            json row = json::array(), row_tl = json::array();
            for (int rr = 0; rr <= k; ++rr) {
                row.push_back(m_count(k, rr).get_str());
                row_tl.push_back(m_via_temperley_lieb(k, rr).get_str());
            }
            j["m_row"] = row;
            j["m_row_temperley_lieb"] = row_tl;
            if (json_mode(opts)) {
                out << j.dump(2) << "\n";
            } else {
                out << "M_" << k << " = " << motzkin_number(k).get_str() << ", M_" << 2 * k
                    << " = " << motzkin_number(2 * k).get_str() << ", C_" << k << " = "
                    << catalan(k).get_str() << "\n";
                out << "m_{" << k << ",r} for r = 0.." << k << ":";
                for (int rr = 0; rr <= k; ++rr) out << " " << m_count(k, rr).get_str();
                out << "\n";
            }
            return 0;
        }

        if (enumerate->parsed()) {
            if (kind == "diagrams") {
                auto items = enumerate_diagrams(k);
                if (json_mode(opts)) {
                    json arr = json::array();
                    for (const auto& d : items) arr.push_back(diagram_to_json(d));
                    out << json{{"k", k}, {"count", items.size()}, {"diagrams", arr}}.dump(2)
                        << "\n";
                } else {
                    out << items.size() << " diagrams\n";
                    for (const auto& d : items) {
                        out << d.str() << "\n";
                        if (art) out << d.ascii_art();
                    }
                }
            } else {
                auto items = r >= 0 ? enumerate_paths(k, r) : enumerate_paths(k);
                if (json_mode(opts)) {
                    json arr = json::array();
                    for (const auto& p : items) arr.push_back(path_to_json(p));
                    out << json{{"k", k}, {"count", items.size()}, {"paths", arr}}.dump(2) << "\n";
                } else {
                    out << items.size() << " paths\n";
                    for (const auto& p : items) out << p.str() << "\n";
                }
            }
            return 0;
        }

        if (mul->parsed()) {
            DiagramProduct p = multiply(load_diagram(left_arg), load_diagram(right_arg));
            if (json_mode(opts))
                out << json{{"loops", p.loops}, {"diagram", diagram_to_json(p.diagram)}}.dump(2)
                    << "\n";
            else
                out << "x^" << p.loops << " * " << p.diagram.str() << "\n"
                    << p.diagram.ascii_art();
            return 0;
        }

        if (factor->parsed()) {
            MotzkinDiagram d = load_diagram(diagram_arg);
            RTLFactors f = factor_rtl(d);
            if (json_mode(opts))
                out << json{{"r", diagram_to_json(f.r)},
                            {"t", diagram_to_json(f.t)},
                            {"l", diagram_to_json(f.l)}}
                           .dump(2)
                    << "\n";
            else
                out << "r = " << f.r.str() << "\nt = " << f.t.str() << "\nl = " << f.l.str()
                    << "\n";
            return 0;
        }

        if (gram->parsed()) {
            if (r < 0 || r > k) throw CLI::ValidationError("--r", "rank out of range");
            GramMatrix g = gram_matrix(k, r);
            if (json_mode(opts)) {
                out << gram_to_json(g).dump(2) << "\n";
            } else {
                out << "G_" << k << "^(" << r << "), " << g.paths.size() << " x "
                    << g.paths.size() << "\n";
                for (size_t i = 0; i < g.paths.size(); ++i) {
                    for (size_t j = 0; j < g.paths.size(); ++j) {
                        if (j) out << " | ";
                        out << g.entries(static_cast<int>(i), static_cast<int>(j)).str();
                    }
                    out << "\n";
                }
            }
            return 0;
        }

        if (gramdet->parsed()) {
            if (r < 0 || r > k) throw CLI::ValidationError("--r", "rank out of range");
            PolyX direct = gram_det_direct(k, r);
            PolyX formula = gram_det_formula(k, r);
            bool equal = direct == formula;
            if (json_mode(opts))
                out << json{{"k", k},
                            {"r", r},
                            {"direct", direct.str()},
                            {"formula", formula.str()},
                            {"equal", equal}}
                           .dump(2)
                    << "\n";
            else
                out << direct.str() << "\nformula: " << formula.str() << "\nequal: "
                    << (equal ? "true" : "false") << "\n";
            return equal ? 0 : 1;
        }

        if (semi->parsed()) {
            Rational x = Rational::parse(x_text);
            SemisimplicityReport rep = is_semisimple(k, x);
            json nearest = json::array();
            for (int j = 1; j <= k - 1; ++j) {
                double best = 1e300, best_theta = 0;
                for (double theta : chebyshev_shifted_roots(j)) {
                    double dist = std::abs(theta - x.to_double());
                    if (dist < best) {
                        best = dist;
                        best_theta = theta;
                    }
                }
                nearest.push_back({{"j", j}, {"theta", best_theta}, {"distance", best}});
            }
            if (json_mode(opts)) {
                out << json{{"k", k},
                            {"x", x.str()},
                            {"semisimple", rep.semisimple},
                            {"failing_j", rep.failing_j},
                            {"nearest_roots", nearest}}
                           .dump(2)
                    << "\n";
            } else {
                out << "M_" << k << "(" << x.str() << ") semisimple: "
                    << (rep.semisimple ? "true" : "false") << "\n";
                if (!rep.failing_j.empty()) {
                    out << "failing j:";
                    for (int j : rep.failing_j) out << " " << j;
                    out << "\n";
                }
            }
            return 0;
        }

        if (chars->parsed()) {
            json table = json::array();
            for (int rr = 0; rr <= k; ++rr) {
                json row = json::array();
                for (int l = 0; l <= k; ++l) row.push_back(character(k, rr, l).get_str());
                table.push_back(row);
            }
            if (json_mode(opts)) {
                out << json{{"k", k}, {"chi[r][l]", table}}.dump(2) << "\n";
            } else {
                out << "chi_" << k << "^(r)(1_{l," << k << "})  rows r = 0.." << k
                    << ", cols l = 0.." << k << "\n";
                for (int rr = 0; rr <= k; ++rr) {
                    for (int l = 0; l <= k; ++l) out << character(k, rr, l).get_str() << "\t";
                    out << "\n";
                }
            }
            return 0;
        }

        if (verify->parsed()) {
            CheckList checks;
            if (suite == "cellularity" || suite == "all") run_cellularity(k, opts, checks);
            if (suite == "basic-construction" || suite == "all")
                run_basic_construction(k, opts, checks);
            if (suite == "schur-weyl" || suite == "all") run_schur_weyl(k, opts, checks);
            if (suite == "highest-weight" || suite == "all") run_highest_weight(k, opts, checks);
            checks.emit(k, opts, out);
            return checks.all_pass() ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        if (json_mode(opts))
            err << json{{"error", e.what()}}.dump() << "\n";
        else
            err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        if (json_mode(opts))
            err << json{{"error", e.what()}}.dump() << "\n";
        else
            err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace motzkin::cli
