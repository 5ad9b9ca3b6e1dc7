#include "pfgame/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pfgame/decide.hpp"
#include "pfgame/numerics.hpp"
#include "pfgame/parse.hpp"
#include "pfgame/report.hpp"
#include "pfgame/tensor.hpp"

namespace pfgame {

namespace {

enum Exit { kOk = 0, kInput = 1, kUndetermined = 2 };

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<double> parse_vector(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw InputError("bad vector entry '" + item + "'");
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size() || !std::isfinite(v)) throw InputError("bad vector entry '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw InputError("empty vector");
    return out;
}

std::string format_vector(const std::vector<double>& v) {
    std::ostringstream ss;
    ss.precision(12);
    ss << "(";
    for (std::size_t i = 0; i < v.size(); ++i) ss << (i ? ", " : "") << v[i];
    ss << ")";
    return ss.str();
}

struct Globals {
    std::string json_path;
    double tol = 1e-10;
    std::size_t max_iters = 100000;
    std::optional<unsigned> seed;
    unsigned threads = 1;

    SolveConfig config() const {
        SolveConfig c;
        c.tolerance = tol;
        c.max_iters = max_iters;
        return c;
    }

    std::vector<double> start(std::size_t n) const {
        std::vector<double> x(n, 0.0);
        if (seed) {
            std::mt19937 rng(*seed);
            std::uniform_real_distribution<double> d(-1.0, 1.0);
            for (auto& v : x) v = d(rng);
        }
        return x;
    }

    void write_json(const nlohmann::json& j) const {
        if (json_path.empty()) return;
        std::ofstream f(json_path);
        if (!f) throw InputError("cannot write " + json_path);
        f << j.dump(2) << "\n";
    }
};

void print_report(std::ostream& out, const DecisionReport& r) {
    out << "verdict: " << to_string(r.verdict) << "\n";
    if (r.disjoint()) out << "I = " << to_string(r.min_dominion) << "\nJ = " << to_string(r.max_dominion) << "\n";
    out << "game: " << game_label(r.game) << "\npath: " << to_string(r.path) << "\noracle calls: " << r.oracle_calls
        << "\n";
}

nlohmann::json base_json(const std::string& command) { return {{"schema", kReportSchema}, {"command", command}}; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dominion and hypergraph decisions for monotone additively homogeneous maps", "pfgame"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--json", g.json_path, "Write a JSON report to this file");
    app.add_option("--tol", g.tol, "Solver tolerance on successive iterates")->check(CLI::PositiveNumber);
    app.add_option("--max-iters", g.max_iters, "Solver iteration cap")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for a random solver start point");
    app.add_option("--threads", g.threads, "Workers for the subset enumeration")->check(CLI::PositiveNumber);

    std::string file;
    auto add_cmd = [&](const std::string& name, const std::string& help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("file", file, "Input file")->required();
        return c;
    };

    auto* c_exist = add_cmd("decide-existence", "Decide whether all slice spaces are bounded");
    std::string path_name = "auto";
    c_exist->add_option("--path", path_name, "Decision path")
        ->check(CLI::IsMember({"auto", "general", "convex"}));

    auto* c_uniq = add_cmd("decide-uniqueness", "Decide whether an eigenvector is unique");
    std::string at_text;
    bool do_solve = false;
    auto* at_opt = c_uniq->add_option("--at", at_text, "Eigenvector, comma separated");
    c_uniq->add_flag("--solve", do_solve, "Solve for an eigenvector first")->excludes(at_opt);
    c_uniq->add_option("--path", path_name, "Decision path")->check(CLI::IsMember({"auto", "general", "convex"}));

    auto* c_solve = add_cmd("solve", "Solve the ergodic equation");
    auto* c_mp = add_cmd("mean-payoff", "Estimate T^k(0)/k");
    std::size_t k = 0;
    c_mp->add_option("--k", k, "Iteration count")->required()->check(CLI::PositiveNumber);
    auto* c_sig = add_cmd("signature", "Print the signature operator");
    auto* c_rec = add_cmd("recession", "Print the recession operator");

    auto* c_export = add_cmd("export", "Export a hypergraph or digraph as DOT");
    std::string graph, dot_path, export_at;
    bool minimal = false;
    c_export->add_option("--graph", graph, "Graph to export")
        ->required()
        ->check(CLI::IsMember({"hplus", "hminus", "ginf", "hu-plus", "hu-minus", "gu"}));
    c_export->add_option("--at", export_at, "Point for the local graphs");
    c_export->add_flag("--minimal", minimal, "Keep minimal tails only");
    c_export->add_option("--dot", dot_path, "Output DOT file")->required();

    auto* c_tdec = add_cmd("tensor-decide", "Decide positive eigenvector existence for a tensor pattern");
    auto* c_tsol = add_cmd("tensor-solve", "Compute a positive tensor eigenpair");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kInput;
    }

    DecideOptions dopts;
    dopts.threads = g.threads;
    dopts.path = path_name == "general"  ? DecideOptions::Path::General
                 : path_name == "convex" ? DecideOptions::Path::ConvexFast
                                         : DecideOptions::Path::Auto;

    try {
        if (c_tdec->parsed() || c_tsol->parsed()) {
            const Tensor t = parse_tensor(read_file(file));
            if (c_tsol->parsed()) {
                const auto r = tensor_eigenpair(t, g.config());
                out << "status: " << (r.converged() ? "Converged" : "NonConvergence") << "\nlambda: " << r.pair.lambda
                    << "\nu: " << format_vector(r.pair.u) << "\nresidual: " << r.pair.residual << "\n";
                auto j = base_json("tensor-solve");
                j["solve"] = to_json(r);
                g.write_json(j);
                return r.converged() ? kOk : kUndetermined;
            }
            const auto pattern = TensorPattern::of(t);
            const auto finals = final_classes(tensor_digraph(pattern));
            bool yes = false;
            NodeSet reached;
            if (finals.size() == 1) {
                reached = reach(tensor_hypergraph(pattern), finals.front());
                yes = reached == NodeSet::full(t.dim);
            }
            out << "positive eigenvector for every positive instance: " << (yes ? "YES" : "NO") << "\n";
            out << "final classes:";
            for (auto c : finals) out << " " << to_string(c);
            out << "\n";
            if (finals.size() == 1) out << "final class " << to_string(finals.front()) << " reaches " << to_string(reached) << "\n";
            auto j = base_json("tensor-decide");
            j["positive_eigenvector"] = yes;
            j["final_classes"] = nlohmann::json::array();
            for (auto c : finals) j["final_classes"].push_back(c.labels());
            if (finals.size() == 1) j["reach"] = reached.labels();
            g.write_json(j);
            return kOk;
        }

        const Operator op = parse_operator(read_file(file));

        if (c_exist->parsed()) {
            const auto r = decide_existence(op, dopts);
            print_report(out, r);
            auto j = to_json(r);
            j["command"] = "decide-existence";
            if (r.disjoint()) {
                const auto cert = certify_disjoint_dominions(op, r);
                out << "certificate: alpha=" << cert.alpha << " beta=" << cert.beta << " s=" << cert.s
                    << " verified=" << (cert.verified ? "true" : "false") << "\n";
                j["certificate"] = to_json(cert);
                g.write_json(j);
                return cert.verified ? kOk : kUndetermined;
            }
            g.write_json(j);
            return kOk;
        }

        if (c_uniq->parsed()) {
            std::vector<double> u;
            nlohmann::json solve_json;
            if (!at_text.empty()) {
                u = parse_vector(at_text);
                if (u.size() != op.dim()) throw InputError("--at vector has wrong dimension");
            } else if (do_solve) {
                const auto s = solve_ergodic(op, g.start(op.dim()), g.config());
                solve_json = to_json(s);
                if (!s.converged()) {
                    out << "solve: NonConvergence after " << s.witness.iterations << " iterations\n";
                    auto j = base_json("decide-uniqueness");
                    j["solve"] = solve_json;
                    g.write_json(j);
                    return kUndetermined;
                }
                u = s.witness.u;
                out << "solved: lambda=" << s.witness.lambda << " u=" << format_vector(u) << "\n";
            } else {
                throw InputError("decide-uniqueness needs --at or --solve");
            }
            const auto r = decide_uniqueness(op, u, dopts);
            print_report(out, r);
            auto j = to_json(r);
            j["command"] = "decide-uniqueness";
            if (!solve_json.is_null()) j["solve"] = solve_json;
            int code = kOk;
            if (r.disjoint()) {
                const auto v = second_eigenvector(op, u, r.min_dominion, r.max_dominion,
                                                  r.game.local_options().tie_tolerance);
                out << "second eigenvector: " << format_vector(v.v) << " residual=" << v.residual << "\n";
                j["second_eigenvector"] = to_json(v);
                if (!v.converged) code = kUndetermined;
            }
            g.write_json(j);
            return code;
        }

        if (c_solve->parsed()) {
            const auto s = solve_ergodic(op, g.start(op.dim()), g.config());
            out << "status: " << (s.converged() ? "Converged" : "NonConvergence") << "\nlambda: " << s.witness.lambda
                << "\nu: " << format_vector(s.witness.u) << "\nresidual: " << s.witness.residual
                << "\niterations: " << s.witness.iterations << "\n";
            auto j = base_json("solve");
            j["solve"] = to_json(s);
            g.write_json(j);
            return s.converged() ? kOk : kUndetermined;
        }

        if (c_mp->parsed()) {
            const auto m = mean_payoff(op, k);
            out << format_vector(m) << "\n";
            auto j = base_json("mean-payoff");
            j["k"] = k;
            j["mean_payoff"] = m;
            g.write_json(j);
            return kOk;
        }

        if (c_sig->parsed() || c_rec->parsed()) {
            const bool sig = c_sig->parsed();
            const Operator res = sig ? signature(op) : recession(op);
            const auto text = to_dsl(res);
            out << text;
            auto j = base_json(sig ? "signature" : "recession");
            j["operator"] = text;
            g.write_json(j);
            return kOk;
        }

        if (c_export->parsed()) {
            const bool local = graph.rfind("hu-", 0) == 0 || graph == "gu";
            GameKind game = GameKind::at_infinity();
            if (local) {
                if (export_at.empty()) throw InputError("--graph " + graph + " needs --at");
                const auto u = parse_vector(export_at);
                if (u.size() != op.dim()) throw InputError("--at vector has wrong dimension");
                game = uniqueness_game(op, u);
            } else if (!export_at.empty()) {
                throw InputError("--at only applies to the local graphs");
            }
            DotOptions dopt;
            dopt.minimal = minimal;
            std::string dot;
            if (graph == "ginf" || graph == "gu") {
                dopt.name = graph == "ginf" ? "Ginf" : "Gu";
                dot = to_dot(build_digraph(op, game), dopt);
            } else {
                const Sign sign = graph == "hplus" || graph == "hu-plus" ? Sign::Plus : Sign::Minus;
                dopt.name = sign == Sign::Plus ? "Hplus" : "Hminus";
                dot = to_dot(build_hypergraph(op, game, sign), dopt);
            }
            std::ofstream f(dot_path);
            if (!f) throw InputError("cannot write " + dot_path);
            f << dot;
            out << "wrote " << dot_path << "\n";
            auto j = base_json("export");
            j["graph"] = graph;
            j["dot"] = dot_path;
            g.write_json(j);
            return kOk;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInput;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return kInput;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return kUndetermined;
    } catch (const std::runtime_error& e) {
        // ParseError lands here as well
        err << "error: " << e.what() << "\n";
        return kInput;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kInput;
    }
    return kInput;
}

}  // namespace pfgame
