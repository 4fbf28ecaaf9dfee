#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "stlab/enumerate.hpp"
#include "stlab/families.hpp"
#include "stlab/forbidden.hpp"
#include "stlab/graph6.hpp"
#include "stlab/hosts.hpp"
#include "stlab/spectral.hpp"
#include "stlab/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitPass = 0, kExitFail = 1, kExitUnknown = 2;

std::pair<int, int> parse_range(const std::string& text) {
    size_t dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

ordered_json enclosure_json(const stlab::SpectralEnclosure& e) {
    return ordered_json{{"lower", e.lower},
                        {"upper", e.upper},
                        {"iterations", e.iterations},
                        {"converged", e.converged}};
}

ordered_json root_json(const stlab::ExactRoot& r) {
    std::ostringstream lo, hi;
    lo << r.lo;
    hi << r.hi;
    return ordered_json{{"poly", r.poly.pretty()},
                        {"coeffs", r.poly.coeff_list()},
                        {"lo", lo.str()},
                        {"hi", hi.str()},
                        {"approx", r.approx()}};
}

// Host label grammar: S(h=3), S+(h=2), F(k=2), Fatt(K5,k=2), L(2,1,2), Hn1.
int run_host(const stlab::Graph& g, const std::string& label) {
    ordered_json out{{"schema", "stlab/1"}, {"host", label}};
    auto none = [&]() {
        out["witness"] = nullptr;
        std::cout << out.dump(2) << "\n";
        return kExitFail;
    };
    auto found = [&](ordered_json w) {
        out["witness"] = std::move(w);
        std::cout << out.dump(2) << "\n";
        return kExitPass;
    };
    size_t open = label.find('(');
    std::string head = open == std::string::npos ? label : label.substr(0, open);
    std::string args = open == std::string::npos
                           ? ""
                           : label.substr(open + 1, label.rfind(')') - open - 1);
    auto int_arg = [&](const std::string& key) {
        size_t at = args.find(key + "=");
        if (at == std::string::npos) throw std::invalid_argument("host label needs " + key + "=");
        return std::stoi(args.substr(at + key.size() + 1));
    };
    if (head == "S") {
        auto w = stlab::embeds_in_S(g, int_arg("h"));
        return w ? found(ordered_json{{"cover", *w}}) : none();
    }
    if (head == "S+") {
        auto w = stlab::embeds_in_S_plus(g, int_arg("h"));
        if (!w) return none();
        ordered_json jw{{"cover", w->cover}};
        if (w->extra_edge) jw["extra_edge"] = {w->extra_edge->first, w->extra_edge->second};
        return found(jw);
    }
    if (head == "F") {
        auto w = stlab::embeds_in_F(g, int_arg("k"));
        return w ? found(ordered_json{{"cover", *w}}) : none();
    }
    if (head == "Fatt") {
        std::string h_name = args.substr(0, args.find(','));
        auto w = stlab::embeds_in_F_attach(g, int_arg("k"), h_name);
        if (!w) return none();
        return found(ordered_json{
            {"cover", w->cover}, {"into_attachment", w->into_h}, {"attachment_image", w->h_image}});
    }
    if (head == "L") {
        int t1, t2, h;
        char c1, c2;
        std::istringstream is(args);
        if (!(is >> t1 >> c1 >> t2 >> c2 >> h) || c1 != ',' || c2 != ',')
            throw std::invalid_argument("L label expects L(t1,t2,h)");
        auto w = stlab::embeds_in_L(g, t1, t2, h);
        if (!w) return none();
        return found(ordered_json{{"apex", w->apex}, {"bin_of", w->bin_of}});
    }
    if (head == "Hn1") {
        auto w = stlab::embeds_in_Hn1(g);
        if (!w) return none();
        ordered_json jw{{"u", w->u}, {"v", w->v}};
        if (w->extra_edge) jw["extra_edge"] = {w->extra_edge->first, w->extra_edge->second};
        return found(jw);
    }
    throw std::invalid_argument("unknown host label '" + label + "'");
}

ordered_json scan_json(const stlab::ScanResult& r) {
    return ordered_json{{"schema", "stlab/1"}, {"n", r.n},
                        {"objective", r.objective}, {"best", r.best},
                        {"argmax", r.argmax},      {"visited", r.visited},
                        {"feasible", r.feasible},  {"undecided_tie", r.undecided_tie}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral Turán workbench for linear-forest-free graphs"};
    app.require_subcommand(1);
    std::cout.setf(std::ios::fmtflags(0), std::ios::floatfield);

    std::string family_spec, g6, forest_text, host_label, claim, n_range = "", h_range = "2..5";
    bool exact = false, relaxed = false;
    double tol = 1e-10;
    long long node_budget = 100000000LL;
    int k = 2, samples = 1000, trials = 1000, n_single = 30, n_exhaustive = 7;
    std::uint64_t seed = 1;

    auto* fam = app.add_subcommand("family", "Build named family graphs");
    auto* fam_build = fam->add_subcommand("build", "Emit graph6 for a family spec");
    fam_build->add_option("spec", family_spec, "e.g. \"S(n=10,h=2)\"")->required();

    auto* qcmd = app.add_subcommand("q", "Signless Laplacian spectral radius");
    qcmd->add_option("graph6", g6, "graph6 input");
    qcmd->add_option("--family", family_spec, "family spec instead of graph6");
    qcmd->add_flag("--exact", exact, "certified root of the exact characteristic polynomial");
    qcmd->add_option("--tol", tol, "enclosure width target")->envname("STLAB_TOL");

    auto* forest = app.add_subcommand("forest", "Linear forest containment");
    auto* forest_check = forest->add_subcommand("check", "Decide F ⊆ G");
    forest_check->add_option("graph6", g6)->required();
    forest_check->add_option("--forest", forest_text, "e.g. \"5,3\" or \"3x2\"")->required();
    forest_check->add_option("--budget", node_budget, "backtrack node budget")
        ->envname("STLAB_BUDGET");

    auto* host = app.add_subcommand("host", "Host family embeddability");
    auto* host_embed = host->add_subcommand("embed", "Decide G ⊆ host");
    host_embed->add_option("graph6", g6)->required();
    host_embed->add_option("--host", host_label, "e.g. \"F(k=2)\"")->required();

    auto* scan = app.add_subcommand("scan", "Extremal scans over all F-free graphs");
    std::string objective;
    scan->add_option("objective", objective, "edges or q")->required();
    scan->add_option("--forest", forest_text)->required();
    int scan_n = 8;
    scan->add_option("--n", scan_n)->required();

    auto* verify = app.add_subcommand("verify", "Run a paper-claim check");
    verify->add_option("claim", claim, "claim id, e.g. lem:q-chain")->required();
    verify->add_option("--k", k);
    verify->add_option("--n", n_range, "n or n range a..b");
    verify->add_option("--grid", h_range, "h grid, e.g. h=2..5")
        ->transform([](std::string s) {
            if (s.rfind("h=", 0) == 0) s.erase(0, 2);
            return s;
        });
    verify->add_option("--samples", samples)->envname("STLAB_SAMPLES");
    verify->add_option("--trials", trials);
    verify->add_option("--seed", seed)->envname("STLAB_SEED");
    verify->add_flag("--relaxed", relaxed, "allow sweeps below stated hypotheses");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*fam_build) {
            std::cout << stlab::graph6_encode(stlab::build(stlab::FamilySpec::parse(family_spec)))
                      << "\n";
            return kExitPass;
        }
        if (*qcmd) {
            if (g6.empty() == family_spec.empty())
                throw std::invalid_argument("q needs exactly one of graph6 or --family");
            ordered_json out{{"schema", "stlab/1"}};
            if (exact) {
                stlab::ExactRoot r = family_spec.empty()
                                         ? stlab::q_exact_graph(stlab::graph6_decode(g6))
                                         : stlab::q_exact(stlab::FamilySpec::parse(family_spec));
                stlab::refine_root(r, stlab::BigRat(1, 100000000));
                out["exact"] = root_json(r);
            } else {
                stlab::Graph g = family_spec.empty()
                                     ? stlab::graph6_decode(g6)
                                     : stlab::build(stlab::FamilySpec::parse(family_spec));
                out["enclosure"] = enclosure_json(stlab::q_max(g, tol));
            }
            std::cout << out.dump(2) << "\n";
            return kExitPass;
        }
        if (*forest_check) {
            stlab::Graph g = stlab::graph6_decode(g6);
            stlab::LinearForest f = stlab::LinearForest::parse(forest_text);
            stlab::ForestResult r = stlab::contains_linear_forest(g, f, node_budget);
            if (r.status == stlab::Ternary::Unknown) {
                std::cout << "unknown\n";
                return kExitUnknown;
            }
            if (r.status == stlab::Ternary::Absent) {
                std::cout << "absent\n";
                return kExitFail;
            }
            ordered_json out{{"schema", "stlab/1"}, {"forest", f.to_string()}, {"paths", r.embedding->paths}};
            std::cout << out.dump(2) << "\n";
            return kExitPass;
        }
        if (*host_embed) return run_host(stlab::graph6_decode(g6), host_label);
        if (*scan) {
            stlab::LinearForest f = stlab::LinearForest::parse(forest_text);
            stlab::ScanResult r = objective == "edges" ? stlab::extremal_edge_scan(f, scan_n)
                                  : objective == "q"   ? stlab::extremal_q_scan(f, scan_n)
                                                       : throw std::invalid_argument(
                                                             "objective must be edges or q");
            std::cout << scan_json(r).dump(2) << "\n";
            return r.undecided_tie ? kExitUnknown : kExitPass;
        }
        if (*verify) {
            auto [h_lo, h_hi] = parse_range(h_range);
            stlab::Report rep;
            if (claim == "thm:turan-kp3") {
                auto [lo, hi] = parse_range(n_range.empty() ? "1..9" : n_range);
                rep = stlab::verify_turan_kp3(k, lo, hi);
            } else if (claim == "thm:stability") {
                int n = n_range.empty() ? 30 : parse_range(n_range).first;
                rep = stlab::verify_stability(k, n, samples, seed, relaxed);
            } else if (claim == "lem:q-chain") {
                rep = stlab::verify_q_lemmas(h_lo, h_hi, relaxed);
            } else if (claim == "thm:spectral-kp3") {
                auto [lo, hi] = parse_range(n_range.empty() ? "16..60" : n_range);
                rep = stlab::verify_spectral_kp3(lo, hi);
            } else if (claim == "lem:bounds") {
                rep = stlab::verify_merris_and_bounds(n_exhaustive, trials, seed);
            } else if (claim == "lem:2p3-classify") {
                auto [lo, hi] = parse_range(n_range.empty() ? "6..9" : n_range);
                rep = stlab::verify_2p3_classification(lo, hi);
            } else {
                throw std::invalid_argument("unknown claim id '" + claim + "'");
            }
            std::cout << rep.to_json() << "\n";
            switch (rep.aggregate()) {
                case stlab::Verdict::Pass: return kExitPass;
                case stlab::Verdict::Fail: return kExitFail;
                case stlab::Verdict::Unknown: return kExitUnknown;
            }
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitFail;
    }
    return kExitPass;
}
