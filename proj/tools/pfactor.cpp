// Command-line front end for the parity-factor library.
//
// Exit codes: 0 = a verdict/result was produced (whatever it says),
//             1 = runtime failure (bad file, hypothesis violation, ...),
//             2 = usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "parityfactor/constructions.hpp"
#include "parityfactor/factor.hpp"
#include "parityfactor/graph.hpp"
#include "parityfactor/jsonio.hpp"
#include "parityfactor/spectral.hpp"
#include "parityfactor/theorem.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string set_text(const pf::VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

void print_certificate_text(const pf::FactorCertificate& cert, bool with_factor) {
    switch (cert.verdict) {
        case pf::Verdict::exists: std::cout << "verdict exists\n"; break;
        case pf::Verdict::not_exists: std::cout << "verdict not-exists\n"; break;
        default: std::cout << "verdict unknown\n"; break;
    }
    if (cert.violation) {
        std::cout << "violation S=" << set_text(cert.violation->S)
                  << " T=" << set_text(cert.violation->T)
                  << " deficiency=" << cert.violation->deficiency << "\n";
    }
    if (with_factor && cert.factor) {
        long long total = 0;
        for (const auto& [key, mult] : *cert.factor) total += mult;
        std::cout << "factor " << total << "\n";
        for (const auto& [key, mult] : *cert.factor) {
            if (key.first == key.second)
                std::cout << "l " << key.first << " " << mult << "\n";
            else if (mult > 1)
                std::cout << "e " << key.first << " " << key.second << " " << mult << "\n";
            else
                std::cout << "e " << key.first << " " << key.second << "\n";
        }
    }
}

const char* verdict_text(pf::BranchVerdict v) {
    switch (v) {
        case pf::BranchVerdict::guaranteed: return "guaranteed";
        case pf::BranchVerdict::boundary: return "boundary";
        default: return "not-guaranteed";
    }
}

void print_report_text(const pf::TheoremReport& rep) {
    std::cout << "n=" << rep.n << " delta=" << rep.min_degree << " h=" << rep.h
              << " h_even=" << rep.h_even << " h_odd=" << rep.h_odd
              << " theta=" << pf::format_number(rep.theta)
              << " theta_star=" << pf::format_number(rep.theta_star) << "\n";
    for (const pf::BranchRecord& r : rep.branches) {
        std::cout << r.branch << ": " << verdict_text(r.verdict);
        if (!r.applicable) std::cout << " [not applicable]";
        if (r.test == pf::BranchTest::connectivity) std::cout << " [test i]";
        if (r.test == pf::BranchTest::eigenvalue) {
            std::cout << " [test ii: lambda_" << *r.eigen_index;
            if (r.measured) std::cout << " = " << pf::format_number(*r.measured);
            std::cout << " vs " << pf::format_number(*r.threshold) << "]";
        }
        if (!r.note.empty()) std::cout << " " << r.note;
        std::cout << "\n";
    }
    std::cout << "verdict: " << verdict_text(rep.overall) << "\n";
}

void print_tightness_text(const pf::TightnessReport& rep) {
    std::cout << "family r=" << rep.r << " h=" << rep.h << " l=" << rep.l << ": "
              << rep.family.graph.vertex_count() << " vertices, " << rep.family.graph.edge_total()
              << " edges, b=" << rep.b << "\n";
    for (const pf::TightnessCheck& c : rep.checks)
        std::cout << "check " << c.name << ": " << (c.pass ? "pass" : "FAIL") << " (" << c.detail
                  << ")\n";
    std::cout << "certificate deficiency " << rep.certificate_deficiency << "\n";
    std::cout << (rep.all_pass ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    std::cout << rep.note << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"parity-factor toolkit: builders, spectra, factor decisions, sufficient conditions"};
    // "--h" is a real option below, so help must not own the short -h.
    auto claim_help = [](CLI::App* a) {
        a->set_help_flag("--help", "print this help message and exit");
        return a;
    };
    claim_help(&app);
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");
    int seed = 0;
    app.add_option("--seed", seed, "reserved for scripted use; all commands are deterministic");

    // gen
    CLI::App* gen = claim_help(app.add_subcommand("gen", "generate a graph and print it"));
    gen->require_subcommand(1);
    int gen_n = 0, gen_a = 0, gen_b = 0, gen_r = 0, gen_eta = 0, gen_h = 0, gen_l = 0;
    std::string meta_path;
    CLI::App* gen_kn = claim_help(gen->add_subcommand("kn", "complete graph K_n"));
    gen_kn->add_option("--n", gen_n, "vertex count")->required();
    CLI::App* gen_cyc = claim_help(gen->add_subcommand("cyc", "cycle C_n"));
    gen_cyc->add_option("--n", gen_n, "vertex count")->required();
    CLI::App* gen_kbip = claim_help(gen->add_subcommand("kbip", "complete bipartite K_{a,b}"));
    gen_kbip->add_option("--a", gen_a, "first side")->required();
    gen_kbip->add_option("--b", gen_b, "second side")->required();
    CLI::App* gen_ext = claim_help(gen->add_subcommand("H", "extremal graph for the threshold rho(r, eta)"));
    gen_ext->add_option("--r", gen_r, "minimum degree")->required();
    gen_ext->add_option("--eta", gen_eta, "deficiency parameter")->required();
    CLI::App* gen_fam = claim_help(gen->add_subcommand("F", "tightness family instance"));
    gen_fam->add_option("--r", gen_r, "copy minimum degree")->required();
    gen_fam->add_option("--h", gen_h, "edge-connectivity")->required();
    gen_fam->add_option("--l", gen_l, "number of copies")->required();
    gen_fam->add_option("--meta", meta_path, "write U/copies metadata JSON to this file");

    // spectrum
    CLI::App* spectrum = claim_help(app.add_subcommand("spectrum", "adjacency eigenvalues of a simple graph"));
    std::string spec_file;
    int spec_k = 0;
    spectrum->add_option("file", spec_file, "graph file ('-' for stdin)")->required();
    spectrum->add_option("--k", spec_k, "print only the k largest");

    // factor
    CLI::App* factor = claim_help(app.add_subcommand("factor", "decide/construct parity factors"));
    factor->require_subcommand(1);
    std::string fac_file, fac_cfile, fac_method = "matching";
    int fac_limit = 15;
    CLI::App* fac_check = claim_help(factor->add_subcommand("check", "decide existence"));
    CLI::App* fac_find = claim_help(factor->add_subcommand("find", "decide and construct"));
    for (CLI::App* sub : {fac_check, fac_find}) {
        sub->add_option("file", fac_file, "graph file ('-' for stdin)")->required();
        sub->add_option("--c", fac_cfile, "degree-constraint file")->required();
        sub->add_option("--method", fac_method, "matching | oracle | both")
            ->check(CLI::IsMember({"matching", "oracle", "both"}));
        sub->add_option("--limit", fac_limit, "max vertices for the exhaustive oracle");
    }

    // thm
    CLI::App* thm = claim_help(app.add_subcommand("thm", "evaluate the sufficient conditions"));
    CLI::App* thm_check = claim_help(thm->add_subcommand("check", "evaluate at a given theta"));
    thm->require_subcommand(1);
    std::string thm_file, thm_cfile;
    double thm_theta = 0.0;
    bool thm_best = false;
    int thm_h = 0;
    thm_check->add_option("file", thm_file, "graph file ('-' for stdin)")->required();
    thm_check->add_option("--c", thm_cfile, "degree-constraint file")->required();
    CLI::Option* opt_theta = thm_check->add_option("--theta", thm_theta, "theta in (0,1)");
    thm_check->add_flag("--best-theta", thm_best, "search the feasible theta interval");
    CLI::Option* opt_h = thm_check->add_option("--h", thm_h, "edge-connectivity to assume (<= actual)");

    // tight
    CLI::App* tight = claim_help(app.add_subcommand("tight", "verify a tightness family instance"));
    int t_r = 0, t_h = 0, t_l = 0;
    tight->add_option("--r", t_r, "copy minimum degree")->required();
    tight->add_option("--h", t_h, "edge-connectivity")->required();
    tight->add_option("--l", t_l, "number of copies")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            pf::Graph g;
            std::optional<pf::FamilyInstance> fam;
            if (gen_kn->parsed()) g = pf::complete(gen_n);
            if (gen_cyc->parsed()) g = pf::cycle(gen_n);
            if (gen_kbip->parsed()) g = pf::complete_bipartite(gen_a, gen_b);
            if (gen_ext->parsed()) g = pf::extremal_graph(gen_r, gen_eta);
            if (gen_fam->parsed()) {
                fam = pf::tight_family(gen_r, gen_h, gen_l);
                g = fam->graph;
                if (!meta_path.empty()) {
                    std::ofstream out(meta_path);
                    if (!out) throw std::runtime_error("cannot write file: " + meta_path);
                    out << pf::family_json(*fam).dump(2) << "\n";
                }
            }
            if (as_json) {
                nlohmann::json doc{{"graph", pf::serialize_graph(g)}};
                if (fam) doc["family"] = pf::family_json(*fam);
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << pf::serialize_graph(g);
            }
            return 0;
        }

        if (spectrum->parsed()) {
            const pf::Graph g = pf::parse_graph(read_input(spec_file));
            const pf::SpectrumResult spec = pf::adjacency_spectrum(g);
            const int k = spec_k > 0 ? std::min<int>(spec_k, spec.eigenvalues.size())
                                     : static_cast<int>(spec.eigenvalues.size());
            if (as_json) {
                nlohmann::json doc = pf::spectrum_json(spec);
                doc["eigenvalues"].erase(doc["eigenvalues"].begin() + k,
                                         doc["eigenvalues"].end());
                std::cout << doc.dump(2) << "\n";
            } else {
                for (int i = 0; i < k; ++i)
                    std::cout << pf::format_number(spec.eigenvalues[i]) << "\n";
            }
            return 0;
        }

        if (factor->parsed()) {
            const pf::Graph g = pf::parse_graph(read_input(fac_file));
            const pf::DegreeConstraint c =
                pf::parse_constraints(read_input(fac_cfile), g.vertex_count());
            pf::FactorCertificate cert;
            if (fac_method == "matching") {
                cert = pf::find_parity_factor(g, c, fac_limit);
            } else if (fac_method == "oracle") {
                cert = pf::decide_bruteforce(g, c, fac_limit);
            } else {
                cert = pf::decide_bruteforce(g, c, fac_limit);
                pf::FactorCertificate built = pf::find_parity_factor(g, c, fac_limit);
                if (built.verdict != cert.verdict)
                    throw std::logic_error("internal: the two deciders disagree");
                cert.factor = std::move(built.factor);
            }
            if (as_json)
                std::cout << pf::certificate_json(cert).dump(2) << "\n";
            else
                print_certificate_text(cert, fac_find->parsed());
            return 0;
        }

        if (thm->parsed()) {
            const pf::Graph g = pf::parse_graph(read_input(thm_file));
            const pf::DegreeConstraint c =
                pf::parse_constraints(read_input(thm_cfile), g.vertex_count());
            if (thm_best) {
                const pf::BestTheta best = pf::best_theta(g, c);
                if (as_json) {
                    nlohmann::json doc{{"theta", best.theta},
                                       {"probed", best.probed},
                                       {"report", pf::report_json(best.report)}};
                    std::cout << doc.dump(2) << "\n";
                } else {
                    std::cout << "best theta " << pf::format_number(best.theta) << " (probed "
                              << best.probed.size() << " candidates)\n";
                    print_report_text(best.report);
                }
            } else {
                if (opt_theta->count() == 0) {
                    std::cerr << "error: provide --theta or --best-theta\n";
                    return 2;
                }
                std::optional<int> h;
                if (opt_h->count() > 0) h = thm_h;
                const pf::TheoremReport rep = pf::evaluate_conditions(g, c, thm_theta, h);
                if (as_json)
                    std::cout << pf::report_json(rep).dump(2) << "\n";
                else
                    print_report_text(rep);
            }
            return 0;
        }

        if (tight->parsed()) {
            const pf::TightnessReport rep = pf::verify_tightness(t_r, t_h, t_l);
            if (as_json)
                std::cout << pf::tightness_json(rep).dump(2) << "\n";
            else
                print_tightness_text(rep);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "error: no command\n";
    return 2;
}
