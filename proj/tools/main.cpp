#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "speccol/bounds.hpp"
#include "speccol/colouring.hpp"
#include "speccol/corpus.hpp"
#include "speccol/errors.hpp"
#include "speccol/expansion.hpp"
#include "speccol/hypergraph.hpp"
#include "speccol/io.hpp"
#include "speccol/laplacian.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitTheoremViolated = 2; // reserved for failed theorem checks; must not occur on valid input

struct Options {
    double tol = 1e-9;
    unsigned long long seed = 0;
    std::string format = "json"; // json | csv | text
    int k = 0;
    int exact_limit = 24;
    int enum_limit = 12;
    bool with_exact = false;
    bool heuristic = false;
    bool windmill = false;
    int gen_m = 3;
    int gen_e = 3;
    int gen_n = 0;
    std::string input_path;
    std::string assignment;
};

json parameters_json(const Options& opt) {
    return json{{"tol", opt.tol},
                {"seed", opt.seed},
                {"format", opt.format},
                {"exact_limit", opt.exact_limit},
                {"enum_limit", opt.enum_limit}};
}

json input_json(const std::string& path, const speccol::ParsedGraph& pg) {
    json labels = json::array();
    for (long long l : pg.labels) labels.push_back(l);
    return json{{"path", path},
                {"digest", speccol::file_digest(path)},
                {"vertices", pg.graph.order()},
                {"edges", pg.graph.edge_count()},
                {"labels", labels}};
}

json input_json(const std::string& path, const speccol::ParsedHypergraph& ph) {
    json labels = json::array();
    for (long long l : ph.labels) labels.push_back(l);
    return json{{"path", path},
                {"digest", speccol::file_digest(path)},
                {"vertices", ph.hypergraph.vertex_count()},
                {"hyperedges", ph.hypergraph.edge_count()},
                {"uniformity", ph.hypergraph.uniformity()},
                {"labels", labels}};
}

void add_connectivity_warning(json& warnings, const speccol::Graph& g) {
    const int c = g.component_count();
    if (c > 1) warnings.push_back("graph is disconnected (" + std::to_string(c) + " components)");
}

json partition_json(const speccol::Partition& p) {
    json classes = json::array();
    for (const auto& cls : p.classes()) {
        json row = json::array();
        for (int v : cls) row.push_back(v);
        classes.push_back(row);
    }
    return json{{"k", p.class_count()}, {"assignment", p.assignment()}, {"classes", classes}};
}

void print_kv_csv(std::ostream& os, const json& flat) {
    os << "key,value\n";
    for (auto it = flat.begin(); it != flat.end(); ++it) os << it.key() << "," << it.value().dump() << "\n";
}

void print_json(const json& report) { std::cout << report.dump(2) << "\n"; }

speccol::Partition parse_assignment(const std::string& text, int n) {
    std::vector<int> assign;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            assign.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            speccol::fail(speccol::errc::parse_error, "assignment entry '" + tok + "' is not an integer");
        }
    }
    if (static_cast<int>(assign.size()) != n)
        speccol::fail(speccol::errc::partition_size_mismatch,
                      "assignment lists " + std::to_string(assign.size()) + " classes for " + std::to_string(n) +
                          " vertices");
    // compact class labels in first-appearance order
    std::map<int, int> dense;
    for (int& c : assign) {
        const auto [it, fresh] = dense.emplace(c, static_cast<int>(dense.size()));
        (void)fresh;
        c = it->second;
    }
    return speccol::Partition(std::move(assign), static_cast<int>(dense.size()));
}

// ---- subcommand handlers ----------------------------------------------

int run_spectrum(const Options& opt) {
    const auto pg = speccol::parse_graph_file(opt.input_path);
    const auto spec = speccol::eigendecompose(speccol::normalized_laplacian(pg.graph), 1e-10, false);
    json report;
    report["command"] = "spectrum";
    report["input"] = input_json(opt.input_path, pg);
    report["parameters"] = parameters_json(opt);
    json warnings = json::array();
    add_connectivity_warning(warnings, pg.graph);
    report["warnings"] = warnings;
    report["results"] = json{{"eigenvalues", spec.eigenvalues},
                             {"lambda_max", spec.eigenvalues.back()},
                             {"bipartite_signature", std::abs(spec.eigenvalues.back() - 2.0) <= opt.tol}};
    if (opt.format == "csv") {
        std::cout << "index,eigenvalue\n";
        for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i)
            std::cout << i << "," << json(spec.eigenvalues[i]).dump() << "\n";
    } else if (opt.format == "text") {
        std::cout << "normalized Laplacian spectrum of " << opt.input_path << " (n=" << pg.graph.order() << ")\n";
        for (double ev : spec.eigenvalues) std::cout << "  " << ev << "\n";
        std::cout << "lambda_max = " << spec.eigenvalues.back() << "\n";
    } else {
        print_json(report);
    }
    return kExitOk;
}

int bound_like(const Options& opt, bool with_comparators) {
    const auto pg = speccol::parse_graph_file(opt.input_path);
    const speccol::Graph& g = pg.graph;
    const auto spec = speccol::eigendecompose(speccol::normalized_laplacian(g), 1e-10, false);

    speccol::BoundReport r;
    r.sigma_bound = speccol::sigma_chromatic_bound(spec);
    r.lambda_bound = speccol::lambda_chromatic_bound(spec);
    r.per_k_table = speccol::sigma_per_k_table(spec);
    if (with_comparators) {
        r.hoffman_bound = speccol::hoffman_bound(g);
        r.haemers_bound = speccol::haemers_bound(g);
    }
    if (opt.with_exact && g.order() <= opt.exact_limit)
        r.chi_exact = speccol::exact_chromatic_number(g, opt.exact_limit);

    json warnings = json::array();
    add_connectivity_warning(warnings, g);
    if (opt.with_exact && g.order() > opt.exact_limit)
        warnings.push_back("exact chromatic number skipped (vertex count above --exact-limit)");
    int exit_code = kExitOk;
    if (r.chi_exact) {
        const int chi = *r.chi_exact;
        const bool unsound = r.sigma_bound > chi || r.lambda_bound > chi ||
                             (with_comparators && (r.hoffman_bound > chi || r.haemers_bound > chi));
        if (unsound) {
            warnings.push_back("THEOREM CHECK FAILED: a lower bound exceeds the exact chromatic number");
            exit_code = kExitTheoremViolated;
        }
    }

    json per_k = json::array();
    for (const auto& row : r.per_k_table)
        per_k.push_back(json{{"k", row.k},
                             {"sigma_k_minus_1", row.sigma_k_minus_1},
                             {"qualifies", row.qualifies},
                             {"near_tie", row.near_tie}});
    json results{{"sigma_bound", r.sigma_bound}, {"lambda_bound", r.lambda_bound}, {"per_k", per_k}};
    if (with_comparators) {
        results["hoffman_bound"] = r.hoffman_bound;
        results["haemers_bound"] = r.haemers_bound;
    }
    if (r.chi_exact) results["chi_exact"] = *r.chi_exact;

    json report;
    report["command"] = with_comparators ? "compare" : "bound";
    report["input"] = input_json(opt.input_path, pg);
    report["parameters"] = parameters_json(opt);
    report["warnings"] = warnings;
    report["results"] = results;

    if (opt.format == "csv") {
        std::cout << "graph,k,sigma_k_minus_1,qualifies,near_tie,sigma_bound,lambda_bound";
        if (with_comparators) std::cout << ",hoffman_bound,haemers_bound";
        if (r.chi_exact) std::cout << ",chi_exact";
        std::cout << "\n";
        for (const auto& row : r.per_k_table) {
            std::cout << opt.input_path << "," << row.k << "," << json(row.sigma_k_minus_1).dump() << ","
                      << (row.qualifies ? 1 : 0) << "," << (row.near_tie ? 1 : 0) << "," << r.sigma_bound << ","
                      << r.lambda_bound;
            if (with_comparators) std::cout << "," << r.hoffman_bound << "," << r.haemers_bound;
            if (r.chi_exact) std::cout << "," << *r.chi_exact;
            std::cout << "\n";
        }
    } else if (opt.format == "text") {
        std::cout << "chromatic lower bounds for " << opt.input_path << "\n"
                  << "  sigma bound:  " << r.sigma_bound << "\n"
                  << "  lambda bound: " << r.lambda_bound << "\n";
        if (with_comparators)
            std::cout << "  hoffman:      " << r.hoffman_bound << "\n"
                      << "  haemers:      " << r.haemers_bound << "\n";
        if (r.chi_exact) std::cout << "  exact chi:    " << *r.chi_exact << "\n";
    } else {
        print_json(report);
    }
    return exit_code;
}

int run_certify(const Options& opt) {
    const auto pg = speccol::parse_graph_file(opt.input_path);
    const speccol::Graph& g = pg.graph;

    json warnings = json::array();
    add_connectivity_warning(warnings, g);

    speccol::Partition partition = [&] {
        if (!opt.assignment.empty()) return parse_assignment(opt.assignment, g.order());
        if (g.order() <= opt.exact_limit) {
            const int chi = speccol::exact_chromatic_number(g, opt.exact_limit);
            auto en = speccol::enumerate_proper_colourings(g, chi, 1);
            if (!en.colourings.empty()) return en.colourings.front();
        }
        warnings.push_back("no assignment given; certifying a greedy colouring");
        return speccol::greedy_colouring(g, opt.seed);
    }();

    const auto cert = speccol::certify(g, partition);
    const auto spec = speccol::eigendecompose(speccol::normalized_laplacian(g), 1e-10, false);
    const int k = partition.class_count();
    const double target = k > 1 ? static_cast<double>(k) / (k - 1) : 0.0;
    const bool hypothesis = k > 1 && std::abs(spec.eigenvalues.back() - target) <= opt.tol;

    int exit_code = kExitOk;
    if (hypothesis && cert.proper && !(cert.equitable && cert.regular && cert.divisibility_ok)) {
        warnings.push_back("THEOREM CHECK FAILED: lambda_max = k/(k-1) but a k-colouring is not "
                           "equitable/regular/divisibility-clean");
        exit_code = kExitTheoremViolated;
    }

    json results{{"partition", partition_json(partition)},
                 {"proper", cert.proper},
                 {"equitable", cert.equitable},
                 {"regular", cert.regular},
                 {"divisibility_ok", cert.divisibility_ok},
                 {"lambda_max", spec.eigenvalues.back()},
                 {"equality_hypothesis", hypothesis}};
    if (cert.witness)
        results["witness"] = json{{"kind", cert.witness_kind}, {"a", cert.witness->first}, {"b", cert.witness->second}};

    json report;
    report["command"] = "certify";
    report["input"] = input_json(opt.input_path, pg);
    report["parameters"] = parameters_json(opt);
    report["warnings"] = warnings;
    report["results"] = results;

    if (opt.format == "csv") {
        json flat{{"k", k},
                  {"proper", cert.proper},
                  {"equitable", cert.equitable},
                  {"regular", cert.regular},
                  {"divisibility_ok", cert.divisibility_ok},
                  {"lambda_max", spec.eigenvalues.back()},
                  {"equality_hypothesis", hypothesis}};
        print_kv_csv(std::cout, flat);
    } else if (opt.format == "text") {
        std::cout << "certificate for " << opt.input_path << " with k=" << k << "\n"
                  << "  proper:          " << (cert.proper ? "yes" : "no") << "\n"
                  << "  equitable:       " << (cert.equitable ? "yes" : "no") << "\n"
                  << "  regular:         " << (cert.regular ? "yes" : "no") << "\n"
                  << "  divisibility:    " << (cert.divisibility_ok ? "yes" : "no") << "\n";
    } else {
        print_json(report);
    }
    return exit_code;
}

int run_expansion(const Options& opt, bool psi) {
    const auto pg = speccol::parse_graph_file(opt.input_path);
    const speccol::Graph& g = pg.graph;
    if (opt.k < 2) speccol::fail(speccol::errc::single_class, "--k must be at least 2");

    json warnings = json::array();
    add_connectivity_warning(warnings, g);

    const bool use_exact = !opt.heuristic && g.order() <= opt.enum_limit;
    if (!use_exact && !opt.heuristic)
        warnings.push_back("graph too large for exact enumeration; reporting heuristic value");

    const speccol::ExpansionResult res =
        use_exact ? (psi ? speccol::psi_exact(g, opt.k, opt.enum_limit) : speccol::phi_exact(g, opt.k, opt.enum_limit))
                  : (psi ? speccol::psi_heuristic(g, opt.k, opt.seed) : speccol::phi_heuristic(g, opt.k, opt.seed));

    int exit_code = kExitOk;
    if (use_exact) {
        const auto spec = speccol::eigendecompose(speccol::normalized_laplacian(g), 1e-10, false);
        const int n = g.order();
        const bool ok = psi ? res.value * opt.k <= spec.eigenvalues[n - opt.k + 1] + opt.tol
                            : res.value * opt.k >= spec.eigenvalues[opt.k - 1] - opt.tol;
        if (!ok) {
            warnings.push_back("THEOREM CHECK FAILED: exact value violates the spectral inequality");
            exit_code = kExitTheoremViolated;
        }
    }

    json report;
    report["command"] = psi ? "psi" : "phi";
    report["input"] = input_json(opt.input_path, pg);
    report["parameters"] = parameters_json(opt);
    report["warnings"] = warnings;
    report["results"] = json{{"k", opt.k},
                             {"value", res.value},
                             {"exact", res.exact},
                             {"partition", partition_json(res.argpartition)}};

    if (opt.format == "csv") {
        json flat{{"k", opt.k}, {"value", res.value}, {"exact", res.exact}};
        print_kv_csv(std::cout, flat);
    } else if (opt.format == "text") {
        std::cout << (psi ? "psi_" : "phi_") << opt.k << "(" << opt.input_path << ") = " << res.value
                  << (res.exact ? " (exact)" : " (heuristic)") << "\n";
    } else {
        print_json(report);
    }
    return exit_code;
}

int run_hyper_check(const Options& opt) {
    const auto ph = speccol::parse_hypergraph_file(opt.input_path);
    const speccol::LinearHypergraph& h = ph.hypergraph;
    const bool lemma14 = speccol::check_lemma14(h, opt.tol);
    const auto t15 = speccol::check_theorem15(h, opt.tol);

    json warnings = json::array();
    int exit_code = kExitOk;
    if (!lemma14 || !t15.passed) {
        warnings.push_back("THEOREM CHECK FAILED: underlying-graph eigenvalue identity violated");
        exit_code = kExitTheoremViolated;
    }
    if (!t15.hypothesis_met) warnings.push_back("theorem-15 hypothesis n > e not met; equality not required");

    json report;
    report["command"] = "hyper-check";
    report["input"] = input_json(opt.input_path, ph);
    report["parameters"] = parameters_json(opt);
    report["warnings"] = warnings;
    report["results"] = json{{"lemma14_pass", lemma14},
                             {"theorem15_hypothesis_met", t15.hypothesis_met},
                             {"theorem15_pass", t15.passed},
                             {"lambda_max", t15.lambda_max},
                             {"target", t15.target}};

    if (opt.format == "csv") {
        json flat = report["results"];
        print_kv_csv(std::cout, flat);
    } else if (opt.format == "text") {
        std::cout << "linear hypergraph " << opt.input_path << ": n=" << h.vertex_count() << " m=" << h.uniformity()
                  << " e=" << h.edge_count() << "\n"
                  << "  lemma 14 (lambda_max <= m/(m-1)): " << (lemma14 ? "pass" : "FAIL") << "\n"
                  << "  theorem 15 (equality when n > e): "
                  << (t15.hypothesis_met ? (t15.passed ? "pass" : "FAIL") : "hypothesis not met") << "\n";
    } else {
        print_json(report);
    }
    return exit_code;
}

int run_hyper_gen(const Options& opt) {
    const speccol::LinearHypergraph h = opt.windmill
                                            ? speccol::generate_windmill(opt.gen_m, opt.gen_e)
                                            : speccol::generate_random_linear(opt.gen_m, opt.gen_e,
                                                                              opt.gen_n > 0 ? opt.gen_n
                                                                                            : opt.gen_m * opt.gen_e,
                                                                              opt.seed);
    if (opt.format == "json") {
        json edges = json::array();
        for (const auto& e : h.hyperedges()) edges.push_back(e);
        json report;
        report["command"] = "hyper-gen";
        report["parameters"] = parameters_json(opt);
        report["results"] = json{{"vertices", h.vertex_count()},
                                 {"uniformity", h.uniformity()},
                                 {"hyperedges", edges},
                                 {"windmill", opt.windmill}};
        report["warnings"] = json::array();
        print_json(report);
    } else {
        // text and csv both print the file format itself, reusable as input
        const char sep = opt.format == "csv" ? ',' : ' ';
        for (const auto& e : h.hyperedges()) {
            for (std::size_t i = 0; i < e.size(); ++i) std::cout << (i ? std::string(1, sep) : "") << e[i];
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int run_corpus(const Options& opt) {
    const auto checks = speccol::run_property_suite();
    bool all_pass = true;
    json rows = json::array();
    for (const auto& c : checks) {
        all_pass = all_pass && c.pass;
        rows.push_back(json{{"name", c.name},
                            {"instances", c.instances},
                            {"violations", c.violations},
                            {"pass", c.pass},
                            {"detail", c.detail}});
    }
    json report;
    report["command"] = "corpus";
    report["parameters"] = parameters_json(opt);
    report["results"] = json{{"checks", rows}, {"all_pass", all_pass}};
    report["warnings"] = json::array();

    if (opt.format == "csv") {
        std::cout << "name,instances,violations,pass\n";
        for (const auto& c : checks)
            std::cout << c.name << "," << c.instances << "," << c.violations << "," << (c.pass ? 1 : 0) << "\n";
    } else if (opt.format == "text") {
        for (const auto& c : checks) {
            std::printf("%-34s %10lld instances %6lld violations   %s\n", c.name.c_str(), c.instances, c.violations,
                        c.pass ? "pass" : "FAIL");
        }
        std::cout << (all_pass ? "all checks passed" : "THEOREM CHECK FAILED") << "\n";
    } else {
        print_json(report);
    }
    return all_pass ? kExitOk : kExitTheoremViolated;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"speccol: normalized-Laplacian spectra, chromatic bounds, expansion parameters and "
                 "linear-hypergraph checks"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--tol", opt.tol, "comparison tolerance for theorem checks")->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "seed for heuristics and generators");
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--exact-limit", opt.exact_limit, "vertex limit for the exact chromatic solver")
        ->check(CLI::PositiveNumber);
    app.add_option("--enum-limit", opt.enum_limit, "vertex limit for exhaustive partition enumeration")
        ->check(CLI::PositiveNumber);

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the normalized Laplacian");
    spectrum->add_option("input", opt.input_path, "edge-list file")->required();

    auto* bound = app.add_subcommand("bound", "chromatic lower bounds from the spectrum");
    bound->add_option("input", opt.input_path, "edge-list file")->required();
    bound->add_flag("--with-exact", opt.with_exact, "also compute the exact chromatic number");

    auto* compare = app.add_subcommand("compare", "sigma/lambda bounds against Hoffman and Haemers comparators");
    compare->add_option("input", opt.input_path, "edge-list file")->required();
    compare->add_flag("--with-exact", opt.with_exact, "also compute the exact chromatic number");

    auto* certify = app.add_subcommand("certify", "structural certificate of a colouring");
    certify->add_option("input", opt.input_path, "edge-list file")->required();
    certify->add_option("--assignment", opt.assignment, "comma-separated class per vertex (dense labels)");

    auto* psi = app.add_subcommand("psi", "regular-colouring expansion parameter psi_k");
    psi->add_option("input", opt.input_path, "edge-list file")->required();
    psi->add_option("--k", opt.k, "number of classes")->required();
    psi->add_flag("--heuristic", opt.heuristic, "force the spectral heuristic");

    auto* phi = app.add_subcommand("phi", "clustering expansion parameter phi_k (Cheeger at k=2)");
    phi->add_option("input", opt.input_path, "edge-list file")->required();
    phi->add_option("--k", opt.k, "number of classes")->required();
    phi->add_flag("--heuristic", opt.heuristic, "force the spectral heuristic");

    auto* hyper_check = app.add_subcommand("hyper-check", "validate a linear hypergraph and check its spectra");
    hyper_check->add_option("input", opt.input_path, "hyperedge-list file")->required();

    auto* hyper_gen = app.add_subcommand("hyper-gen", "generate a linear hypergraph");
    hyper_gen->add_option("--m", opt.gen_m, "uniformity")->required();
    hyper_gen->add_option("--e", opt.gen_e, "hyperedge count")->required();
    hyper_gen->add_option("--n", opt.gen_n, "vertex pool for random generation (default m*e)");
    hyper_gen->add_flag("--windmill", opt.windmill, "generate the windmill family instead of a random instance");

    auto* corpus = app.add_subcommand("corpus", "run the built-in property suite");
    (void)corpus;

    CLI11_PARSE(app, argc, argv);

    try {
        if (spectrum->parsed()) return run_spectrum(opt);
        if (bound->parsed()) return bound_like(opt, false);
        if (compare->parsed()) return bound_like(opt, true);
        if (certify->parsed()) return run_certify(opt);
        if (psi->parsed()) return run_expansion(opt, true);
        if (phi->parsed()) return run_expansion(opt, false);
        if (hyper_check->parsed()) return run_hyper_check(opt);
        if (hyper_gen->parsed()) return run_hyper_gen(opt);
        if (corpus->parsed()) return run_corpus(opt);
    } catch (const speccol::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
