// tutteframe: exact Tutte polynomials of desk-scale matroids through several
// independent expansions, with fixtures and a cross-verification harness.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "tutteframe/cache.hpp"
#include "tutteframe/zoo.hpp"

using namespace tutteframe;

namespace {

struct GlobalOptions {
    std::string format = "tableau";
    int threads = 0;
    int max_direct_n = default_direct_cap();
    int max_filter_n = default_filter_cap();
    bool no_cache = false;
    std::string cache_dir;

    ResultCache cache() const {
        if (no_cache) return ResultCache::disabled();
        if (!cache_dir.empty()) return ResultCache::at(cache_dir);
        return ResultCache::from_environment();
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Bivariate compute_cached(const GlobalOptions& opt, const Matroid& m, const std::string& method) {
    ResultCache cache = opt.cache();
    std::string key = cache_key(m.provenance(), method);
    if (auto hit = cache.load(key)) {
        int n = 0, r = 0;
        return polynomial_from_json(*hit, &n, &r);
    }
    Bivariate t = tutte_by_route(m, method, opt.threads, opt.max_direct_n, opt.max_filter_n);
    cache.store(key, polynomial_to_json(t, m.n(), m.r()));
    return t;
}

int cmd_compute(const GlobalOptions& opt, const std::string& spec, const std::string& method) {
    Matroid m = matroid_from_spec(spec);
    Bivariate t = compute_cached(opt, m, method);
    if (!t.all_nonnegative_integer())
        throw Error(Error::Kind::internal, "computed polynomial has a non-Tutte coefficient");
    std::cout << render_polynomial(t, m.n(), m.r(), opt.format);
    return 0;
}

int cmd_verify(const GlobalOptions& opt, const std::string& spec, std::vector<std::string> routes) {
    Matroid m = matroid_from_spec(spec);
    if (routes.empty()) routes = feasible_routes(m, opt.max_direct_n, opt.max_filter_n);
    if (routes.size() < 2) throw infeasible_error("verify: needs at least two feasible routes");
    std::cout << "matroid: " << m.provenance() << " (n=" << m.n() << ", r=" << m.r() << ")\n";
    std::vector<std::pair<std::string, Bivariate>> results;
    for (const std::string& route : routes) {
        auto start = std::chrono::steady_clock::now();
        Bivariate t = tutte_by_route(m, route, opt.threads, opt.max_direct_n, opt.max_filter_n);
        double elapsed = seconds_since(start);
        std::string digest = cache_key(polynomial_to_json(t, m.n(), m.r()).dump(), "digest");
        char line[160];
        std::snprintf(line, sizeof line, "route %-8s digest %s  (%.3f s)", route.c_str(),
                      digest.substr(0, 16).c_str(), elapsed);
        std::cout << line << "\n";
        results.emplace_back(route, std::move(t));
    }
    for (std::size_t i = 1; i < results.size(); ++i) {
        if (results[i].second == results[0].second) continue;
        // report the first differing coefficient
        const Bivariate &a = results[0].second, &b = results[i].second;
        for (const auto& [key, c] : a.terms())
            if (!(b.coeff(key.first, key.second) == c)) {
                std::cout << "verdict: MISMATCH between " << results[0].first << " and "
                          << results[i].first << " at (i=" << key.first << ", j=" << key.second
                          << "): " << c.to_string() << " vs "
                          << b.coeff(key.first, key.second).to_string() << "\n";
                return 1;
            }
        for (const auto& [key, c] : b.terms())
            if (!(a.coeff(key.first, key.second) == c)) {
                std::cout << "verdict: MISMATCH between " << results[0].first << " and "
                          << results[i].first << " at (i=" << key.first << ", j=" << key.second
                          << "): " << a.coeff(key.first, key.second).to_string() << " vs "
                          << c.to_string() << "\n";
                return 1;
            }
    }
    std::cout << "verdict: PASS (" << results.size() << " routes, all identical)\n";
    return 0;
}

int cmd_gamma(const GlobalOptions& opt, const std::string& comp) {
    Composition a = Composition::from_string(comp);
    SymbolCombination g = gamma_symbols(a, opt.max_filter_n);
    if (opt.format == "json") {
        json list = json::array();
        for (const auto& [b, c] : g.coefficients)
            list.push_back({{"sequence", b.to_string()}, {"coefficient", c.to_string()}});
        std::cout << json{{"composition", a.parts}, {"symbols", list}}.dump(2) << "\n";
    } else {
        for (const auto& [b, c] : g.coefficients)
            std::cout << c.to_string() << " [" << b.to_string() << "]\n";
    }
    return 0;
}

int cmd_frame_element(const GlobalOptions& opt, const std::string& comp, const std::string& form) {
    Composition a = Composition::from_string(comp);
    Bivariate g;
    if (form == "closed") g = gammabar_closed(a);
    else if (form == "norms") g = gammabar_norms(a, opt.max_filter_n);
    else if (form == "oracle") g = gammabar_oracle(a, opt.max_filter_n);
    else throw parse_error("frame-element: unknown form '" + form + "' (closed, norms, oracle)");
    if (opt.format == "json") {
        json out = polynomial_to_json(g, a.n(), a.r());
        out["decomposition"] = frame_decomposition_to_json(a);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << render_polynomial(g, a.n(), a.r(), opt.format);
    }
    return 0;
}

int cmd_catenary(const GlobalOptions& opt, const std::string& spec) {
    Matroid m = matroid_from_spec(spec);
    CatenaryData data = catenary_data(m);
    if (opt.format == "json") {
        std::cout << catenary_to_json(data).dump(2) << "\n";
    } else {
        for (const auto& [a, count] : data.nu)
            std::cout << "nu(M; " << a.to_string() << ") = " << count.to_string() << "\n";
    }
    return 0;
}

int cmd_ftensor(const GlobalOptions& opt, const std::string& spec, bool unsigned_values,
                bool total) {
    Matroid m = matroid_from_spec(spec);
    if (m.has_loops())
        throw invalid_error("ftensor: matroid has loops; the tensor is defined for its loopless part");
    FlatTensor tensor = flat_tensor(m);
    if (total) {
        FTableau f = total_flat_numbers(tensor);
        if (opt.format == "json") {
            std::cout << f_tableau_to_json(f, unsigned_values).dump(2) << "\n";
        } else {
            for (const auto& [key, value] : f.entries)
                std::cout << "F[" << key.first << "," << key.second
                          << "] = " << (unsigned_values ? value.abs() : value).to_string() << "\n";
        }
        return 0;
    }
    if (opt.format == "json") std::cout << tensor_to_json(tensor, unsigned_values).dump(2) << "\n";
    else std::cout << render_tensor_text(tensor, unsigned_values);
    return 0;
}

int cmd_norm(const GlobalOptions& opt, const std::string& comp, const std::string& slice) {
    Composition a = Composition::from_string(comp);
    SliceConstraint c = SliceConstraint::from_string(slice);
    std::cout << norm(a, c, opt.max_filter_n).to_string() << "\n";
    return 0;
}

int cmd_zoo_list() {
    for (const ZooEntry& e : zoo_entries()) {
        std::cout << e.name << "\t" << e.spec << "\n    " << e.note << "\n";
        if (!e.tableau_provenance.empty()) std::cout << "    tableau: " << e.tableau_provenance << "\n";
        if (!e.catenary_provenance.empty()) std::cout << "    catenary: " << e.catenary_provenance << "\n";
        if (!e.tensor_provenance.empty()) std::cout << "    tensor: " << e.tensor_provenance << "\n";
        if (!e.mobius_provenance.empty()) std::cout << "    mobius: " << e.mobius_provenance << "\n";
    }
    return 0;
}

int cmd_zoo_run_all(const GlobalOptions& opt) {
    bool ok = true;
    for (const ZooEntry& e : zoo_entries()) {
        auto start = std::chrono::steady_clock::now();
        std::vector<std::string> failures = run_zoo_entry(e, opt.threads);
        char line[160];
        std::snprintf(line, sizeof line, "%-8s %-40s %s  (%.3f s)", e.name.c_str(), e.spec.c_str(),
                      failures.empty() ? "PASS" : "FAIL", seconds_since(start));
        std::cout << line << "\n";
        for (const std::string& f : failures) std::cout << "    " << f << "\n";
        ok = ok && failures.empty();
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Tutte polynomials of matroids via independent expansions"};
    app.require_subcommand(1);

    GlobalOptions opt;
    app.add_option("--format", opt.format, "Output format: tableau, json or poly")
        ->check(CLI::IsMember({"tableau", "json", "poly"}));
    app.add_option("--threads", opt.threads, "Worker threads for subset sums (0 = auto)");
    app.add_option("--max-direct-n", opt.max_direct_n, "Cap for direct 2^n enumeration");
    app.add_option("--max-filter-n", opt.max_filter_n, "Cap for dominance-filter enumeration");
    app.add_flag("--no-cache", opt.no_cache, "Bypass the result cache");
    app.add_option("--cache", opt.cache_dir, "Result cache directory (default: TUTTEFRAME_CACHE)");

    std::string spec, method = "auto", comp, form = "closed", slice;
    std::vector<std::string> routes;
    bool unsigned_values = false, total_numbers = false;

    CLI::App* compute = app.add_subcommand("compute", "Compute a Tutte polynomial");
    compute->fallthrough();
    compute->add_option("--matroid", spec, "Matroid construction spec")->required();
    compute->add_option("--method", method, "direct, delcon, ginv, frame, ftensor or auto")
        ->check(CLI::IsMember({"direct", "delcon", "ginv", "frame", "ftensor", "auto"}));

    CLI::App* verify = app.add_subcommand("verify", "Cross-verify several computation routes");
    verify->fallthrough();
    verify->add_option("--matroid", spec, "Matroid construction spec")->required();
    verify->add_option("--routes", routes, "Routes to compare (default: all feasible)")->delimiter(',');

    CLI::App* gamma = app.add_subcommand("gamma", "Symbol expansion of a gamma-basis element");
    gamma->fallthrough();
    gamma->add_option("--composition", comp, "Composition a0,a1,...,ar")->required();

    CLI::App* frame = app.add_subcommand("frame-element", "A gamma-bar frame element");
    frame->fallthrough();
    frame->add_option("--composition", comp, "Composition a0,a1,...,ar")->required();
    frame->add_option("--form", form, "closed, norms or oracle")
        ->check(CLI::IsMember({"closed", "norms", "oracle"}));

    CLI::App* catenary = app.add_subcommand("catenary", "Flag counts by composition");
    catenary->fallthrough();
    catenary->add_option("--matroid", spec, "Matroid construction spec")->required();

    CLI::App* ftensor = app.add_subcommand("ftensor", "Signed flat tensor of a loopless matroid");
    ftensor->fallthrough();
    ftensor->add_option("--matroid", spec, "Matroid construction spec")->required();
    ftensor->add_flag("--unsigned", unsigned_values, "Print magnitudes");
    ftensor->add_flag("--total", total_numbers, "Print the collapsed total flat numbers F_ij");

    CLI::App* normcmd = app.add_subcommand("norm", "Coefficient-weighted size of a filter slice");
    normcmd->fallthrough();
    normcmd->add_option("--composition", comp, "Composition a0,a1,...,ar")->required();
    normcmd->add_option("--slice", slice, "Slice constraint, e.g. \"s5<=2,s4=0\"");

    CLI::App* zoo = app.add_subcommand("zoo", "Fixture registry");
    zoo->fallthrough();
    CLI::App* zoo_list = zoo->add_subcommand("list", "List registered matroids");
    CLI::App* zoo_run = zoo->add_subcommand("run-all", "Run every registered fixture");
    zoo->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(opt, spec, method);
        if (verify->parsed()) return cmd_verify(opt, spec, routes);
        if (gamma->parsed()) return cmd_gamma(opt, comp);
        if (frame->parsed()) return cmd_frame_element(opt, comp, form);
        if (catenary->parsed()) return cmd_catenary(opt, spec);
        if (ftensor->parsed()) return cmd_ftensor(opt, spec, unsigned_values, total_numbers);
        if (normcmd->parsed()) return cmd_norm(opt, comp, slice);
        if (zoo->parsed()) {
            if (zoo_list->parsed()) return cmd_zoo_list();
            if (zoo_run->parsed()) return cmd_zoo_run_all(opt);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind) {
            case Error::Kind::parse: return 2;
            case Error::Kind::infeasible:
                std::cerr << "hint: try --method frame or --method ftensor, or raise the cap\n";
                return 3;
            default: return 4;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
