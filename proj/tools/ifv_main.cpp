// ifv: batch verification front-end for the intersecting-family toolkit.
//
// Subcommands: sens-scan, verify, degree, cert, isotypic, properties.
// One JSON object per suite on stdout; human summary on stderr.
// Exit codes: 0 all assertions pass, 1 a mathematical assertion failed,
// 2 usage/parse error, 3 capacity exceeded.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ifv/boolfn.hpp"
#include "ifv/cert.hpp"
#include "ifv/clique.hpp"
#include "ifv/io.hpp"
#include "ifv/repr.hpp"
#include "ifv/suites.hpp"

using nlohmann::json;

namespace {

struct Options {
    std::uint64_t seed = ifv::kDefaultSeed;
    int threads = 1;
    bool timings = false;
};

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;  // flag wins
    if (const char* env = std::getenv("IFV_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

bool parse_range(const std::string& text, int& lo, int& hi) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, dots));
            hi = std::stoi(text.substr(dots + 2));
        }
    } catch (...) {
        return false;
    }
    return lo <= hi;
}

void emit(const ifv::VerificationSuite& suite, const Options& opt) {
    std::cout << ifv::suite_to_json(suite, opt.timings) << "\n";
    std::cerr << (suite.pass ? "[PASS] " : "[FAIL] ") << suite.name;
    for (const auto& [k, v] : suite.parameters) std::cerr << " " << k << "=" << v;
    std::cerr << "  (" << suite.elapsed.count() << "s)\n";
}

int run_sens_scan(int k, int s, const Options& opt) {
    ifv::VerificationSuite suite = ifv::suite_sensitivity_scan(k, s);
    emit(suite, opt);
    return suite.pass ? 0 : 1;
}

int run_verify(const std::string& kind_str, const std::string& range, const std::string& emit_dir,
               const std::string& dump_dir, const Options& opt) {
    int lo = 0, hi = 0;
    if (!parse_range(range, lo, hi)) throw ifv::UsageError("bad n range: " + range);
    ifv::DomainKind kind =
        kind_str == "sym" ? ifv::DomainKind::Sym
                          : (kind_str == "pm" ? ifv::DomainKind::PM
                                              : throw ifv::UsageError("kind must be sym or pm"));
    std::vector<ifv::CliqueReport> reports;
    ifv::VerificationSuite suite = ifv::suite_verify(kind, lo, hi, opt.threads, &reports);
    emit(suite, opt);
    if (!emit_dir.empty() || !dump_dir.empty()) {
        for (int n = lo; n <= hi; ++n) {
            ifv::IntersectionGraph g = ifv::build_graph(kind, n, 2, std::nullopt, opt.threads);
            if (!dump_dir.empty())
                ifv::write_file(dump_dir + "/graph_" + kind_str + "_" + std::to_string(n) + ".col",
                                ifv::dump_dimacs(g));
            if (!emit_dir.empty()) {
                const ifv::CliqueReport& report = reports[static_cast<std::size_t>(n - lo)];
                for (std::size_t c = 0; c < report.cliques.size(); ++c) {
                    std::vector<ifv::Elem> members;
                    for (std::uint32_t v : report.cliques[c]) members.push_back(g.vertices[v]);
                    ifv::write_file(emit_dir + "/clique_" + kind_str + "_" + std::to_string(n) +
                                        "_" + std::to_string(c) + ".json",
                                    ifv::family_to_json(g.desc, members));
                }
            }
        }
    }
    return suite.pass ? 0 : 1;
}

int run_degree(const std::string& path, std::uint64_t max_domain, const Options& opt) {
    ifv::BooleanFunction f = ifv::parse_function_json(ifv::read_file(path));
    json report;
    report["file"] = path;
    report["kind"] = f.desc.kind == ifv::DomainKind::Sym ? "sym" : "pm";
    report["n"] = f.desc.n;
    report["weight"] = f.weight();
    report["polynomial_degree"] = ifv::polynomial_degree(f, max_domain);
    report["spectral_degree"] = ifv::spectral_degree(f);
    std::cout << report.dump() << "\n";
    std::cerr << "[OK] degree file=" << path << "\n";
    (void)opt;
    return 0;
}

int run_cert(const std::string& path, std::uint64_t max_exhaustion, const Options& opt) {
    ifv::BooleanFunction f = ifv::parse_function_json(ifv::read_file(path));
    ifv::CertLimits limits{max_exhaustion};
    json report;
    report["file"] = path;
    try {
        report["certificate_complexity"] = ifv::certificate_complexity(f, limits);
    } catch (const ifv::CapacityError&) {
        // large domains (S_7 and up) are served by the one-sided variant
        // over the supplied family; raise --max-exhaustion for the full scan
        report["certificate_complexity"] = nullptr;
        report["capacity_note"] =
            "full-domain exhaustion above the limit; one-sided values only";
    }
    report["one_sided_certificate_complexity"] = ifv::one_side_certificate_complexity(f, limits);
    report["min_certificate_classes"] = ifv::count_min_certificate_classes(f, limits);
    // per-member minimum certificates for family-style inputs
    json members = json::array();
    std::vector<ifv::Elem> domain = ifv::enumerate_domain(f.desc);
    for (std::size_t r = 0; r < domain.size() && members.size() < 16; ++r) {
        if (!f.truth[r]) continue;
        ifv::MinCertificate mc = ifv::min_certificate(f, domain[r]);
        json m;
        m["element"] = domain[r];
        m["size"] = mc.size;
        m["certificate"] = json::parse(ifv::certificate_to_json(mc.cert));
        members.push_back(m);
    }
    report["members"] = members;
    std::cout << report.dump() << "\n";
    std::cerr << "[OK] cert file=" << path << "\n";
    (void)opt;
    return 0;
}

int run_isotypic(const std::string& path, const Options& opt) {
    ifv::BooleanFunction f = ifv::parse_function_json(ifv::read_file(path));
    json report;
    report["file"] = path;
    json comps = json::array();
    for (const ifv::IsotypicComponent& c : ifv::isotypic_decomposition(f)) {
        json e;
        e["lambda"] = c.partition.parts;
        e["norm_sq"] = ifv::rat_to_string(c.norm_sq());
        e["dimension"] = c.dimension;
        comps.push_back(e);
    }
    report["components"] = comps;
    report["spectral_degree"] = ifv::spectral_degree(f);
    std::cout << report.dump() << "\n";
    std::cerr << "[OK] isotypic file=" << path << "\n";
    (void)opt;
    return 0;
}

int run_properties(const std::vector<std::string>& which, const Options& opt) {
    bool all_pass = true;
    auto want = [&](const std::string& name) {
        return which.empty() || std::find(which.begin(), which.end(), name) != which.end();
    };
    std::vector<ifv::VerificationSuite> suites;
    if (want("sens-scan")) suites.push_back(ifv::suite_sensitivity_scan(4, 4));
    if (want("verify-sym")) suites.push_back(ifv::suite_verify(ifv::DomainKind::Sym, 2, 6, opt.threads));
    if (want("verify-pm")) suites.push_back(ifv::suite_verify(ifv::DomainKind::PM, 2, 6, opt.threads));
    if (want("degree-equivalence")) suites.push_back(ifv::suite_degree_equivalence(opt.seed, 100));
    if (want("decomposition")) suites.push_back(ifv::suite_decomposition(opt.seed, 100));
    if (want("degree1-structure")) suites.push_back(ifv::suite_degree1_structure());
    if (want("constructive-lemmas")) suites.push_back(ifv::suite_constructive_lemmas(opt.seed));
    if (want("degree-reduction")) suites.push_back(ifv::suite_degree_reduction(opt.seed));
    if (want("bound-arithmetic")) suites.push_back(ifv::suite_bound_arithmetic());
    if (want("chi-range")) suites.push_back(ifv::suite_chi_range());
    if (suites.empty()) throw ifv::UsageError("no matching suite");
    for (const auto& suite : suites) {
        emit(suite, opt);
        all_pass = all_pass && suite.pass;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ifv: verification toolkit for extremal 2-intersecting families"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    int threads_flag = 0;
    app.add_option("--seed", opt.seed, "seed for the randomized property suites");
    app.add_option("--threads", threads_flag, "worker threads (env IFV_THREADS otherwise)");
    app.add_flag("--timings", opt.timings, "include elapsed times in JSON reports");

    auto* scan = app.add_subcommand("sens-scan", "degree-2 sensitivity scan on the cube");
    int k = 4, s = 4;
    scan->add_option("--k", k, "cube arity")->required();
    scan->add_option("--s", s, "required sensitivity at the origin")->required();

    auto* verify = app.add_subcommand("verify", "maximum-clique uniqueness verification");
    std::string kind_str, range = "4..7", emit_dir, dump_dir;
    verify->add_option("--kind", kind_str, "sym or pm")->required();
    verify->add_option("--n", range, "single n or inclusive range a..b")->required();
    verify->add_option("--emit-cliques", emit_dir, "dump maximum cliques as family files");
    verify->add_option("--dump-graph", dump_dir, "dump intersection graphs in DIMACS form");

    std::string degree_file, cert_file, isotypic_file;
    std::uint64_t max_domain = 2000, max_exhaustion = 1000;
    auto* degree = app.add_subcommand("degree", "polynomial and spectral degree of a family file");
    degree->add_option("--file", degree_file, "family or bit-vector JSON file")->required();
    degree->add_option("--max-domain", max_domain,
                       "opt-in cap on the domain size for exact rank computations");
    auto* cert = app.add_subcommand("cert", "certificate complexity of a family file");
    cert->add_option("--file", cert_file, "family or bit-vector JSON file")->required();
    cert->add_option("--max-exhaustion", max_exhaustion,
                     "opt-in cap on the number of inputs exhausted for C(f)");
    auto* isotypic = app.add_subcommand("isotypic", "isotypic decomposition report");
    isotypic->add_option("--file", isotypic_file, "family or bit-vector JSON file")->required();

    auto* properties = app.add_subcommand("properties", "run the invariant suites");
    std::vector<std::string> which;
    properties->add_option("--suite", which, "run only the named suites (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    opt.threads = resolve_threads(threads_flag);

    try {
        if (*scan) return run_sens_scan(k, s, opt);
        if (*verify) return run_verify(kind_str, range, emit_dir, dump_dir, opt);
        if (*degree) return run_degree(degree_file, max_domain, opt);
        if (*cert) return run_cert(cert_file, max_exhaustion, opt);
        if (*isotypic) return run_isotypic(isotypic_file, opt);
        if (*properties) return run_properties(which, opt);
    } catch (const ifv::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const ifv::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ifv::InternalError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
