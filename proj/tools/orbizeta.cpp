#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "orbizeta/counting.hpp"
#include "orbizeta/parser.hpp"
#include "orbizeta/suite.hpp"
#include "orbizeta/zeta.hpp"

using namespace orbizeta;

namespace {

struct FieldArgs {
    std::uint64_t p = 0;
    int e = 1;
    std::uint64_t q = 0;
};

void add_field_options(CLI::App* cmd, FieldArgs& fa)
{
    auto* p = cmd->add_option("--p", fa.p, "field characteristic");
    cmd->add_option("--e", fa.e, "extension degree (with --p)")->needs(p);
    cmd->add_option("--q", fa.q, "field size, a prime power")->excludes(p);
}

std::pair<std::uint64_t, int> resolve_field(const FieldArgs& fa)
{
    if (fa.q) {
        auto pe = prime_power_decompose(fa.q);
        if (pe.first == 0) throw std::invalid_argument(std::to_string(fa.q) + " is not a prime power");
        return pe;
    }
    if (!fa.p) throw std::invalid_argument("give the field with --p/--e or --q");
    if (!is_prime(fa.p)) throw std::invalid_argument(std::to_string(fa.p) + " is not prime");
    return {fa.p, fa.e};
}

std::uint64_t env_budget()
{
    if (const char* s = std::getenv("ORBIZETA_BUDGET")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("ORBIZETA_BUDGET is not a number: ") + s);
        }
    }
    return kDefaultBudget;
}

AffineModel model_from(const std::string& poly, const std::string& vars)
{
    if (vars.empty()) return AffineModel({parse_polynomial(poly)});
    std::vector<std::string> names;
    std::stringstream ss(vars);
    std::string v;
    while (std::getline(ss, v, ',')) names.push_back(v);
    return AffineModel(names, {parse_polynomial(poly, names)});
}

void write_file(const std::string& path, const std::string& body)
{
    if (path == "-") {
        std::cout << body << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << body << '\n';
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Point counts, zeta functions and McKay-type identities over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t budget = 0;
    unsigned threads = 0;
    app.add_option("--budget", budget, "maximum tuples per count (default 1e9, or ORBIZETA_BUDGET)");
    app.add_option("--threads", threads, "worker threads (0 = all cores)");

    // count
    auto* count = app.add_subcommand("count", "count the points of {poly = 0} over F_{q^r}, r = 1..rmax");
    std::string poly, vars;
    FieldArgs fa;
    int rmax = 1;
    bool show_engine = false;
    count->add_option("--poly", poly, "polynomial, e.g. \"x*y - z^3\"")->required();
    count->add_option("--vars", vars, "comma-separated variable list (default: letters used)");
    add_field_options(count, fa);
    count->add_option("--rmax", rmax, "largest extension degree")->check(CLI::PositiveNumber);
    count->add_flag("--engine", show_engine, "print the engine after each count");

    // zeta
    auto* zeta = app.add_subcommand("zeta", "recognize the zeta function from counts r = 1..rmax");
    int max_den = 0;
    zeta->add_option("--poly", poly, "polynomial")->required();
    zeta->add_option("--vars", vars, "comma-separated variable list");
    add_field_options(zeta, fa);
    zeta->add_option("--rmax", rmax, "number of counts")->check(CLI::PositiveNumber);
    zeta->add_option("--max-den", max_den, "largest denominator degree tried (default rmax/2)");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all", qlist, json_path, csv_path, model_list, surface_list;
    SuiteOptions so;
    bool quiet = false, timing = false;
    verify->add_option("--suite", suite, "kleinian, threefold, symprod, weil or all")
        ->check(CLI::IsMember({"kleinian", "threefold", "symprod", "weil", "all"}));
    verify->add_option("--q", qlist, "comma-separated q values (default depends on the suite)");
    verify->add_option("--rmax", so.rmax, "largest extension degree")->check(CLI::PositiveNumber);
    verify->add_option("--nmax", so.nmax, "largest symmetric power");
    verify->add_option("--model", model_list, "comma-separated models: cyclic:N, dihedral:N, tetra, octa, icosa, mu3, mu5");
    verify->add_option("--surface", surface_list, "comma-separated surfaces: P1, P2, P1xP1, Hirz3, counts=N1:N2:...");
    verify->add_option("--json", json_path, "write the JSON report to this path (- for stdout)");
    verify->add_option("--csv", csv_path, "write the CSV report to this path (- for stdout)");
    verify->add_flag("--quiet", quiet, "no text report");
    verify->add_flag("--timing", timing, "add timings to the text report");
    verify->add_flag("--perturb", so.perturb, "corrupt one comparison (exercises the failure path)");

    CLI11_PARSE(app, argc, argv);

    try {
        CountOptions opts;
        opts.budget = budget ? budget : env_budget();
        opts.threads = threads;

        if (*count || *zeta) {
            const auto model = model_from(poly, vars);
            const auto [p, e] = resolve_field(fa);
            const auto res = count_sequence(model, p, e, rmax, opts);
            if (*count) {
                for (std::size_t i = 0; i < res.counts.values.size(); ++i) {
                    std::cout << res.counts.values[i].get_str();
                    if (show_engine) std::cout << ' ' << to_string(res.engines[i]);
                    std::cout << '\n';
                }
            }
            if (res.error) {
                std::cerr << "error: " << *res.error << '\n';
                return 1;
            }
            if (*zeta) {
                const auto rec = recognize_rational(zeta_from_counts(res.counts), max_den ? max_den : rmax / 2,
                                                    res.counts.q());
                if (!rec.recognized) {
                    std::cerr << "not recognized: " << rec.reason << '\n';
                    return 1;
                }
                std::cout << rec.factored_string() << '\n';
            }
            return 0;
        }

        so.count = opts;
        if (!qlist.empty()) so.qs = parse_q_list(qlist);
        auto split = [](const std::string& s, char sep) {
            std::vector<std::string> out;
            std::stringstream ss(s);
            std::string item;
            while (std::getline(ss, item, sep))
                if (!item.empty()) out.push_back(item);
            return out;
        };
        so.models = split(model_list, ',');
        // surfaces are comma-separated; counts= lists use ':' inside the flag
        for (auto s : split(surface_list, ',')) {
            if (s.rfind("counts=", 0) == 0) std::replace(s.begin(), s.end(), ':', ',');
            so.surfaces.push_back(s);
        }

        const auto reports = run_suite(suite, so);
        if (!quiet) std::cout << emit_report(reports, ReportFormat::Text, timing);
        if (!json_path.empty()) write_file(json_path, emit_report(reports, ReportFormat::Json));
        if (!csv_path.empty()) {
            std::string csv = emit_report(reports, ReportFormat::Csv);
            csv.pop_back();
            write_file(csv_path, csv);
        }
        if (reports.empty()) std::cerr << "warning: no items selected\n";
        bool ok = true;
        for (const auto& r : reports) ok = ok && r.all_match();
        return ok ? 0 : 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
}
