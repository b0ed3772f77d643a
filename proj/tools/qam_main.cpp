// Command-line front end: evaluate quasi-arithmetic means, measure the
// distance between two of them, emit bound reports, reproduce the worked
// comparison table, and run the verification corpus.
//
// Exit codes: 0 success, 1 property failure, 2 input error.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qam/bounds.hpp"
#include "qam/corpus.hpp"
#include "qam/errors.hpp"
#include "qam/mean.hpp"
#include "qam/report_io.hpp"

namespace {

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item =
            text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw qam::DomainError("bad number '" + item + "' in list");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

qam::Interval parse_interval(const std::string& text) {
    const auto v = parse_list(text);
    if (v.size() != 2) throw qam::DomainError("interval must be 'lo,hi'");
    return qam::Interval(v[0], v[1]);
}

struct CommonOpts {
    std::string interval;
    int grid_n = 64;
    int grid_m = 64;
    double tol = 0.0;
    std::string format = "text";
};

qam::OptimizerConfig optimizer_config(const CommonOpts& o) {
    qam::OptimizerConfig cfg;
    cfg.grid_n = o.grid_n;
    cfg.grid_m = o.grid_m;
    cfg.tol = o.tol;
    return cfg;
}

int cmd_mean(const std::string& gen, const std::string& values_text,
             const std::string& weights_text, const std::string& interval_text) {
    const std::vector<double> values = parse_list(values_text);
    qam::Interval domain =
        !interval_text.empty()
            ? parse_interval(interval_text)
            : [&] {
                  double lo = *std::min_element(values.begin(), values.end());
                  double hi = *std::max_element(values.begin(), values.end());
                  if (lo == hi) { lo -= 0.5; hi += 0.5; }
                  return qam::Interval(lo, hi);
              }();
    const qam::Generator g = qam::make_from_spec(gen, domain);
    const qam::WeightedSample sample =
        weights_text.empty() ? qam::WeightedSample(values)
                             : qam::WeightedSample(values, parse_list(weights_text));
    std::printf("%s\n", qam::format_double(qa_mean(g, sample)).c_str());
    return 0;
}

int cmd_rho(const std::string& spec_f, const std::string& spec_g,
            const CommonOpts& opts) {
    const qam::Interval U = parse_interval(opts.interval);
    const qam::Generator f = qam::make_from_spec(spec_f, U);
    const qam::Generator g = qam::make_from_spec(spec_g, U);
    const qam::RhoEstimate r = estimate_rho(f, g, U, optimizer_config(opts));
    if (opts.format == "json")
        std::printf("%s\n", qam::to_json(r).c_str());
    else
        std::fputs(qam::to_text(r).c_str(), stdout);
    return 0;
}

int cmd_bounds(const std::string& spec_f, const std::string& spec_g,
               const CommonOpts& opts) {
    const qam::Interval U = parse_interval(opts.interval);
    const qam::Generator f = qam::make_from_spec(spec_f, U);
    const qam::Generator g = qam::make_from_spec(spec_g, U);
    const qam::BoundReport rep = full_report(f, g, U, optimizer_config(opts));
    if (opts.format == "json")
        std::printf("%s\n", qam::to_json(rep).c_str());
    else if (opts.format == "csv")
        std::fputs(qam::to_csv(rep).c_str(), stdout);
    else
        std::fputs(qam::to_text(rep).c_str(), stdout);
    return rep.sandwich_ok ? 0 : 1;
}

// The worked comparison: exp(15) vs exp(20) on (0,1), with the measured
// distance and the four lower bounds, each checked against its expected
// window.
int cmd_table() {
    const qam::Interval U(0.0, 1.0, false, false);
    const qam::Generator f = qam::make_builtin(qam::BuiltinFamily::exp(15.0), U);
    const qam::Generator g = qam::make_builtin(qam::BuiltinFamily::exp(20.0), U);

    const double rho = estimate_rho(f, g, U).value;
    const double main_v = qam::lower_main(f, g, U);
    const double estim_v = qam::lower_estim(f, g, U);
    const qam::SeparationCertificate cert = qam::find_separation(f, g, U);
    const double box_v = qam::box_lower(cert);
    const double box_simple_v = qam::box_lower_simplified(cert);

    struct Row {
        const char* name;
        double value;
        double lo, hi;  // acceptance window
    };
    const Row rows[] = {
        {"real value", rho, 0.207, 0.217},
        {"lower_main", main_v, 3.19184e-17 * (1 - 1e-3), 3.19184e-17 * (1 + 1e-3)},
        {"lower_estim", estim_v, 5.71442e-8 * (1 - 1e-2), 5.71442e-8 * (1 + 1e-2)},
        {"box_lower", box_v, 0.0138, 0.0148},
        {"box_lower_simplified", box_simple_v, 0.0105, 0.0117},
    };
    bool all_ok = true;
    std::printf("%-22s %-24s %s\n", "quantity", "value", "status");
    for (const Row& r : rows) {
        const bool ok = r.value >= r.lo && r.value <= r.hi;
        all_ok = all_ok && ok;
        std::printf("%-22s %-24s %s\n", r.name,
                    qam::format_double(r.value).c_str(), ok ? "ok" : "OUT OF RANGE");
    }
    return all_ok ? 0 : 1;
}

int cmd_verify(const std::string& corpus, const CommonOpts& opts) {
    bool all_ok = true;
    for (const qam::SuiteResult& r :
         qam::run_all_suites(corpus, optimizer_config(opts))) {
        all_ok = all_ok && r.ok;
        std::printf("%-4s %-18s (%d checks)%s%s\n", r.ok ? "ok" : "FAIL",
                    r.name.c_str(), r.checks, r.detail.empty() ? "" : "  ",
                    r.detail.c_str());
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-arithmetic mean distances and analytic bound reports"};
    app.require_subcommand(1);

    std::string gen, values_text, weights_text, spec_f, spec_g, corpus = "default";
    CommonOpts opts;

    auto* mean = app.add_subcommand("mean", "evaluate a quasi-arithmetic mean");
    mean->add_option("--gen", gen, "generator spec")->required();
    mean->add_option("--values", values_text, "comma-separated values")->required();
    mean->add_option("--weights", weights_text, "comma-separated weights");
    mean->add_option("--interval", opts.interval, "domain lo,hi (default: value span)");

    auto add_pair_opts = [&](CLI::App* cmd) {
        cmd->add_option("--f", spec_f, "first generator spec")->required();
        cmd->add_option("--g", spec_g, "second generator spec")->required();
        cmd->add_option("--interval", opts.interval, "common interval lo,hi")
            ->required();
        cmd->add_option("--grid-n", opts.grid_n, "x/z grid resolution");
        cmd->add_option("--grid-m", opts.grid_m, "theta grid resolution");
        cmd->add_option("--tol", opts.tol, "refinement tolerance");
        cmd->add_option("--format", opts.format, "json, csv or text");
    };
    auto* rho = app.add_subcommand("rho", "measure the distance between two means");
    add_pair_opts(rho);
    auto* bounds = app.add_subcommand("bounds", "full lower/upper bound report");
    add_pair_opts(bounds);

    auto* table = app.add_subcommand("table", "reproduce the worked comparison table");
    (void)table;

    auto* verify = app.add_subcommand("verify", "run the verification corpus");
    verify->add_option("--corpus", corpus, "default, exp, power or all");
    verify->add_option("--grid-n", opts.grid_n, "x/z grid resolution");
    verify->add_option("--grid-m", opts.grid_m, "theta grid resolution");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (mean->parsed())
            return cmd_mean(gen, values_text, weights_text, opts.interval);
        if (rho->parsed()) return cmd_rho(spec_f, spec_g, opts);
        if (bounds->parsed()) return cmd_bounds(spec_f, spec_g, opts);
        if (table->parsed()) return cmd_table();
        if (verify->parsed()) return cmd_verify(corpus, opts);
    } catch (const qam::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 1;
    }
    return 2;
}
