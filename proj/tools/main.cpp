#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zetatail/distribution.hpp"
#include "zetatail/fit.hpp"
#include "zetatail/optimize.hpp"
#include "zetatail/policy.hpp"
#include "zetatail/regions.hpp"
#include "zetatail/sampling.hpp"
#include "zetatail/versatility.hpp"

namespace {

using namespace zetatail;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

struct Params {
    std::optional<double> a, p, pi0, r, b, c;
    int r_count = 1;
};

double need(const std::optional<double>& v, const char* flag) {
    if (!v) throw usage_error(std::string("missing required parameter ") + flag);
    return *v;
}

DistributionSpec make_spec(const std::string& family, const Params& q) {
    if (family == "zeta-tail") return DistributionSpec::zeta_tail(need(q.a, "--a"));
    if (family == "zeta-tail0") return DistributionSpec::zeta_tail0(need(q.a, "--a"));
    if (family == "geometric0") return DistributionSpec::geometric0(need(q.p, "--p"));
    if (family == "zero-inflated-geometric0" || family == "zig0")
        return DistributionSpec::zero_inflated_geometric0(need(q.p, "--p"), need(q.pi0, "--pi0"));
    if (family == "negative-binomial0" || family == "negbin0")
        return DistributionSpec::negative_binomial0(need(q.r, "--r"), need(q.p, "--p"));
    if (family == "zeta0") return DistributionSpec::zeta0(need(q.b, "--b"));
    if (family == "quadratic0") return DistributionSpec::quadratic0(need(q.c, "--c"));
    if (family == "generalized-zeta-tail" || family == "gzt")
        return DistributionSpec::generalized_zeta_tail(q.r_count, need(q.a, "--a"));
    throw usage_error("unknown family '" + family + "'");
}

Family family_from_slug(const std::string& family) {
    if (family == "geometric0") return Family::Geometric0;
    if (family == "zero-inflated-geometric0" || family == "zig0")
        return Family::ZeroInflatedGeometric0;
    if (family == "negative-binomial0" || family == "negbin0") return Family::NegativeBinomial0;
    if (family == "zeta-tail0") return Family::ZetaTail0;
    if (family == "zeta0") return Family::Zeta0;
    if (family == "quadratic0") return Family::Quadratic0;
    throw usage_error("family '" + family + "' cannot be fit to count data");
}

std::pair<long, long> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const long v = std::stol(text);
            return {v, v};
        }
        const long lo = std::stol(text.substr(0, dots));
        const long hi = std::stol(text.substr(dots + 2));
        if (hi < lo) throw usage_error("empty range '" + text + "'");
        return {lo, hi};
    } catch (const usage_error&) {
        throw;
    } catch (const std::exception&) {
        throw usage_error("cannot parse range '" + text + "', expected A..B");
    }
}

class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw data_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

void cmd_eval(const std::string& family, const Params& q, const std::string& range,
              const std::string& out_path) {
    const DistributionSpec spec = make_spec(family, q);
    long lo = support_origin(spec), hi = lo + 19;
    if (!range.empty()) std::tie(lo, hi) = parse_range(range);
    std::string mean_s, var_s;
    try {
        mean_s = fmt(mean(spec));
    } catch (const domain_error&) {
        mean_s = "inf";
    }
    try {
        var_s = fmt(variance(spec));
    } catch (const domain_error&) {
        var_s = "inf";
    }
    Output out(out_path);
    auto& os = out.stream();
    os << "# family=" << spec.family_name() << " params=" << spec.param_string() << "\n";
    os << "x\tpmf\tcdf\thazard\tmean\tvariance\n";
    for (long x = lo; x <= hi; ++x)
        os << x << '\t' << fmt(pmf(spec, x)) << '\t' << fmt(cdf(spec, x)) << '\t'
           << fmt(hazard(spec, x)) << '\t' << mean_s << '\t' << var_s << "\n";
}

void emit_fit_block(std::ostream& os, const std::string& label, const CountHistogram& hist,
                    const std::vector<Family>& families) {
    os << "# dataset=" << label << " n=" << hist.total() << "\n";
    os << "family\tparams\tloglik\taic\tchi2\tdf\tp_value\tbest_p\tbest_aic\tlow_expected\n";
    std::vector<std::pair<FitResult, GofReport>> rows;
    for (const Family family : families) {
        FitResult fit = mle_fit(family, hist);
        GofReport gof = chi_square_gof(fit.spec, hist);
        rows.emplace_back(std::move(fit), std::move(gof));
    }
    int best_p = 0, best_aic = 0;
    for (int i = 1; i < static_cast<int>(rows.size()); ++i) {
        if (rows[i].second.p_value > rows[best_p].second.p_value) best_p = i;
        if (rows[i].first.aic < rows[best_aic].first.aic) best_aic = i;
    }
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        const auto& [fit, gof] = rows[i];
        os << fit.spec.family_name() << '\t' << fit.spec.param_string() << '\t'
           << fmt(fit.loglik) << '\t' << fmt(fit.aic) << '\t' << fmt(gof.chi2) << '\t' << gof.df
           << '\t' << fmt(gof.p_value) << '\t' << (i == best_p ? "*" : "") << '\t'
           << (i == best_aic ? "*" : "") << '\t' << (gof.low_expected_warning ? "1" : "0")
           << "\n";
    }
}

void cmd_fit(const std::string& region, const std::string& csv_path, bool all_regions,
             std::vector<std::string> family_slugs, bool all_families,
             const std::string& out_path) {
    std::vector<Family> families;
    if (all_families || family_slugs.empty()) {
        families.assign(comparison_families().begin(), comparison_families().end());
    } else {
        for (const auto& slug : family_slugs) families.push_back(family_from_slug(slug));
    }
    Output out(out_path);
    auto& os = out.stream();
    if (all_regions) {
        for (const RegionRecord& rec : regions()) emit_fit_block(os, rec.name, rec.hist, families);
        return;
    }
    if (!csv_path.empty()) {
        emit_fit_block(os, csv_path, parse_counts_csv_file(csv_path), families);
        return;
    }
    if (region.empty())
        throw usage_error("fit needs --region, --csv, or --all-regions");
    const RegionRecord* rec = find_region(region);
    if (!rec) throw data_error("unknown region '" + region + "'");
    emit_fit_block(os, rec->name, rec->hist, families);
}

void cmd_figures(int which, double grid_max, double grid_step, const std::string& out_path) {
    Output out(out_path);
    auto& os = out.stream();
    if (which == 1 || which == 2) {
        os << "# figure=" << which << " grid_max=" << fmt(grid_max)
           << " grid_step=" << fmt(grid_step) << "\n";
        os << (which == 1 ? "a\trelative_overdispersion\n" : "a\tzero_count_ratio\n");
        const long steps = std::lround(grid_max / grid_step);
        for (long i = 0; i <= steps; ++i) {
            const double a = i * grid_step;
            const double v = which == 1 ? zt0_relative_overdispersion(a) : zt0_zero_ratio(a);
            os << fmt(a) << '\t' << fmt(v) << "\n";
        }
        return;
    }
    if (which == 3) {
        const long xmax = std::lround(grid_max);
        os << "# figure=3 x_max=" << xmax << "\n";
        os << "x\thazard_a0.25\thazard_a1\thazard_a4\n";
        const double avals[3] = {0.25, 1.0, 4.0};
        for (long x = 0; x <= xmax; ++x) {
            os << x;
            for (const double a : avals)
                os << '\t' << fmt(hazard(DistributionSpec::zeta_tail0(a), x));
            os << "\n";
        }
        return;
    }
    throw usage_error("figure must be 1, 2, or 3");
}

void cmd_sample(const std::string& family, const Params& q, std::uint64_t n, std::uint64_t seed,
                const std::string& out_path) {
    const DistributionSpec spec = make_spec(family, q);
    Output out(out_path);
    auto& os = out.stream();
    os << "# family=" << spec.family_name() << " params=" << spec.param_string()
       << " n=" << n << " seed=" << seed << "\n";
    os << "variate\n";
    UniformSource rng(seed);
    std::map<long, std::uint64_t> freq;
    long double total = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        const long x = sample(spec, rng);
        os << x << "\n";
        ++freq[x];
        total += x;
    }
    os << "# summary rows=" << n;
    if (n > 0) os << " mean=" << fmt(static_cast<double>(total / n));
    os << "\n";
    for (const auto& [x, count] : freq) os << "# freq\t" << x << '\t' << count << "\n";
}

void cmd_versatility(const std::string& out_path) {
    const Table4 t4 = table4();
    Output out(out_path);
    auto& os = out.stream();
    os << "family\tparameterization\tv\tfisher_integral\tnode_count\tcapped\n";
    for (const auto& row : t4.rows)
        os << row.family << '\t' << row.parameterization << '\t' << fmt(row.v) << '\t'
           << fmt(row.fisher_integral) << '\t' << row.node_count << '\t'
           << (row.capped_nodes ? "1" : "0") << "\n";
    os << "# geometric0_average_v=" << fmt(t4.geometric_average) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zeta tail distribution toolkit"};
    app.require_subcommand(1);

    std::string family, range, out_path, region, csv_path;
    Params params;
    bool all_regions = false, all_families = false;
    std::vector<std::string> family_slugs;
    int figure = 0;
    double grid_max = 20.0, grid_step = 0.05;
    std::uint64_t n = 10, seed = 1;

    auto add_param_opts = [&params](CLI::App* cmd) {
        cmd->add_option("--a", params.a, "zeta tail parameter a >= 0");
        cmd->add_option("--p", params.p, "success probability in (0,1)");
        cmd->add_option("--pi0", params.pi0, "zero-inflation weight in (0,1)");
        cmd->add_option("--r", params.r, "negative binomial size r > 0");
        cmd->add_option("--b", params.b, "power-law exponent b > 0");
        cmd->add_option("--c", params.c, "quadratic parameter c > 0");
        cmd->add_option("--r-count", params.r_count, "number of convolved components");
    };

    auto* eval = app.add_subcommand("eval", "tabulate pmf/cdf/hazard over a count range");
    eval->add_option("family", family, "family slug")->required();
    add_param_opts(eval);
    eval->add_option("--x", range, "count range A..B (default: first 20 support points)");
    eval->add_option("--out", out_path, "write TSV to a file instead of stdout");

    auto* fit = app.add_subcommand("fit", "maximum-likelihood fits with AIC and chi-square GoF");
    fit->add_option("--region", region, "embedded region name (lowercase slug)");
    fit->add_option("--csv", csv_path, "CSV histogram path with header count,frequency");
    fit->add_flag("--all-regions", all_regions, "fit every embedded region");
    fit->add_option("--family", family_slugs, "family slug (repeatable)");
    fit->add_flag("--all-families", all_families, "fit all four comparison families");
    fit->add_option("--out", out_path, "write TSV to a file instead of stdout");

    auto* figures = app.add_subcommand("figures", "emit figure data series");
    figures->add_option("which", figure, "figure number: 1, 2, or 3")->required();
    figures->add_option("--grid-max", grid_max, "grid upper bound (default 20)");
    figures->add_option("--grid-step", grid_step, "grid step (default 0.05)");
    figures->add_option("--out", out_path, "write TSV to a file instead of stdout");

    auto* sample_cmd = app.add_subcommand("sample", "draw seeded variates");
    sample_cmd->add_option("family", family, "family slug")->required();
    add_param_opts(sample_cmd);
    sample_cmd->add_option("--n", n, "number of variates (default 10)");
    sample_cmd->add_option("--seed", seed, "RNG seed (default 1)");
    sample_cmd->add_option("--out", out_path, "write TSV to a file instead of stdout");

    auto* vers = app.add_subcommand("versatility", "lognormal-averaged Fisher information table");
    vers->add_option("--out", out_path, "write TSV to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(eval)) {
            cmd_eval(family, params, range, out_path);
        } else if (app.got_subcommand(fit)) {
            cmd_fit(region, csv_path, all_regions, family_slugs, all_families, out_path);
        } else if (app.got_subcommand(figures)) {
            cmd_figures(figure, grid_max, grid_step, out_path);
        } else if (app.got_subcommand(sample_cmd)) {
            cmd_sample(family, params, n, seed, out_path);
        } else if (app.got_subcommand(vers)) {
            cmd_versatility(out_path);
        }
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const data_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
