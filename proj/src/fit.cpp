#include "zetatail/fit.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include "zetatail/optimize.hpp"
#include "zetatail/policy.hpp"

namespace zetatail {

void CountHistogram::add(long x, long freq) {
    if (x < 0) throw data_error("histogram: negative count value");
    if (freq < 0) throw data_error("histogram: negative frequency");
    counts[x] += freq;
}

long CountHistogram::total() const {
    long n = 0;
    for (const auto& [x, f] : counts) n += f;
    return n;
}

double CountHistogram::sum_x() const {
    double s = 0;
    for (const auto& [x, f] : counts) s += static_cast<double>(x) * f;
    return s;
}

long CountHistogram::max_count() const {
    long m = -1;
    for (const auto& [x, f] : counts)
        if (f > 0) m = std::max(m, x);
    return m;
}

long CountHistogram::freq(long x) const {
    const auto it = counts.find(x);
    return it == counts.end() ? 0 : it->second;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

long parse_nonneg(const std::string& field, std::size_t line_no, const char* what) {
    const std::string t = trim(field);
    if (t.empty() || t.find_first_not_of("0123456789-") != std::string::npos)
        throw data_error("csv line " + std::to_string(line_no) + ": invalid " + what + " '" + t +
                         "'");
    long v = 0;
    try {
        v = std::stol(t);
    } catch (const std::exception&) {
        throw data_error("csv line " + std::to_string(line_no) + ": invalid " + what + " '" + t +
                         "'");
    }
    if (v < 0)
        throw data_error("csv line " + std::to_string(line_no) + ": negative " + what);
    return v;
}

}  // namespace

CountHistogram parse_counts_csv(std::istream& in) {
    CountHistogram hist;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF)
            line.erase(0, 3);  // UTF-8 BOM
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (!header_seen) {
            if (t != "count,frequency")
                throw data_error("csv line " + std::to_string(line_no) +
                                 ": expected header 'count,frequency'");
            header_seen = true;
            continue;
        }
        const auto comma = t.find(',');
        if (comma == std::string::npos || t.find(',', comma + 1) != std::string::npos)
            throw data_error("csv line " + std::to_string(line_no) +
                             ": expected exactly two comma-separated fields");
        const long x = parse_nonneg(t.substr(0, comma), line_no, "count");
        const long f = parse_nonneg(t.substr(comma + 1), line_no, "frequency");
        if (hist.counts.count(x))
            throw data_error("csv line " + std::to_string(line_no) + ": duplicate count " +
                             std::to_string(x));
        hist.add(x, f);
    }
    if (!header_seen) throw data_error("csv: empty input, expected header 'count,frequency'");
    if (hist.total() < 1) throw data_error("csv: no observations");
    return hist;
}

CountHistogram parse_counts_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open csv file: " + path);
    return parse_counts_csv(in);
}

double log_likelihood(const DistributionSpec& spec, const CountHistogram& hist) {
    double ll = 0;
    for (const auto& [x, f] : hist.counts) {
        if (f == 0) continue;
        ll += f * log_pmf(spec, x);
    }
    return ll;
}

double geometric0_closed_form_p(const CountHistogram& hist) {
    const double n = static_cast<double>(hist.total());
    return n / (n + hist.sum_x());
}

namespace {

double logit(double p) { return std::log(p / (1 - p)); }
double expit(double y) { return 1 / (1 + std::exp(-y)); }

void check_fittable(const CountHistogram& hist) {
    if (hist.total() < 1) throw data_error("fit: empty histogram");
    if (hist.sum_x() == 0) throw data_error("fit: degenerate data, all mass at zero");
}

DistributionSpec spec_from_transformed(Family family, const std::vector<double>& y) {
    switch (family) {
        case Family::Geometric0:
            return DistributionSpec::geometric0(expit(y[0]));
        case Family::ZetaTail0:
            return DistributionSpec::zeta_tail0(std::expm1(y[0]));
        case Family::Zeta0:
            return DistributionSpec::zeta0(std::exp(y[0]));
        case Family::Quadratic0:
            return DistributionSpec::quadratic0(std::exp(y[0]));
        case Family::ZeroInflatedGeometric0:
            return DistributionSpec::zero_inflated_geometric0(expit(y[0]), expit(y[1]));
        case Family::NegativeBinomial0:
            return DistributionSpec::negative_binomial0(std::exp(y[0]), expit(y[1]));
        default:
            throw domain_error("fit: family not supported for count data");
    }
}

FitResult finish(Family family, const std::vector<double>& y, const CountHistogram& hist,
                 std::size_t evals, bool converged) {
    FitResult out;
    out.spec = spec_from_transformed(family, y);
    out.loglik = log_likelihood(out.spec, hist);
    out.aic = 2 * out.spec.param_count() - 2 * out.loglik;
    out.iterations = evals;
    out.converged = converged;
    return out;
}

FitResult fit_one_param(Family family, const CountHistogram& hist) {
    double lo = 0, hi = 0;
    switch (family) {
        case Family::Geometric0:
            lo = -30;
            hi = 30;
            break;
        case Family::ZetaTail0:
            lo = 0;
            hi = 25;
            break;
        case Family::Zeta0:
        case Family::Quadratic0:
            lo = -12;
            hi = 12;
            break;
        default:
            throw domain_error("fit: not a one-parameter family");
    }
    auto obj = [&](double y) {
        try {
            return log_likelihood(spec_from_transformed(family, {y}), hist);
        } catch (const domain_error&) {
            return -1e300;
        }
    };
    const auto res = optimize::golden_section_max(obj, lo, hi, 1e-10);
    return finish(family, {res.x}, hist, res.evals, true);
}

FitResult fit_two_param(Family family, const CountHistogram& hist) {
    const double p0 = geometric0_closed_form_p(hist);
    std::vector<double> start;
    if (family == Family::ZeroInflatedGeometric0)
        start = {logit(p0), logit(0.1)};
    else
        start = {std::log(1.0), logit(p0)};
    optimize::NelderMead nm;
    nm.diameter_tol = 1e-9;
    nm.max_evals = 100'000;
    nm.restarts = 5;
    nm.bound = 40;
    auto obj = [&](const std::vector<double>& y) {
        try {
            return log_likelihood(spec_from_transformed(family, y), hist);
        } catch (const domain_error&) {
            return -1e300;
        }
    };
    const auto res = nm.maximize(obj, start);
    return finish(family, res.x, hist, res.evals, res.converged);
}

}  // namespace

FitResult mle_fit_numeric(Family family, const CountHistogram& hist) {
    check_fittable(hist);
    switch (family) {
        case Family::Geometric0:
        case Family::ZetaTail0:
        case Family::Zeta0:
        case Family::Quadratic0:
            return fit_one_param(family, hist);
        case Family::ZeroInflatedGeometric0:
        case Family::NegativeBinomial0:
            return fit_two_param(family, hist);
        default:
            throw domain_error("fit: family not supported for count data");
    }
}

FitResult mle_fit(Family family, const CountHistogram& hist) {
    check_fittable(hist);
    if (family == Family::Geometric0) {
        FitResult out;
        out.spec = DistributionSpec::geometric0(geometric0_closed_form_p(hist));
        out.loglik = log_likelihood(out.spec, hist);
        out.aic = 2 - 2 * out.loglik;
        out.iterations = 0;
        out.converged = true;
        return out;
    }
    return mle_fit_numeric(family, hist);
}

namespace {

// Regularized upper incomplete gamma Q(a, x): series for P when x < a+1,
// Lentz continued fraction for Q otherwise.
double gamma_q(double a, double x) {
    if (x < 0 || a <= 0) throw domain_error("gamma_q: requires x >= 0, a > 0");
    if (x == 0) return 1.0;
    const double lg = std::lgamma(a);
    if (x < a + 1) {
        double ap = a, sum = 1 / a, del = sum;
        for (int i = 0; i < 1000; ++i) {
            ap += 1;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * 1e-16)
                return 1 - sum * std::exp(-x + a * std::log(x) - lg);
        }
        throw convergence_error("gamma_q: series did not converge");
    }
    const double tiny = 1e-300;
    double b = x + 1 - a, c = 1 / tiny, d = 1 / b, h = d;
    for (int i = 1; i <= 1000; ++i) {
        const double an = -i * (i - a);
        b += 2;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1) < 1e-16) return std::exp(-x + a * std::log(x) - lg) * h;
    }
    throw convergence_error("gamma_q: continued fraction did not converge");
}

}  // namespace

double chi2_sf(double x, int df) {
    if (df < 1) throw domain_error("chi2_sf: requires df >= 1");
    if (!(x >= 0)) throw domain_error("chi2_sf: requires x >= 0");
    return gamma_q(df / 2.0, x / 2.0);
}

GofReport chi_square_gof(const DistributionSpec& spec, const CountHistogram& hist) {
    const double n = static_cast<double>(hist.total());
    GofReport out;
    long obs_tail = hist.total();
    for (long x = 0; x <= 3; ++x) {
        GofBin bin;
        bin.label = std::to_string(x);
        bin.observed = hist.freq(x);
        bin.expected = n * pmf(spec, x);
        obs_tail -= bin.observed;
        out.bins.push_back(bin);
    }
    out.bins.push_back({"4+", obs_tail, n * survival(spec, 3)});
    for (const auto& bin : out.bins) {
        if (bin.expected < 1) out.low_expected_warning = true;
        if (bin.expected > 0)
            out.chi2 += (bin.observed - bin.expected) * (bin.observed - bin.expected) /
                        bin.expected;
    }
    out.df = 4 - spec.param_count();
    out.p_value = chi2_sf(out.chi2, out.df);
    return out;
}

double empirical_hazard(const CountHistogram& hist, long x) {
    long above = 0;
    for (const auto& [k, f] : hist.counts)
        if (k > x) above += f;
    if (above == 0) throw data_error("empirical hazard undefined: no observation exceeds x");
    return static_cast<double>(hist.freq(x)) / static_cast<double>(above);
}

const std::array<Family, 4>& comparison_families() {
    static const std::array<Family, 4> fams = {Family::Geometric0,
                                               Family::ZeroInflatedGeometric0,
                                               Family::NegativeBinomial0, Family::ZetaTail0};
    return fams;
}

ModelComparison compare_models(const CountHistogram& hist) {
    ModelComparison out;
    for (const Family family : comparison_families()) {
        FitResult fit = mle_fit(family, hist);
        GofReport gof = chi_square_gof(fit.spec, hist);
        out.rows.emplace_back(std::move(fit), std::move(gof));
    }
    for (int i = 0; i < static_cast<int>(out.rows.size()); ++i) {
        if (out.best_p_index < 0 ||
            out.rows[i].second.p_value > out.rows[out.best_p_index].second.p_value)
            out.best_p_index = i;
        if (out.best_aic_index < 0 ||
            out.rows[i].first.aic < out.rows[out.best_aic_index].first.aic)
            out.best_aic_index = i;
    }
    return out;
}

}  // namespace zetatail
