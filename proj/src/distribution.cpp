#include "zetatail/distribution.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "zetatail/specfun.hpp"

namespace zetatail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool finite_pos(double v) { return std::isfinite(v) && v > 0; }

// log zeta(s, t) without underflow: -s ln t + ln(1 + sum ((t/(i+t))^s)).
// Only large s needs the log-space form (the plain value underflows and the
// ratio series is geometric there); small s converges too slowly here.
double log_hurwitz_zeta(double s, double t) {
    if (s <= 30) return std::log(specfun::hurwitz_zeta(s, t));
    const double lt = std::log(t);
    long double acc = 0;
    for (long i = 0;; ++i) {
        const long double term = std::exp(s * (lt - std::log(t + i)));
        acc += term;
        if (term < 1e-18L * acc && i > 2) break;
        if (i > 4'000'000)
            throw convergence_error("log_pmf: zeta tail series did not converge");
    }
    return -s * lt + static_cast<double>(std::log(acc));
}

// sum_{i>=0} (i+t)^(-(x+1)) / (i+t-1): the zeta tail survival series, t = a+2.
double zt_tail_series(double ap2, long x) {
    long double acc = 0;
    for (long i = 0;; ++i) {
        const long double u = ap2 + i;
        const long double term = std::pow(u, -static_cast<long double>(x + 1)) / (u - 1);
        acc += term;
        // integral bound on the remaining mass
        const long double bound = std::pow(u + 1, -static_cast<long double>(x)) /
                                  (static_cast<long double>(x) * (ap2 - 1 + i));
        if (bound <= 1e-17L * acc + 1e-320L) break;
        if (i > 4'000'000) throw convergence_error("survival: tail series did not converge");
    }
    return static_cast<double>(acc);
}

// P(ZetaTail(a) > x), x >= 0.
double zt_survival(double a, long x) {
    if (x < 1) return 1.0;
    const double f = 1.0 - cdf(DistributionSpec::zeta_tail(a), x);
    if (f >= 1e-8) return f;
    return (a + 1) * zt_tail_series(a + 2, x);
}

double nb0_log_pmf(double r, double p, long x) {
    return std::lgamma(x + r) - std::lgamma(r) - std::lgamma(x + 1.0) + r * std::log(p) +
           x * std::log1p(-p);
}

// Raw moment of ZetaTail(a) for any kappa <= 20 (internal, unguarded by the
// public kappa <= 6 limit): (a+1) sum_nu S(kappa,nu) nu! zeta(nu+1, a+1).
double zt_raw_moment(double a, int kappa) {
    if (kappa == 0) return 1.0;
    long double acc = 0;
    long double fact = 1;
    for (int nu = 1; nu <= kappa; ++nu) {
        fact *= nu;
        const long double s2 = static_cast<long double>(specfun::stirling2(kappa, nu));
        acc += s2 * fact * specfun::hurwitz_zeta(nu + 1, a + 1);
    }
    return static_cast<double>((a + 1) * acc);
}

// Raw moment of Geometric0(p) via factorial moments nu! ((1-p)/p)^nu.
double geom0_raw_moment(double p, int kappa) {
    if (kappa == 0) return 1.0;
    const long double q = (1 - p) / p;
    long double acc = 0;
    long double fact = 1, qp = 1;
    for (int nu = 1; nu <= kappa; ++nu) {
        fact *= nu;
        qp *= q;
        acc += static_cast<long double>(specfun::stirling2(kappa, nu)) * fact * qp;
    }
    return static_cast<double>(acc);
}

double binomial(int n, int k) {
    long double v = 1;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return static_cast<double>(v);
}

// Mass below which the truncated expectation sums stop.
constexpr double kTailTol = 1e-12;

long double checked_pow(long double base, long e) { return std::pow(base, static_cast<long double>(e)); }

}  // namespace

DistributionSpec DistributionSpec::zeta_tail(double a) {
    DistributionSpec s;
    s.family = Family::ZetaTail;
    s.a = a;
    s.validate();
    return s;
}
DistributionSpec DistributionSpec::zeta_tail0(double a) {
    DistributionSpec s;
    s.family = Family::ZetaTail0;
    s.a = a;
    s.validate();
    return s;
}
DistributionSpec DistributionSpec::geometric0(double p) {
    DistributionSpec s;
    s.family = Family::Geometric0;
    s.p = p;
    s.validate();
    return s;
}
DistributionSpec DistributionSpec::zero_inflated_geometric0(double p, double pi0) {
    DistributionSpec s;
    s.family = Family::ZeroInflatedGeometric0;
    s.p = p;
    s.pi0 = pi0;
    s.validate();
    return s;
}
DistributionSpec DistributionSpec::negative_binomial0(double r, double p) {
    DistributionSpec s;
    s.family = Family::NegativeBinomial0;
    s.r = r;
    s.p = p;
    s.validate();
    return s;
}
DistributionSpec DistributionSpec::zeta0(double b) {
    DistributionSpec s;
    s.family = Family::Zeta0;
    s.b = b;
    s.validate();
    return s;
}
DistributionSpec DistributionSpec::quadratic0(double c) {
    DistributionSpec s;
    s.family = Family::Quadratic0;
    s.c = c;
    s.validate();
    return s;
}
DistributionSpec DistributionSpec::generalized_zeta_tail(int r_count, double a) {
    DistributionSpec s;
    s.family = Family::GeneralizedZetaTail;
    s.r_count = r_count;
    s.a = a;
    s.validate();
    return s;
}

void DistributionSpec::validate() const {
    switch (family) {
        case Family::ZetaTail:
        case Family::ZetaTail0:
            if (!(std::isfinite(a) && a >= 0)) throw domain_error("zeta tail: requires a >= 0");
            return;
        case Family::Geometric0:
            if (!(std::isfinite(p) && p > 0 && p < 1))
                throw domain_error("geometric0: requires 0 < p < 1");
            return;
        case Family::ZeroInflatedGeometric0:
            if (!(std::isfinite(p) && p > 0 && p < 1))
                throw domain_error("zero-inflated geometric0: requires 0 < p < 1");
            if (!(std::isfinite(pi0) && pi0 > 0 && pi0 < 1))
                throw domain_error("zero-inflated geometric0: requires 0 < pi0 < 1");
            return;
        case Family::NegativeBinomial0:
            if (!finite_pos(r)) throw domain_error("negative binomial0: requires r > 0");
            if (!(std::isfinite(p) && p > 0 && p < 1))
                throw domain_error("negative binomial0: requires 0 < p < 1");
            return;
        case Family::Zeta0:
            if (!finite_pos(b)) throw domain_error("zeta0: requires b > 0");
            return;
        case Family::Quadratic0:
            if (!finite_pos(c)) throw domain_error("quadratic0: requires c > 0");
            return;
        case Family::GeneralizedZetaTail:
            if (!(std::isfinite(a) && a >= 0))
                throw domain_error("generalized zeta tail: requires a >= 0");
            if (r_count < 1) throw domain_error("generalized zeta tail: requires r_count >= 1");
            return;
    }
    throw domain_error("unknown family");
}

int DistributionSpec::param_count() const {
    switch (family) {
        case Family::ZeroInflatedGeometric0:
        case Family::NegativeBinomial0:
        case Family::GeneralizedZetaTail:
            return 2;
        default:
            return 1;
    }
}

std::string DistributionSpec::family_name() const {
    switch (family) {
        case Family::ZetaTail: return "zeta-tail";
        case Family::ZetaTail0: return "zeta-tail0";
        case Family::Geometric0: return "geometric0";
        case Family::ZeroInflatedGeometric0: return "zig0";
        case Family::NegativeBinomial0: return "negbin0";
        case Family::Zeta0: return "zeta0";
        case Family::Quadratic0: return "quadratic0";
        case Family::GeneralizedZetaTail: return "gzt";
    }
    return "?";
}

std::string DistributionSpec::param_string() const {
    char buf[128];
    switch (family) {
        case Family::ZetaTail:
        case Family::ZetaTail0:
            std::snprintf(buf, sizeof buf, "a=%.9g", a);
            break;
        case Family::Geometric0:
            std::snprintf(buf, sizeof buf, "p=%.9g", p);
            break;
        case Family::ZeroInflatedGeometric0:
            std::snprintf(buf, sizeof buf, "p=%.9g,pi0=%.9g", p, pi0);
            break;
        case Family::NegativeBinomial0:
            std::snprintf(buf, sizeof buf, "r=%.9g,p=%.9g", r, p);
            break;
        case Family::Zeta0:
            std::snprintf(buf, sizeof buf, "b=%.9g", b);
            break;
        case Family::Quadratic0:
            std::snprintf(buf, sizeof buf, "c=%.9g", c);
            break;
        case Family::GeneralizedZetaTail:
            std::snprintf(buf, sizeof buf, "r=%d,a=%.9g", r_count, a);
            break;
    }
    return buf;
}

Support support(const DistributionSpec& spec) {
    switch (spec.family) {
        case Family::ZetaTail:
        case Family::GeneralizedZetaTail:
            return Support::one_based;
        default:
            return Support::zero_based;
    }
}

long support_origin(const DistributionSpec& spec) {
    switch (spec.family) {
        case Family::ZetaTail: return 1;
        case Family::GeneralizedZetaTail: return spec.r_count;
        default: return 0;
    }
}

double pmf(const DistributionSpec& spec, long x) {
    spec.validate();
    if (x < support_origin(spec)) return 0.0;
    switch (spec.family) {
        case Family::ZetaTail:
            return (spec.a + 1) * specfun::hurwitz_zeta(x + 1, spec.a + 2);
        case Family::ZetaTail0:
            return (spec.a + 1) * specfun::hurwitz_zeta(x + 2, spec.a + 2);
        case Family::Geometric0:
            return spec.p * std::exp(x * std::log1p(-spec.p));
        case Family::ZeroInflatedGeometric0: {
            const double g = spec.p * std::exp(x * std::log1p(-spec.p));
            return x == 0 ? spec.pi0 + (1 - spec.pi0) * g : (1 - spec.pi0) * g;
        }
        case Family::NegativeBinomial0:
            return std::exp(nb0_log_pmf(spec.r, spec.p, x));
        case Family::Zeta0:
            return std::pow(x + 1.0, -(spec.b + 1)) / specfun::riemann_zeta(spec.b + 1);
        case Family::Quadratic0:
            return spec.c / ((x + spec.c) * (x + spec.c + 1));
        case Family::GeneralizedZetaTail: {
            const auto table = gzt_pmf_table(spec.r_count, spec.a);
            const std::size_t idx = static_cast<std::size_t>(x - spec.r_count);
            return idx < table.size() ? table[idx] : 0.0;
        }
    }
    throw domain_error("unknown family");
}

double log_pmf(const DistributionSpec& spec, long x) {
    spec.validate();
    if (x < support_origin(spec)) return -kInf;
    switch (spec.family) {
        case Family::ZetaTail:
            return std::log(spec.a + 1) + log_hurwitz_zeta(x + 1, spec.a + 2);
        case Family::ZetaTail0:
            return std::log(spec.a + 1) + log_hurwitz_zeta(x + 2, spec.a + 2);
        case Family::Geometric0:
            return std::log(spec.p) + x * std::log1p(-spec.p);
        case Family::ZeroInflatedGeometric0:
            if (x == 0) return std::log(spec.pi0 + (1 - spec.pi0) * spec.p);
            return std::log1p(-spec.pi0) + std::log(spec.p) + x * std::log1p(-spec.p);
        case Family::NegativeBinomial0:
            return nb0_log_pmf(spec.r, spec.p, x);
        case Family::Zeta0:
            return -(spec.b + 1) * std::log(x + 1.0) -
                   std::log(specfun::riemann_zeta(spec.b + 1));
        case Family::Quadratic0:
            return std::log(spec.c) - std::log(x + spec.c) - std::log(x + spec.c + 1);
        case Family::GeneralizedZetaTail: {
            const double f = pmf(spec, x);
            return f > 0 ? std::log(f) : -kInf;
        }
    }
    throw domain_error("unknown family");
}

double cdf(const DistributionSpec& spec, long x) {
    spec.validate();
    if (x < support_origin(spec)) return 0.0;
    switch (spec.family) {
        case Family::ZetaTail:
        case Family::ZetaTail0: {
            const long shift = spec.family == Family::ZetaTail ? 1 : 2;
            long double acc = 0;
            for (long k = support_origin(spec); k <= x; ++k)
                acc += specfun::hurwitz_zeta(k + shift, spec.a + 2);
            return std::min(1.0, static_cast<double>((spec.a + 1) * acc));
        }
        case Family::Geometric0:
            return -std::expm1((x + 1.0) * std::log1p(-spec.p));
        case Family::ZeroInflatedGeometric0:
            return 1 - (1 - spec.pi0) * std::exp((x + 1.0) * std::log1p(-spec.p));
        case Family::NegativeBinomial0: {
            long double acc = 0;
            for (long k = 0; k <= x; ++k) acc += pmf(spec, k);
            return std::min(1.0, static_cast<double>(acc));
        }
        case Family::Zeta0:
            return 1 - specfun::hurwitz_zeta(spec.b + 1, x + 2.0) /
                           specfun::riemann_zeta(spec.b + 1);
        case Family::Quadratic0:
            return (x + 1.0) / (x + 1.0 + spec.c);
        case Family::GeneralizedZetaTail: {
            const auto table = gzt_pmf_table(spec.r_count, spec.a);
            long double acc = 0;
            for (long k = spec.r_count; k <= x; ++k) {
                const std::size_t idx = static_cast<std::size_t>(k - spec.r_count);
                if (idx >= table.size()) break;
                acc += table[idx];
            }
            return std::min(1.0, static_cast<double>(acc));
        }
    }
    throw domain_error("unknown family");
}

double survival(const DistributionSpec& spec, long x) {
    spec.validate();
    if (x < support_origin(spec)) return 1.0;
    switch (spec.family) {
        case Family::ZetaTail:
            return zt_survival(spec.a, x);
        case Family::ZetaTail0:
            return zt_survival(spec.a, x + 1);
        case Family::Geometric0:
            return std::exp((x + 1.0) * std::log1p(-spec.p));
        case Family::ZeroInflatedGeometric0:
            return (1 - spec.pi0) * std::exp((x + 1.0) * std::log1p(-spec.p));
        case Family::NegativeBinomial0: {
            // forward tail sum; terms shrink by at least (1-p)(1 + r/x)
            long double acc = 0;
            long double term = pmf(spec, x + 1);
            for (long y = x + 1;; ++y) {
                acc += term;
                const long double ratio = (y + spec.r) / (y + 1.0L) * (1 - spec.p);
                term *= ratio;
                if (ratio < 1 && term / (1 - ratio) < 1e-17L * acc + 1e-320L) break;
                if (y > x + 100'000'000)
                    throw convergence_error("survival: negative binomial tail did not converge");
            }
            return static_cast<double>(acc);
        }
        case Family::Zeta0:
            return specfun::hurwitz_zeta(spec.b + 1, x + 2.0) /
                   specfun::riemann_zeta(spec.b + 1);
        case Family::Quadratic0:
            return spec.c / (x + 1.0 + spec.c);
        case Family::GeneralizedZetaTail: {
            const auto table = gzt_pmf_table(spec.r_count, spec.a);
            long double acc = 0;
            for (std::size_t idx = table.size(); idx-- > 0;) {
                const long y = spec.r_count + static_cast<long>(idx);
                if (y <= x) break;
                acc += table[idx];
            }
            return static_cast<double>(acc);
        }
    }
    throw domain_error("unknown family");
}

double hazard(const DistributionSpec& spec, long x) {
    const double s = survival(spec, x);
    if (s <= 0) throw overflow_error("hazard: survival underflowed to zero");
    return pmf(spec, x) / s;
}

double factorial_moment(const DistributionSpec& spec, int nu) {
    spec.validate();
    if (nu < 1) throw domain_error("factorial_moment: requires nu >= 1");
    if (nu > 20) throw domain_error("factorial_moment: requires nu <= 20");
    switch (spec.family) {
        case Family::ZetaTail: {
            long double fact = 1;
            for (int i = 2; i <= nu; ++i) fact *= i;
            return static_cast<double>((spec.a + 1) * fact *
                                       specfun::hurwitz_zeta(nu + 1, spec.a + 1));
        }
        case Family::ZetaTail0: {
            // E[(X-1)(X-2)...(X-nu)] from the one-based raw moments: expand the
            // falling product into power-of-X coefficients exactly.
            std::array<__int128, 21> coeff{};
            coeff[0] = 1;
            int deg = 0;
            for (int j = 1; j <= nu; ++j) {  // multiply by (X - j)
                ++deg;
                for (int k = deg; k >= 1; --k)
                    coeff[k] = coeff[k - 1] - static_cast<__int128>(j) * coeff[k];
                coeff[0] = -static_cast<__int128>(j) * coeff[0];
            }
            long double acc = 0;
            for (int k = 0; k <= deg; ++k)
                acc += static_cast<long double>(coeff[k]) * zt_raw_moment(spec.a, k);
            return static_cast<double>(acc);
        }
        default:
            throw domain_error("factorial_moment: zeta tail families only");
    }
}

double raw_moment(const DistributionSpec& spec, int kappa) {
    spec.validate();
    if (kappa < 1) throw domain_error("raw_moment: requires kappa >= 1");
    if (kappa > 6) throw domain_error("raw_moment: requires kappa <= 6");
    switch (spec.family) {
        case Family::ZetaTail:
            return zt_raw_moment(spec.a, kappa);
        case Family::ZetaTail0: {
            // E[(X-1)^kappa] over the one-based law
            long double acc = 0;
            for (int i = 0; i <= kappa; ++i) {
                const double sign = (kappa - i) % 2 == 0 ? 1.0 : -1.0;
                acc += sign * binomial(kappa, i) * zt_raw_moment(spec.a, i);
            }
            return static_cast<double>(acc);
        }
        case Family::Geometric0:
            return geom0_raw_moment(spec.p, kappa);
        case Family::ZeroInflatedGeometric0:
            return (1 - spec.pi0) * geom0_raw_moment(spec.p, kappa);
        case Family::NegativeBinomial0: {
            // factorial moments: r(r+1)...(r+nu-1) ((1-p)/p)^nu
            const long double q = (1 - spec.p) / spec.p;
            long double acc = 0;
            long double rising = 1, qp = 1;
            for (int nu = 1; nu <= kappa; ++nu) {
                rising *= spec.r + nu - 1;
                qp *= q;
                acc += static_cast<long double>(specfun::stirling2(kappa, nu)) * rising * qp;
            }
            return static_cast<double>(acc);
        }
        case Family::Zeta0: {
            if (spec.b + 1 - kappa <= 1)
                throw domain_error("raw_moment: zeta0 moment diverges unless b > kappa");
            const double z = specfun::riemann_zeta(spec.b + 1);
            long double acc = 0;
            for (int i = 0; i <= kappa; ++i) {
                const double sign = (kappa - i) % 2 == 0 ? 1.0 : -1.0;
                const double zi = i == 0 ? 1.0 : specfun::riemann_zeta(spec.b + 1 - i) / z;
                acc += sign * binomial(kappa, i) * zi;
            }
            return static_cast<double>(acc);
        }
        case Family::Quadratic0:
            throw domain_error("raw_moment: quadratic0 moments diverge");
        case Family::GeneralizedZetaTail: {
            const auto table = gzt_pmf_table(spec.r_count, spec.a);
            long double acc = 0;
            for (std::size_t idx = 0; idx < table.size(); ++idx)
                acc += checked_pow(spec.r_count + static_cast<long double>(idx), kappa) * table[idx];
            return static_cast<double>(acc);
        }
    }
    throw domain_error("unknown family");
}

double mean(const DistributionSpec& spec) {
    spec.validate();
    switch (spec.family) {
        case Family::ZetaTail:
            return (spec.a + 1) * specfun::hurwitz_zeta(2, spec.a + 1);
        case Family::ZetaTail0:
            return (spec.a + 1) * specfun::hurwitz_zeta(2, spec.a + 1) - 1;
        case Family::Geometric0:
            return (1 - spec.p) / spec.p;
        case Family::ZeroInflatedGeometric0:
            return (1 - spec.pi0) * (1 - spec.p) / spec.p;
        case Family::NegativeBinomial0:
            return spec.r * (1 - spec.p) / spec.p;
        case Family::Zeta0:
            if (spec.b <= 1) throw domain_error("mean: zeta0 mean diverges unless b > 1");
            return specfun::riemann_zeta(spec.b) / specfun::riemann_zeta(spec.b + 1) - 1;
        case Family::Quadratic0:
            throw domain_error("mean: quadratic0 mean diverges");
        case Family::GeneralizedZetaTail:
            return spec.r_count * (spec.a + 1) * specfun::hurwitz_zeta(2, spec.a + 1);
    }
    throw domain_error("unknown family");
}

double variance(const DistributionSpec& spec) {
    spec.validate();
    switch (spec.family) {
        case Family::ZetaTail:
        case Family::ZetaTail0: {
            const double t = spec.a + 1;
            const double z2 = specfun::hurwitz_zeta(2, t);
            const double z3 = specfun::hurwitz_zeta(3, t);
            return t * (z2 + 2 * z3 - t * z2 * z2);
        }
        case Family::Geometric0:
            return (1 - spec.p) / (spec.p * spec.p);
        case Family::ZeroInflatedGeometric0: {
            const double m = mean(spec);
            const double ex2 = (1 - spec.pi0) * geom0_raw_moment(spec.p, 2);
            return ex2 - m * m;
        }
        case Family::NegativeBinomial0:
            return spec.r * (1 - spec.p) / (spec.p * spec.p);
        case Family::Zeta0: {
            if (spec.b <= 2) throw domain_error("variance: zeta0 variance diverges unless b > 2");
            const double m = mean(spec);
            const double z = specfun::riemann_zeta(spec.b + 1);
            const double ez2 = specfun::riemann_zeta(spec.b - 1) / z;
            const double ez1 = specfun::riemann_zeta(spec.b) / z;
            return ez2 - 2 * ez1 + 1 - m * m;
        }
        case Family::Quadratic0:
            throw domain_error("variance: quadratic0 variance diverges");
        case Family::GeneralizedZetaTail:
            return spec.r_count * variance(DistributionSpec::zeta_tail(spec.a));
    }
    throw domain_error("unknown family");
}

double overdispersion_index(const DistributionSpec& spec) {
    const double m = mean(spec);
    if (!(m > 0)) throw domain_error("overdispersion_index: requires positive finite mean");
    return variance(spec) / m - 1;
}

namespace {

// Cancellation-free building blocks for the relative overdispersion curve:
//   d0(t) = t zeta(2,t) - 1   = t sum 1/((i+t)^2 (i+t+1))
//   e0(t) = t zeta(3,t) - d0  = t sum 1/((i+t)^3 (i+t+1))
// summed directly with Euler-Maclaurin tails, stable out to very large t.

// w - log1p(w) (the d0 tail integral); series below w = 0.01 where the direct
// difference cancels to w^2/2 and loses relative digits as t grows.
long double d0_integral_w(long double w) {
    if (w > 0.01L) return w - std::log1p(w);
    long double acc = 0, p = w * w;
    for (int k = 2; k <= 14; ++k) {
        acc += (k % 2 == 0 ? p : -p) / k;
        p *= w;
    }
    return acc;
}

// log1p(w) - w + w^2/2 (the e0 tail integral), cancelling to w^3/3.
long double e0_integral_w(long double w) {
    if (w > 0.01L) return std::log1p(w) - w + w * w / 2;
    long double acc = 0, p = w * w * w;
    for (int k = 3; k <= 15; ++k) {
        acc += (k % 2 == 1 ? p : -p) / k;
        p *= w;
    }
    return acc;
}

long double d0_series(long double t) {
    constexpr int N = 64;
    long double acc = 0;
    for (int i = N; i-- > 0;) {
        const long double v = t + i;
        acc += 1 / (v * v * (v + 1));
    }
    const long double v = t + N;
    const long double integral = d0_integral_w(1 / v);
    const long double f = 1 / (v * v * (v + 1));
    const long double fp = -2 / (v * v * v) + 1 / (v * v) - 1 / ((v + 1) * (v + 1));
    const long double v4 = v * v * v * v;
    const long double w4 = (v + 1) * (v + 1) * (v + 1) * (v + 1);
    const long double fppp = -24 / (v4 * v) + 6 / v4 - 6 / w4;
    return t * (acc + integral + f / 2 - fp / 12 + fppp / 720);
}

long double e0_series(long double t) {
    constexpr int N = 64;
    long double acc = 0;
    for (int i = N; i-- > 0;) {
        const long double v = t + i;
        acc += 1 / (v * v * v * (v + 1));
    }
    const long double v = t + N;
    const long double integral = e0_integral_w(1 / v);
    const long double v2 = v * v, v3 = v2 * v, v4 = v3 * v;
    const long double g = 1 / (v3 * (v + 1));
    const long double gp = -3 / v4 + 2 / v3 - 1 / v2 + 1 / ((v + 1) * (v + 1));
    const long double w4 = (v + 1) * (v + 1) * (v + 1) * (v + 1);
    const long double gppp = -60 / (v4 * v2) + 24 / (v4 * v) - 6 / v4 + 6 / w4;
    return t * (acc + integral + g / 2 - gp / 12 + gppp / 720);
}

}  // namespace

double zt0_relative_overdispersion(double a) {
    if (!(a >= 0)) throw domain_error("zt0_relative_overdispersion: requires a >= 0");
    const long double t = static_cast<long double>(a) + 1;
    const long double d0 = d0_series(t);
    const long double e0 = e0_series(t);
    return static_cast<double>((2 * e0 - d0 * d0) / (d0 * d0));
}

double zt0_zero_ratio(double a) {
    if (!(a >= 0)) throw domain_error("zt0_zero_ratio: requires a >= 0");
    return (a + 2) * specfun::hurwitz_zeta(2, a + 2);
}

namespace {

double zt_pgf(double a, double z) {
    return (a + 1) * (specfun::digamma(a + 2) - specfun::digamma(a + 2 - z));
}

// pgf of ZetaTail0 near z = 0, where dividing the one-based pgf by z cancels:
// (a+1) sum_{j>=1} zeta(j+1, a+2) z^(j-1).
double zt0_pgf_series(double a, double z) {
    long double acc = 0, zp = 1;
    for (int j = 1; j <= 60; ++j) {
        const long double term = specfun::hurwitz_zeta(j + 1, a + 2) * zp;
        acc += term;
        if (std::fabs(static_cast<double>(term)) < 1e-18 * std::fabs(static_cast<double>(acc)))
            break;
        zp *= z;
    }
    return static_cast<double>((a + 1) * acc);
}

}  // namespace

double pgf(const DistributionSpec& spec, double z) {
    spec.validate();
    if (!(std::fabs(z) < 1)) throw domain_error("pgf: requires |z| < 1");
    switch (spec.family) {
        case Family::ZetaTail:
            return zt_pgf(spec.a, z);
        case Family::ZetaTail0:
            return std::fabs(z) < 1e-3 ? zt0_pgf_series(spec.a, z) : zt_pgf(spec.a, z) / z;
        case Family::GeneralizedZetaTail:
            return std::pow(zt_pgf(spec.a, z), spec.r_count);
        default:
            throw domain_error("pgf: zeta tail families only");
    }
}

double mgf(const DistributionSpec& spec, double t) {
    spec.validate();
    switch (spec.family) {
        case Family::ZetaTail:
        case Family::ZetaTail0:
        case Family::GeneralizedZetaTail: {
            if (!(t < std::log(spec.a + 2) - 1e-12))
                throw domain_error("mgf: requires t < ln(a+2)");
            const double et = std::exp(t);
            const double one = (spec.a + 1) *
                               (specfun::digamma(spec.a + 2) - specfun::digamma(spec.a + 2 - et));
            if (spec.family == Family::ZetaTail) return one;
            if (spec.family == Family::ZetaTail0) return std::exp(-t) * one;
            return std::pow(one, spec.r_count);
        }
        default:
            throw domain_error("mgf: zeta tail families only");
    }
}

std::pair<double, double> cf(const DistributionSpec& spec, double omega) {
    spec.validate();
    switch (spec.family) {
        case Family::ZetaTail:
        case Family::ZetaTail0:
        case Family::Geometric0:
        case Family::ZeroInflatedGeometric0:
        case Family::NegativeBinomial0:
        case Family::GeneralizedZetaTail:
            break;
        default:
            throw domain_error("cf: requires a family with geometric-rate tails");
    }
    long double re = 0, im = 0, acc = 0;
    for (long x = support_origin(spec);; ++x) {
        const double f = pmf(spec, x);
        re += f * std::cos(omega * x);
        im += f * std::sin(omega * x);
        acc += f;
        if (acc >= 1 - kTailTol) break;
        if (x > 2'000'000) throw convergence_error("cf: series did not converge");
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

long mode(const DistributionSpec& spec) {
    spec.validate();
    switch (spec.family) {
        case Family::ZetaTail: return 1;
        case Family::ZetaTail0: return 0;
        default:
            throw domain_error("mode: zeta tail families only");
    }
}

std::vector<double> gzt_pmf_table(int r_count, double a, double tail_tol) {
    if (r_count < 1) throw domain_error("gzt_pmf_table: requires r_count >= 1");
    const auto parent = DistributionSpec::zeta_tail(a);
    long xmax = 2;
    while (survival(parent, xmax) >= tail_tol) ++xmax;
    std::vector<double> base(static_cast<std::size_t>(xmax));  // x = 1..xmax
    for (long x = 1; x <= xmax; ++x)
        base[static_cast<std::size_t>(x - 1)] = pmf(parent, x);
    std::vector<double> out = base;
    for (int k = 1; k < r_count; ++k) {
        std::vector<double> next(out.size() + base.size() - 1, 0.0);
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = 0; j < base.size(); ++j) next[i + j] += out[i] * base[j];
        out = std::move(next);
    }
    return out;
}

}  // namespace zetatail
