#include "zetatail/versatility.hpp"

#include <cmath>
#include <functional>

#include "zetatail/distribution.hpp"
#include "zetatail/policy.hpp"
#include "zetatail/specfun.hpp"

namespace zetatail {

namespace quadrature {

std::vector<std::pair<double, double>> gauss_hermite(int n) {
    if (n < 2) throw domain_error("gauss_hermite: requires n >= 2");
    std::vector<double> x(n), w(n);
    const double pim4 = 0.7511255444649425;  // pi^(-1/4)
    const int m = (n + 1) / 2;
    double z = 0, pp = 0;
    for (int i = 0; i < m; ++i) {
        if (i == 0)
            z = std::sqrt(2.0 * n + 1) - 1.85575 * std::pow(2.0 * n + 1, -1.0 / 6);
        else if (i == 1)
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        else if (i == 2)
            z = 1.86 * z - 0.86 * x[0];
        else if (i == 3)
            z = 1.91 * z - 0.91 * x[1];
        else
            z = 2 * z - x[i - 2];
        for (int it = 0; it < 200; ++it) {
            double p1 = pim4, p2 = 0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::fabs(z - z1) <= 1e-15 * (1 + std::fabs(z))) break;
        }
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = 2 / (pp * pp);
        w[n - 1 - i] = w[i];
    }
    std::vector<std::pair<double, double>> out(n);
    for (int i = 0; i < n; ++i) out[i] = {x[n - 1 - i], w[n - 1 - i]};
    return out;
}

}  // namespace quadrature

std::string fam1p_family_label(Fam1P fam) {
    switch (fam) {
        case Fam1P::geometric_p_m_over_m1:
        case Fam1P::geometric_p_1_over_m1:
            return "geometric0";
        case Fam1P::zeta_tail0:
            return "zeta-tail0";
        case Fam1P::zeta0:
            return "zeta0";
        case Fam1P::quadratic0:
            return "quadratic0";
    }
    return "?";
}

std::string fam1p_parameterization(Fam1P fam) {
    switch (fam) {
        case Fam1P::geometric_p_m_over_m1:
            return "p=m/(m+1)";
        case Fam1P::geometric_p_1_over_m1:
            return "p=1/(m+1)";
        case Fam1P::zeta_tail0:
            return "a";
        case Fam1P::zeta0:
            return "b";
        case Fam1P::quadratic0:
            return "c";
    }
    return "?";
}

namespace {

void check_theta(double theta) {
    if (!(std::isfinite(theta) && theta > 0))
        throw domain_error("fisher_information: requires theta > 0");
}

double zeta_log_derivative(double b) {
    const double h = 1e-6;
    const double z = specfun::riemann_zeta(b + 1);
    return (specfun::riemann_zeta(b + 1 + h) - specfun::riemann_zeta(b + 1 - h)) / (2 * h) / z;
}

// Per-family closures: pmf(x) and score(x), with any x-independent pieces
// hoisted out so the million-term sums stay cheap.
struct ScoredFamily {
    std::function<double(long)> pmf;
    std::function<double(long)> score;
};

ScoredFamily make_scored(Fam1P fam, double theta) {
    switch (fam) {
        case Fam1P::geometric_p_m_over_m1: {
            const double m = theta;
            const double p = m / (m + 1);
            const double dp = 1 / ((m + 1) * (m + 1));
            const double lq = std::log1p(-p);
            return {[p, lq](long x) { return p * std::exp(x * lq); },
                    [p, dp](long x) { return dp * (1 / p - x / (1 - p)); }};
        }
        case Fam1P::geometric_p_1_over_m1: {
            const double m = theta;
            const double p = 1 / (m + 1);
            const double lq = std::log1p(-p);
            return {[p, lq](long x) { return p * std::exp(x * lq); },
                    [p](long x) { return -p * p * (1 / p - x / (1 - p)); }};
        }
        case Fam1P::zeta_tail0: {
            const double a = theta;
            return {[a](long x) { return (a + 1) * specfun::hurwitz_zeta(x + 2, a + 2); },
                    [a](long x) {
                        const double num = specfun::hurwitz_zeta_dt(x + 2, a + 2);
                        const double den = specfun::hurwitz_zeta(x + 2, a + 2);
                        return 1 / (a + 1) + num / den;
                    }};
        }
        case Fam1P::zeta0: {
            const double b = theta;
            const double inv_z = 1 / specfun::riemann_zeta(b + 1);
            const double dlog = zeta_log_derivative(b);
            return {[b, inv_z](long x) { return inv_z * std::pow(x + 1.0, -(b + 1)); },
                    [dlog](long x) { return -std::log(x + 1.0) - dlog; }};
        }
        case Fam1P::quadratic0: {
            const double c = theta;
            return {[c](long x) { return c / ((x + c) * (x + c + 1)); },
                    [c](long x) { return 1 / c - 1 / (x + c) - 1 / (x + c + 1); }};
        }
    }
    throw domain_error("unknown family");
}

struct SumResult {
    double value = 0;
    bool capped = false;
};

SumResult score_sum(Fam1P fam, double theta, std::uint64_t max_terms, bool squared) {
    check_theta(theta);
    const ScoredFamily sf = make_scored(fam, theta);
    long double acc = 0, mass = 0;
    for (std::uint64_t i = 0;; ++i) {
        if (i >= max_terms) return {static_cast<double>(acc), true};
        const long x = static_cast<long>(i);
        const double f = sf.pmf(x);
        const double s = sf.score(x);
        acc += (squared ? s * s : s) * static_cast<long double>(f);
        mass += f;
        if (1 - mass < 1e-12) break;
    }
    return {static_cast<double>(acc), false};
}

}  // namespace

double score(Fam1P fam, double theta, long x) {
    check_theta(theta);
    return make_scored(fam, theta).score(x);
}

FisherResult fisher_information(Fam1P fam, double theta, std::uint64_t max_terms) {
    const SumResult r = score_sum(fam, theta, max_terms, true);
    return {r.value, r.capped};
}

double score_expectation(Fam1P fam, double theta, std::uint64_t max_terms) {
    return score_sum(fam, theta, max_terms, false).value;
}

double zeta0_fisher_identity(double b) {
    if (!(std::isfinite(b) && b > 0)) throw domain_error("zeta0_fisher_identity: requires b > 0");
    const double s = b + 1;
    double z, zp, zpp;
    if (s >= 29.5) {
        long double az = 0, azp = 0, azpp = 0;
        for (int m = 2; m <= 200; ++m) {
            const long double t = std::pow(static_cast<long double>(m), -static_cast<long double>(s));
            const long double lm = std::log(static_cast<long double>(m));
            az += t;
            azp += lm * t;
            azpp += lm * lm * t;
            if (t < 1e-30L * (az + 1)) break;
        }
        z = static_cast<double>(1 + az);
        zp = static_cast<double>(-azp);
        zpp = static_cast<double>(azpp);
    } else {
        const double h = 1e-3;
        const double e0 = specfun::riemann_zeta_minus_pole(s);
        const double ep = specfun::riemann_zeta_minus_pole(s + h);
        const double em = specfun::riemann_zeta_minus_pole(s - h);
        const double u = s - 1;
        z = 1 / u + e0;
        zp = -1 / (u * u) + (ep - em) / (2 * h);
        zpp = 2 / (u * u * u) + (ep - 2 * e0 + em) / (h * h);
    }
    const double r1 = zp / z;
    return zpp / z - r1 * r1;
}

namespace {

struct IntegralResult {
    double value = 0;
    bool capped = false;
};

IntegralResult lognormal_fisher_integral(Fam1P fam, int nodes) {
    const auto gh = quadrature::gauss_hermite(nodes);
    const double sqrt2 = std::sqrt(2.0);
    const double inv_sqrt_pi = 1 / std::sqrt(std::acos(-1.0));
    long double acc = 0;
    bool capped = false;
    for (const auto& [zn, wn] : gh) {
        const double theta = std::exp(sqrt2 * zn);
        double integrand;
        if (fam == Fam1P::zeta0) {
            integrand = zeta0_fisher_identity(theta);
        } else {
            const FisherResult fr = fisher_information(fam, theta);
            integrand = fr.value;
            capped = capped || fr.capped;
        }
        acc += static_cast<long double>(wn) * integrand;
    }
    return {static_cast<double>(inv_sqrt_pi * acc), capped};
}

}  // namespace

VersatilityReport versatility_measure(Fam1P fam) {
    const IntegralResult i64 = lognormal_fisher_integral(fam, 64);
    const IntegralResult i128 = lognormal_fisher_integral(fam, 128);
    const double v64 = std::sqrt(i64.value);
    const double v128 = std::sqrt(i128.value);
    if (!(std::fabs(v128 - v64) < 1e-3 * std::fabs(v128)))
        throw numeric_error("versatility: quadrature unstable between 64 and 128 nodes");
    VersatilityReport out;
    out.family = fam1p_family_label(fam);
    out.parameterization = fam1p_parameterization(fam);
    out.fisher_integral = i128.value;
    out.v = v128;
    out.node_count = 128;
    out.capped_nodes = i64.capped || i128.capped;
    return out;
}

Table4 table4() {
    Table4 out;
    for (const Fam1P fam : {Fam1P::geometric_p_m_over_m1, Fam1P::geometric_p_1_over_m1,
                            Fam1P::zeta_tail0, Fam1P::zeta0, Fam1P::quadratic0})
        out.rows.push_back(versatility_measure(fam));
    out.geometric_average = (out.rows[0].v + out.rows[1].v) / 2;
    return out;
}

}  // namespace zetatail
