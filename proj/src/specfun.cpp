#include "zetatail/specfun.hpp"

#include <array>
#include <cmath>

namespace zetatail::specfun {

namespace {

void check_policy(const SeriesPolicy& policy) {
    if (!(policy.abs_tol > 0) || policy.max_terms < 1)
        throw domain_error("SeriesPolicy: abs_tol must be > 0 and max_terms >= 1");
}

// B_2 .. B_20
constexpr std::array<long double, 10> kBernoulli = {
    1.0L / 6,     -1.0L / 30,      1.0L / 42, -1.0L / 30,        5.0L / 66,
    -691.0L / 2730, 7.0L / 6, -3617.0L / 510, 43867.0L / 798, -174611.0L / 330};

// (2k)! for k = 1..10
constexpr std::array<long double, 10> kEvenFactorial = {
    2.0L,       24.0L,          720.0L,          40320.0L,          3628800.0L,
    479001600.0L, 87178291200.0L, 20922789888000.0L, 6402373705728000.0L,
    2432902008176640000.0L};

// Euler-Maclaurin evaluation of sum_{i>=0} (i+t)^(-s), analytic in s.
// With subtract_pole, returns that sum minus 1/(s-1), finite through s = 1.
long double em_sum(long double s, long double t, long double tol, std::uint64_t max_terms,
                   bool subtract_pole) {
    for (long double base = 24; base <= 6144; base *= 2) {
        std::uint64_t n = t >= base ? 0 : static_cast<std::uint64_t>(base - t) + 1;
        if (n > max_terms)
            throw convergence_error("hurwitz_zeta: term budget exceeded before tolerance");
        long double direct = 0;
        for (std::uint64_t i = n; i-- > 0;)  // small-to-large for rounding
            direct += std::pow(static_cast<long double>(i) + t, -s);
        const long double u = t + static_cast<long double>(n);
        const long double lu = std::log(u);
        long double integral;
        if (subtract_pole)
            integral = s == 1 ? -lu : std::expm1((1 - s) * lu) / (s - 1);
        else
            integral = std::exp((1 - s) * lu) / (s - 1);
        long double acc = direct + integral + std::exp(-s * lu) / 2;
        long double rising = s;  // s(s+1)...(s+2k-2)
        bool converged = false;
        long double prev_mag = INFINITY;
        for (int k = 1; k <= 10; ++k) {
            const long double term =
                kBernoulli[k - 1] / kEvenFactorial[k - 1] * rising * std::exp(-(s + 2 * k - 1) * lu);
            const long double mag = std::fabs(term);
            if (mag > prev_mag) break;  // divergent regime, enlarge the offset
            acc += term;
            prev_mag = mag;
            if (mag <= tol / 4) {
                converged = true;
                break;
            }
            rising *= (s + 2 * k - 1) * (s + 2 * k);
        }
        if (converged) return acc;
    }
    throw convergence_error("hurwitz_zeta: Euler-Maclaurin correction did not converge");
}

// For large s the plain series converges geometrically; the integral bound
// (n+t)^(1-s)/(s-1) certifies the truncation. The result can be far below
// abs_tol (s = x+1 grows with the support point), so the bound must also be
// small relative to the accumulated sum or hazards lose their tail accuracy.
long double direct_sum(long double s, long double t, long double tol, std::uint64_t max_terms) {
    long double acc = 0;
    for (std::uint64_t i = 0; i < max_terms; ++i) {
        const long double u = static_cast<long double>(i) + t;
        acc += std::pow(u, -s);
        const long double bound = std::pow(u + 1, 1 - s) / (s - 1);
        if (bound <= tol && bound <= 1e-17L * acc) return acc;
    }
    throw convergence_error("hurwitz_zeta: term budget exceeded before tolerance");
}

}  // namespace

double hurwitz_zeta(double s, double t, const SeriesPolicy& policy) {
    check_policy(policy);
    if (!(s > 1)) throw domain_error("hurwitz_zeta: requires s > 1");
    if (!(t > 0)) throw domain_error("hurwitz_zeta: requires t > 0");
    const long double tol = policy.abs_tol;
    if (s >= 30) return static_cast<double>(direct_sum(s, t, tol, policy.max_terms));
    return static_cast<double>(em_sum(s, t, tol, policy.max_terms, false));
}

double riemann_zeta(double s, const SeriesPolicy& policy) {
    if (!(s > 1)) throw domain_error("riemann_zeta: requires s > 1");
    return hurwitz_zeta(s, 1.0, policy);
}

double hurwitz_zeta_dt(double s, double t, const SeriesPolicy& policy) {
    if (!(s > 1)) throw domain_error("hurwitz_zeta_dt: requires s > 1");
    if (!(t > 0)) throw domain_error("hurwitz_zeta_dt: requires t > 0");
    return -s * hurwitz_zeta(s + 1, t, policy);
}

double riemann_zeta_minus_pole(double s, const SeriesPolicy& policy) {
    check_policy(policy);
    if (!(s > 0.25) || s >= 30)
        throw domain_error("riemann_zeta_minus_pole: supported for 0.25 < s < 30");
    return static_cast<double>(em_sum(s, 1.0L, policy.abs_tol, policy.max_terms, true));
}

double digamma(double z) {
    if (!(z > 0)) throw domain_error("digamma: requires z > 0");
    long double shift = 0;
    long double x = z;
    while (x < 10) {
        shift -= 1 / x;
        x += 1;
    }
    const long double inv2 = 1 / (x * x);
    // psi(x) ~ ln x - 1/(2x) - sum B_2k / (2k x^2k)
    long double series = 0;
    long double p = inv2;
    static constexpr std::array<long double, 6> coeff = {
        1.0L / 12, -1.0L / 120, 1.0L / 252, -1.0L / 240, 1.0L / 132, 691.0L / 32760};
    for (const long double c : coeff) {
        series += c * p;
        p *= inv2;
    }
    return static_cast<double>(shift + std::log(x) - 1 / (2 * x) - series);
}

unsigned __int128 stirling2(int kappa, int nu) {
    if (kappa < 0 || nu < 0 || nu > kappa || kappa > 30)
        throw domain_error("stirling2: requires 0 <= nu <= kappa <= 30");
    // S(k, v) = v S(k-1, v) + S(k-1, v-1), one rolling row
    std::array<unsigned __int128, 31> row{};
    row[0] = 1;
    for (int k = 1; k <= kappa; ++k) {
        for (int v = k; v >= 1; --v)
            row[v] = static_cast<unsigned __int128>(v) * row[v] + row[v - 1];
        row[0] = 0;
    }
    return row[nu];
}

}  // namespace zetatail::specfun
