#include "zetatail/sampling.hpp"

#include <cmath>
#include <limits>

#include "zetatail/policy.hpp"

namespace zetatail {

long sample_quadratic_mixing(double a, double u) {
    const double m = std::ceil((a + 1) * u / (1 - u));
    return std::max(1L, static_cast<long>(m));
}

long sample_geometric(double p, double u) {
    const double x = std::ceil(std::log1p(-u) / std::log1p(-p));
    return std::max(1L, static_cast<long>(x));
}

std::pair<long, long> sample_zeta_tail_detail(double a, UniformSource& rng) {
    const long m = sample_quadratic_mixing(a, rng.next_double());
    const double p = (m + a) / (m + a + 1);
    const long x = sample_geometric(p, rng.next_double());
    return {m, x};
}

long sample_zeta_tail(double a, UniformSource& rng) {
    return sample_zeta_tail_detail(a, rng).second;
}

namespace {

long sample_quadratic0(double c, double u) {
    const double v = std::ceil(c * u / (1 - u)) - 1;
    return std::max(0L, static_cast<long>(v));
}

long sample_zeta0(double b, UniformSource& rng) {
    // Rejection for the one-based power law x^-(b+1); returns the draw minus one.
    const double rho = b + 1;
    const double bconst = std::pow(2.0, rho - 1);
    for (int iter = 0; iter < 100'000; ++iter) {
        const double u = rng.next_double();
        const double v = rng.next_double();
        const long double xl = std::floor(std::pow(static_cast<long double>(u), -1.0L / (rho - 1)));
        const long double t = std::pow(1 + 1 / xl, static_cast<long double>(rho - 1));
        if (v * xl * (t - 1) / (bconst - 1) <= t / bconst) {
            if (xl >= static_cast<long double>(std::numeric_limits<long>::max()))
                throw overflow_error("sample: power-law draw exceeds integer range");
            return static_cast<long>(xl) - 1;
        }
    }
    throw convergence_error("sample: power-law rejection loop stalled");
}

long sample_negative_binomial0(double r, double p, UniformSource& rng) {
    const double u = rng.next_double();
    long double f = std::exp(r * std::log(static_cast<long double>(p)));
    if (!(f > 0)) throw numeric_error("sample: negative binomial mass underflowed");
    long double acc = f;
    long x = 0;
    while (acc < u) {
        f *= (x + r) * (1 - p) / (x + 1);
        ++x;
        acc += f;
        if (x > 100'000'000) throw convergence_error("sample: negative binomial search stalled");
    }
    return x;
}

}  // namespace

long sample(const DistributionSpec& spec, UniformSource& rng) {
    spec.validate();
    switch (spec.family) {
        case Family::ZetaTail:
            return sample_zeta_tail(spec.a, rng);
        case Family::ZetaTail0:
            return sample_zeta_tail(spec.a, rng) - 1;
        case Family::Geometric0:
            return sample_geometric(spec.p, rng.next_double()) - 1;
        case Family::ZeroInflatedGeometric0: {
            const double gate = rng.next_double();
            const long g = sample_geometric(spec.p, rng.next_double()) - 1;
            return gate < spec.pi0 ? 0 : g;
        }
        case Family::NegativeBinomial0:
            return sample_negative_binomial0(spec.r, spec.p, rng);
        case Family::Zeta0:
            return sample_zeta0(spec.b, rng);
        case Family::Quadratic0:
            return sample_quadratic0(spec.c, rng.next_double());
        case Family::GeneralizedZetaTail: {
            long total = 0;
            for (int k = 0; k < spec.r_count; ++k) total += sample_zeta_tail(spec.a, rng);
            return total;
        }
    }
    throw domain_error("unknown family");
}

std::vector<long> sample_many(const DistributionSpec& spec, std::uint64_t seed, std::size_t n) {
    UniformSource rng(seed);
    std::vector<long> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(sample(spec, rng));
    return out;
}

}  // namespace zetatail
