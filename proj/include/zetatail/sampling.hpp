#pragma once

#include <cstdint>
#include <utility>

#include "zetatail/distribution.hpp"

namespace zetatail {

// Deterministic splitmix64 stream mapped to doubles strictly inside (0,1).
class UniformSource {
  public:
    explicit UniformSource(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double next_double() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

  private:
    std::uint64_t state_;
};

// Mixing level M: P(M = m) = (a+1) / ((m+a)(m+a+1)), m >= 1.
long sample_quadratic_mixing(double a, double u);

// One-based geometric with success probability p: support {1, 2, ...}.
long sample_geometric(double p, double u);

// Two-stage draw; consumes exactly two uniforms. Returns (m, x).
std::pair<long, long> sample_zeta_tail_detail(double a, UniformSource& rng);

long sample_zeta_tail(double a, UniformSource& rng);

long sample(const DistributionSpec& spec, UniformSource& rng);

std::vector<long> sample_many(const DistributionSpec& spec, std::uint64_t seed, std::size_t n);

}  // namespace zetatail
