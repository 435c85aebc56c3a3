#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace zetatail {

// The one-parameter families entering the versatility comparison; the two
// Geometric0 rows differ only in how the positive parameter m maps to p.
enum class Fam1P {
    geometric_p_m_over_m1,
    geometric_p_1_over_m1,
    zeta_tail0,
    zeta0,
    quadratic0,
};

std::string fam1p_family_label(Fam1P fam);
std::string fam1p_parameterization(Fam1P fam);

double score(Fam1P fam, double theta, long x);

struct FisherResult {
    double value = 0;
    bool capped = false;
};

// E[score^2] by direct summation until the tail mass drops below 1e-12, with
// a term cap for the heavy-tailed families (capped flag set when it binds).
FisherResult fisher_information(Fam1P fam, double theta, std::uint64_t max_terms = 1'000'000);

// E[score] over the same summation scheme; should vanish at regular points.
double score_expectation(Fam1P fam, double theta, std::uint64_t max_terms = 1'000'000);

// Fisher information of Zeta0(b) through the zeta log-derivative identity;
// usable where the direct sum is impractical.
double zeta0_fisher_identity(double b);

struct VersatilityReport {
    std::string family;
    std::string parameterization;
    double fisher_integral = 0;
    double v = 0;
    int node_count = 0;
    bool capped_nodes = false;
};

VersatilityReport versatility_measure(Fam1P fam);

struct Table4 {
    std::vector<VersatilityReport> rows;
    double geometric_average = 0;
};

Table4 table4();

namespace quadrature {
// Gauss-Hermite nodes/weights for weight exp(-x^2), node-ascending.
std::vector<std::pair<double, double>> gauss_hermite(int n);
}

}  // namespace zetatail
