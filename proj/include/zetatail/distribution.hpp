#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zetatail/policy.hpp"

namespace zetatail {

enum class Family {
    ZetaTail,
    ZetaTail0,
    Geometric0,
    ZeroInflatedGeometric0,
    NegativeBinomial0,
    Zeta0,
    Quadratic0,
    GeneralizedZetaTail,
};

enum class Support { one_based, zero_based };

struct DistributionSpec {
    Family family = Family::ZetaTail;
    double a = 0;    // ZetaTail / ZetaTail0 / GeneralizedZetaTail
    double p = 0;    // Geometric0 / ZeroInflatedGeometric0 / NegativeBinomial0
    double pi0 = 0;  // ZeroInflatedGeometric0
    double r = 0;    // NegativeBinomial0 (continuous)
    double b = 0;    // Zeta0
    double c = 0;    // Quadratic0
    int r_count = 1; // GeneralizedZetaTail

    static DistributionSpec zeta_tail(double a);
    static DistributionSpec zeta_tail0(double a);
    static DistributionSpec geometric0(double p);
    static DistributionSpec zero_inflated_geometric0(double p, double pi0);
    static DistributionSpec negative_binomial0(double r, double p);
    static DistributionSpec zeta0(double b);
    static DistributionSpec quadratic0(double c);
    static DistributionSpec generalized_zeta_tail(int r_count, double a);

    void validate() const;
    int param_count() const;
    std::string family_name() const;
    std::string param_string() const;
};

Support support(const DistributionSpec& spec);
// Smallest x in the support (1 for ZetaTail, r_count for GeneralizedZetaTail, else 0).
long support_origin(const DistributionSpec& spec);

double pmf(const DistributionSpec& spec, long x);
double log_pmf(const DistributionSpec& spec, long x);
double cdf(const DistributionSpec& spec, long x);
// P(X > x), evaluated as a tail sum when small so hazards stay accurate.
double survival(const DistributionSpec& spec, long x);
double hazard(const DistributionSpec& spec, long x);

// E[X(X-1)...(X-nu+1)]; ZetaTail and ZetaTail0 only, nu <= 20.
double factorial_moment(const DistributionSpec& spec, int nu);
// E[X^kappa], kappa <= 6.
double raw_moment(const DistributionSpec& spec, int kappa);
double mean(const DistributionSpec& spec);
double variance(const DistributionSpec& spec);
// Var/E - 1.
double overdispersion_index(const DistributionSpec& spec);

// Relative overdispersion of ZetaTail0(a): (Var/E - 1)/E as a closed expression.
double zt0_relative_overdispersion(double a);
// P(ZetaTail0(a) = 0) / P(Geometric0((a+1)/(a+2)) = 0) = (a+2) zeta(2, a+2).
double zt0_zero_ratio(double a);

// Generating functions; zeta tail families only.
double pgf(const DistributionSpec& spec, double z);
double mgf(const DistributionSpec& spec, double t);
// (E[cos(wX)], E[sin(wX)]) by truncated sums; families with geometric tails.
std::pair<double, double> cf(const DistributionSpec& spec, double omega);

long mode(const DistributionSpec& spec);

// PMF table for GeneralizedZetaTail over y = r_count .. r_count + size - 1,
// built by repeated convolution of the parent truncated at tail mass < tail_tol.
std::vector<double> gzt_pmf_table(int r_count, double a, double tail_tol = 1e-12);

}  // namespace zetatail
