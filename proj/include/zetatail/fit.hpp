#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zetatail/distribution.hpp"

namespace zetatail {

struct CountHistogram {
    std::map<long, long> counts;

    void add(long x, long freq);
    long total() const;
    double sum_x() const;
    long max_count() const;
    long freq(long x) const;
};

// Expects a header line `count,frequency`; one row per distinct count.
CountHistogram parse_counts_csv(std::istream& in);
CountHistogram parse_counts_csv_file(const std::string& path);

struct FitResult {
    DistributionSpec spec;
    double loglik = 0;
    double aic = 0;
    std::size_t iterations = 0;
    bool converged = false;
};

struct GofBin {
    std::string label;
    long observed = 0;
    double expected = 0;
};

struct GofReport {
    double chi2 = 0;
    int df = 0;
    double p_value = 0;
    std::vector<GofBin> bins;
    bool low_expected_warning = false;
};

double log_likelihood(const DistributionSpec& spec, const CountHistogram& hist);

double geometric0_closed_form_p(const CountHistogram& hist);

FitResult mle_fit(Family family, const CountHistogram& hist);

// Same fit through the generic optimizer even where a closed form exists.
FitResult mle_fit_numeric(Family family, const CountHistogram& hist);

GofReport chi_square_gof(const DistributionSpec& spec, const CountHistogram& hist);

double chi2_sf(double x, int df);

double empirical_hazard(const CountHistogram& hist, long x);

const std::array<Family, 4>& comparison_families();

struct ModelComparison {
    std::vector<std::pair<FitResult, GofReport>> rows;
    int best_p_index = -1;
    int best_aic_index = -1;
};

ModelComparison compare_models(const CountHistogram& hist);

}  // namespace zetatail
