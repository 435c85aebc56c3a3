#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zetatail {

// Truncation control for the infinite series behind every special function.
struct SeriesPolicy {
    double abs_tol = 1e-13;
    std::uint64_t max_terms = 10'000'000;
};

struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A series or iteration hit its term budget before meeting tolerance.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A quantity underflowed/overflowed past the representable range.
struct overflow_error : std::overflow_error {
    using std::overflow_error::overflow_error;
};

// Input data cannot support the requested computation.
struct data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numerical guard (quadrature stability, ...) tripped.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace zetatail
