#pragma once

#include <string>
#include <vector>

#include "zetatail/fit.hpp"

namespace zetatail {

// Monthly torrential-rainfall event counts for 12 South Korean regions,
// 1983-2014 (384 months each), with annual mean rainfall in millimeters.
struct RegionRecord {
    int index;
    std::string name;
    int annual_mean_rainfall_mm;
    int months;
    CountHistogram hist;
};

const std::vector<RegionRecord>& regions();

const RegionRecord* find_region(const std::string& name);

}  // namespace zetatail
