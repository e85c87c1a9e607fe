#ifndef RAMASUM_GRID_HPP
#define RAMASUM_GRID_HPP

#include <map>
#include <string>
#include <vector>

#include "ramasum/errors.hpp"

namespace ramasum {

// Sweep grid: `var=start:stop:step` (step optional, default 1) or
// `var=v1,v2,...`, variables separated by `;`. N and k must be
// integer-valued.
struct GridSpec {
    // insertion-ordered axes; sweeps iterate lexicographically in this order
    std::vector<std::pair<std::string, std::vector<double>>> axes;
    double exclusion_radius = 1e-3;

    static GridSpec parse(const std::string& text);

    bool has(const std::string& name) const;
    const std::vector<double>& values(const std::string& name) const;
};

}  // namespace ramasum

#endif
