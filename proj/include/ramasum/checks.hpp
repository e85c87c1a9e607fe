#ifndef RAMASUM_CHECKS_HPP
#define RAMASUM_CHECKS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "ramasum/grid.hpp"
#include "ramasum/report.hpp"

namespace ramasum {

// Identity sweep suites. Known names: gauss, theorem18, entry16, eq20,
// transforms, digamma_chain, factor_x, replay.
struct SuiteOptions {
    std::optional<GridSpec> grid;  // suite default when absent
    double tol = -1.0;             // suite default when negative
    std::uint64_t seed = 20240901;
    bool exact = false;            // rational mode where applicable (eq20)
};

bool is_known_suite(const std::string& name);

CheckReport run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace ramasum

#endif
