#ifndef RAMASUM_REPORT_HPP
#define RAMASUM_REPORT_HPP

#include <map>
#include <string>
#include <vector>

#include "ramasum/special.hpp"

namespace ramasum {

inline constexpr const char* tool_version = "ramasum 0.1.0";

struct PointRecord {
    std::map<std::string, double> inputs;
    ComplexScalar lhs{0.0, 0.0};
    ComplexScalar rhs{0.0, 0.0};
    double residual = 0.0;
    std::vector<std::string> flags;
};

struct CheckReport {
    std::string suite;
    std::string version = tool_version;
    std::vector<PointRecord> points;
    double tolerance = 0.0;
    std::uint64_t min_points = 1;

    // aggregate, filled by finalize()
    double max_residual = 0.0;
    double mean_residual = 0.0;
    std::uint64_t run = 0;
    std::uint64_t skipped = 0;
    bool pass = false;

    // pass = (max residual <= tolerance) and (run >= min_points)
    void finalize();

    std::string to_json() const;
    std::string to_csv() const;
    std::string to_text() const;
    static CheckReport from_json(const std::string& text);
};

}  // namespace ramasum

#endif
