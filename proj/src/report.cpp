#include "ramasum/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace ramasum {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool is_skipped(const PointRecord& p) {
    return std::find(p.flags.begin(), p.flags.end(), "skipped_pole") != p.flags.end();
}

}  // namespace

void CheckReport::finalize() {
    run = 0;
    skipped = 0;
    max_residual = 0.0;
    double sum = 0.0;
    for (const auto& p : points) {
        if (is_skipped(p)) {
            ++skipped;
            continue;
        }
        ++run;
        sum += p.residual;
        max_residual = std::max(max_residual, p.residual);
    }
    mean_residual = run ? sum / double(run) : 0.0;
    pass = max_residual <= tolerance && run >= min_points;
}

std::string CheckReport::to_json() const {
    json j;
    j["suite"] = suite;
    j["version"] = version;
    j["points"] = json::array();
    for (const auto& p : points) {
        json jp;
        jp["inputs"] = p.inputs;
        jp["lhs"] = {{"re", p.lhs.real()}, {"im", p.lhs.imag()}};
        jp["rhs"] = {{"re", p.rhs.real()}, {"im", p.rhs.imag()}};
        jp["residual"] = p.residual;
        jp["flags"] = p.flags;
        j["points"].push_back(std::move(jp));
    }
    j["aggregate"] = {{"max_residual", max_residual}, {"mean_residual", mean_residual},
                      {"run", run},                   {"skipped", skipped},
                      {"pass", pass}};
    j["tolerance"] = tolerance;
    j["min_points"] = min_points;
    return j.dump(2);
}

CheckReport CheckReport::from_json(const std::string& text) {
    const json j = json::parse(text);
    CheckReport r;
    r.suite = j.at("suite").get<std::string>();
    r.version = j.at("version").get<std::string>();
    r.tolerance = j.value("tolerance", 0.0);
    r.min_points = j.value("min_points", std::uint64_t(1));
    for (const auto& jp : j.at("points")) {
        PointRecord p;
        p.inputs = jp.at("inputs").get<std::map<std::string, double>>();
        p.lhs = ComplexScalar(jp.at("lhs").at("re"), jp.at("lhs").at("im"));
        p.rhs = ComplexScalar(jp.at("rhs").at("re"), jp.at("rhs").at("im"));
        p.residual = jp.at("residual").get<double>();
        p.flags = jp.at("flags").get<std::vector<std::string>>();
        r.points.push_back(std::move(p));
    }
    r.finalize();
    return r;
}

std::string CheckReport::to_csv() const {
    std::ostringstream out;
    // stable column set: sorted union of input names
    std::vector<std::string> cols;
    for (const auto& p : points)
        for (const auto& [k, v] : p.inputs)
            if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    std::sort(cols.begin(), cols.end());
    for (const auto& c : cols) out << c << ',';
    out << "lhs_re,lhs_im,rhs_re,rhs_im,residual,flags\n";
    for (const auto& p : points) {
        for (const auto& c : cols) {
            auto it = p.inputs.find(c);
            if (it != p.inputs.end()) out << fmt17(it->second);
            out << ',';
        }
        out << fmt17(p.lhs.real()) << ',' << fmt17(p.lhs.imag()) << ','
            << fmt17(p.rhs.real()) << ',' << fmt17(p.rhs.imag()) << ','
            << fmt17(p.residual) << ',';
        for (std::size_t i = 0; i < p.flags.size(); ++i) {
            if (i) out << '|';
            out << p.flags[i];
        }
        out << '\n';
    }
    return out.str();
}

std::string CheckReport::to_text() const {
    std::ostringstream out;
    out << "suite: " << suite << " (" << version << ")\n";
    out << "points run: " << run << ", skipped: " << skipped << '\n';
    out << "max residual: " << fmt17(max_residual)
        << ", mean residual: " << fmt17(mean_residual) << '\n';
    out << "tolerance: " << fmt17(tolerance) << '\n';
    out << (pass ? "PASS" : "FAIL") << '\n';
    return out.str();
}

}  // namespace ramasum
