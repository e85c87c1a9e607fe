#include "ramasum/grid.hpp"

#include <cmath>
#include <sstream>

namespace ramasum {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

double parse_number(const std::string& s) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw InvalidInput("grid: bad number '" + s + "'");
    }
    if (pos != s.size()) throw InvalidInput("grid: bad number '" + s + "'");
    return v;
}

}  // namespace

GridSpec GridSpec::parse(const std::string& text) {
    GridSpec g;
    for (const auto& part : split(text, ';')) {
        if (part.empty()) continue;
        const auto eq = part.find('=');
        if (eq == std::string::npos) throw InvalidInput("grid: expected var=range in '" + part + "'");
        const std::string name = part.substr(0, eq);
        const std::string body = part.substr(eq + 1);
        std::vector<double> vals;
        if (body.find(':') != std::string::npos) {
            const auto fields = split(body, ':');
            if (fields.size() < 2 || fields.size() > 3)
                throw InvalidInput("grid: expected start:stop[:step] in '" + part + "'");
            const double start = parse_number(fields[0]);
            const double stop = parse_number(fields[1]);
            const double step = fields.size() == 3 ? parse_number(fields[2]) : 1.0;
            if (step <= 0.0) throw InvalidInput("grid: step must be positive");
            if (stop < start) throw InvalidInput("grid: stop < start");
            const long n = std::lround(std::floor((stop - start) / step + 1e-9));
            for (long i = 0; i <= n; ++i) vals.push_back(start + double(i) * step);
        } else {
            for (const auto& f : split(body, ',')) vals.push_back(parse_number(f));
        }
        if (vals.empty()) throw InvalidInput("grid: empty axis '" + name + "'");
        if (name == "N" || name == "k") {
            for (double v : vals)
                if (v < 0.0 || v != std::round(v))
                    throw InvalidInput("grid: " + name + " must be a nonnegative integer");
        }
        g.axes.emplace_back(name, std::move(vals));
    }
    if (g.axes.empty()) throw InvalidInput("grid: no axes");
    return g;
}

bool GridSpec::has(const std::string& name) const {
    for (const auto& [n, v] : axes)
        if (n == name) return true;
    return false;
}

const std::vector<double>& GridSpec::values(const std::string& name) const {
    for (const auto& [n, v] : axes)
        if (n == name) return v;
    throw InvalidInput("grid: missing axis '" + name + "'");
}

}  // namespace ramasum
