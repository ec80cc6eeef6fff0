#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cde/lab/report.hpp"

namespace cde::lab {

// One grid: a suite id followed by axes "key=values". Values are an
// integer range "lo..hi", a '|' separated list, or a single value. The grid
// is the product of the axes, first axis outermost.
struct GridLine {
    std::string suite;
    std::vector<std::pair<std::string, std::vector<std::string>>> axes;

    std::vector<Instance> points() const;
};

class Manifest {
public:
    // '#' starts a comment; blank lines are ignored. ParseError on bad axes.
    static Manifest parse(const std::string& text);
    // The checked-in data/manifest.txt, embedded at build time.
    static const Manifest& embedded();

    const std::vector<GridLine>& lines() const { return lines_; }
    std::vector<GridLine> lines_for(const std::string& suite) const;

private:
    std::vector<GridLine> lines_;
};

}  // namespace cde::lab
