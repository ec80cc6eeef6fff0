#include "cde/lab/manifest.hpp"

#include <sstream>

#include "cde/core/errors.hpp"
#include "cde/lab/manifest_text.hpp"

namespace cde::lab {

namespace {

std::vector<std::string> expand_values(const std::string& key, const std::string& text) {
    std::vector<std::string> values;
    if (auto dots = text.find(".."); dots != std::string::npos) {
        try {
            std::size_t used = 0;
            const long lo = std::stol(text.substr(0, dots), &used);
            if (used != dots) throw ParseError("");
            const std::string tail = text.substr(dots + 2);
            const long hi = std::stol(tail, &used);
            if (used != tail.size()) throw ParseError("");
            if (hi < lo) throw ParseError("");
            for (long v = lo; v <= hi; ++v) values.push_back(std::to_string(v));
        } catch (const std::exception&) {
            throw ParseError("bad range '" + text + "' for axis " + key);
        }
        return values;
    }
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, '|')) {
        if (item.empty()) throw ParseError("empty value in axis " + key);
        values.push_back(item);
    }
    if (values.empty()) throw ParseError("axis " + key + " has no values");
    return values;
}

}  // namespace

std::vector<Instance> GridLine::points() const {
    std::vector<Instance> out{Instance{}};
    for (const auto& [key, values] : axes) {
        std::vector<Instance> next;
        for (const auto& partial : out)
            for (const auto& v : values) {
                Instance p = partial;
                p.emplace_back(key, v);
                next.push_back(std::move(p));
            }
        out = std::move(next);
    }
    return out;
}

Manifest Manifest::parse(const std::string& text) {
    Manifest m;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        GridLine grid;
        if (!(words >> grid.suite)) continue;
        std::string axis;
        while (words >> axis) {
            const auto eq = axis.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 == axis.size())
                throw ParseError("manifest line " + std::to_string(number) + ": bad axis '" + axis + "'");
            const std::string key = axis.substr(0, eq);
            grid.axes.emplace_back(key, expand_values(key, axis.substr(eq + 1)));
        }
        m.lines_.push_back(std::move(grid));
    }
    return m;
}

const Manifest& Manifest::embedded() {
    static const Manifest m = parse(kEmbeddedManifest);
    return m;
}

std::vector<GridLine> Manifest::lines_for(const std::string& suite) const {
    std::vector<GridLine> out;
    for (const auto& l : lines_)
        if (l.suite == suite) out.push_back(l);
    return out;
}

}  // namespace cde::lab
