#include "cde/tableaux/tableau.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cde/core/errors.hpp"

namespace cde {
namespace {

void check_set(const EntrySet& s) {
    if (s.empty()) throw MalformedInputError("tableau cell with an empty set");
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] <= 0) throw MalformedInputError("tableau entries must be positive");
        if (k && s[k] <= s[k - 1]) throw MalformedInputError("tableau cell set must be strictly increasing");
    }
}

EntrySet parse_cell(const std::string& raw) {
    std::string t;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw ParseError("empty tableau cell");
    if (t.front() == '{') {
        if (t.back() != '}') throw ParseError("unterminated cell '" + raw + "'");
        t = t.substr(1, t.size() - 2);
    }
    EntrySet s;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ParseError("bad tableau entry '" + item + "'");
        }
        if (used != item.size()) throw ParseError("bad tableau entry '" + item + "'");
        s.push_back(v);
    }
    return s;
}

}  // namespace

SetValuedTableau::SetValuedTableau(std::vector<std::vector<EntrySet>> rows) : rows_(std::move(rows)) {
    std::vector<int> lengths;
    for (const auto& r : rows_) lengths.push_back(static_cast<int>(r.size()));
    for (std::size_t i = 0; i < lengths.size(); ++i)
        if (lengths[i] == 0 || (i && lengths[i] > lengths[i - 1]))
            throw MalformedInputError("tableau rows do not form a partition shape");
    shape_ = Partition(lengths);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            const EntrySet& s = rows_[i][j];
            check_set(s);
            if (j && rows_[i][j - 1].back() > s.front())
                throw MalformedInputError("tableau row condition fails at (" + std::to_string(i + 1) + "," +
                                          std::to_string(j + 1) + ")");
            if (i && rows_[i - 1][j].back() >= s.front())
                throw MalformedInputError("tableau column condition fails at (" + std::to_string(i + 1) + "," +
                                          std::to_string(j + 1) + ")");
        }
}

SetValuedTableau SetValuedTableau::from_entries(const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<EntrySet>> r;
    for (const auto& row : rows) {
        r.emplace_back();
        for (int v : row) r.back().push_back({v});
    }
    return SetValuedTableau(std::move(r));
}

SetValuedTableau SetValuedTableau::parse(const std::string& text) {
    std::vector<std::vector<EntrySet>> rows;
    std::stringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<EntrySet> row;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, '\t'))
            if (cell.find_first_not_of(' ') != std::string::npos) row.push_back(parse_cell(cell));
        rows.push_back(std::move(row));
    }
    return SetValuedTableau(std::move(rows));
}

std::string SetValuedTableau::str() const {
    std::string s;
    for (const auto& row : rows_) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) s += '\t';
            s += '{';
            for (std::size_t k = 0; k < row[j].size(); ++k) {
                if (k) s += ',';
                s += std::to_string(row[j][k]);
            }
            s += '}';
        }
        s += '\n';
    }
    return s;
}

int SetValuedTableau::entry_count() const {
    int n = 0;
    for (const auto& row : rows_)
        for (const auto& s : row) n += static_cast<int>(s.size());
    return n;
}

std::vector<Cell> SetValuedTableau::multi_cells() const {
    std::vector<Cell> r;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < rows_[i].size(); ++j)
            if (rows_[i][j].size() > 1) r.push_back({static_cast<int>(i + 1), static_cast<int>(j + 1)});
    return r;
}

bool SetValuedTableau::is_barely_set_valued() const {
    auto m = multi_cells();
    return m.size() == 1 && at(m[0]).size() == 2;
}

bool SetValuedTableau::is_single_valued() const { return multi_cells().empty(); }

bool SetValuedTableau::is_standard() const {
    std::vector<int> all;
    for (const auto& row : rows_)
        for (const auto& s : row) all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end());
    for (std::size_t k = 0; k < all.size(); ++k)
        if (all[k] != static_cast<int>(k + 1)) return false;
    return true;
}

bool SetValuedTableau::is_flagged(const std::vector<int>& bounds) const {
    if (bounds.size() < rows_.size()) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (const auto& s : rows_[i])
            if (s.back() > bounds[i]) return false;
    return true;
}

Flag Flag::shifted_identity(int rows, int offset) {
    Flag f;
    for (int i = 1; i <= rows; ++i) f.bounds.push_back(i + offset);
    return f;
}

std::vector<int> Flag::for_shape(const Partition& shape) const {
    if (static_cast<int>(bounds.size()) < shape.length())
        throw MalformedInputError("flag has " + std::to_string(bounds.size()) + " bounds for a shape with " +
                                  std::to_string(shape.length()) + " rows");
    std::vector<int> b(bounds.begin(), bounds.begin() + shape.length());
    for (int v : b)
        if (v <= 0) throw MalformedInputError("flag bounds must be positive");
    return b;
}

std::string Flag::str() const {
    std::string s;
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(bounds[i]);
    }
    return s;
}

}  // namespace cde
