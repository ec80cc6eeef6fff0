#include "cde/tableaux/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "cde/core/errors.hpp"

namespace cde {
namespace {

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    std::string t = text;
    t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char ch) { return std::isspace(ch); }), t.end());
    if (!t.empty() && (t.front() == '(' || t.front() == '[')) t = t.substr(1);
    if (!t.empty() && (t.back() == ')' || t.back() == ']')) t.pop_back();
    if (t.empty()) return parts;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ParseError("bad partition part '" + item + "'");
        }
        if (used != item.size()) throw ParseError("bad partition part '" + item + "'");
        parts.push_back(v);
    }
    return parts;
}

std::string join_parts(const std::vector<int>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
        if (i && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must weakly decrease");
    }
}

Partition Partition::parse(const std::string& text) { return Partition(parse_parts(text)); }

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.row(i) > row(i)) return false;
    return true;
}

Partition Partition::transpose() const {
    std::vector<int> t(parts_.empty() ? 0 : parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[j];
    return Partition(std::move(t));
}

std::vector<Cell> Partition::outer_corners() const {
    std::vector<Cell> r;
    for (int i = 1; i <= length() + 1; ++i)
        if (i == 1 || row(i) < row(i - 1)) r.push_back({i, row(i) + 1});
    return r;
}

std::vector<Cell> Partition::inner_corners() const {
    std::vector<Cell> r;
    for (int i = 1; i <= length(); ++i)
        if (row(i) > row(i + 1)) r.push_back({i, row(i)});
    return r;
}

Partition Partition::add(const Cell& c) const {
    if (c.col != row(c.row) + 1 || (c.row > 1 && row(c.row - 1) < c.col) || c.row > length() + 1)
        throw DomainError("cell is not an outer corner");
    std::vector<int> p = parts_;
    if (c.row == length() + 1) p.push_back(1);
    else ++p[c.row - 1];
    return Partition(std::move(p));
}

Partition Partition::remove(const Cell& c) const {
    if (c.row < 1 || c.row > length() || c.col != row(c.row) || row(c.row + 1) >= c.col)
        throw DomainError("cell is not an inner corner");
    std::vector<int> p = parts_;
    --p[c.row - 1];
    return Partition(std::move(p));
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> r;
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= row(i); ++j) r.push_back({i, j});
    return r;
}

int Partition::hook(const Cell& c) const {
    const Partition t = transpose();
    return (row(c.row) - c.col) + (t.row(c.col) - c.row) + 1;
}

std::string Partition::str() const { return join_parts(parts_); }

ShiftedPartition::ShiftedPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw DomainError("shifted partition parts must be positive");
        if (i && parts_[i] >= parts_[i - 1]) throw DomainError("shifted partition parts must strictly decrease");
    }
}

ShiftedPartition ShiftedPartition::parse(const std::string& text) { return ShiftedPartition(parse_parts(text)); }

int ShiftedPartition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string ShiftedPartition::str() const { return join_parts(parts_); }

Partition rect_staircase(int d, int a, int b) {
    if (d < 1 || a < 1 || b < 1) throw DomainError("rect_staircase needs positive d, a, b");
    std::vector<int> parts;
    for (int i = 0; i + 1 < d; ++i)
        for (int r = 0; r < a; ++r) parts.push_back(b * (d - 1 - i));
    return Partition(std::move(parts));
}

std::optional<StaircaseParams> as_rect_staircase(const Partition& lambda) {
    if (lambda.empty()) return std::nullopt;
    const auto& p = lambda.parts();
    const int b = p.back();
    int a = 0;
    while (a < lambda.length() && p[lambda.length() - 1 - a] == b) ++a;
    if (lambda.length() % a != 0) return std::nullopt;
    const int d = lambda.length() / a + 1;
    if (rect_staircase(d, a, b) != lambda) return std::nullopt;
    return StaircaseParams{d, a, b};
}

ShiftedPartition shifted_falling_by_twos(int l, int k) {
    if (l < 1 || k < 0 || 2 * k >= l) throw DomainError("falling-by-twos shape needs l >= 1 and 0 <= 2k < l");
    std::vector<int> parts;
    for (int i = 0; i <= k; ++i) parts.push_back(l - 2 * i);
    return ShiftedPartition(std::move(parts));
}

ShiftedPartition shifted_square_staircase(int d, int e, int a) {
    if (a < 1 || d < 1 || e < 1 || d <= a * (e - 1) + 1)
        throw DomainError("square staircase shape needs a, d, e >= 1 and d > a(e-1)+1");
    std::vector<int> parts;
    for (int i = 1; i < d; ++i) parts.push_back(d - i);
    const Partition inner = rect_staircase(e, a, a);
    for (int i = 1; i <= inner.length(); ++i) parts[static_cast<std::size_t>(i - 1)] += inner.row(i);
    return ShiftedPartition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    if (n < 0) return out;
    rec(rec, n, n);
    return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int i, int bound) -> void {
        if (i > lambda.length() || bound == 0) {
            out.emplace_back(cur);
            return;
        }
        const int top = std::min(bound, lambda.row(i));
        for (int v = 0; v <= top; ++v) {
            if (v == 0) {
                out.emplace_back(cur);
                continue;
            }
            cur.push_back(v);
            self(self, i + 1, v);
            cur.pop_back();
        }
    };
    rec(rec, 1, lambda.row(1));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cde
