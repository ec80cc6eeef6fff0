#include "cde/tableaux/counting.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "cde/core/capacity.hpp"
#include "cde/core/errors.hpp"

namespace cde {

std::vector<BigInt> count_ssyt_by_entries(const Partition& lambda, const Flag& phi, int j_max) {
    const std::vector<int> bound = phi.for_shape(lambda);
    const int n = lambda.size();
    if (j_max < n) return {};
    const int extra_max = j_max - n;
    const std::vector<Cell> cells = lambda.cells();
    const int width = lambda.row(1);

    // memo key: cell index followed by the column profile
    std::unordered_map<std::string, std::vector<BigInt>> memo;
    std::string profile(static_cast<std::size_t>(width), '\0');

    auto rec = [&](auto&& self, std::size_t k) -> std::vector<BigInt> {
        std::vector<BigInt> result(static_cast<std::size_t>(extra_max) + 1, BigInt(0));
        if (k == cells.size()) {
            result[0] = 1;
            return result;
        }
        const Cell c = cells[k];
        // Columns beyond this row are never read again; forget them so
        // equivalent states share a memo entry.
        const std::string outer = profile;
        if (c.col == 1 && c.row > 1)
            for (int col = lambda.row(c.row); col < width; ++col) profile[col] = '\0';
        std::string key = std::to_string(k) + ":" + profile;
        if (auto it = memo.find(key); it != memo.end()) {
            profile = outer;
            return it->second;
        }

        int lo = 1;
        if (c.col > 1) lo = std::max(lo, static_cast<int>(static_cast<unsigned char>(profile[c.col - 2])));
        if (c.row > 1) lo = std::max(lo, static_cast<int>(static_cast<unsigned char>(profile[c.col - 1])) + 1);
        const int hi = bound[c.row - 1];
        const char saved = profile[c.col - 1];
        for (int top = lo; top <= hi; ++top) {
            profile[c.col - 1] = static_cast<char>(top);
            std::vector<BigInt> sub = self(self, k + 1);
            // sets inside [lo, top] containing top: choose the other s-1 entries
            for (int s = 1; s - 1 <= extra_max && s - 1 <= top - lo; ++s) {
                const BigInt ways = binomial(top - lo, s - 1);
                for (int e = 0; e + s - 1 <= extra_max; ++e)
                    if (sub[e] != 0) result[e + s - 1] += ways * sub[e];
            }
        }
        profile[c.col - 1] = saved;
        profile = outer;
        memo.emplace(std::move(key), result);
        return result;
    };
    for (int v : bound)
        if (v > 255) throw CapacityError("flag bounds above 255 are not supported");
    return rec(rec, 0);
}

BigInt count_ssyt(const Partition& lambda, const Flag& phi, int j) {
    if (j < lambda.size()) {
        phi.for_shape(lambda);
        return 0;
    }
    return count_ssyt_by_entries(lambda, phi, j).back();
}

std::vector<SetValuedTableau> enumerate_ssyt(const Partition& lambda, const Flag& phi, int j) {
    const std::vector<int> bound = phi.for_shape(lambda);
    std::vector<SetValuedTableau> out;
    const int n = lambda.size();
    if (j < n) return out;
    const std::vector<Cell> cells = lambda.cells();
    std::vector<std::vector<EntrySet>> rows;
    for (int r = 1; r <= lambda.length(); ++r) rows.emplace_back(static_cast<std::size_t>(lambda.row(r)));

    auto rec = [&](auto&& self, std::size_t k, int extra_left) -> void {
        if (k == cells.size()) {
            if (extra_left == 0) {
                out.emplace_back(rows);
                check_capacity(out.size(), "tableau enumeration");
            }
            return;
        }
        const Cell c = cells[k];
        int lo = 1;
        if (c.col > 1) lo = std::max(lo, rows[c.row - 1][c.col - 2].back());
        if (c.row > 1) lo = std::max(lo, rows[c.row - 2][c.col - 1].back() + 1);
        const int hi = bound[c.row - 1];
        EntrySet& cell = rows[c.row - 1][c.col - 1];
        // sets within [lo, hi] in lexicographic order
        auto sets = [&](auto&& gen, int start) -> void {
            for (int v = start; v <= hi; ++v) {
                cell.push_back(v);
                const int used = static_cast<int>(cell.size()) - 1;
                self(self, k + 1, extra_left - used);
                if (used < extra_left) gen(gen, v + 1);
                cell.pop_back();
            }
        };
        sets(sets, lo);
    };
    rec(rec, 0, j - n);
    return out;
}

std::vector<SetValuedTableau> enumerate_standard_set_valued(const Partition& lambda, int extra) {
    std::vector<SetValuedTableau> out;
    if (extra < 0) return out;
    const int n = lambda.size();
    const int total = n + extra;
    std::vector<std::vector<EntrySet>> rows(static_cast<std::size_t>(lambda.length()));
    std::vector<int> started(static_cast<std::size_t>(lambda.length()), 0);

    auto rec = [&](auto&& self, int v, int filled, int extra_left) -> void {
        if (v > total) {
            if (filled == n && extra_left == 0) {
                out.emplace_back(rows);
                check_capacity(out.size(), "standard tableau enumeration");
            }
            return;
        }
        if (n - filled > total - v + 1) return;
        for (int r = 0; r < lambda.length(); ++r) {
            const int len = started[r];
            // start a new cell at the end of row r
            if (len < lambda.row(r + 1) && (r == 0 || started[r - 1] > len)) {
                rows[r].push_back({v});
                ++started[r];
                self(self, v + 1, filled + 1, extra_left);
                --started[r];
                rows[r].pop_back();
            }
            // join the last cell of row r when nothing lies right of or below it
            if (extra_left > 0 && len > 0 && (r + 1 == lambda.length() || started[r + 1] < len)) {
                rows[r].back().push_back(v);
                self(self, v + 1, filled, extra_left - 1);
                rows[r].back().pop_back();
            }
        }
    };
    rec(rec, 1, 0, extra);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cde
