#include "cde/poset/poset.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>

#include "cde/core/errors.hpp"

namespace cde {
namespace {

std::string cover_name(const Cover& c) {
    return "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")";
}

std::vector<Elem> kahn_order(std::size_t n, const std::vector<std::vector<Elem>>& up,
                             const std::vector<std::vector<Elem>>& down) {
    std::vector<std::size_t> indeg(n);
    std::vector<Elem> order;
    order.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        indeg[v] = down[v].size();
        if (indeg[v] == 0) order.push_back(static_cast<Elem>(v));
    }
    for (std::size_t head = 0; head < order.size(); ++head)
        for (Elem w : up[order[head]])
            if (--indeg[w] == 0) order.push_back(w);
    return order;
}

// A function rank with rank(b) = rank(a) + 1 on every cover certifies that
// no cover is implied by a longer path.
bool has_rank_function(std::size_t n, const std::vector<std::vector<Elem>>& up,
                       const std::vector<std::vector<Elem>>& down) {
    std::vector<long> rank(n, 0);
    std::vector<char> seen(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        std::vector<Elem> stack{static_cast<Elem>(s)};
        while (!stack.empty()) {
            Elem v = stack.back();
            stack.pop_back();
            for (Elem w : up[v]) {
                if (!seen[w]) { seen[w] = 1; rank[w] = rank[v] + 1; stack.push_back(w); }
                else if (rank[w] != rank[v] + 1) return false;
            }
            for (Elem w : down[v]) {
                if (!seen[w]) { seen[w] = 1; rank[w] = rank[v] - 1; stack.push_back(w); }
                else if (rank[w] != rank[v] - 1) return false;
            }
        }
    }
    return true;
}

struct Adjacency {
    std::vector<std::vector<Elem>> up, down;
};

Adjacency build_adjacency(std::size_t n, const std::vector<Cover>& covers) {
    Adjacency adj{std::vector<std::vector<Elem>>(n), std::vector<std::vector<Elem>>(n)};
    for (const auto& [a, b] : covers) {
        if (a >= n || b >= n) throw DomainError("cover " + cover_name({a, b}) + " out of range");
        if (a == b) throw CycleError("self-loop at " + std::to_string(a));
        adj.up[a].push_back(b);
        adj.down[b].push_back(a);
    }
    return adj;
}

void check_reduced_by_closure(std::size_t n, const Adjacency& adj, const std::vector<Elem>& topo,
                              const std::vector<Cover>& covers) {
    if (n > OrderRelation::kDefaultMaxElements)
        throw CapacityError("cannot certify transitive reduction of an ungraded poset with " +
                            std::to_string(n) + " elements");
    // strict[v] = elements reachable from v by a path of length >= 2
    std::vector<boost::dynamic_bitset<>> reach(n, boost::dynamic_bitset<>(n));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        Elem v = *it;
        for (Elem w : adj.up[v]) {
            reach[v].set(w);
            reach[v] |= reach[w];
        }
    }
    for (const auto& [a, b] : covers)
        for (Elem c : adj.up[a])
            if (c != b && reach[c][b]) throw NotReducedError("cover " + cover_name({a, b}) + " is implied");
}

}  // namespace

void validate(std::size_t n, const std::vector<Cover>& covers) {
    Adjacency adj = build_adjacency(n, covers);
    std::vector<Elem> topo = kahn_order(n, adj.up, adj.down);
    if (topo.size() != n) throw CycleError("cover relation contains a cycle");
    if (has_rank_function(n, adj.up, adj.down)) return;
    check_reduced_by_closure(n, adj, topo, covers);
}

FinitePoset::FinitePoset(std::size_t n, std::vector<Cover> covers, std::vector<std::string> labels)
    : n_(n), covers_(std::move(covers)), labels_(std::move(labels)) {
    std::sort(covers_.begin(), covers_.end());
    covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());
    if (!labels_.empty() && labels_.size() != n_)
        throw DomainError("label count does not match element count");
    Adjacency adj = build_adjacency(n_, covers_);
    topo_ = kahn_order(n_, adj.up, adj.down);
    if (topo_.size() != n_) throw CycleError("cover relation contains a cycle");
    if (!has_rank_function(n_, adj.up, adj.down)) check_reduced_by_closure(n_, adj, topo_, covers_);
    up_ = std::move(adj.up);
    down_ = std::move(adj.down);
}

bool FinitePoset::is_cover(Elem a, Elem b) const {
    return std::binary_search(covers_.begin(), covers_.end(), Cover{a, b});
}

std::string FinitePoset::label(Elem e) const {
    if (e < labels_.size() && !labels_[e].empty()) return labels_[e];
    return std::to_string(e);
}

std::size_t FinitePoset::find_label(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return n_;
}

std::vector<Elem> FinitePoset::minimal_elements() const {
    std::vector<Elem> r;
    for (Elem e = 0; e < n_; ++e)
        if (down_[e].empty()) r.push_back(e);
    return r;
}

std::vector<Elem> FinitePoset::maximal_elements() const {
    std::vector<Elem> r;
    for (Elem e = 0; e < n_; ++e)
        if (up_[e].empty()) r.push_back(e);
    return r;
}

OrderRelation::OrderRelation(const FinitePoset& p, std::size_t max_elements) {
    const std::size_t n = p.size();
    if (n > max_elements)
        throw CapacityError("order relation on " + std::to_string(n) + " elements exceeds bound " +
                            std::to_string(max_elements));
    up_.assign(n, boost::dynamic_bitset<>(n));
    down_.assign(n, boost::dynamic_bitset<>(n));
    const auto& topo = p.topological_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        Elem v = *it;
        up_[v].set(v);
        for (Elem w : p.upper_covers(v)) up_[v] |= up_[w];
    }
    for (Elem v : topo) {
        down_[v].set(v);
        for (Elem w : p.lower_covers(v)) down_[v] |= down_[w];
    }
}

FinitePoset read_poset(std::istream& in) {
    std::string line;
    std::size_t n = 0;
    bool have_n = false;
    std::vector<Cover> covers;
    std::vector<std::string> labels;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw ParseError("poset file line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key[0] == '#') continue;
        if (key == "n") {
            long long v = -1;
            if (have_n || !(ls >> v) || v < 0) fail("bad element count");
            n = static_cast<std::size_t>(v);
            have_n = true;
        } else if (key == "cover") {
            long long a = -1, b = -1;
            if (!have_n) fail("cover before element count");
            if (!(ls >> a >> b) || a < 0 || b < 0 || static_cast<std::size_t>(a) >= n ||
                static_cast<std::size_t>(b) >= n)
                fail("bad cover");
            covers.emplace_back(static_cast<Elem>(a), static_cast<Elem>(b));
        } else if (key == "label") {
            long long a = -1;
            if (!have_n) fail("label before element count");
            if (!(ls >> a) || a < 0 || static_cast<std::size_t>(a) >= n) fail("bad label index");
            std::string text;
            std::getline(ls >> std::ws, text);
            if (labels.empty()) labels.resize(n);
            labels[static_cast<std::size_t>(a)] = text;
        } else {
            fail("unknown directive '" + key + "'");
        }
    }
    if (!have_n) throw ParseError("poset file has no element count");
    return FinitePoset(n, std::move(covers), std::move(labels));
}

FinitePoset load_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open poset file '" + path + "'");
    return read_poset(in);
}

std::string write_poset(const FinitePoset& p) {
    std::ostringstream os;
    os << "n " << p.size() << "\n";
    for (const auto& [a, b] : p.covers()) os << "cover " << a << " " << b << "\n";
    for (std::size_t i = 0; i < p.labels().size(); ++i)
        if (!p.labels()[i].empty()) os << "label " << i << " " << p.labels()[i] << "\n";
    return os.str();
}

}  // namespace cde
