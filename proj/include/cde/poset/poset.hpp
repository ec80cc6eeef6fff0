#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace cde {

using Elem = std::uint32_t;
using Cover = std::pair<Elem, Elem>;

// Finite poset on elements 0..n-1 given by its cover relation. The
// constructor validates: the cover digraph must be acyclic and transitively
// reduced. Labels are display metadata only.
class FinitePoset {
public:
    FinitePoset() = default;
    FinitePoset(std::size_t n, std::vector<Cover> covers, std::vector<std::string> labels = {});

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }
    // Sorted, duplicate free.
    const std::vector<Cover>& covers() const { return covers_; }
    std::size_t edge_count() const { return covers_.size(); }
    const std::vector<Elem>& upper_covers(Elem e) const { return up_[e]; }
    const std::vector<Elem>& lower_covers(Elem e) const { return down_[e]; }
    // Every element appears after all elements below it.
    const std::vector<Elem>& topological_order() const { return topo_; }
    bool is_cover(Elem a, Elem b) const;

    bool has_labels() const { return !labels_.empty(); }
    // Falls back to the decimal id.
    std::string label(Elem e) const;
    const std::vector<std::string>& labels() const { return labels_; }
    // Index of the element carrying `label`, or size() when absent.
    std::size_t find_label(const std::string& label) const;

    std::vector<Elem> minimal_elements() const;
    std::vector<Elem> maximal_elements() const;

private:
    std::size_t n_ = 0;
    std::vector<Cover> covers_;
    std::vector<std::vector<Elem>> up_, down_;
    std::vector<Elem> topo_;
    std::vector<std::string> labels_;
};

// Checks the cover-relation invariants for raw data; throws CycleError or
// NotReducedError (naming the offending cover). Used by the constructor.
void validate(std::size_t n, const std::vector<Cover>& covers);

// Reflexive-transitive closure of the order. Quadratic memory, guarded by
// CapacityError above `max_elements`.
class OrderRelation {
public:
    static constexpr std::size_t kDefaultMaxElements = 20000;
    explicit OrderRelation(const FinitePoset& p, std::size_t max_elements = kDefaultMaxElements);

    bool leq(Elem a, Elem b) const { return up_[a][b]; }
    bool less(Elem a, Elem b) const { return a != b && up_[a][b]; }
    // Bitsets of {b : a <= b} and {b : b <= a}.
    const boost::dynamic_bitset<>& up_set(Elem a) const { return up_[a]; }
    const boost::dynamic_bitset<>& down_set(Elem a) const { return down_[a]; }

private:
    std::vector<boost::dynamic_bitset<>> up_, down_;
};

// Line-oriented text format: "n <count>", then "cover <a> <b>" and
// "label <a> <text>" lines. Blank lines and lines starting with '#' are
// ignored. The loaded poset is validated.
FinitePoset read_poset(std::istream& in);
FinitePoset load_poset_file(const std::string& path);
std::string write_poset(const FinitePoset& p);

}  // namespace cde
