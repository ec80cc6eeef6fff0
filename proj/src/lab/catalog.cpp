#include "cde/lab/catalog.hpp"

#include <algorithm>
#include <functional>

#include "cde/core/errors.hpp"
#include "cde/coxeter/weak_order.hpp"
#include "cde/poset/builders.hpp"
#include "cde/tableaux/young.hpp"

namespace cde::lab {

namespace {

std::size_t parse_count(const std::string& name, const std::string& arg) {
    if (arg.empty() || !std::all_of(arg.begin(), arg.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError(name + " needs a nonnegative integer, got '" + arg + "'");
    return std::stoul(arg);
}

std::string commas(std::string s) {
    std::replace(s.begin(), s.end(), '.', ',');
    return s;
}

// Splits "A,B,C" on commas outside parentheses.
std::vector<std::string> split_args(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth < 0) throw ParseError("unbalanced parentheses in '" + s + "'");
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (depth != 0) throw ParseError("unbalanced parentheses in '" + s + "'");
    out.push_back(cur);
    return out;
}

FinitePoset duality_example() {
    // elements a..f; b is the unique bottom of the left zigzag
    return FinitePoset(6, {{1, 0}, {1, 3}, {3, 4}, {5, 4}, {0, 2}, {3, 2}}, {"a", "b", "c", "d", "e", "f"});
}

FinitePoset atom(const std::string& name, const std::string& arg) {
    if (name == "chain") return chain(parse_count(name, arg));
    if (name == "antichain") return antichain(parse_count(name, arg));
    if (name == "boolean") return boolean_lattice(parse_count(name, arg));
    if (name == "tamari") return tamari(parse_count(name, arg));
    if (name == "weakfull") return weak_order_full(static_cast<int>(parse_count(name, arg)));
    if (name == "bruhat") return strong_bruhat(static_cast<int>(parse_count(name, arg)));
    if (name == "m3" && arg.empty()) return m3_lattice();
    if (name == "duality-example" && arg.empty()) return duality_example();
    if (name == "pabcd") {
        std::vector<std::string> items = split_args(commas(arg));
        if (items.size() != 4) throw ParseError("pabcd needs four parameters");
        return pabcd(parse_count(name, items[0]), parse_count(name, items[1]), parse_count(name, items[2]),
                     parse_count(name, items[3]));
    }
    if (name == "young") return young_interval(Partition::parse(commas(arg)));
    if (name == "shifted") return shifted_interval(ShiftedPartition::parse(commas(arg)));
    if (name == "weak") return weak_interval(Permutation::parse(commas(arg)));
    if (name == "noninv") return noninversion_poset(Permutation::parse(commas(arg)));
    throw ParseError("unknown poset '" + name + (arg.empty() ? "" : ":" + arg) + "'");
}

FinitePoset fold(const std::vector<FinitePoset>& ps, const std::function<FinitePoset(const FinitePoset&, const FinitePoset&)>& op) {
    FinitePoset acc = ps.front();
    for (std::size_t i = 1; i < ps.size(); ++i) acc = op(acc, ps[i]);
    return acc;
}

}  // namespace

FinitePoset parse_poset_spec(const std::string& spec) {
    if (spec.empty()) throw ParseError("empty poset spec");
    if (auto open = spec.find('('); open != std::string::npos) {
        if (spec.back() != ')') throw ParseError("missing ')' in '" + spec + "'");
        const std::string op = spec.substr(0, open);
        std::vector<FinitePoset> args;
        for (const auto& a : split_args(spec.substr(open + 1, spec.size() - open - 2))) args.push_back(parse_poset_spec(a));
        if (op == "dual" && args.size() == 1) return dual(args[0]);
        if (op == "J" && args.size() == 1) return order_ideal_lattice(args[0]);
        if (op == "prod") return fold(args, product);
        if (op == "union") return fold(args, disjoint_union);
        if (op == "osum") return fold(args, ordinal_sum);
        throw ParseError("unknown poset operator '" + op + "'");
    }
    const auto colon = spec.find(':');
    return colon == std::string::npos ? atom(spec, "") : atom(spec.substr(0, colon), spec.substr(colon + 1));
}

}  // namespace cde::lab
