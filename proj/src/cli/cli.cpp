#include "cde/cli/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "cde/core/capacity.hpp"
#include "cde/core/errors.hpp"
#include "cde/coxeter/fk.hpp"
#include "cde/coxeter/weak_order.hpp"
#include "cde/lab/catalog.hpp"
#include "cde/lab/suites.hpp"
#include "cde/poset/statistics.hpp"
#include "cde/tableaux/counting.hpp"
#include "cde/tableaux/young.hpp"

namespace cde::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string emit = "table";
    bool approx = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void put(Json& j, const std::string& key, const BigRational& v, const Options& o) {
    j[key] = v.str();
    if (o.approx) j[key + "_approx"] = v.to_double();
}

void put(Json& j, const std::string& key, const BigInt& v) { j[key] = v.get_str(); }

Json parts_json(const std::vector<int>& parts) { return Json(parts); }

Json coefficients_json(const IntPolynomial& p) {
    Json a = Json::array();
    for (const auto& c : p.coefficients()) a.push_back(c.get_str());
    return a;
}

void add_poset_stats(Json& j, const FinitePoset& p, unsigned m_max, const Options& o) {
    const PosetStats s = stats(p);
    j["elements"] = p.size();
    j["covers"] = s.edge_count;
    j["maximal_chains"] = s.maximal_chain_count.get_str();
    j["rank"] = s.rank ? Json(*s.rank) : Json(nullptr);
    put(j, "EX", s.EX, o);
    put(j, "EY", s.EY, o);
    j["CDE"] = s.EX == s.EY;
    if (m_max > 1) {
        Json xs = Json::array();
        bool constant = true;
        for (unsigned m = 1; m <= m_max; ++m) {
            const BigRational v = expectation_Xm(p, m);
            constant = constant && v == s.EX;
            xs.push_back(v.str());
        }
        j["EXm"] = xs;
        j["mCDE_upto"] = constant;
    }
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
        return s + "]";
    }
    return v.dump();
}

void emit_record(const Json& j, const Options& o, std::ostream& out) {
    if (o.emit == "json") {
        out << j.dump() << '\n';
        return;
    }
    std::size_t width = 0;
    for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
    for (const auto& [k, v] : j.items()) out << k << std::string(width - k.size() + 2, ' ') << scalar_text(v) << '\n';
}

void emit_tableaux(const std::string& title, const std::vector<SetValuedTableau>& ts, std::ostream& out) {
    out << "# " << title << ": " << ts.size() << '\n';
    for (const auto& t : ts) out << t.str() << '\n';
}

Permutation parse_perm(const std::string& text) { return Permutation::parse(text); }

FkRoute parse_route(const std::string& via) {
    if (via == "words") return FkRoute::words;
    if (via == "tableaux") return FkRoute::tableaux;
    throw UsageError("--via must be words, tableaux or both");
}

int cmd_poset(const std::string& file, const std::string& builder, int n, const std::string& spec, unsigned m,
              const Options& o, std::ostream& out) {
    const int given = !file.empty() + !builder.empty() + !spec.empty();
    if (given != 1) throw UsageError("poset stats needs exactly one of --file, --builder, --spec");
    FinitePoset p;
    Json j;
    if (!file.empty()) {
        p = load_poset_file(file);
        j["source"] = file;
    } else if (!builder.empty()) {
        const std::string s = n >= 0 ? builder + ":" + std::to_string(n) : builder;
        p = lab::parse_poset_spec(s);
        j["source"] = s;
    } else {
        p = lab::parse_poset_spec(spec);
        j["source"] = spec;
    }
    add_poset_stats(j, p, m, o);
    emit_record(j, o, out);
    return kOk;
}

int cmd_young(const std::string& shape, const Options& o, std::ostream& out) {
    const Partition lambda = Partition::parse(shape);
    if (o.emit == "tableaux") {
        emit_tableaux("standard", enumerate_standard_set_valued(lambda, 0), out);
        emit_tableaux("barely set-valued", enumerate_standard_set_valued(lambda, 1), out);
        return kOk;
    }
    Json j;
    j["shape"] = parts_json(lambda.parts());
    j["size"] = lambda.size();
    put(j, "f", hook_f(lambda));
    put(j, "f_plus", f_plus_one(lambda));
    const RPair r = R_and_Rplus(lambda);
    put(j, "R", r.R);
    put(j, "R_plus", r.Rplus);
    put(j, "EX", young_EX(lambda), o);
    put(j, "EY", young_EY(lambda), o);
    j["CDE"] = young_EX(lambda) == young_EY(lambda);
    emit_record(j, o, out);
    return kOk;
}

int cmd_shifted(const std::string& shape, unsigned m, const Options& o, std::ostream& out) {
    if (o.emit == "tableaux") throw UsageError("--emit tableaux applies to young stats only");
    const ShiftedPartition lambda = ShiftedPartition::parse(shape);
    Json j;
    j["shape"] = parts_json(lambda.parts());
    j["size"] = lambda.size();
    add_poset_stats(j, shifted_interval(lambda), m, o);
    emit_record(j, o, out);
    return kOk;
}

int cmd_perm(const std::string& text, unsigned m, const Options& o, std::ostream& out) {
    if (o.emit == "tableaux") throw UsageError("--emit tableaux applies to young stats only");
    const Permutation w = parse_perm(text);
    const Classification c = classify(w);
    Json j;
    j["w"] = w.str();
    j["n"] = w.size();
    j["length"] = length(w);
    j["vexillary"] = c.vexillary;
    j["dominant"] = c.dominant;
    j["grassmannian"] = c.grassmannian;
    j["inverse_grassmannian"] = c.inverse_grassmannian;
    j["shape"] = c.shape ? parts_json(c.shape->parts()) : Json(nullptr);
    put(j, "reduced_words", count_reduced(w));
    put(j, "nearly_reduced_words", count_nearly_reduced(w));
    Json interval;
    add_poset_stats(interval, weak_interval(w), m, o);
    for (auto& [k, v] : interval.items()) j["interval_" + k] = v;
    emit_record(j, o, out);
    return kOk;
}

int cmd_fk(const std::string& text, int L, const std::string& via, const Options& o, std::ostream& out) {
    if (o.emit == "tableaux") throw UsageError("--emit tableaux applies to young stats only");
    const Permutation w = parse_perm(text);
    Json j;
    j["w"] = w.str();
    j["L"] = L;
    int code = kOk;
    if (via == "both") {
        const IntPolynomial a = fk_polynomial(w, L, FkRoute::words);
        const IntPolynomial b = fk_polynomial(w, L, FkRoute::tableaux);
        j["words"] = coefficients_json(a);
        j["tableaux"] = coefficients_json(b);
        j["agree"] = a == b;
        if (!(a == b)) code = kFailed;
    } else {
        j[via] = coefficients_json(fk_polynomial(w, L, parse_route(via)));
    }
    emit_record(j, o, out);
    return code;
}

int cmd_verify(const std::string& suite, double budget_s, const std::string& manifest_path, const Options& o,
               std::ostream& out) {
    if (o.emit == "tableaux") throw UsageError("--emit tableaux does not apply to verify");
    if (budget_s < 0) throw UsageError("--budget must be nonnegative");
    std::vector<std::string> ids;
    if (suite == "all") {
        ids = lab::suite_ids();
    } else {
        ids.push_back(suite);
    }
    lab::Manifest manifest = lab::Manifest::embedded();
    if (!manifest_path.empty()) {
        std::ifstream in(manifest_path);
        if (!in) throw UsageError("cannot read manifest " + manifest_path);
        std::stringstream ss;
        ss << in.rdbuf();
        manifest = lab::Manifest::parse(ss.str());
    }
    using Clock = std::chrono::steady_clock;
    const auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(budget_s));
    std::vector<lab::CheckReport> all;
    for (const auto& id : ids) {
        const auto left = std::max(Clock::duration::zero(), deadline - Clock::now());
        auto rs = lab::run_suite(id, std::chrono::duration_cast<std::chrono::milliseconds>(left), manifest);
        all.insert(all.end(), rs.begin(), rs.end());
    }
    std::map<std::string, int> counts;
    bool failed = false;
    for (const auto& r : all) {
        ++counts[lab::to_string(r.status())];
        failed = failed || r.is_failure();
    }
    if (o.emit == "json") {
        for (const auto& r : all) out << lab::to_json_line(r) << '\n';
    } else {
        out << lab::format_table(all);
        out << "summary:";
        for (const auto& [k, v] : counts) out << ' ' << k << '=' << v;
        out << '\n';
    }
    return failed ? kFailed : kOk;
}

void apply_capacity_env() {
    const char* env = std::getenv("CDE_CAPACITY");
    if (env == nullptr || *env == '\0') return;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw UsageError("CDE_CAPACITY must be a positive integer");
    set_capacity_limit(static_cast<std::size_t>(v));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Down-degree expectations on posets, Young's lattice and weak order", "cde"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--emit", o.emit, "Output format")->check(CLI::IsMember({"json", "table", "tableaux"}));
    app.add_flag("--approx", o.approx, "Add decimal approximations next to exact values");

    unsigned m = 1;
    std::string file, builder, spec, shape, w, via = "words", suite = "all", manifest;
    int n = -1, L = 0;
    double budget = 600;

    auto* poset = app.add_subcommand("poset", "Statistics of a finite poset");
    auto* poset_stats = poset->add_subcommand("stats", "E(X), E(Y), chains, rank");
    poset->require_subcommand(1);
    poset_stats->add_option("--file", file, "Poset file");
    poset_stats->add_option("--builder", builder, "chain, antichain, boolean, tamari, weakfull, bruhat, m3, ...");
    poset_stats->add_option("--n", n, "Builder size")->check(CLI::NonNegativeNumber);
    poset_stats->add_option("--spec", spec, "Poset expression, e.g. prod(chain:2,young:2.1)");
    poset_stats->add_option("--m", m, "Also report E(X^(m)) for m up to this value")->check(CLI::PositiveNumber);

    auto* young = app.add_subcommand("young", "Young's lattice interval [empty, lambda]");
    auto* young_stats = young->add_subcommand("stats", "EX, EY, f, f+, R, R+");
    young->require_subcommand(1);
    young_stats->add_option("--shape", shape, "Partition, e.g. 3,1,1")->required();

    auto* shifted = app.add_subcommand("shifted", "Shifted staircase interval");
    auto* shifted_stats = shifted->add_subcommand("stats", "EX, EY of the interval");
    shifted->require_subcommand(1);
    shifted_stats->add_option("--shape", shape, "Strict partition, e.g. 5,3,1")->required();
    shifted_stats->add_option("--m", m, "Also report E(X^(m)) for m up to this value")->check(CLI::PositiveNumber);

    auto* perm = app.add_subcommand("perm", "Permutations and weak order intervals");
    auto* perm_stats = perm->add_subcommand("stats", "Classification, interval stats, word counts");
    perm->require_subcommand(1);
    perm_stats->add_option("--w", w, "One-line permutation, e.g. 4231 or 4,2,3,1")->required();
    perm_stats->add_option("--m", m, "Also report E(X^(m)) for m up to this value")->check(CLI::PositiveNumber);

    auto* fk = app.add_subcommand("fk", "Fomin-Kirillov polynomial FK(w, L)");
    fk->add_option("--w", w, "One-line permutation")->required();
    fk->add_option("--L", L, "Word length")->required()->check(CLI::NonNegativeNumber);
    fk->add_option("--via", via, "words, tableaux or both")->check(CLI::IsMember({"words", "tableaux", "both"}));

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", suite, "Suite id or 'all'");
    verify->add_option("--budget", budget, "Total time budget in seconds");
    verify->add_option("--manifest", manifest, "Grid manifest replacing the built-in one");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "cde: " << e.what() << '\n';
        if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front())
            err << "try: cde " << sub->get_name() << " --help\n";
        return kUsage;
    }

    try {
        apply_capacity_env();
        if (poset->parsed()) {
            if (o.emit == "tableaux") throw UsageError("--emit tableaux applies to young stats only");
            return cmd_poset(file, builder, n, spec, m, o, out);
        }
        if (young->parsed()) return cmd_young(shape, o, out);
        if (shifted->parsed()) return cmd_shifted(shape, m, o, out);
        if (perm->parsed()) return cmd_perm(w, m, o, out);
        if (fk->parsed()) return cmd_fk(w, L, via, o, out);
        if (verify->parsed()) return cmd_verify(suite, budget, manifest, o, out);
    } catch (const UsageError& e) {
        err << "cde: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "cde: " << e.what() << '\n';
        return kUsage;
    }
    err << "cde: no command\n";
    return kUsage;
}

}  // namespace cde::cli
