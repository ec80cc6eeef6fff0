#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cde/cli/cli.hpp"
#include "cde/core/capacity.hpp"
#include "cde/coxeter/fk.hpp"
#include "cde/coxeter/weak_order.hpp"
#include "cde/lab/report.hpp"
#include "cde/poset/builders.hpp"
#include "cde/poset/statistics.hpp"
#include "cde/tableaux/young.hpp"
#include "doctest.h"

using namespace cde;
using Json = nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result cde_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json cde_json(std::vector<std::string> args) {
    args.push_back("--emit");
    args.push_back("json");
    auto r = cde_run(args);
    REQUIRE_MESSAGE(r.code == 0, r.err);
    return Json::parse(r.out);
}

BigRational rat(const Json& j) { return BigRational::parse(j.get<std::string>()); }

IntPolynomial poly(const Json& j) {
    std::vector<BigInt> c;
    for (const auto& x : j) c.emplace_back(x.get<std::string>());
    return IntPolynomial(c);
}

}  // namespace

TEST_CASE("young stats") {
    auto j = cde_json({"young", "stats", "--shape", "2,1"});
    CHECK(j["f"] == "2");
    CHECK(j["f_plus"] == "8");
    CHECK(j["EX"] == "1");
    CHECK(j["EY"] == "1");
    CHECK(j["CDE"] == true);

    // recomputing from the parsed shape gives the emitted values
    auto k = cde_json({"young", "stats", "--shape", "3,1,1"});
    const Partition lambda(k["shape"].get<std::vector<int>>());
    CHECK(rat(k["EX"]) == expectation_X(young_interval(lambda)));
    CHECK(rat(k["EY"]) == expectation_Y(young_interval(lambda)));
    CHECK(BigInt(k["R"].get<std::string>()) == young_interval(lambda).size());
    CHECK(BigInt(k["R_plus"].get<std::string>()) == young_interval(lambda).edge_count());
    CHECK(k["EX"] == "13/10");
    CHECK(k["EY"] == "23/18");

    auto table = cde_run({"young", "stats", "--shape", "2,1"});
    CHECK(table.code == 0);
    CHECK(table.out.find("f_plus  8") != std::string::npos);

    auto tab = cde_run({"young", "stats", "--shape", "2,1", "--emit", "tableaux"});
    CHECK(tab.code == 0);
    CHECK(tab.out.find("# standard: 2") != std::string::npos);
    CHECK(tab.out.find("# barely set-valued: 8") != std::string::npos);
}

TEST_CASE("perm stats") {
    auto j = cde_json({"perm", "stats", "--w", "25314"});
    CHECK(j["vexillary"] == true);
    CHECK(j["shape"] == Json::array({3, 1, 1}));
    CHECK(j["interval_EX"] == "14/11");
    CHECK(j["interval_EY"] == "23/18");
    const Permutation w = Permutation::parse(j["w"].get<std::string>());
    CHECK(rat(j["interval_EX"]) == expectation_X(weak_interval(w)));
    CHECK(BigInt(j["reduced_words"].get<std::string>()) == count_reduced(w));
    CHECK(BigInt(j["nearly_reduced_words"].get<std::string>()) == count_nearly_reduced(w));

    auto k = cde_json({"perm", "stats", "--w", "4,2,3,1"});
    CHECK(k["vexillary"] == true);
    CHECK(k["interval_EX"] == "5/4");
    auto v = cde_json({"perm", "stats", "--w", "2 1 4 3"});
    CHECK(v["vexillary"] == false);
    CHECK(v["shape"].is_null());

    auto m = cde_json({"perm", "stats", "--w", "53124", "--m", "2"});
    CHECK(m["interval_EXm"] == Json::array({"4/3", "206/155"}));
    CHECK(m["interval_mCDE_upto"] == false);
}

TEST_CASE("fk") {
    auto j = cde_json({"fk", "--w", "321", "--L", "3"});
    CHECK(poly(j["words"]) == IntPolynomial{6, 13, 9, 2});
    auto both = cde_json({"fk", "--w", "321", "--L", "4", "--via", "both"});
    CHECK(both["agree"] == true);
    CHECK(poly(both["tableaux"]) == fk_polynomial(Permutation::parse("321"), 4));
    auto tab = cde_json({"fk", "--w", "4,2,3,1", "--L", "6", "--via", "tableaux"});
    CHECK(poly(tab["tableaux"]) == fk_polynomial(Permutation::parse("4231"), 6));
    CHECK(cde_run({"fk", "--w", "2143", "--L", "2", "--via", "tableaux"}).code == 2);
}

TEST_CASE("poset and shifted stats") {
    auto t = cde_json({"poset", "stats", "--builder", "tamari", "--n", "6"});
    CHECK(t["EX"] == "3/2");
    CHECK(t["EY"] == "3/2");
    auto m3 = cde_json({"poset", "stats", "--file", std::string(CDE_DATA_DIR) + "/m3.poset"});
    CHECK(m3["EX"] == "6/5");
    CHECK(m3["EY"] == "4/3");
    CHECK(m3["CDE"] == false);
    auto s = cde_json({"poset", "stats", "--spec", "prod(chain:2,chain:3)", "--m", "3", "--approx"});
    CHECK(s["EXm"] == Json::array({"7/6", "7/6", "7/6"}));
    CHECK(s["EX_approx"].get<double>() == doctest::Approx(7.0 / 6));
    CHECK(rat(s["EY"]) == expectation_Y(product(chain(2), chain(3))));
    auto sh = cde_json({"shifted", "stats", "--shape", "3,1"});
    CHECK(sh["EX"] == sh["EY"]);
}

TEST_CASE("verify") {
    auto r = cde_run({"verify", "--suite", "negatives", "--budget", "60", "--emit", "json"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        auto report = lab::from_json_line(line);
        CHECK(lab::to_json_line(report) == line);
        CHECK(report.status() == lab::Status::pass);
        ++count;
    }
    CHECK(count == 7);

    // a failing grid point drives the exit code
    const std::string path = "test_cli_manifest.txt";
    std::ofstream(path) << "prop-products left=m3 right=chain:2\nnegatives case=m3\n";
    auto bad = cde_run({"verify", "--suite", "all", "--manifest", path, "--emit", "json"});
    std::remove(path.c_str());
    CHECK(bad.code == 1);
    CHECK(bad.out.find("\"status\":\"fail\"") != std::string::npos);

    CHECK(cde_run({"verify", "--suite", "nope"}).code == 2);
    auto table = cde_run({"verify", "--suite", "cor-tamari", "--budget", "0"});
    CHECK(table.code == 0);
    CHECK(table.out.find("skipped(capacity)") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(cde_run({}).code == 2);
    CHECK(cde_run({"frobnicate"}).code == 2);
    CHECK(cde_run({"young", "stats"}).code == 2);
    CHECK(cde_run({"young", "stats", "--shape", "2,x"}).code == 2);
    CHECK(cde_run({"perm", "stats", "--w", "1124"}).code == 2);
    CHECK(cde_run({"poset", "stats", "--spec", "chain:2", "--builder", "chain", "--n", "2"}).code == 2);
    CHECK(cde_run({"poset", "stats", "--spec", "chain:2", "--emit", "tableaux"}).code == 2);
    CHECK(cde_run({"fk", "--w", "321", "--L", "3", "--via", "magic"}).code == 2);
    CHECK(cde_run({"young", "stats", "--shape", "1", "--emit", "xml"}).code == 2);
    auto help = cde_run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("verify") != std::string::npos);
    CHECK(!cde_run({"perm", "stats", "--w", "9"}).err.empty());
}

TEST_CASE("capacity from the environment") {
    const std::size_t saved = capacity_limit();
    setenv("CDE_CAPACITY", "10", 1);
    auto r = cde_run({"perm", "stats", "--w", "54321"});
    CHECK(r.code == 2);
    CHECK(r.err.find("capacity") != std::string::npos);
    setenv("CDE_CAPACITY", "ten", 1);
    CHECK(cde_run({"young", "stats", "--shape", "1"}).code == 2);
    unsetenv("CDE_CAPACITY");
    set_capacity_limit(saved);
    CHECK(cde_run({"perm", "stats", "--w", "54321"}).code == 0);
}
