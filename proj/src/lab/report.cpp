#include "cde/lab/report.hpp"

#include <algorithm>
#include <sstream>

#include "cde/core/errors.hpp"
#include "json.hpp"

namespace cde::lab {

using json = nlohmann::ordered_json;

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::conjecture_consistent: return "conjecture-consistent";
        case Status::conjecture_violated: return "conjecture-violated";
        case Status::skipped_capacity: return "skipped(capacity)";
    }
    return "fail";
}

Status parse_status(const std::string& text) {
    for (Status s : {Status::pass, Status::fail, Status::conjecture_consistent, Status::conjecture_violated,
                     Status::skipped_capacity})
        if (to_string(s) == text) return s;
    throw MalformedInputError("unknown status '" + text + "'");
}

CheckReport CheckReport::theorem(std::string check_id, Instance instance, std::string expected, std::string computed) {
    if (expected == kConjectural) throw ConsistencyError("theorem check " + check_id + " has a conjectural expectation");
    CheckReport r;
    r.check_id_ = std::move(check_id);
    r.instance_ = std::move(instance);
    r.status_ = expected == computed ? Status::pass : Status::fail;
    r.expected_ = std::move(expected);
    r.computed_ = std::move(computed);
    return r;
}

CheckReport CheckReport::conjecture(std::string check_id, Instance instance, std::string computed, bool consistent) {
    CheckReport r;
    r.check_id_ = std::move(check_id);
    r.instance_ = std::move(instance);
    r.expected_ = kConjectural;
    r.computed_ = std::move(computed);
    r.status_ = consistent ? Status::conjecture_consistent : Status::conjecture_violated;
    return r;
}

CheckReport CheckReport::skipped(std::string check_id, Instance instance, std::string reason) {
    CheckReport r;
    r.check_id_ = std::move(check_id);
    r.instance_ = std::move(instance);
    r.expected_ = "";
    r.computed_ = std::move(reason);
    r.status_ = Status::skipped_capacity;
    return r;
}

CheckReport CheckReport::restore(std::string suite, std::string check_id, Instance instance, std::string expected,
                                 std::string computed, Status status, double elapsed_ms, std::string detail) {
    const bool conjectural = expected == kConjectural;
    switch (status) {
        case Status::pass:
            if (conjectural || expected != computed) throw MalformedInputError("pass requires expected == computed");
            break;
        case Status::fail:
            if (conjectural || expected == computed) throw MalformedInputError("fail requires a mismatch");
            break;
        case Status::conjecture_consistent:
        case Status::conjecture_violated:
            if (!conjectural) throw MalformedInputError("conjecture statuses need a conjectural expectation");
            break;
        case Status::skipped_capacity:
            break;
    }
    CheckReport r;
    r.suite_ = std::move(suite);
    r.check_id_ = std::move(check_id);
    r.instance_ = std::move(instance);
    r.expected_ = std::move(expected);
    r.computed_ = std::move(computed);
    r.status_ = status;
    r.elapsed_ms_ = elapsed_ms;
    r.detail_ = std::move(detail);
    return r;
}

std::string to_json_line(const CheckReport& r) {
    json instance = json::object();
    for (const auto& [k, v] : r.instance()) instance[k] = v;
    json j;
    j["suite"] = r.suite();
    j["check_id"] = r.check_id();
    j["instance"] = instance;
    j["expected"] = r.expected();
    j["computed"] = r.computed();
    j["status"] = to_string(r.status());
    j["elapsed_ms"] = r.elapsed_ms();
    if (!r.detail().empty()) j["detail"] = r.detail();
    return j.dump();
}

CheckReport from_json_line(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
        Instance instance;
        for (const auto& [k, v] : j.at("instance").items()) instance.emplace_back(k, v.get<std::string>());
        return CheckReport::restore(j.at("suite").get<std::string>(), j.at("check_id").get<std::string>(),
                                    std::move(instance), j.at("expected").get<std::string>(),
                                    j.at("computed").get<std::string>(), parse_status(j.at("status").get<std::string>()),
                                    j.at("elapsed_ms").get<double>(), j.value("detail", std::string()));
    } catch (const json::exception& e) {
        throw MalformedInputError(std::string("bad report line: ") + e.what());
    }
}

std::string format_table(const std::vector<CheckReport>& reports) {
    std::vector<std::vector<std::string>> rows{{"suite", "check", "instance", "status", "expected", "computed", "ms"}};
    for (const auto& r : reports) {
        std::string inst;
        for (const auto& [k, v] : r.instance()) inst += (inst.empty() ? "" : " ") + k + "=" + v;
        std::ostringstream ms;
        ms.setf(std::ios::fixed);
        ms.precision(1);
        ms << r.elapsed_ms();
        rows.push_back({r.suite(), r.check_id(), inst, to_string(r.status()), r.expected(), r.computed(), ms.str()});
    }
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << row[c];
            if (c + 1 < row.size()) out << std::string(width[c] - row[c].size() + 2, ' ');
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace cde::lab
