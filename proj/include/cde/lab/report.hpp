#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cde::lab {

enum class Status { pass, fail, conjecture_consistent, conjecture_violated, skipped_capacity };

// "pass", "fail", "conjecture-consistent", "conjecture-violated", "skipped(capacity)".
std::string to_string(Status s);
Status parse_status(const std::string& text);

// Grid point as ordered key/value pairs.
using Instance = std::vector<std::pair<std::string, std::string>>;

inline constexpr const char* kConjectural = "conjectural";

// Outcome of one check. The factories fix the status: a theorem check passes
// exactly when the computed text equals the expected text, and conjecture
// checks carry the expected value "conjectural" and can never pass.
class CheckReport {
public:
    static CheckReport theorem(std::string check_id, Instance instance, std::string expected, std::string computed);
    static CheckReport conjecture(std::string check_id, Instance instance, std::string computed, bool consistent);
    static CheckReport skipped(std::string check_id, Instance instance, std::string reason);
    // Rebuilds a report from serialized fields; MalformedInputError when
    // they violate the status rules above.
    static CheckReport restore(std::string suite, std::string check_id, Instance instance, std::string expected,
                               std::string computed, Status status, double elapsed_ms, std::string detail);

    const std::string& suite() const { return suite_; }
    const std::string& check_id() const { return check_id_; }
    const Instance& instance() const { return instance_; }
    const std::string& expected() const { return expected_; }
    const std::string& computed() const { return computed_; }
    Status status() const { return status_; }
    double elapsed_ms() const { return elapsed_ms_; }
    // Free-form supporting numbers; never affects the status.
    const std::string& detail() const { return detail_; }

    bool is_failure() const { return status_ == Status::fail; }

    CheckReport& with_suite(std::string s) { suite_ = std::move(s); return *this; }
    CheckReport& with_elapsed(double ms) { elapsed_ms_ = ms; return *this; }
    CheckReport& with_detail(std::string d) { detail_ = std::move(d); return *this; }

private:
    CheckReport() = default;

    std::string suite_;
    std::string check_id_;
    Instance instance_;
    std::string expected_;
    std::string computed_;
    Status status_ = Status::fail;
    double elapsed_ms_ = 0;
    std::string detail_;
};

// One JSON object per line.
std::string to_json_line(const CheckReport& r);
CheckReport from_json_line(const std::string& line);
// Fixed-width table with a header row.
std::string format_table(const std::vector<CheckReport>& reports);

}  // namespace cde::lab
