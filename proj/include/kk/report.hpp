#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace kk {

struct CaseRecord {
    std::string input;
    std::string expected;
    std::string got;
    bool pass = false;
};

struct VerificationReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;  // ordered key/value
    std::vector<CaseRecord> cases;
    long long elapsed_ms = 0;

    int passes() const {
        int n = 0;
        for (const auto& c : cases) n += c.pass ? 1 : 0;
        return n;
    }
    int fails() const { return static_cast<int>(cases.size()) - passes(); }
    bool ok() const { return fails() == 0; }

    void add(std::string input, std::string expected, std::string got, bool pass) {
        cases.push_back(CaseRecord{std::move(input), std::move(expected), std::move(got), pass});
    }
    void add_eq(std::string input, const std::string& expected, const std::string& got) {
        bool p = expected == got;
        cases.push_back(CaseRecord{std::move(input), expected, got, p});
    }

    std::string to_text(bool list_passing = false) const;
    nlohmann::ordered_json to_json() const;
    std::string to_csv() const;
};

std::string render_reports(const std::vector<VerificationReport>& reports,
                           const std::string& format);

}  // namespace kk
