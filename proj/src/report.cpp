#include "kk/report.hpp"

#include <sstream>

namespace kk {

namespace {

std::string csv_quote(const std::string& s) {
    bool needs = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string VerificationReport::to_text(bool list_passing) const {
    std::ostringstream os;
    os << "suite: " << suite;
    if (!params.empty()) {
        os << " (";
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i) os << ", ";
            os << params[i].first << "=" << params[i].second;
        }
        os << ")";
    }
    os << "\n";
    for (const auto& c : cases) {
        if (!c.pass || list_passing) {
            os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.input
               << " | expected: " << c.expected << " | got: " << c.got << "\n";
        }
    }
    os << "  summary: " << passes() << " pass, " << fails() << " fail, " << cases.size()
       << " cases, " << elapsed_ms << " ms\n";
    return os.str();
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    nlohmann::ordered_json p;
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = p;
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (const auto& c : cases) {
        nlohmann::ordered_json cj;
        cj["input"] = c.input;
        cj["expected"] = c.expected;
        cj["got"] = c.got;
        cj["pass"] = c.pass;
        cs.push_back(cj);
    }
    j["cases"] = cs;
    j["summary"] = nlohmann::ordered_json{{"pass", passes()}, {"fail", fails()}};
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

std::string VerificationReport::to_csv() const {
    std::ostringstream os;
    os << "suite,input,expected,got,pass\n";
    for (const auto& c : cases) {
        os << csv_quote(suite) << "," << csv_quote(c.input) << "," << csv_quote(c.expected)
           << "," << csv_quote(c.got) << "," << (c.pass ? "true" : "false") << "\n";
    }
    return os.str();
}

std::string render_reports(const std::vector<VerificationReport>& reports,
                           const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) arr.push_back(r.to_json());
        os << (reports.size() == 1 ? reports.front().to_json().dump(2) : arr.dump(2)) << "\n";
    } else if (format == "csv") {
        for (const auto& r : reports) os << r.to_csv();
    } else {
        for (const auto& r : reports) os << r.to_text();
    }
    return os.str();
}

}  // namespace kk
