#include "homtensor/report.hpp"

#include "homtensor/errors.hpp"

#include <json.hpp>

namespace homtensor {

using nlohmann::json;

namespace {

json failure_to_json(const CheckFailure& f) {
    json tuple = json::array();
    for (auto i : f.tuple) tuple.push_back(i + 1); // 1-based outside the library
    json lhs = json::array(), rhs = json::array();
    for (const auto& x : f.lhs) lhs.push_back(to_string(x));
    for (const auto& x : f.rhs) rhs.push_back(to_string(x));
    return {{"law", f.law}, {"tuple", tuple}, {"lhs", lhs}, {"rhs", rhs}};
}

CheckFailure failure_from_json(const json& j) {
    CheckFailure f;
    f.law = j.at("law").get<std::string>();
    for (const auto& i : j.at("tuple")) f.tuple.push_back(i.get<std::size_t>() - 1);
    for (const auto& s : j.at("lhs")) f.lhs.push_back(parse_rational(s.get<std::string>()));
    for (const auto& s : j.at("rhs")) f.rhs.push_back(parse_rational(s.get<std::string>()));
    return f;
}

json summary_to_json(const CohomologySummary& s) {
    return {{"degree", s.degree},
            {"dim_cochain", s.dim_cochain},
            {"dim_cocycle", s.dim_cocycle},
            {"dim_coboundary", s.dim_coboundary},
            {"dim_h", s.dim_h},
            {"non_regular", s.non_regular}};
}

CohomologySummary summary_from_json(const json& j) {
    CohomologySummary s;
    s.degree = j.at("degree").get<std::size_t>();
    s.dim_cochain = j.at("dim_cochain").get<std::size_t>();
    s.dim_cocycle = j.at("dim_cocycle").get<std::size_t>();
    s.dim_coboundary = j.at("dim_coboundary").get<std::size_t>();
    s.dim_h = j.at("dim_h").get<std::size_t>();
    s.non_regular = j.at("non_regular").get<bool>();
    return s;
}

bool failures_equal(const std::vector<CheckFailure>& a, const std::vector<CheckFailure>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].law != b[i].law || a[i].tuple != b[i].tuple || a[i].lhs != b[i].lhs ||
            a[i].rhs != b[i].rhs)
            return false;
    }
    return true;
}

} // namespace

void Report::absorb(const CheckReport& check) {
    failures.insert(failures.end(), check.failures.begin(), check.failures.end());
    informational.insert(informational.end(), check.informational.begin(),
                         check.informational.end());
    if (!check.passed()) verdict = "fail";
}

std::string Report::render_machine() const {
    json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["verdict"] = verdict;
    json fj = json::array();
    for (const auto& f : failures) fj.push_back(failure_to_json(f));
    j["failures"] = fj;
    json ij = json::array();
    for (const auto& f : informational) ij.push_back(failure_to_json(f));
    j["informational"] = ij;
    json sj = json::array();
    for (const auto& s : summaries) sj.push_back(summary_to_json(s));
    j["summaries"] = sj;
    j["notes"] = notes;
    return j.dump(2) + "\n";
}

Report Report::parse_machine(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("report is not valid JSON: ") + e.what());
    }
    Report r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
    r.verdict = j.at("verdict").get<std::string>();
    for (const auto& f : j.at("failures")) r.failures.push_back(failure_from_json(f));
    for (const auto& f : j.at("informational")) r.informational.push_back(failure_from_json(f));
    for (const auto& s : j.at("summaries")) r.summaries.push_back(summary_from_json(s));
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

bool Report::equivalent_to(const Report& other) const {
    return command == other.command && inputs == other.inputs && verdict == other.verdict &&
           failures_equal(failures, other.failures) &&
           failures_equal(informational, other.informational) && summaries == other.summaries &&
           notes == other.notes;
}

std::string Report::render_text() const {
    std::string s;
    s += "command: " + command + "\n";
    for (const auto& [key, value] : inputs) s += "  " + key + ": " + value + "\n";
    s += "verdict: " + verdict + "\n";
    for (const auto& f : failures) {
        s += "  violated: " + f.law + " at (";
        for (std::size_t i = 0; i < f.tuple.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(f.tuple[i] + 1);
        }
        s += "): lhs = " + to_string(f.lhs) + ", rhs = " + to_string(f.rhs) + "\n";
    }
    for (const auto& f : informational) {
        s += "  note: " + f.law + " at (";
        for (std::size_t i = 0; i < f.tuple.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(f.tuple[i] + 1);
        }
        s += "): lhs = " + to_string(f.lhs) + ", rhs = " + to_string(f.rhs) + "\n";
    }
    for (const auto& s2 : summaries) {
        s += "  degree " + std::to_string(s2.degree) + ": dim C = " +
             std::to_string(s2.dim_cochain) + ", dim Z = " + std::to_string(s2.dim_cocycle) +
             ", dim B = " + std::to_string(s2.dim_coboundary) +
             ", dim H = " + std::to_string(s2.dim_h);
        if (s2.non_regular) s += "  [non-regular: degree-0 coboundaries undefined, B reported 0]";
        s += "\n";
    }
    for (const auto& n : notes) s += "  " + n + "\n";
    s += "elapsed: " + std::to_string(timing_ms) + " ms\n";
    return s;
}

} // namespace homtensor
