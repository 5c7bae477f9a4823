#include "homtensor/check_report.hpp"

namespace homtensor {

namespace {

void append_failure(std::string& s, const CheckFailure& f, const char* prefix) {
    s += prefix;
    s += f.law;
    s += " at (";
    for (std::size_t i = 0; i < f.tuple.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f.tuple[i] + 1); // 1-based in rendered output
    }
    s += "): lhs = " + to_string(f.lhs) + ", rhs = " + to_string(f.rhs) + "\n";
}

} // namespace

std::string CheckReport::to_string() const {
    std::string s = passed() ? "PASS" : "FAIL";
    s += "\n";
    for (const auto& f : failures) append_failure(s, f, "  violated: ");
    for (const auto& f : informational) append_failure(s, f, "  note: ");
    return s;
}

} // namespace homtensor
