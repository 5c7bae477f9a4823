#pragma once

#include "homtensor/check_report.hpp"
#include "homtensor/cohomology.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace homtensor {

/// Structured command outcome. The machine rendering is deterministic and
/// round-trips exactly; wall-clock timing appears only in the text
/// rendering so consecutive runs stay byte-identical.
struct Report {
    std::string command;
    std::map<std::string, std::string> inputs;
    std::string verdict; // "pass" | "fail" | "error"
    std::vector<CheckFailure> failures;
    std::vector<CheckFailure> informational;
    std::vector<CohomologySummary> summaries;
    std::vector<std::string> notes;
    std::int64_t timing_ms = 0;

    void absorb(const CheckReport& check);

    std::string render_machine() const;
    std::string render_text() const;
    static Report parse_machine(const std::string& text);

    bool equivalent_to(const Report& other) const; // ignores timing
};

} // namespace homtensor
