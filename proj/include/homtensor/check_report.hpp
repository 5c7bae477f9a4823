#pragma once

#include "homtensor/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace homtensor {

/// One failing instance of a checked law: which identity, at which basis
/// tuple (0-based), and the two evaluated sides.
struct CheckFailure {
    std::string law;
    std::vector<std::size_t> tuple;
    Vec lhs;
    Vec rhs;
};

/// Outcome of an axiom / homomorphism / validity check. The verdict is pass
/// exactly when `failures` is empty; `informational` holds evaluations that
/// never affect the verdict (e.g. the printed-variant identity in strict
/// mode).
struct CheckReport {
    std::vector<CheckFailure> failures;
    std::vector<CheckFailure> informational;

    bool passed() const { return failures.empty(); }

    void fail(std::string law, std::vector<std::size_t> tuple, Vec lhs, Vec rhs) {
        failures.push_back({std::move(law), std::move(tuple), std::move(lhs), std::move(rhs)});
    }
    void note(std::string law, std::vector<std::size_t> tuple, Vec lhs, Vec rhs) {
        informational.push_back({std::move(law), std::move(tuple), std::move(lhs), std::move(rhs)});
    }
    void merge(const CheckReport& other) {
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
        informational.insert(informational.end(), other.informational.begin(),
                             other.informational.end());
    }

    std::string to_string() const;
};

} // namespace homtensor
