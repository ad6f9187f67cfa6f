#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace catlim {

struct CatlimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A cycle of non-identity morphisms was found where a degree function is needed.
struct NotLeftFinite : CatlimError {
    using CatlimError::CatlimError;
};

// Nerve requested for a category with a non-identity cycle (infinite nerve).
struct LoopyCategory : CatlimError {
    using CatlimError::CatlimError;
};

struct BudgetExceeded : CatlimError {
    using CatlimError::CatlimError;
};

struct PreconditionError : CatlimError {
    using CatlimError::CatlimError;
};

// Node budget shared by the backtracking searches. Every expanded node ticks once.
struct Budget {
    std::uint64_t limit = 10'000'000;
    std::uint64_t used = 0;

    void tick(std::uint64_t n = 1) {
        used += n;
        if (used > limit)
            throw BudgetExceeded("search budget exceeded (" + std::to_string(limit) + " nodes)");
    }
};

struct Violation {
    std::string code;    // short machine tag, e.g. "associativity", "unit", "typing"
    std::string detail;  // human-readable witness
};

struct ValidationReport {
    std::string subject;
    std::vector<Violation> violations;

    bool clean() const { return violations.empty(); }
    void add(std::string code, std::string detail) {
        violations.push_back({std::move(code), std::move(detail)});
    }
};

}  // namespace catlim
