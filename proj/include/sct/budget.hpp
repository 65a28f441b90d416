// Enumeration budgets and error types shared across modules.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sct {

struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

struct AxiomError : std::runtime_error {
    explicit AxiomError(const std::string& what) : std::runtime_error(what) {}
};

// default cap on enumerated carriers (|U| = p^d, |L|, orbit BFS universes)
inline constexpr uint64_t kDefaultBudget = 1u << 20;
// cap on groups materialized with a full multiplication table
inline constexpr uint64_t kDefaultGroupBudget = 8192;

} // namespace sct
