#pragma once

#include <stdexcept>
#include <string>

namespace ppbox {

// Exit-code contract shared with the CLI: usage 2, budget 3, invariant 4.

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation was refused because it exceeds a configured size budget.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// An exact identity that is a theorem failed to hold; never recoverable.
struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require_invariant(bool ok, const std::string& msg) {
    if (!ok) throw InvariantError(msg);
}

}  // namespace ppbox
