#pragma once

#include <stdexcept>
#include <string>

namespace stackcount {

/* Error taxonomy shared by all modules.  The CLI maps these to exit codes:
 * usage/domain/parse -> 2, budget exhaustion -> 3.  Identity violations are
 * not exceptions; they are reported values (exit 1 is decided by the CLI). */

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& m) : std::runtime_error(m) {}
};

struct PoleError : DomainError {
    explicit PoleError(const std::string& m) : DomainError(m) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& m) : std::runtime_error(m) {}
};

/* Thrown when a redundant internal cross-check fails; always a bug. */
struct InternalCheckError : std::logic_error {
    explicit InternalCheckError(const std::string& m) : std::logic_error(m) {}
};

} // namespace stackcount
