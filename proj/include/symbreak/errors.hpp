#ifndef SYMBREAK_ERRORS_HPP
#define SYMBREAK_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace symbreak {

/// Iterative solver failed to reach tolerance.
struct no_convergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An invariant polynomial has no representation in the basis up to the
/// weighted degree cap; usually means the basis is incomplete.
struct rewrite_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Scenario or basis validation failure; carries one message per offending field.
struct validation_error : std::runtime_error {
    std::vector<std::string> issues;
    explicit validation_error(std::vector<std::string> list)
        : std::runtime_error(join(list)), issues(std::move(list)) {}
    static std::string join(const std::vector<std::string>& list) {
        std::string s = "validation failed:";
        for (const auto& i : list) s += "\n  - " + i;
        return s;
    }
};

}  // namespace symbreak

#endif
