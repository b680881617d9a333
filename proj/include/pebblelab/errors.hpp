#pragma once

#include <stdexcept>
#include <string>

namespace pebblelab {

struct InvalidParameters : std::invalid_argument {
    explicit InvalidParameters(const std::string& what) : std::invalid_argument(what) {}
};

struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what, int best_bound = -1)
        : std::runtime_error(what), best_bound(best_bound) {}
    // Best bound established before the budget ran out, -1 if none.
    int best_bound;
};

struct DisconnectedGraph : std::invalid_argument {
    explicit DisconnectedGraph(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace pebblelab
