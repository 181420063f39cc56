#ifndef OMLKIT_SEARCH_HPP
#define OMLKIT_SEARCH_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace omlkit {

enum class Verdict { Found, Exhausted };

const char *to_string(Verdict v);

struct SearchOptions {
    std::uint64_t node_budget = 10'000'000;
    /// Split on the first branching variable and search both halves concurrently.
    /// The reported witness is still the one the sequential search would find.
    bool parallel = false;
};

template <typename Witness>
struct SearchOutcome {
    Verdict verdict = Verdict::Exhausted;
    std::optional<Witness> witness;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds wall_time{0};
};

/// 0/1 variables under "exactly one of these is 1" constraints.
struct ExactOneProblem {
    std::size_t variables = 0;
    std::vector<std::vector<std::uint32_t>> constraints;
};

struct ExactOneResult {
    Verdict verdict = Verdict::Exhausted;
    std::vector<std::uint8_t> assignment;
    std::uint64_t nodes = 0;
};

/// Backtracking with exactly-one propagation. Branches on the lowest unassigned
/// variable, value 1 first. `seeds` is empty or per-variable -1 (free), 0 or 1.
/// Throws BudgetExceeded once more than `node_budget` branch decisions were made.
ExactOneResult solve_exact_one(const ExactOneProblem &problem, const std::vector<std::int8_t> &seeds,
                               const SearchOptions &options);

} // namespace omlkit

#endif // OMLKIT_SEARCH_HPP
