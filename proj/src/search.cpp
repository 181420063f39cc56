#include "omlkit/search.hpp"

#include <atomic>
#include <future>

#include "omlkit/error.hpp"

namespace omlkit {

const char *to_string(Verdict v)
{
    return v == Verdict::Found ? "Found" : "Exhausted";
}

namespace {

class ExactOneSolver {
public:
    ExactOneSolver(const ExactOneProblem &problem, std::uint64_t budget, std::atomic<std::uint64_t> &nodes,
                   const std::atomic<bool> *stop = nullptr)
        : problem_(problem), occurs_(problem.variables), value_(problem.variables, -1), budget_(budget),
          nodes_(nodes), stop_(stop)
    {
        for (std::uint32_t c = 0; c < problem.constraints.size(); ++c)
            for (std::uint32_t v : problem.constraints[c])
                occurs_[v].push_back(c);
    }

    bool seed(const std::vector<std::int8_t> &seeds)
    {
        for (std::uint32_t v = 0; v < seeds.size(); ++v)
            if (seeds[v] >= 0 && !assign(v, seeds[v]))
                return false;
        // Empty constraints can never be satisfied.
        for (const auto &c : problem_.constraints)
            if (c.empty())
                return false;
        return true;
    }

    bool assign(std::uint32_t var, std::int8_t val)
    {
        queue_.clear();
        queue_.emplace_back(var, val);
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            auto [v, x] = queue_[head];
            if (value_[v] == x)
                continue;
            if (value_[v] != -1)
                return false;
            value_[v] = x;
            trail_.push_back(v);
            for (std::uint32_t c : occurs_[v]) {
                const auto &members = problem_.constraints[c];
                if (x == 1) {
                    for (std::uint32_t u : members) {
                        if (u == v)
                            continue;
                        if (value_[u] == 1)
                            return false;
                        if (value_[u] == -1)
                            queue_.emplace_back(u, 0);
                    }
                } else {
                    int ones = 0, open = 0;
                    std::uint32_t last_open = 0;
                    for (std::uint32_t u : members) {
                        if (value_[u] == 1)
                            ++ones;
                        else if (value_[u] == -1) {
                            ++open;
                            last_open = u;
                        }
                    }
                    if (ones == 0 && open == 0)
                        return false;
                    if (ones == 0 && open == 1)
                        queue_.emplace_back(last_open, 1);
                }
            }
        }
        return true;
    }

    void undo(std::size_t mark)
    {
        while (trail_.size() > mark) {
            value_[trail_.back()] = -1;
            trail_.pop_back();
        }
    }

    std::optional<std::uint32_t> next_free() const
    {
        for (std::uint32_t v = 0; v < value_.size(); ++v)
            if (value_[v] == -1)
                return v;
        return std::nullopt;
    }

    /// Depth-first search from the current partial assignment.
    bool search()
    {
        auto var = next_free();
        if (!var)
            return true;
        for (std::int8_t x : {std::int8_t{1}, std::int8_t{0}}) {
            if (stop_ && stop_->load(std::memory_order_relaxed))
                return false;
            if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_)
                throw BudgetExceeded(budget_, nodes_.load());
            std::size_t mark = trail_.size();
            if (assign(*var, x) && search())
                return true;
            undo(mark);
        }
        return false;
    }

    std::vector<std::uint8_t> assignment() const
    {
        std::vector<std::uint8_t> out(value_.size());
        for (std::size_t v = 0; v < value_.size(); ++v)
            out[v] = value_[v] == 1 ? 1 : 0;
        return out;
    }

private:
    const ExactOneProblem &problem_;
    std::vector<std::vector<std::uint32_t>> occurs_;
    std::vector<std::int8_t> value_;
    std::vector<std::uint32_t> trail_;
    std::vector<std::pair<std::uint32_t, std::int8_t>> queue_;
    std::uint64_t budget_;
    std::atomic<std::uint64_t> &nodes_;
    const std::atomic<bool> *stop_;
};

} // namespace

ExactOneResult solve_exact_one(const ExactOneProblem &problem, const std::vector<std::int8_t> &seeds,
                               const SearchOptions &options)
{
    std::atomic<std::uint64_t> nodes{0};
    ExactOneSolver root(problem, options.node_budget, nodes);
    ExactOneResult result;
    if (!root.seed(seeds))
        return result;

    auto split = root.next_free();
    if (!options.parallel || !split) {
        if (root.search()) {
            result.verdict = Verdict::Found;
            result.assignment = root.assignment();
        }
        result.nodes = nodes.load();
        return result;
    }

    // Each half replays the seeds, fixes the split variable, and searches on its own copy.
    std::atomic<bool> one_found{false};
    auto half = [&](std::int8_t x, const std::atomic<bool> *stop) -> std::optional<std::vector<std::uint8_t>> {
        ExactOneSolver s(problem, options.node_budget, nodes, stop);
        s.seed(seeds);
        if (nodes.fetch_add(1) + 1 > options.node_budget)
            throw BudgetExceeded(options.node_budget, nodes.load());
        if (s.assign(*split, x) && s.search()) {
            if (x == 1)
                one_found = true;
            return s.assignment();
        }
        return std::nullopt;
    };
    auto zero = std::async(std::launch::async, half, std::int8_t{0}, &one_found);
    std::optional<std::vector<std::uint8_t>> found_one;
    try {
        found_one = half(1, nullptr);
    } catch (...) {
        one_found = true;
        zero.wait();
        throw;
    }
    std::optional<std::vector<std::uint8_t>> found_zero;
    if (found_one)
        zero.wait();
    else
        found_zero = zero.get();
    result.nodes = nodes.load();
    if (found_one) {
        result.verdict = Verdict::Found;
        result.assignment = std::move(*found_one);
    } else if (found_zero) {
        result.verdict = Verdict::Found;
        result.assignment = std::move(*found_zero);
    }
    return result;
}

} // namespace omlkit
