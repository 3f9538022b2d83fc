/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ZSSCHUR_GUARD_ZSSCHUR_SOLVER_HH
#define ZSSCHUR_GUARD_ZSSCHUR_SOLVER_HH 1

#include <zsschur/checker.hh>
#include <zsschur/core.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace zsschur
{
    enum class Pruning
    {
        LeafOnly,     ///< colour everything, then run the checker
        Incremental,  ///< reject a colour as soon as it completes a witness
        Lookahead     ///< as Incremental, and also cut when some uncoloured
                      ///< position already has every colour blocked
    };

    struct SearchConfig
    {
        /// Budget on extend_check calls (summed over a whole solve_exact scan).
        std::optional<std::uint64_t> max_nodes;
        std::optional<std::chrono::duration<double>> timeout;
        unsigned threads = 1;

        /// With threads == 1 the returned colouring is the lexicographically
        /// least free one under the branching order. The frontier split keeps
        /// this for any thread count, but only threads == 1 is promised.
        bool deterministic = false;

        /// Depth at which the tree is split into tasks for the workers;
        /// 0 picks a default. Ignored when threads == 1.
        int split_depth = 0;

        /// Fix chi(1) = 0 and canonicalise the first nonzero colour under
        /// units, when r | k.
        bool symmetry = true;

        Pruning pruning = Pruning::Lookahead;
    };

    enum class SearchOutcome
    {
        Found,
        Exhausted,
        BudgetExhausted
    };

    struct SearchResult
    {
        SearchOutcome outcome;
        std::optional<Coloring> coloring;
        SearchStats stats;
    };

    /**
     * A solution-free colouring of [1..m] together with one reach table per
     * assigned prefix. Extending never mutates; each extension carries its own
     * copy, so states are plain values.
     */
    class SearchState
    {
        private:
            ProblemSpec _spec;
            int _horizon;
            std::vector<int> _prefix;
            std::vector<ReachTable> _snapshots;

            SearchState(ProblemSpec spec, int horizon);

            friend auto extend_check(const SearchState &, int) -> std::optional<SearchState>;

        public:
            /// Empty prefix; sums are tracked up to horizon.
            static auto initial(const ProblemSpec & spec, int horizon) -> SearchState;

            [[nodiscard]] auto spec() const -> const ProblemSpec & { return _spec; }
            [[nodiscard]] auto horizon() const -> int { return _horizon; }
            [[nodiscard]] auto size() const -> int { return static_cast<int>(_prefix.size()); }
            [[nodiscard]] auto prefix() const -> Coloring { return Coloring{_spec.r, _prefix}; }

            /// Reach table over values 1..size().
            [[nodiscard]] auto reach() const -> const ReachTable & { return _snapshots.back(); }
    };

    /// Colour position size()+1. Returns nullopt if that completes a zero-sum
    /// witness with target size()+1. Throws ParameterError if the colour is
    /// outside the palette or the horizon is reached.
    [[nodiscard]] auto extend_check(const SearchState & state, int colour) -> std::optional<SearchState>;

    /// A solution-free colouring of [1..n], a proof that none exists, or
    /// BudgetExhausted.
    [[nodiscard]] auto find_free_coloring(int n, const ProblemSpec & spec, const SearchConfig & cfg = {}) -> SearchResult;

    /**
     * S_z(k, r) or its two-colour variant. Infinite when r does not divide k;
     * otherwise scans n upwards from just past the longest checker-verified
     * construction and stops at the first n with no free colouring.
     */
    [[nodiscard]] auto solve_exact(const ProblemSpec & spec, const SearchConfig & cfg = {}) -> ExactResult;
}

#endif
