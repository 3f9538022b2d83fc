/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <zsschur/bounds.hh>
#include <zsschur/constructions.hh>
#include <zsschur/solver.hh>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

using std::optional;
using std::vector;

namespace zsschur
{
    namespace
    {
        using Clock = std::chrono::steady_clock;

        constexpr auto no_task = std::numeric_limits<std::size_t>::max();

        struct Shared
        {
            optional<std::uint64_t> max_nodes;
            optional<Clock::time_point> deadline;
            bool deterministic = false;

            std::atomic<std::uint64_t> nodes{0};
            std::atomic<bool> out_of_budget{false};
            std::atomic<std::size_t> best_task{no_task};
        };

        class Worker
        {
            private:
                const ProblemSpec & _spec;
                const int _n;
                const SearchConfig & _cfg;
                Shared & _shared;

                vector<int> _colours;
                vector<char> _canonical;
                bool _reduce;

                // _tables[d] holds values 1..d
                vector<ReachTable> _tables;
                vector<int> _prefix;
                std::size_t _task = 0;
                std::uint64_t _since_clock = 0;

            public:
                SearchStats stats;

                Worker(const ProblemSpec & spec, int n, const SearchConfig & cfg, Shared & shared) :
                    _spec(spec),
                    _n(n),
                    _cfg(cfg),
                    _shared(shared),
                    _colours(spec.colours()),
                    _canonical(spec.r, 1),
                    _reduce(cfg.symmetry && spec.r_divides_k()),
                    _prefix(n, 0)
                {
                    if (_cfg.pruning != Pruning::LeafOnly)
                        _tables.assign(n + 1, ReachTable{spec.k - 1, spec.r, std::max(n, 1)});

                    // a nonzero colour is canonical iff it is the least element
                    // of its orbit under multiplication by units
                    if (spec.palette == Palette::Full)
                        for (int c = 1 ; c < spec.r ; ++c)
                            for (int u = 1 ; u < spec.r ; ++u)
                                if (is_unit(u, spec.r) && reduce(static_cast<long long>(u) * c, spec.r) < c)
                                    _canonical[c] = 0;
                }

                [[nodiscard]] auto colouring() const -> vector<int> { return _prefix; }

                auto prefix(int depth) const -> vector<int>
                {
                    return vector<int>(_prefix.begin(), _prefix.begin() + depth);
                }

                auto load(const vector<int> & prefix, std::size_t task) -> bool
                {
                    _task = task;
                    bool nonzero = false;
                    for (int d = 0 ; d < static_cast<int>(prefix.size()) ; ++d) {
                        _prefix[d] = prefix[d];
                        nonzero = nonzero || prefix[d] != 0;
                        if (_cfg.pruning != Pruning::LeafOnly) {
                            _tables[d + 1].copy_from(_tables[d]);
                            _tables[d + 1].add_value(d + 1, prefix[d]);
                        }
                    }
                    return nonzero;
                }

                auto aborted() const -> bool
                {
                    if (_shared.out_of_budget.load(std::memory_order_relaxed))
                        return true;
                    auto best = _shared.best_task.load(std::memory_order_relaxed);
                    return _shared.deterministic ? best < _task : best != no_task;
                }

                /// Counts one extend_check; false once the budget is gone.
                auto charge() -> bool
                {
                    ++stats.nodes;
                    auto used = _shared.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
                    if (_shared.max_nodes && used > *_shared.max_nodes) {
                        _shared.out_of_budget = true;
                        return false;
                    }
                    if (_shared.deadline && ++_since_clock >= 1024) {
                        _since_clock = 0;
                        if (Clock::now() >= *_shared.deadline) {
                            _shared.out_of_budget = true;
                            return false;
                        }
                    }
                    return true;
                }

                auto allowed(int depth, bool nonzero, int colour) const -> bool
                {
                    if (! _reduce)
                        return true;
                    if (depth == 0)
                        return colour == 0;
                    return nonzero || colour == 0 || _canonical[colour];
                }

                /// Some position in (m, n] already has every colour blocked.
                auto wiped_out(const ReachTable & table, int m) const -> bool
                {
                    int words = table.words_per_row();
                    int k = _spec.k, r = _spec.r;
                    for (int w = (m + 1) >> 6 ; w < words ; ++w) {
                        std::uint64_t blocked = ~std::uint64_t{0};
                        for (int c : _colours)
                            blocked &= table.row(k - 1, reduce(-c, r))[w];
                        if (w == ((m + 1) >> 6))
                            blocked &= ~std::uint64_t{0} << ((m + 1) & 63);
                        if (blocked)
                            return true;
                    }
                    return false;
                }

                /// Depth-first over colours of positions depth+1..n. With
                /// frontier set, stops at split and records prefixes instead.
                auto search(int depth, bool nonzero, int split = -1, vector<vector<int>> * frontier = nullptr) -> bool
                {
                    stats.max_depth = std::max(stats.max_depth, depth);

                    if (frontier && depth == split) {
                        frontier->push_back(prefix(depth));
                        return false;
                    }

                    if (depth == _n) {
                        if (_cfg.pruning == Pruning::LeafOnly)
                            return is_solution_free(Coloring{_spec.r, _prefix}, _spec);
                        return true;
                    }

                    int k = _spec.k, r = _spec.r;
                    int position = depth + 1;
                    for (int c : _colours) {
                        if (! allowed(depth, nonzero, c))
                            continue;
                        if (aborted() || ! charge())
                            return false;

                        _prefix[depth] = c;
                        if (_cfg.pruning != Pruning::LeafOnly) {
                            if (_tables[depth].test(k - 1, position, reduce(-c, r))) {
                                ++stats.prunes;
                                continue;
                            }
                            _tables[position].copy_from(_tables[depth]);
                            _tables[position].add_value(position, c);
                            if (_cfg.pruning == Pruning::Lookahead && position < _n && wiped_out(_tables[position], position)) {
                                ++stats.prunes;
                                continue;
                            }
                        }

                        if (search(position, nonzero || c != 0, split, frontier))
                            return true;
                    }
                    return false;
                }
        };

        auto default_split(int n, const ProblemSpec & spec) -> int
        {
            int palette = static_cast<int>(spec.colours().size());
            int depth = 1 + static_cast<int>(std::log(4096.0) / std::log(static_cast<double>(palette)));
            return std::max(1, std::min({n, spec.k - 1, depth}));
        }
    }

    SearchState::SearchState(ProblemSpec spec, int horizon) :
        _spec(spec),
        _horizon(horizon)
    {
    }

    auto SearchState::initial(const ProblemSpec & spec, int horizon) -> SearchState
    {
        if (horizon < 0)
            throw ParameterError{"horizon must be non-negative"};
        SearchState state{spec, horizon};
        state._snapshots.emplace_back(spec.k - 1, spec.r, std::max(horizon, 1));
        return state;
    }

    auto extend_check(const SearchState & state, int colour) -> optional<SearchState>
    {
        const auto & spec = state.spec();
        int position = state.size() + 1;
        if (position > state.horizon())
            throw ParameterError{"cannot extend past the horizon " + std::to_string(state.horizon())};
        if (colour < 0 || colour >= static_cast<int>(spec.colours().size()))
            throw ParameterError{"colour " + std::to_string(colour) + " is not in the palette"};

        if (state.reach().test(spec.k - 1, position, reduce(-colour, spec.r)))
            return std::nullopt;

        SearchState next = state;
        next._prefix.push_back(colour);
        next._snapshots.push_back(state.reach());
        next._snapshots.back().add_value(position, colour);
        return next;
    }

    auto find_free_coloring(int n, const ProblemSpec & spec, const SearchConfig & cfg) -> SearchResult
    {
        auto started = Clock::now();
        if (n < 0)
            throw ParameterError{"n must be non-negative"};
        if (cfg.threads < 1)
            throw ParameterError{"threads must be at least 1"};

        Shared shared;
        shared.max_nodes = cfg.max_nodes;
        shared.deterministic = cfg.deterministic;
        if (cfg.timeout)
            shared.deadline = started + std::chrono::duration_cast<Clock::duration>(*cfg.timeout);

        SearchResult result{SearchOutcome::Exhausted, std::nullopt, {}};
        auto finish = [&] () -> SearchResult {
            if (! result.coloring && shared.out_of_budget)
                result.outcome = SearchOutcome::BudgetExhausted;
            result.stats.elapsed = Clock::now() - started;
            return result;
        };

        if (cfg.threads == 1 || n <= 1) {
            Worker worker{spec, n, cfg, shared};
            if (worker.search(0, false)) {
                result.outcome = SearchOutcome::Found;
                result.coloring = Coloring{spec.r, worker.colouring()};
            }
            result.stats = worker.stats;
            return finish();
        }

        int split = cfg.split_depth > 0 ? std::min(cfg.split_depth, n) : default_split(n, spec);
        vector<vector<int>> tasks;
        {
            Worker frontier{spec, n, cfg, shared};
            (void) frontier.search(0, false, split, &tasks);
            result.stats = frontier.stats;
            if (shared.out_of_budget)
                return finish();
        }

        vector<optional<vector<int>>> found(tasks.size());
        std::atomic<std::size_t> next{0};
        std::mutex stats_mutex;

        auto work = [&] () {
            Worker worker{spec, n, cfg, shared};
            while (true) {
                auto index = next.fetch_add(1);
                if (index >= tasks.size() || shared.out_of_budget)
                    break;
                auto best = shared.best_task.load();
                if (cfg.deterministic ? best < index : best != no_task)
                    break;

                bool nonzero = worker.load(tasks[index], index);
                if (worker.search(split, nonzero)) {
                    found[index] = worker.colouring();
                    auto current = shared.best_task.load();
                    while (index < current && ! shared.best_task.compare_exchange_weak(current, index))
                        ;
                }
            }
            std::lock_guard lock{stats_mutex};
            result.stats += worker.stats;
        };

        vector<std::thread> pool;
        for (unsigned t = 0 ; t < cfg.threads ; ++t)
            pool.emplace_back(work);
        for (auto & t : pool)
            t.join();

        auto best = shared.best_task.load();
        if (best != no_task) {
            result.outcome = SearchOutcome::Found;
            result.coloring = Coloring{spec.r, *found[best]};
        }
        return finish();
    }

    auto solve_exact(const ProblemSpec & spec, const SearchConfig & cfg) -> ExactResult
    {
        auto started = Clock::now();
        ExactResult result;

        if (! spec.r_divides_k()) {
            result.status = ExactStatus::Infinite;
            result.value = result.lower = result.upper = Extended::infinity();
            return result;
        }

        auto report = theoretical_bounds(spec.k, spec.r, spec.palette);

        // nothing of length k - 2 can contain a target
        Coloring best = Coloring::constant(spec.k - 2, spec.r, 0);
        if (spec.palette == Palette::Full) {
            try {
                auto built = construct_lower_bound(spec.k, spec.r);
                if (built.n() > best.n() && is_solution_free(built, spec))
                    best = built;
            }
            catch (const ContradictionError &) {
            }
        }

        auto stop = [&] (ExactStatus status) -> ExactResult {
            result.status = status;
            result.lower = best.n() + 1;
            result.certificate = best;
            if (status == ExactStatus::Exact) {
                result.value = result.upper = best.n() + 1;
            }
            else {
                result.value = result.lower;
                result.upper = report.upper;
            }
            result.stats.elapsed = Clock::now() - started;
            return result;
        };

        for (int n = best.n() + 1 ; ; ++n) {
            auto step = cfg;
            if (cfg.max_nodes) {
                if (result.stats.nodes >= *cfg.max_nodes)
                    return stop(ExactStatus::BudgetExhausted);
                step.max_nodes = *cfg.max_nodes - result.stats.nodes;
            }
            if (cfg.timeout) {
                auto left = *cfg.timeout - std::chrono::duration<double>(Clock::now() - started);
                if (left.count() <= 0)
                    return stop(ExactStatus::BudgetExhausted);
                step.timeout = left;
            }

            auto found = find_free_coloring(n, spec, step);
            result.stats += found.stats;

            switch (found.outcome) {
                case SearchOutcome::Found:
                    best = *found.coloring;
                    break;
                case SearchOutcome::Exhausted:
                    return stop(ExactStatus::Exact);
                case SearchOutcome::BudgetExhausted:
                    return stop(ExactStatus::BudgetExhausted);
            }
        }
    }
}
