#include <doctest.h>

#include <zsschur/bounds.hh>
#include <zsschur/checker.hh>
#include <zsschur/constructions.hh>
#include <zsschur/solver.hh>

#include <optional>
#include <tuple>

using namespace zsschur;

namespace
{
    /// Every colouring of [1..n] over the spec's palette, in lexicographic
    /// order; stops early when visit returns true.
    template <typename Visit_>
    auto enumerate_all(int n, const ProblemSpec & spec, Visit_ visit) -> void
    {
        int base = static_cast<int>(spec.colours().size());
        std::vector<int> v(n, 0);
        while (true) {
            if (visit(Coloring{spec.r, v}))
                return;
            int i = n - 1;
            while (i >= 0 && v[i] == base - 1)
                v[i--] = 0;
            if (i < 0)
                return;
            ++v[i];
        }
    }

    auto any_free_unreduced(int n, const ProblemSpec & spec) -> bool
    {
        bool found = false;
        enumerate_all(n, spec, [&] (const Coloring & chi) {
            found = ! brute_force_oracle(chi, spec).has_value();
            return found;
        });
        return found;
    }

    /// chi(1) = 0 and the first nonzero colour least in its unit orbit.
    auto is_canonical(const Coloring & chi) -> bool
    {
        int r = chi.r();
        if (chi.n() > 0 && chi(1) != 0)
            return false;
        for (int m = 1 ; m <= chi.n() ; ++m)
            if (chi(m) != 0) {
                for (int u = 1 ; u < r ; ++u)
                    if (is_unit(u, r) && reduce(static_cast<long long>(u) * chi(m), r) < chi(m))
                        return false;
                return true;
            }
        return true;
    }

    auto least_free_canonical(int n, const ProblemSpec & spec) -> std::optional<Coloring>
    {
        std::optional<Coloring> result;
        enumerate_all(n, spec, [&] (const Coloring & chi) {
            if ((spec.palette == Palette::Binary ? chi.n() == 0 || chi(1) == 0 : is_canonical(chi)) && is_solution_free(chi, spec))
                result = chi;
            return result.has_value();
        });
        return result;
    }
}

TEST_CASE("extend_check examples")
{
    auto spec = ProblemSpec::make(4, 2);
    auto empty = SearchState::initial(spec, 10);
    for (int c : spec.colours())
        CHECK(extend_check(empty, c).has_value());

    auto state = SearchState::initial(spec, 10);
    for (int m = 1 ; m <= spec.k - 2 ; ++m) {
        auto next = extend_check(state, 0);
        REQUIRE(next);
        state = *next;
    }
    CHECK_FALSE(extend_check(state, 0).has_value());

    auto prefix = SearchState::initial(spec, 10);
    for (int c : {1, 0, 0})
        prefix = *extend_check(prefix, c);
    auto done = extend_check(prefix, 1);
    REQUIRE(done);
    CHECK(done->prefix() == Coloring{2, {1, 0, 0, 1}});
    CHECK_FALSE(extend_check(prefix, 0).has_value());
}

TEST_CASE("extend_check errors")
{
    auto spec = ProblemSpec::make(4, 2, Palette::Full);
    auto tiny = SearchState::initial(spec, 1);
    CHECK_THROWS_AS((void) extend_check(tiny, 2), ParameterError);
    auto full = *extend_check(tiny, 0);
    CHECK_THROWS_AS((void) extend_check(full, 0), ParameterError);

    auto binary = SearchState::initial(ProblemSpec::make(6, 3, Palette::Binary), 5);
    CHECK_THROWS_AS((void) extend_check(binary, 2), ParameterError);
}

TEST_CASE("extend_check agrees with the checker")
{
    // every accepted extension keeps the prefix free; every rejected one
    // completes a witness whose target is the new position
    auto spec = ProblemSpec::make(6, 3);
    auto chi = construct_odd(6, 3);
    auto state = SearchState::initial(spec, 15);
    for (int m = 1 ; m <= 14 ; ++m) {
        for (int c : spec.colours()) {
            auto next = extend_check(state, c);
            auto candidate = Coloring{3, [&] {
                auto v = std::vector<int>(chi.values().begin(), chi.values().begin() + m - 1);
                v.push_back(c);
                return v;
            }()};
            CHECK(next.has_value() == is_solution_free(candidate, spec));
        }
        state = *extend_check(state, chi(m));
    }
}

TEST_CASE("find_free_coloring examples")
{
    for (auto [k, r] : {std::pair{4, 2}, {6, 3}, {5, 3}, {8, 4}}) {
        auto spec = ProblemSpec::make(k, r);
        auto result = find_free_coloring(k - 2, spec);
        REQUIRE(result.outcome == SearchOutcome::Found);
        CHECK(*result.coloring == Coloring::constant(k - 2, r, 0));
    }

    auto spec = ProblemSpec::make(6, 3);
    auto at14 = find_free_coloring(14, spec);
    REQUIRE(at14.outcome == SearchOutcome::Found);
    CHECK(at14.coloring->n() == 14);
    CHECK(is_solution_free(*at14.coloring, spec));

    auto at15 = find_free_coloring(15, spec);
    CHECK(at15.outcome == SearchOutcome::Exhausted);
    CHECK_FALSE(at15.coloring);

    CHECK(find_free_coloring(0, spec).outcome == SearchOutcome::Found);
    CHECK_THROWS_AS((void) find_free_coloring(-1, spec), ParameterError);
}

TEST_CASE("solve_exact examples")
{
    auto a = solve_exact(ProblemSpec::make(4, 2));
    CHECK(a.status == ExactStatus::Exact);
    CHECK(a.value == Extended{5});
    REQUIRE(a.certificate);
    CHECK(a.certificate->n() == 4);
    CHECK(is_solution_free(*a.certificate, ProblemSpec::make(4, 2)));

    auto b = solve_exact(ProblemSpec::make(6, 3));
    CHECK(b.status == ExactStatus::Exact);
    CHECK(b.value == Extended{15});

    auto c = solve_exact(ProblemSpec::make(8, 4, Palette::Binary));
    CHECK(c.status == ExactStatus::Exact);
    CHECK(c.value == Extended{25});
    REQUIRE(c.certificate);
    for (int x : c.certificate->values())
        CHECK((x == 0 || x == 1));

    auto d = solve_exact(ProblemSpec::make(5, 3));
    CHECK(d.status == ExactStatus::Infinite);
    CHECK(d.value.is_infinite());
    CHECK_FALSE(d.certificate);

    CHECK(solve_exact(ProblemSpec::make(9, 2, Palette::Binary)).status == ExactStatus::Infinite);
}

TEST_CASE("exact values match the closed forms")
{
    struct Case { int k, r; Palette palette; };
    for (auto c : std::vector<Case>{
            {4, 2, Palette::Full}, {6, 2, Palette::Full}, {8, 2, Palette::Full}, {10, 2, Palette::Full},
            {6, 3, Palette::Full}, {9, 3, Palette::Full}, {12, 3, Palette::Full},
            {8, 4, Palette::Full}, {12, 4, Palette::Full},
            {10, 5, Palette::Full},
            {4, 2, Palette::Binary}, {6, 3, Palette::Binary}, {9, 3, Palette::Binary},
            {8, 4, Palette::Binary}, {10, 5, Palette::Binary}}) {
        CAPTURE(c.k);
        CAPTURE(c.r);
        auto spec = ProblemSpec::make(c.k, c.r, c.palette);
        auto bounds = theoretical_bounds(c.k, c.r, c.palette);
        REQUIRE(bounds.exact);

        SearchConfig cfg;
        cfg.max_nodes = 10'000'000;
        auto result = solve_exact(spec, cfg);
        REQUIRE(result.status == ExactStatus::Exact);
        CHECK(result.value == bounds.lower);
        REQUIRE(result.certificate);
        CHECK(is_solution_free(*result.certificate, spec));
        if (result.certificate->n() <= 12)
            CHECK_FALSE(brute_force_oracle(*result.certificate, spec));
        for (int m = 0 ; m <= result.certificate->n() ; ++m)
            CHECK(is_solution_free(result.certificate->restricted(m), spec));
    }
}

TEST_CASE("small cases with no closed form")
{
    // only consistency with the bounds can be asserted here
    for (auto [k, r] : {std::pair{3, 3}, {4, 4}}) {
        auto spec = ProblemSpec::make(k, r);
        auto result = solve_exact(spec);
        REQUIRE(result.status == ExactStatus::Exact);
        auto bounds = theoretical_bounds(k, r);
        CHECK(bounds.lower <= result.value);
        CHECK(result.value <= bounds.upper);
    }
}

TEST_CASE("symmetry reduction loses no free colouring")
{
    for (auto [k, r] : {std::pair{4, 2}, {6, 2}, {3, 3}, {6, 3}, {4, 4}, {8, 4}})
        for (int n = 0 ; n <= (r == 4 ? 7 : 8) ; ++n) {
            CAPTURE(k);
            CAPTURE(r);
            CAPTURE(n);
            auto spec = ProblemSpec::make(k, r);
            auto reduced = find_free_coloring(n, spec);
            CHECK((reduced.outcome == SearchOutcome::Found) == any_free_unreduced(n, spec));
        }
}

TEST_CASE("deterministic search returns the least canonical free colouring")
{
    for (auto [k, r, palette] : {std::tuple{4, 2, Palette::Full}, {3, 3, Palette::Full}, {6, 3, Palette::Full},
                                 {4, 4, Palette::Full}, {6, 3, Palette::Binary}, {8, 4, Palette::Binary}})
        for (int n : {3, 5, 7}) {
            CAPTURE(k);
            CAPTURE(r);
            CAPTURE(n);
            auto spec = ProblemSpec::make(k, r, palette);
            auto expected = least_free_canonical(n, spec);
            for (unsigned threads : {1u, 2u, 3u}) {
                SearchConfig cfg;
                cfg.deterministic = true;
                cfg.threads = threads;
                cfg.split_depth = 2;
                auto result = find_free_coloring(n, spec, cfg);
                CHECK(result.coloring == expected);
            }
        }
}

TEST_CASE("pruning never changes the verdict")
{
    for (auto [k, r] : {std::pair{4, 2}, {6, 2}, {3, 3}, {6, 3}, {4, 4}})
        for (int n = 1 ; n <= 12 ; ++n) {
            auto spec = ProblemSpec::make(k, r);
            std::optional<Coloring> reference;
            std::uint64_t previous_nodes = 0;
            bool first = true;
            for (auto pruning : {Pruning::LeafOnly, Pruning::Incremental, Pruning::Lookahead}) {
                SearchConfig cfg;
                cfg.deterministic = true;
                cfg.pruning = pruning;
                auto result = find_free_coloring(n, spec, cfg);
                REQUIRE(result.outcome != SearchOutcome::BudgetExhausted);
                if (first)
                    reference = result.coloring;
                else {
                    CHECK(result.coloring == reference);
                    CHECK(result.stats.nodes <= previous_nodes);
                }
                previous_nodes = result.stats.nodes;
                first = false;
            }
        }
}

TEST_CASE("value is independent of the thread count")
{
    for (auto [k, r, palette] : {std::tuple{6, 3, Palette::Full}, {8, 4, Palette::Full}, {8, 4, Palette::Binary}, {12, 4, Palette::Full}})
        for (unsigned threads : {1u, 2u, 4u}) {
            SearchConfig cfg;
            cfg.threads = threads;
            auto result = solve_exact(ProblemSpec::make(k, r, palette), cfg);
            CHECK(result.status == ExactStatus::Exact);
            CHECK(result.value == theoretical_bounds(k, r, palette).lower);
        }

    // exhaustion through the thread pool
    SearchConfig cfg;
    cfg.threads = 3;
    CHECK(find_free_coloring(27, ProblemSpec::make(8, 4), cfg).outcome == SearchOutcome::Exhausted);
}

TEST_CASE("budgets")
{
    auto spec = ProblemSpec::make(8, 4);

    SearchConfig tight;
    tight.max_nodes = 10;
    auto search = find_free_coloring(27, spec, tight);
    CHECK(search.outcome == SearchOutcome::BudgetExhausted);
    CHECK(search.stats.nodes <= 11);

    auto solve = solve_exact(spec, tight);
    CHECK(solve.status == ExactStatus::BudgetExhausted);
    CHECK(solve.lower == Extended{27});
    CHECK(solve.upper == Extended{27});
    REQUIRE(solve.certificate);
    CHECK(solve.certificate->n() == 26);
    CHECK(is_solution_free(*solve.certificate, spec));

    // (12, 6) is open between 65 and 68
    SearchConfig hard;
    hard.max_nodes = 20'000;
    auto open = solve_exact(ProblemSpec::make(12, 6), hard);
    CHECK(open.status == ExactStatus::BudgetExhausted);
    CHECK(open.lower == Extended{65});
    CHECK(open.upper == Extended{68});

    SearchConfig timed;
    timed.timeout = std::chrono::duration<double>(0.05);
    timed.threads = 2;
    auto slow = solve_exact(ProblemSpec::make(12, 6), timed);
    CHECK(slow.status == ExactStatus::BudgetExhausted);
}
