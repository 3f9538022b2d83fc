/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <zsschur/bounds.hh>
#include <zsschur/checker.hh>
#include <zsschur/constructions.hh>
#include <zsschur/solver.hh>
#include <zsschur/text_format.hh>
#include <zsschur/verify.hh>

#include <chrono>
#include <ostream>
#include <random>
#include <sstream>

using std::string;
using std::vector;

namespace zsschur
{
    auto parse_suite(const string & s) -> Suite
    {
        if (s == "small")
            return Suite::Small;
        if (s == "paper")
            return Suite::Paper;
        throw ParameterError{"unknown suite '" + s + "' (expected small or paper)"};
    }

    auto criterion_status_name(CriterionStatus s) -> string
    {
        switch (s) {
            case CriterionStatus::Pass:   return "PASS";
            case CriterionStatus::Fail:   return "FAIL";
            case CriterionStatus::Budget: return "BUDGET";
        }
        return "UNKNOWN";
    }

    namespace
    {
        using Clock = std::chrono::steady_clock;

        auto seconds_since(Clock::time_point t) -> double
        {
            return std::chrono::duration<double>(Clock::now() - t).count();
        }

        struct Certified
        {
            Coloring coloring;
            ProblemSpec spec;
        };

        /// State carried between criteria.
        struct Context
        {
            const VerifyOptions & options;
            std::mt19937_64 rng;
            vector<Certified> certificates;
        };

        /// Recolours the last position that can gain a witness.
        auto inject_fault(const Coloring & chi, const ProblemSpec & spec) -> Coloring
        {
            for (int m = chi.n() ; m >= 1 ; --m)
                for (int c : spec.colours())
                    if (c != chi(m)) {
                        auto flipped = chi.with(m, c);
                        if (! is_solution_free(flipped, spec))
                            return flipped;
                    }
            return chi;
        }

        /// The constructions grid: odd r in {3,5,7,9}, even r in {2,4,6,8},
        /// k in {2r, 3r}. The first entry absorbs an injected fault.
        auto construction_grid(Context & ctx) -> vector<std::pair<ProblemSpec, Coloring>>
        {
            vector<std::pair<ProblemSpec, Coloring>> grid;
            for (int r : {3, 5, 7, 9, 2, 4, 6, 8})
                for (int k : {2 * r, 3 * r}) {
                    auto spec = ProblemSpec::make(k, r);
                    auto chi = construct_lower_bound(k, r);
                    if (ctx.options.inject_fault && grid.empty())
                        chi = inject_fault(chi, spec);
                    grid.emplace_back(spec, std::move(chi));
                }
            return grid;
        }

        auto exact_small_values(Context & ctx) -> CriterionResult
        {
            struct Case { int k, r; Palette palette; long long expected; double limit; std::uint64_t node_limit; };
            const vector<Case> cases{
                {4, 2, Palette::Full, 5, 1.0, 5'000'000},
                {6, 2, Palette::Full, 9, 1.0, 5'000'000},
                {6, 3, Palette::Full, 15, 300.0, 5'000'000},
                {8, 4, Palette::Binary, 25, 600.0, 50'000'000}
            };

            std::ostringstream detail;
            bool ok = true;
            for (auto & c : cases) {
                auto spec = ProblemSpec::make(c.k, c.r, c.palette);
                SearchConfig cfg;
                cfg.deterministic = true;
                cfg.max_nodes = c.node_limit;

                auto t = Clock::now();
                auto result = solve_exact(spec, cfg);
                double took = seconds_since(t);

                bool good = result.status == ExactStatus::Exact && result.value == Extended{c.expected}
                    && took < c.limit && result.certificate && result.certificate->n() == c.expected - 1
                    && is_solution_free(*result.certificate, spec);
                ok = ok && good;
                if (result.certificate)
                    ctx.certificates.push_back({*result.certificate, spec});

                detail << "(" << c.k << "," << c.r << "," << palette_name(c.palette) << ")="
                    << result.value.to_string() << (good ? "" : "[expected " + std::to_string(c.expected) + "]")
                    << " nodes=" << result.stats.nodes << " ";
            }
            return {"1", "exact-small-values", ok ? CriterionStatus::Pass : CriterionStatus::Fail, detail.str(), 0};
        }

        auto construction_certificates(Context & ctx) -> CriterionResult
        {
            std::ostringstream detail;
            bool ok = true;
            double slowest = 0.0;
            int count = 0;
            for (auto & [spec, chi] : construction_grid(ctx)) {
                auto t = Clock::now();
                auto witness = find_zero_sum_solution(chi, spec);
                double took = seconds_since(t);
                slowest = std::max(slowest, took);
                ++count;

                bool good = ! witness && chi.n() == construction_length(spec.k, spec.r) && took < 2.0;
                if (good)
                    ctx.certificates.push_back({chi, spec});
                else {
                    ok = false;
                    detail << "(k=" << spec.k << ",r=" << spec.r << ") ";
                    if (witness)
                        detail << format_witness(*witness) << ' ';
                }
            }
            detail << count << " colourings checked, slowest " << slowest << "s";
            return {"2", "construction-certificates", ok ? CriterionStatus::Pass : CriterionStatus::Fail, detail.str(), 0};
        }

        auto property_conformance(Context & ctx) -> CriterionResult
        {
            std::ostringstream detail;
            std::size_t violations = 0, boundary_clashes = 0;

            for (auto & [spec, chi] : construction_grid(ctx)) {
                auto found = property_violations(chi, spec.k);
                if (! found.empty() && violations == 0)
                    detail << "(k=" << spec.k << ",r=" << spec.r << ") m=" << found.front().m
                        << " alpha=" << found.front().alpha << " " << found.front().rule << " ";
                violations += found.size();

                int r = spec.r, k = spec.k;
                int step = r % 2 == 1 ? 2 : 1;
                int top = r % 2 == 1 ? r - 1 : r - 2;
                for (int alpha = 1 ; alpha <= top ; ++alpha) {
                    int m = alpha * (k - 1);
                    if (ResidueSet::progression(m, step, alpha, r) == ResidueSet::progression(-m, -step, alpha, r))
                        ++boundary_clashes;
                }
            }

            detail << "violations=" << violations << " boundary-clashes=" << boundary_clashes;
            bool ok = violations == 0 && boundary_clashes == 0;
            return {"3", "property-conformance", ok ? CriterionStatus::Pass : CriterionStatus::Fail, detail.str(), 0};
        }

        auto random_coloring(std::mt19937_64 & rng, int n, int r) -> Coloring
        {
            std::uniform_int_distribution<int> colour(0, r - 1);
            vector<int> v(n);
            for (auto & x : v)
                x = colour(rng);
            return Coloring{r, std::move(v)};
        }

        auto oracle_equivalence(Context & ctx) -> CriterionResult
        {
            std::uniform_int_distribution<int> pick_n(1, 12), pick3(0, 2);
            int agree = 0, with_witness = 0;
            const int trials = 1000;
            for (int i = 0 ; i < trials ; ++i) {
                int k = 3 + pick3(ctx.rng), r = 2 + pick3(ctx.rng);
                auto spec = ProblemSpec::make(k, r);
                auto chi = random_coloring(ctx.rng, pick_n(ctx.rng), r);
                auto fast = find_zero_sum_solution(chi, spec);
                auto slow = brute_force_oracle(chi, spec);
                if (fast.has_value() == slow.has_value() && fast == slow && (! fast || validate_witness(*fast, chi, spec)))
                    ++agree;
                with_witness += slow.has_value();
            }
            std::ostringstream detail;
            detail << agree << "/" << trials << " agree (" << with_witness << " with a witness)";
            return {"4", "oracle-equivalence", agree == trials ? CriterionStatus::Pass : CriterionStatus::Fail, detail.str(), 0};
        }

        /// Half uniform, half lightly perturbed prefixes of the lower-bound
        /// constructions, so that both verdicts turn up. Uniform only when r
        /// does not divide k, where the constructions do not exist.
        auto mixed_coloring(std::mt19937_64 & rng, const ProblemSpec & spec) -> Coloring
        {
            if (! spec.r_divides_k() || std::uniform_int_distribution<int>(0, 1)(rng) == 0)
                return random_coloring(rng, std::uniform_int_distribution<int>(1, 3 * spec.k)(rng), spec.r);

            auto base = construct_lower_bound(spec.k, spec.r);
            auto chi = base.restricted(std::uniform_int_distribution<int>(1, base.n())(rng));
            int flips = std::uniform_int_distribution<int>(0, 2)(rng);
            for (int f = 0 ; f < flips ; ++f)
                chi = chi.with(std::uniform_int_distribution<int>(1, chi.n())(rng),
                        std::uniform_int_distribution<int>(0, spec.r - 1)(rng));
            return chi;
        }

        auto invariance_suite(Context & ctx) -> CriterionResult
        {
            const vector<std::pair<int, int>> divisible{{4, 2}, {6, 2}, {6, 3}, {9, 3}, {8, 4}, {4, 4}, {10, 5}, {12, 6}};
            const vector<std::pair<int, int>> any{{4, 2}, {5, 2}, {6, 3}, {5, 3}, {8, 4}, {6, 4}, {10, 5}, {7, 5}, {12, 6}, {9, 6}};
            std::uniform_int_distribution<std::size_t> pick_div(0, divisible.size() - 1), pick_any(0, any.size() - 1);

            int translation_bad = 0, unit_bad = 0, restriction_bad = 0, free_seen = 0;
            for (int i = 0 ; i < 200 ; ++i) {
                auto [k, r] = divisible[pick_div(ctx.rng)];
                auto spec = ProblemSpec::make(k, r);
                auto chi = mixed_coloring(ctx.rng, spec);
                int c = std::uniform_int_distribution<int>(1, r - 1)(ctx.rng);
                bool free = is_solution_free(chi, spec);
                free_seen += free;
                if (free != is_solution_free(chi.translated(c), spec))
                    ++translation_bad;
            }
            for (int i = 0 ; i < 200 ; ++i) {
                auto [k, r] = any[pick_any(ctx.rng)];
                auto spec = ProblemSpec::make(k, r);
                auto chi = mixed_coloring(ctx.rng, spec);
                bool free = is_solution_free(chi, spec);
                free_seen += free;
                for (int u = 1 ; u < r ; ++u)
                    if (is_unit(u, r) && free != is_solution_free(chi.scaled(u), spec))
                        ++unit_bad;
            }
            for (auto & cert : ctx.certificates)
                for (int m = 0 ; m <= cert.coloring.n() ; ++m)
                    if (! is_solution_free(cert.coloring.restricted(m), cert.spec))
                        ++restriction_bad;

            std::ostringstream detail;
            detail << "translation-violations=" << translation_bad << " unit-violations=" << unit_bad
                << " restriction-violations=" << restriction_bad << " (" << free_seen << "/400 samples free, "
                << ctx.certificates.size() << " certificates)";
            bool ok = translation_bad == 0 && unit_bad == 0 && restriction_bad == 0;
            return {"5", "invariance-suite", ok ? CriterionStatus::Pass : CriterionStatus::Fail, detail.str(), 0};
        }

        auto bounds_table(Context & ctx) -> CriterionResult
        {
            std::ostringstream detail;
            bool ok = true;
            auto expect = [&] (int k, int r, Palette p, Extended lower, Extended upper, bool exact) {
                auto b = theoretical_bounds(k, r, p);
                bool good = b.lower == lower && b.upper == upper && b.exact == exact;
                ok = ok && good;
                detail << "(" << k << "," << r << "," << palette_name(p) << ")=[" << b.lower.to_string() << ","
                    << b.upper.to_string() << "]" << (good ? " " : "! ");
            };
            expect(10, 5, Palette::Full, 45, 45, true);
            expect(12, 6, Palette::Full, 65, 68, false);
            expect(5, 3, Palette::Full, Extended::infinity(), Extended::infinity(), true);
            expect(8, 4, Palette::Binary, 25, 25, true);

            std::uniform_int_distribution<int> size(1, 6), value(2, 20);
            int psum_bad = 0;
            for (int i = 0 ; i < 10'000 ; ++i) {
                long long sum = 0, product = 1;
                for (int j = 0, j_end = size(ctx.rng) ; j < j_end ; ++j) {
                    int x = value(ctx.rng);
                    sum += x - 1;
                    product *= x;
                }
                psum_bad += sum > product;
            }
            detail << "psum-violations=" << psum_bad << "/10000";
            ok = ok && psum_bad == 0;
            return {"6", "bounds-table", ok ? CriterionStatus::Pass : CriterionStatus::Fail, detail.str(), 0};
        }

        auto performance(Context & ctx) -> CriterionResult
        {
            auto spec = ProblemSpec::make(50, 10);

            // a free prefix of length 488 forces the scan almost to the end
            auto base = construct_even(50, 10);
            vector<int> padded(base.values().begin(), base.values().end());
            padded.resize(500, 0);
            Coloring late{10, padded};
            auto uniform = random_coloring(ctx.rng, 500, 10);

            auto t = Clock::now();
            auto late_witness = find_zero_sum_solution(late, spec);
            double late_took = seconds_since(t);
            t = Clock::now();
            auto uniform_witness = find_zero_sum_solution(uniform, spec);
            double uniform_took = seconds_since(t);

            std::ostringstream detail;
            detail << "late-witness " << late_took << "s target=" << (late_witness ? late_witness->target : 0)
                << ", uniform " << uniform_took << "s";
            bool ok = late_took < 2.0 && uniform_took < 2.0
                && late_witness && validate_witness(*late_witness, late, spec)
                && (! uniform_witness || validate_witness(*uniform_witness, uniform, spec));
            return {"7", "performance", ok ? CriterionStatus::Pass : CriterionStatus::Fail, detail.str(), 0};
        }

        auto extended_certificate(Context & ctx) -> CriterionResult
        {
            auto spec = ProblemSpec::make(8, 4);
            auto chi = construct_even(8, 4);
            bool ok = chi.n() == 26 && is_solution_free(chi, spec) && ! brute_force_oracle(chi, spec);
            if (ok)
                ctx.certificates.push_back({chi, spec});
            return {"8a", "s84-certificate", ok ? CriterionStatus::Pass : CriterionStatus::Fail,
                "free colouring of [1..26] for k=8 r=4", 0};
        }

        auto extended_exhaustion(Context & ctx) -> CriterionResult
        {
            auto spec = ProblemSpec::make(8, 4);
            SearchConfig cfg;
            cfg.max_nodes = ctx.options.extended_max_nodes;
            if (ctx.options.extended_timeout_seconds)
                cfg.timeout = std::chrono::duration<double>(*ctx.options.extended_timeout_seconds);
            auto result = find_free_coloring(27, spec, cfg);

            std::ostringstream detail;
            detail << "n=27 nodes=" << result.stats.nodes << " prunes=" << result.stats.prunes;
            switch (result.outcome) {
                case SearchOutcome::Exhausted:
                    return {"8b", "s84-exhaustion", CriterionStatus::Pass, detail.str() + " no free colouring, S_z(8,4)=27", 0};
                case SearchOutcome::BudgetExhausted:
                    return {"8b", "s84-exhaustion", CriterionStatus::Budget, detail.str() + " budget exhausted", 0};
                case SearchOutcome::Found:
                    break;
            }
            std::ostringstream bad;
            write_coloring(bad, *result.coloring, 8);
            return {"8b", "s84-exhaustion", CriterionStatus::Fail, detail.str() + " unexpected free colouring: " + bad.str(), 0};
        }
    }

    auto run_criteria(const VerifyOptions & options, const std::function<void (const CriterionResult &)> & report)
        -> vector<CriterionResult>
    {
        Context ctx{options, std::mt19937_64{options.seed}, {}};

        struct Criterion { string id; CriterionResult (* run)(Context &); };
        vector<Criterion> criteria{
            {"1", exact_small_values},
            {"2", construction_certificates},
            {"3", property_conformance},
            {"4", oracle_equivalence},
            {"5", invariance_suite},
            {"6", bounds_table},
            {"7", performance},
            {"8a", extended_certificate}
        };
        if (options.suite == Suite::Paper)
            criteria.push_back({"8b", extended_exhaustion});

        vector<CriterionResult> results;
        for (auto criterion : criteria) {
            auto t = Clock::now();
            CriterionResult result;
            try {
                result = criterion.run(ctx);
            }
            catch (const std::exception & e) {
                result = {criterion.id, "exception", CriterionStatus::Fail, e.what(), 0};
            }
            result.seconds = seconds_since(t);
            report(result);
            results.push_back(std::move(result));
        }
        return results;
    }

    auto run_verify(const VerifyOptions & options, std::ostream & out) -> int
    {
        int passed = 0, failed = 0, budget = 0;
        run_criteria(options, [&] (const CriterionResult & r) {
            out << criterion_status_name(r.status) << " [" << r.id << "] " << r.name << ": " << r.detail
                << " (" << r.seconds << "s)\n" << std::flush;
            passed += r.status == CriterionStatus::Pass;
            failed += r.status == CriterionStatus::Fail;
            budget += r.status == CriterionStatus::Budget;
        });
        out << "passed=" << passed << " failed=" << failed << " budget=" << budget << '\n';
        return failed > 0 ? 1 : budget > 0 ? 3 : 0;
    }
}
