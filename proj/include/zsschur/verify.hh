/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ZSSCHUR_GUARD_ZSSCHUR_VERIFY_HH
#define ZSSCHUR_GUARD_ZSSCHUR_VERIFY_HH 1

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace zsschur
{
    enum class Suite
    {
        Small,  ///< everything that finishes in well under a minute
        Paper   ///< Small plus the budgeted exhaustive S_z(8,4) search
    };

    auto parse_suite(const std::string &) -> Suite;

    enum class CriterionStatus
    {
        Pass,
        Fail,
        Budget
    };

    auto criterion_status_name(CriterionStatus) -> std::string;

    struct CriterionResult
    {
        std::string id;
        std::string name;
        CriterionStatus status;
        std::string detail;
        double seconds = 0.0;
    };

    struct VerifyOptions
    {
        Suite suite = Suite::Small;

        /// Node budget for the extended exhaustive search.
        std::uint64_t extended_max_nodes = 500'000'000;
        std::optional<double> extended_timeout_seconds;

        /// Flip one residue of the first lower-bound construction so that it
        /// gains a witness; the construction criteria must then fail.
        bool inject_fault = false;

        std::uint64_t seed = 0x5eed'2018;
    };

    /// Runs the suite, calling report after each criterion.
    auto run_criteria(const VerifyOptions &, const std::function<void (const CriterionResult &)> & report)
        -> std::vector<CriterionResult>;

    /// One `PASS|FAIL|BUDGET [id] name: detail` line per criterion, then a
    /// summary. Returns 0 if all pass, 1 on any failure, else 3 if a budget
    /// ran out.
    auto run_verify(const VerifyOptions &, std::ostream & out) -> int;
}

#endif
