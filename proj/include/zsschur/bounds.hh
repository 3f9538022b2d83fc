/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ZSSCHUR_GUARD_ZSSCHUR_BOUNDS_HH
#define ZSSCHUR_GUARD_ZSSCHUR_BOUNDS_HH 1

#include <zsschur/core.hh>

#include <string>
#include <vector>

namespace zsschur
{
    /// Prime factors of r with multiplicity, ascending.
    struct PrimeFactors
    {
        std::vector<int> factors;

        [[nodiscard]] auto count() const -> int { return static_cast<int>(factors.size()); }

        /// sum over factors of (p - 1)
        [[nodiscard]] auto excess() const -> int;
    };

    /// Trial division. Throws ParameterError for r < 2.
    [[nodiscard]] auto factorize(int r) -> PrimeFactors;

    [[nodiscard]] auto is_prime(int r) -> bool;

    enum class BoundKind
    {
        Lower,
        Upper,
        Exact
    };

    auto bound_kind_name(BoundKind) -> std::string;

    struct BoundEntry
    {
        BoundKind kind;
        Extended value;
        std::string provenance;
    };

    struct BoundsReport
    {
        Extended lower = 0;
        Extended upper = Extended::infinity();
        bool exact = false;
        std::vector<BoundEntry> entries;
    };

    /**
     * Every theorem-backed bound on S_z(k, r) (Full) or the two-colour variant
     * (Binary). Each entry fires only when its hypotheses hold exactly; lower
     * is the largest lower/exact entry, upper the smallest upper/exact entry.
     * Throws ParameterError unless k >= 3 and r >= 2.
     */
    [[nodiscard]] auto theoretical_bounds(int k, int r, Palette variant = Palette::Full) -> BoundsReport;

    /// `<kind> <value|inf> <provenance>` per entry, then
    /// `lower=<..> upper=<..> exact=<bool>`.
    [[nodiscard]] auto format_bounds(const BoundsReport &) -> std::string;
}

#endif
