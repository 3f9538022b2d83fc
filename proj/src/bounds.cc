/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <zsschur/bounds.hh>

#include <algorithm>
#include <sstream>

using std::string;
using std::vector;

namespace zsschur
{
    auto PrimeFactors::excess() const -> int
    {
        int total = 0;
        for (int p : factors)
            total += p - 1;
        return total;
    }

    auto factorize(int r) -> PrimeFactors
    {
        if (r < 2)
            throw ParameterError{"cannot factorize " + std::to_string(r)};
        PrimeFactors result;
        for (int p = 2 ; p * p <= r ; ++p)
            while (r % p == 0) {
                result.factors.push_back(p);
                r /= p;
            }
        if (r > 1)
            result.factors.push_back(r);
        return result;
    }

    auto is_prime(int r) -> bool
    {
        return r >= 2 && factorize(r).count() == 1;
    }

    auto bound_kind_name(BoundKind kind) -> string
    {
        switch (kind) {
            case BoundKind::Lower: return "lower";
            case BoundKind::Upper: return "upper";
            case BoundKind::Exact: return "exact";
        }
        return "unknown";
    }

    auto theoretical_bounds(int k, int r, Palette variant) -> BoundsReport
    {
        auto spec = ProblemSpec::make(k, r, variant);
        const long long kk = k, rr = r;

        BoundsReport report;
        auto add = [&] (BoundKind kind, Extended value, string provenance) {
            report.entries.push_back(BoundEntry{kind, value, std::move(provenance)});
        };

        if (! spec.r_divides_k()) {
            // colouring everything 1 gives colour sum k, never 0 mod r
            add(BoundKind::Exact, Extended::infinity(), "nondivisible-infinite");
        }
        else {
            // x_k >= k - 1, so nothing below k - 1 can hold a solution
            add(BoundKind::Lower, kk - 1, "trivial-domain");

            if (variant == Palette::Binary) {
                if (k > r)
                    add(BoundKind::Exact, rr * kk - 2 * rr + 1, "cited:two-colour-palette-exact");
            }
            else {
                if (r % 2 == 1)
                    add(BoundKind::Lower, kk * rr - rr, "odd-r-construction");
                else
                    add(BoundKind::Lower, kk * rr - rr - 1, "even-r-construction");

                if (r == 3)
                    add(BoundKind::Lower, 3 * kk - 3, "cited:r3-lower");
                if (r == 4)
                    add(BoundKind::Lower, 4 * kk - 5, "cited:r4-lower");

                if (k > r) {
                    if (r == 2)
                        add(BoundKind::Exact, 2 * kk - 3, "cited:r2-exact");
                    if (r % 2 == 1 && is_prime(r) && k >= 2 * r)
                        add(BoundKind::Upper, kk * rr - rr, "odd-prime-upper");
                    if (r == 4 && k >= 8)
                        add(BoundKind::Upper, 4 * kk - 5, "r4-upper");
                    if (r >= 6 && k >= 2 * r)
                        add(BoundKind::Upper, kk * rr - factorize(r).excess() - 1, "prime-factor-upper");
                }
                else if (k % 2 == 1) {
                    // k == r here; reported as stated, never used by the solver
                    add(BoundKind::Lower, 2 * (kk * kk - kk - 1), "cited:k-eq-r-odd,unverified-cited");
                }
            }
        }

        report.lower = 0;
        report.upper = Extended::infinity();
        for (auto & e : report.entries) {
            if (e.kind != BoundKind::Upper)
                report.lower = std::max(report.lower, e.value);
            if (e.kind != BoundKind::Lower)
                report.upper = std::min(report.upper, e.value);
        }
        report.exact = report.lower == report.upper;

        return report;
    }

    auto format_bounds(const BoundsReport & report) -> string
    {
        std::ostringstream s;
        for (auto & e : report.entries)
            s << bound_kind_name(e.kind) << ' ' << e.value.to_string() << ' ' << e.provenance << '\n';
        s << "lower=" << report.lower.to_string() << " upper=" << report.upper.to_string()
            << " exact=" << (report.exact ? "true" : "false") << '\n';
        return s.str();
    }
}
