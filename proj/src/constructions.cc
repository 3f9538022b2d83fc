/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <zsschur/constructions.hh>

#include <algorithm>
#include <sstream>

using std::string;
using std::to_string;
using std::vector;

namespace zsschur
{
    auto ResidueSet::full(int r) -> ResidueSet
    {
        ResidueSet s{r};
        for (int c = 0 ; c < r ; ++c)
            s._members.push_back(c);
        return s;
    }

    auto ResidueSet::progression(long long start, int step, int count, int r) -> ResidueSet
    {
        ResidueSet s{r};
        for (int i = 0 ; i < count ; ++i)
            s.insert(reduce(start + static_cast<long long>(step) * i, r));
        return s;
    }

    auto ResidueSet::insert(int residue) -> void
    {
        auto it = std::lower_bound(_members.begin(), _members.end(), residue);
        if (it == _members.end() || *it != residue)
            _members.insert(it, residue);
    }

    auto ResidueSet::contains(int residue) const -> bool
    {
        return std::binary_search(_members.begin(), _members.end(), residue);
    }

    auto ResidueSet::minus(const ResidueSet & other) const -> ResidueSet
    {
        ResidueSet s{_r};
        std::set_difference(_members.begin(), _members.end(), other._members.begin(), other._members.end(),
                std::back_inserter(s._members));
        return s;
    }

    auto ResidueSet::to_string() const -> string
    {
        std::ostringstream s;
        s << '{';
        for (std::size_t i = 0 ; i < _members.size() ; ++i)
            s << (i ? "," : "") << _members[i];
        s << '}';
        return s.str();
    }

    namespace
    {
        auto ceil_div(int a, int b) -> int
        {
            return (a + b - 1) / b;
        }

        auto pick(int m, ResidueSet permitted, ResidueSet forbidden) -> AllowedSet
        {
            auto left = permitted.minus(forbidden);
            if (left.empty())
                throw ContradictionError{"every permitted colour of " + to_string(m) + " is forbidden: permitted "
                    + permitted.to_string() + ", forbidden " + forbidden.to_string()};
            int chosen = left.members().front();
            return AllowedSet{std::move(permitted), std::move(forbidden), chosen};
        }

        auto check_common(int m, int k, int r, int n) -> void
        {
            if (k < 3)
                throw ParameterError{"k must be at least 3, got " + to_string(k)};
            if (m < 1 || m > n)
                throw ParameterError{"position " + to_string(m) + " outside [1, " + to_string(n) + "] for k="
                    + to_string(k) + ", r=" + to_string(r)};
        }
    }

    auto allowed_set_odd(int m, int k, int r) -> AllowedSet
    {
        if (r < 3 || r % 2 == 0)
            throw ParameterError{"odd construction needs odd r >= 3, got " + to_string(r)};
        check_common(m, k, r, k * r - r - 1);

        // permitted sets grow with alpha, so the smallest applicable alpha
        // binds; forbidden sets grow too, so the largest applicable one binds
        int smallest = ceil_div(m, k - 1);
        int largest = m / (k - 1);

        return pick(m,
                ResidueSet::progression(m, 2, smallest, r),
                ResidueSet::progression(-static_cast<long long>(m), -2, largest, r));
    }

    auto allowed_set_even(int m, int k, int r) -> AllowedSet
    {
        if (r < 2 || r % 2 != 0)
            throw ParameterError{"even construction needs even r >= 2, got " + to_string(r)};
        check_common(m, k, r, k * r - r - 2);

        int smallest = ceil_div(m, k - 1);
        int largest = m / (k - 1);
        int last_band = (r - 1) * (k - 1);

        ResidueSet permitted = smallest <= r - 2
            ? ResidueSet::progression(m, 1, smallest, r)
            : m <= last_band - 1
                ? ResidueSet::progression(m, 1, r - 1, r)
                : ResidueSet::full(r);

        ResidueSet forbidden = m >= last_band
            ? ResidueSet::progression(-static_cast<long long>(m), -1, r - 1, r)
            : ResidueSet::progression(-static_cast<long long>(m), -1, std::min(largest, r - 2), r);

        return pick(m, std::move(permitted), std::move(forbidden));
    }

    auto construct_odd(int k, int r) -> Coloring
    {
        if (r < 3 || r % 2 == 0)
            throw ParameterError{"odd construction needs odd r >= 3, got " + to_string(r)};
        if (k < 3)
            throw ParameterError{"k must be at least 3, got " + to_string(k)};

        vector<int> values;
        for (int m = 1 ; m <= k * r - r - 1 ; ++m)
            values.push_back(allowed_set_odd(m, k, r).chosen);
        return Coloring{r, std::move(values)};
    }

    auto construct_even(int k, int r) -> Coloring
    {
        if (r < 2 || r % 2 != 0)
            throw ParameterError{"even construction needs even r >= 2, got " + to_string(r)};
        if (k < 3)
            throw ParameterError{"k must be at least 3, got " + to_string(k)};

        vector<int> values;
        for (int m = 1 ; m <= k * r - r - 2 ; ++m)
            values.push_back(allowed_set_even(m, k, r).chosen);
        return Coloring{r, std::move(values)};
    }

    auto construct_lower_bound(int k, int r) -> Coloring
    {
        return r % 2 == 1 ? construct_odd(k, r) : construct_even(k, r);
    }

    auto construction_length(int k, int r) -> int
    {
        return r % 2 == 1 ? k * r - r - 1 : k * r - r - 2;
    }

    auto property_violations(const Coloring & chi, int k) -> vector<PropertyViolation>
    {
        int r = chi.r();
        vector<PropertyViolation> result;

        auto check = [&] (int m, int alpha, int step, int count, bool permitted_applies, bool forbidden_applies) {
            int colour = chi(m);
            if (permitted_applies) {
                bool ok = false;
                for (int i = 0 ; i < count ; ++i)
                    ok = ok || colour == reduce(static_cast<long long>(m) + step * i, r);
                if (! ok)
                    result.push_back({m, alpha, "permitted"});
            }
            if (forbidden_applies) {
                for (int i = 0 ; i < count ; ++i)
                    if (colour == reduce(-static_cast<long long>(m) - step * i, r)) {
                        result.push_back({m, alpha, "forbidden"});
                        break;
                    }
            }
        };

        for (int m = 1 ; m <= chi.n() ; ++m) {
            if (r % 2 == 1) {
                for (int alpha = 1 ; alpha <= r ; ++alpha)
                    check(m, alpha, 2, alpha, m <= alpha * (k - 1), m >= alpha * (k - 1));
            }
            else {
                for (int alpha = 1 ; alpha <= r - 2 ; ++alpha)
                    check(m, alpha, 1, alpha, m <= alpha * (k - 1), m >= alpha * (k - 1));
                int last_band = (r - 1) * (k - 1);
                check(m, r - 1, 1, r - 1, m <= last_band - 1, m >= last_band);
            }
        }

        return result;
    }
}
