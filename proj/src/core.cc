/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <zsschur/core.hh>

#include <algorithm>
#include <numeric>

using std::string;
using std::to_string;
using std::vector;

namespace zsschur
{
    auto palette_name(Palette p) -> string
    {
        return p == Palette::Full ? "full" : "binary";
    }

    auto parse_palette(const string & s) -> Palette
    {
        if (s == "full")
            return Palette::Full;
        if (s == "binary")
            return Palette::Binary;
        throw ParameterError{"unknown palette variant '" + s + "' (expected full or binary)"};
    }

    auto ProblemSpec::make(int k, int r, Palette palette) -> ProblemSpec
    {
        if (k < 3)
            throw ParameterError{"k must be at least 3, got " + to_string(k)};
        if (r < 2)
            throw ParameterError{"r must be at least 2, got " + to_string(r)};
        return ProblemSpec{k, r, palette};
    }

    auto ProblemSpec::colours() const -> vector<int>
    {
        vector<int> result(palette == Palette::Binary ? 2 : r);
        std::iota(result.begin(), result.end(), 0);
        return result;
    }

    auto is_unit(int u, int r) -> bool
    {
        return std::gcd(reduce(u, r), r) == 1;
    }

    auto Extended::value() const -> long long
    {
        if (! _value)
            throw std::logic_error{"value() called on an infinite Extended"};
        return *_value;
    }

    auto Extended::to_string() const -> string
    {
        return _value ? std::to_string(*_value) : "inf";
    }

    auto Extended::operator<=> (const Extended & other) const -> std::strong_ordering
    {
        if (is_infinite() && other.is_infinite())
            return std::strong_ordering::equal;
        if (is_infinite())
            return std::strong_ordering::greater;
        if (other.is_infinite())
            return std::strong_ordering::less;
        return *_value <=> *other._value;
    }

    Coloring::Coloring(int r, vector<int> values) :
        _r(r),
        _values(std::move(values))
    {
        if (r < 2)
            throw ParameterError{"colouring modulus must be at least 2, got " + to_string(r)};
        for (std::size_t i = 0 ; i < _values.size() ; ++i)
            if (_values[i] < 0 || _values[i] >= r)
                throw ParameterError{"colour of " + to_string(i + 1) + " is " + to_string(_values[i])
                    + ", outside [0, " + to_string(r - 1) + "]"};
    }

    auto Coloring::constant(int n, int r, int colour) -> Coloring
    {
        return Coloring{r, vector<int>(std::max(n, 0), colour)};
    }

    auto Coloring::at(int m) const -> int
    {
        if (m < 1 || m > n())
            throw std::out_of_range{"position " + to_string(m) + " outside [1, " + to_string(n()) + "]"};
        return _values[m - 1];
    }

    auto Coloring::translated(int c) const -> Coloring
    {
        auto v = _values;
        for (auto & x : v)
            x = reduce(static_cast<long long>(x) + c, _r);
        return Coloring{_r, std::move(v)};
    }

    auto Coloring::scaled(int u) const -> Coloring
    {
        auto v = _values;
        for (auto & x : v)
            x = reduce(static_cast<long long>(x) * u, _r);
        return Coloring{_r, std::move(v)};
    }

    auto Coloring::restricted(int m) const -> Coloring
    {
        if (m < 0 || m > n())
            throw std::out_of_range{"cannot restrict a colouring of " + to_string(n()) + " to " + to_string(m)};
        return Coloring{_r, vector<int>(_values.begin(), _values.begin() + m)};
    }

    auto Coloring::with(int m, int colour) const -> Coloring
    {
        auto v = _values;
        v.at(m - 1) = colour;
        return Coloring{_r, std::move(v)};
    }

    Witness::Witness(vector<int> p, int t) :
        parts(std::move(p)),
        target(t)
    {
        std::sort(parts.begin(), parts.end());
    }

    auto Witness::operator<=> (const Witness & other) const -> std::strong_ordering
    {
        if (auto c = target <=> other.target ; c != 0)
            return c;
        return std::lexicographical_compare_three_way(parts.begin(), parts.end(),
                other.parts.begin(), other.parts.end());
    }

    auto validate_witness(const Witness & w, const Coloring & chi, const ProblemSpec & spec) -> bool
    {
        if (static_cast<int>(w.parts.size()) != spec.k - 1)
            return false;
        if (chi.r() != spec.r)
            return false;

        auto in_range = [&] (int x) { return x >= 1 && x <= chi.n(); };
        if (! in_range(w.target))
            return false;

        long long sum = 0;
        long long colour_sum = chi(w.target);
        for (int p : w.parts) {
            if (! in_range(p))
                return false;
            sum += p;
            colour_sum += chi(p);
        }

        return sum == w.target && colour_sum % spec.r == 0;
    }

    auto SearchStats::operator+= (const SearchStats & other) -> SearchStats &
    {
        nodes += other.nodes;
        prunes += other.prunes;
        max_depth = std::max(max_depth, other.max_depth);
        elapsed += other.elapsed;
        return *this;
    }

    auto exact_status_name(ExactStatus s) -> string
    {
        switch (s) {
            case ExactStatus::Exact:           return "exact";
            case ExactStatus::BudgetExhausted: return "budget-exhausted";
            case ExactStatus::Infinite:        return "infinite";
        }
        return "unknown";
    }
}
