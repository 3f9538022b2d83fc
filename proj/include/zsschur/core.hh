/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ZSSCHUR_GUARD_ZSSCHUR_CORE_HH
#define ZSSCHUR_GUARD_ZSSCHUR_CORE_HH 1

#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zsschur
{
    /// Thrown when parameters violate a documented precondition (k < 3, r < 2,
    /// mismatched moduli, wrong parity for a construction, ...).
    class ParameterError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// Thrown when a construction finds its permitted colours all forbidden.
    /// Inside the documented parameter range this cannot happen, so seeing it
    /// means a bug or a violated precondition.
    class ContradictionError : public std::logic_error
    {
        public:
            using std::logic_error::logic_error;
    };

    enum class Palette
    {
        Full,   ///< colours are all residues 0..r-1
        Binary  ///< colours are restricted to the residues 0 and 1
    };

    auto palette_name(Palette) -> std::string;
    auto parse_palette(const std::string &) -> Palette;

    /// (k, r, palette): equation x_1 + ... + x_{k-1} = x_k, colour sums mod r.
    struct ProblemSpec
    {
        int k = 3;
        int r = 2;
        Palette palette = Palette::Full;

        /// Throws ParameterError unless k >= 3 and r >= 2.
        static auto make(int k, int r, Palette palette = Palette::Full) -> ProblemSpec;

        [[nodiscard]] auto r_divides_k() const -> bool { return k % r == 0; }

        /// The residues this spec may colour with, ascending.
        [[nodiscard]] auto colours() const -> std::vector<int>;

        auto operator== (const ProblemSpec &) const -> bool = default;
    };

    /// (a + b) mod r for a, b already reduced.
    [[nodiscard]] constexpr auto residue_add(int a, int b, int r) -> int
    {
        int s = a + b;
        return s >= r ? s - r : s;
    }

    /// Canonical representative of x mod r, for any sign of x.
    [[nodiscard]] constexpr auto reduce(long long x, int r) -> int
    {
        auto m = x % r;
        return static_cast<int>(m < 0 ? m + r : m);
    }

    [[nodiscard]] auto is_unit(int u, int r) -> bool;

    /// An integer or +infinity. Infinity is its own state, never a magic number.
    class Extended
    {
        private:
            std::optional<long long> _value;

            explicit Extended(std::optional<long long> v) : _value(v) { }

        public:
            Extended(long long v) : _value(v) { }

            static auto infinity() -> Extended { return Extended{std::nullopt}; }

            [[nodiscard]] auto is_infinite() const -> bool { return ! _value.has_value(); }
            [[nodiscard]] auto is_finite() const -> bool { return _value.has_value(); }

            /// Throws std::logic_error when infinite.
            [[nodiscard]] auto value() const -> long long;

            [[nodiscard]] auto to_string() const -> std::string;

            auto operator== (const Extended &) const -> bool = default;
            auto operator<=> (const Extended & other) const -> std::strong_ordering;
    };

    /// A colouring chi : {1..n} -> Z/rZ. Immutable once built.
    class Coloring
    {
        private:
            int _r;
            std::vector<int> _values;

        public:
            /// Throws ParameterError if r < 2 or any value is outside [0, r-1].
            Coloring(int r, std::vector<int> values);

            static auto constant(int n, int r, int colour) -> Coloring;

            [[nodiscard]] auto n() const -> int { return static_cast<int>(_values.size()); }
            [[nodiscard]] auto r() const -> int { return _r; }

            /// chi(m), 1-based, m in [1, n]. Unchecked.
            [[nodiscard]] auto operator() (int m) const -> int { return _values[m - 1]; }

            /// chi(m) with bounds checking.
            [[nodiscard]] auto at(int m) const -> int;

            [[nodiscard]] auto values() const -> std::span<const int> { return _values; }

            /// chi + c (mod r).
            [[nodiscard]] auto translated(int c) const -> Coloring;

            /// u * chi (mod r).
            [[nodiscard]] auto scaled(int u) const -> Coloring;

            /// Restriction to {1..m}, m <= n.
            [[nodiscard]] auto restricted(int m) const -> Coloring;

            /// Copy with chi(m) replaced.
            [[nodiscard]] auto with(int m, int colour) const -> Coloring;

            auto operator== (const Coloring &) const -> bool = default;
            auto operator<=> (const Coloring &) const = default;
    };

    /// A solution of x_1 + ... + x_{k-1} = x_k. Parts are kept sorted so that
    /// equality is multiset equality.
    struct Witness
    {
        std::vector<int> parts;
        int target = 0;

        Witness() = default;
        Witness(std::vector<int> parts, int target);

        auto operator== (const Witness &) const -> bool = default;

        /// Order by (target, parts).
        auto operator<=> (const Witness & other) const -> std::strong_ordering;
    };

    /// True iff w has k-1 parts, sums correctly, lies inside [1, chi.n] and
    /// its colours sum to 0 mod r.
    [[nodiscard]] auto validate_witness(const Witness & w, const Coloring & chi, const ProblemSpec & spec) -> bool;

    struct SearchStats
    {
        std::uint64_t nodes = 0;
        std::uint64_t prunes = 0;
        int max_depth = 0;
        std::chrono::duration<double> elapsed{0.0};

        auto operator+= (const SearchStats & other) -> SearchStats &;
    };

    enum class ExactStatus
    {
        Exact,
        BudgetExhausted,
        Infinite
    };

    auto exact_status_name(ExactStatus) -> std::string;

    struct ExactResult
    {
        ExactStatus status = ExactStatus::Exact;

        /// The exact value when Exact or Infinite; the lower end of the bracket
        /// when BudgetExhausted.
        Extended value = 0;

        /// Bracket [lower, upper] known when the search stopped. Equal to value
        /// on success.
        Extended lower = 0;
        Extended upper = Extended::infinity();

        /// Solution-free colouring of [1..value-1] for Exact, or of the largest
        /// certified n for BudgetExhausted.
        std::optional<Coloring> certificate;

        SearchStats stats;
    };
}

#endif
