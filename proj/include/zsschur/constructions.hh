/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ZSSCHUR_GUARD_ZSSCHUR_CONSTRUCTIONS_HH
#define ZSSCHUR_GUARD_ZSSCHUR_CONSTRUCTIONS_HH 1

#include <zsschur/core.hh>

#include <string>
#include <vector>

namespace zsschur
{
    /// A set of residues mod r, kept sorted and duplicate free.
    class ResidueSet
    {
        private:
            int _r;
            std::vector<int> _members;

        public:
            explicit ResidueSet(int r) : _r(r) { }

            static auto full(int r) -> ResidueSet;

            /// { start + step * i mod r : 0 <= i < count }
            static auto progression(long long start, int step, int count, int r) -> ResidueSet;

            auto insert(int residue) -> void;

            [[nodiscard]] auto contains(int residue) const -> bool;
            [[nodiscard]] auto empty() const -> bool { return _members.empty(); }
            [[nodiscard]] auto size() const -> int { return static_cast<int>(_members.size()); }
            [[nodiscard]] auto members() const -> const std::vector<int> & { return _members; }
            [[nodiscard]] auto is_full() const -> bool { return size() == _r; }

            /// Elements of *this not in other.
            [[nodiscard]] auto minus(const ResidueSet & other) const -> ResidueSet;

            [[nodiscard]] auto to_string() const -> std::string;

            auto operator== (const ResidueSet &) const -> bool = default;
    };

    /// The colour constraints on one position of a lower-bound construction,
    /// reduced to the binding ones.
    struct AllowedSet
    {
        ResidueSet permitted;
        ResidueSet forbidden;
        int chosen;
    };

    /// Constraints at m for odd r. Throws ParameterError outside
    /// r odd >= 3, k >= 3, 1 <= m <= kr - r - 1, and ContradictionError if
    /// nothing is left to choose.
    [[nodiscard]] auto allowed_set_odd(int m, int k, int r) -> AllowedSet;

    /// Constraints at m for even r, 1 <= m <= kr - r - 2.
    [[nodiscard]] auto allowed_set_even(int m, int k, int r) -> AllowedSet;

    /// Solution-free colouring of [1..kr - r - 1] for odd r.
    [[nodiscard]] auto construct_odd(int k, int r) -> Coloring;

    /// Solution-free colouring of [1..kr - r - 2] for even r.
    [[nodiscard]] auto construct_even(int k, int r) -> Coloring;

    /// Dispatches on the parity of r. Both constructions exist whenever r
    /// divides k; for many other k, k = r + 1 among them, some position has
    /// no allowed colour and ContradictionError is thrown.
    [[nodiscard]] auto construct_lower_bound(int k, int r) -> Coloring;

    /// Length of the colouring construct_lower_bound produces.
    [[nodiscard]] auto construction_length(int k, int r) -> int;

    struct PropertyViolation
    {
        int m;
        int alpha;
        std::string rule;

        auto operator== (const PropertyViolation &) const -> bool = default;
    };

    /**
     * Checks every permitted/forbidden rule of the lower-bound colourings
     * against chi, one alpha at a time (no binding-constraint shortcut).
     *
     * Odd r, for 1 <= alpha <= r:
     *   m <= alpha(k-1)  =>  chi(m) in     { m + 2i : 0 <= i < alpha }
     *   m >= alpha(k-1)  =>  chi(m) not in {-m - 2i : 0 <= i < alpha }
     *
     * Even r, for 1 <= alpha <= r-2 the same with step 1, plus
     *   m <= (r-1)(k-1) - 1  =>  chi(m) in     { m + i : 0 <= i <= r-2 }
     *   m >= (r-1)(k-1)      =>  chi(m) not in {-m - i : 0 <= i <= r-2 }
     */
    [[nodiscard]] auto property_violations(const Coloring & chi, int k) -> std::vector<PropertyViolation>;
}

#endif
