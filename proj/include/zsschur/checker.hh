/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ZSSCHUR_GUARD_ZSSCHUR_CHECKER_HH
#define ZSSCHUR_GUARD_ZSSCHUR_CHECKER_HH 1

#include <zsschur/core.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace zsschur
{
    /**
     * Reachability over (terms used j, sum s, colour residue c): cell (j, s, c)
     * is set iff some j values, repetition allowed, drawn from the values added
     * so far, have sum s and colour sum c mod r.
     *
     * Rows are bitsets along the sum axis, capped at max_sum. Values must be
     * added at most once each; adding them in any order gives the same table.
     */
    class ReachTable
    {
        private:
            int _max_terms;
            int _r;
            int _max_sum;
            int _words;
            std::vector<std::uint64_t> _bits;

            [[nodiscard]] auto row_index(int j, int c) const -> std::size_t
            {
                return (static_cast<std::size_t>(j) * _r + c) * _words;
            }

        public:
            ReachTable(int max_terms, int r, int max_sum);

            [[nodiscard]] auto max_terms() const -> int { return _max_terms; }
            [[nodiscard]] auto r() const -> int { return _r; }
            [[nodiscard]] auto max_sum() const -> int { return _max_sum; }
            [[nodiscard]] auto words_per_row() const -> int { return _words; }

            /// Admit value v (any number of times) with the given colour.
            auto add_value(int v, int colour) -> void;

            [[nodiscard]] auto test(int j, int s, int c) const -> bool
            {
                if (s < 0 || s > _max_sum)
                    return false;
                return (_bits[row_index(j, c) + (s >> 6)] >> (s & 63)) & 1;
            }

            [[nodiscard]] auto row(int j, int c) const -> std::span<const std::uint64_t>
            {
                return {_bits.data() + row_index(j, c), static_cast<std::size_t>(_words)};
            }

            /// Same shape, so assignment reuses storage.
            auto copy_from(const ReachTable & other) -> void;
    };

    /// The least zero-sum witness by (target, sorted parts), or none.
    /// Throws ParameterError if chi.r() != spec.r.
    [[nodiscard]] auto find_zero_sum_solution(const Coloring & chi, const ProblemSpec & spec) -> std::optional<Witness>;

    /// Existence only, no witness extraction.
    [[nodiscard]] auto is_solution_free(const Coloring & chi, const ProblemSpec & spec) -> bool;

    /// Exhaustive enumeration of nondecreasing (k-1)-tuples, targets ascending.
    /// Independent of ReachTable; meant for small n and k.
    [[nodiscard]] auto brute_force_oracle(const Coloring & chi, const ProblemSpec & spec) -> std::optional<Witness>;
}

#endif
