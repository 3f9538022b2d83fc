/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <zsschur/checker.hh>

#include <algorithm>
#include <functional>
#include <string>

using std::optional;
using std::vector;

namespace zsschur
{
    namespace
    {
        /// dst |= src << shift, both of `words` words.
        auto or_shifted(std::uint64_t * dst, const std::uint64_t * src, int shift, int words) -> void
        {
            int word_shift = shift >> 6;
            int bit_shift = shift & 63;
            if (word_shift >= words)
                return;
            if (bit_shift == 0) {
                for (int w = words - 1 ; w >= word_shift ; --w)
                    dst[w] |= src[w - word_shift];
            }
            else {
                for (int w = words - 1 ; w > word_shift ; --w)
                    dst[w] |= (src[w - word_shift] << bit_shift) | (src[w - word_shift - 1] >> (64 - bit_shift));
                dst[word_shift] |= src[0] << bit_shift;
            }
        }

        auto check_moduli(const Coloring & chi, const ProblemSpec & spec) -> void
        {
            if (chi.r() != spec.r)
                throw ParameterError{"colouring is mod " + std::to_string(chi.r()) + " but the problem is mod " + std::to_string(spec.r)};
        }

        /// Runs the shared ascending-target scan; returns the first target hit.
        auto first_target(const Coloring & chi, const ProblemSpec & spec) -> optional<int>
        {
            check_moduli(chi, spec);
            int n = chi.n(), k = spec.k, r = spec.r;
            if (n < k - 1)
                return std::nullopt;

            ReachTable table{k - 1, r, n};
            for (int target = k - 1 ; target <= n ; ++target) {
                // every other part is >= 1, so parts never exceed target - (k - 2)
                int v = target - k + 2;
                table.add_value(v, chi(v));
                if (table.test(k - 1, target, reduce(-chi(target), r)))
                    return target;
            }
            return std::nullopt;
        }

        auto extract_least(const Coloring & chi, const ProblemSpec & spec, int target) -> Witness
        {
            int k = spec.k, r = spec.r;
            int largest = target - k + 2;
            int terms = k - 2;

            // suffix[v] covers values in [v, largest]
            vector<ReachTable> suffix(largest + 2, ReachTable{terms, r, target});
            for (int v = largest ; v >= 1 ; --v) {
                suffix[v].copy_from(suffix[v + 1]);
                suffix[v].add_value(v, chi(v));
            }

            vector<int> parts;
            int remaining = target;
            int need = reduce(-chi(target), r);
            int low = 1;
            for (int left = terms ; left >= 0 ; --left) {
                int picked = 0;
                for (int p = low ; p <= std::min(largest, remaining) ; ++p)
                    if (suffix[p].test(left, remaining - p, reduce(need - chi(p), r))) {
                        picked = p;
                        break;
                    }
                if (picked == 0)
                    throw std::logic_error{"witness extraction failed to follow the reach table"};
                parts.push_back(picked);
                remaining -= picked;
                need = reduce(need - chi(picked), r);
                low = picked;
            }

            return Witness{std::move(parts), target};
        }
    }

    ReachTable::ReachTable(int max_terms, int r, int max_sum) :
        _max_terms(max_terms),
        _r(r),
        _max_sum(max_sum),
        _words(std::max(1, (max_sum + 64) / 64)),
        _bits(static_cast<std::size_t>(max_terms + 1) * r * _words, 0)
    {
        _bits[row_index(0, 0)] = 1;
    }

    auto ReachTable::add_value(int v, int colour) -> void
    {
        if (v < 1 || v > _max_sum)
            return;

        // ascending j lets layer j reuse v already admitted into layer j-1
        for (int j = 1 ; j <= _max_terms ; ++j)
            for (int c = 0 ; c < _r ; ++c)
                or_shifted(_bits.data() + row_index(j, residue_add(c, colour, _r)),
                        _bits.data() + row_index(j - 1, c), v, _words);

        int tail = (_max_sum + 1) & 63;
        if (tail != 0) {
            std::uint64_t mask = (std::uint64_t{1} << tail) - 1;
            for (int j = 1 ; j <= _max_terms ; ++j)
                for (int c = 0 ; c < _r ; ++c)
                    _bits[row_index(j, c) + _words - 1] &= mask;
        }
    }

    auto ReachTable::copy_from(const ReachTable & other) -> void
    {
        if (other._bits.size() == _bits.size())
            std::copy(other._bits.begin(), other._bits.end(), _bits.begin());
        else
            *this = other;
    }

    auto find_zero_sum_solution(const Coloring & chi, const ProblemSpec & spec) -> optional<Witness>
    {
        auto target = first_target(chi, spec);
        if (! target)
            return std::nullopt;
        return extract_least(chi, spec, *target);
    }

    auto is_solution_free(const Coloring & chi, const ProblemSpec & spec) -> bool
    {
        return ! first_target(chi, spec).has_value();
    }

    auto brute_force_oracle(const Coloring & chi, const ProblemSpec & spec) -> optional<Witness>
    {
        check_moduli(chi, spec);
        int n = chi.n(), k = spec.k, r = spec.r;

        vector<int> parts(k - 1);
        for (int target = k - 1 ; target <= n ; ++target) {
            int target_colour = chi(target);

            // nondecreasing tuples summing to target, in lexicographic order
            std::function<bool (int, int, int, int)> descend = [&] (int i, int low, int remaining, int colour_sum) -> bool {
                int left = k - 1 - i;
                if (left == 0)
                    return remaining == 0 && (colour_sum + target_colour) % r == 0;
                for (int p = low ; p * left <= remaining ; ++p) {
                    parts[i] = p;
                    if (descend(i + 1, p, remaining - p, colour_sum + chi(p)))
                        return true;
                }
                return false;
            };

            if (descend(0, 1, target, 0))
                return Witness{parts, target};
        }
        return std::nullopt;
    }
}
