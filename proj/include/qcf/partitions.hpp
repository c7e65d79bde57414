#pragma once

#include "qcf/qseries.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcf {
namespace partitions {

/* A family of partitions: which part sizes are allowed and whether parts
 * must be distinct. */
struct PartSpec {
    std::vector<int> allowed; // strictly ascending positive part sizes
    bool distinct = false;

    void validate() const
    {
        if (allowed.empty()) throw std::invalid_argument("PartSpec: empty part list");
        int prev = 0;
        for (int p : allowed) {
            if (p <= prev) throw std::invalid_argument("PartSpec: parts must be strictly ascending and positive");
            prev = p;
        }
    }
};

/* Number of partitions of k from the spec, by the standard one-part-at-a-time
 * dynamic program (unbounded or 0/1 depending on `distinct`). */
inline std::uint64_t count_partitions(int k, const PartSpec& spec)
{
    spec.validate();
    if (k < 0) return 0;
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(k) + 1, 0);
    ways[0] = 1;
    for (int p : spec.allowed) {
        if (p > k) break;
        if (spec.distinct) {
            for (int w = k; w >= p; --w) ways[static_cast<std::size_t>(w)] += ways[static_cast<std::size_t>(w - p)];
        } else {
            for (int w = p; w <= k; ++w) ways[static_cast<std::size_t>(w)] += ways[static_cast<std::size_t>(w - p)];
        }
    }
    return ways[static_cast<std::size_t>(k)];
}

inline constexpr int default_enumeration_cap = 25;

/* Exhaustive oracle: the partitions themselves, parts descending, output in
 * lexicographically decreasing order of the part tuples. */
inline std::vector<std::vector<int>> enumerate_partitions(int k, const PartSpec& spec,
                                                          int cap = default_enumeration_cap)
{
    spec.validate();
    if (k < 0) return {};
    if (k > cap)
        throw std::invalid_argument("enumerate_partitions: k = " + std::to_string(k)
                                    + " exceeds enumeration cap " + std::to_string(cap));
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    /* idx walks the allowed list from the largest part downward. */
    std::function<void(int, std::size_t)> rec = [&](int rem, std::size_t idx) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = idx; i-- > 0;) {
            const int p = spec.allowed[i];
            if (p > rem) continue;
            cur.push_back(p);
            rec(rem - p, spec.distinct ? i : i + 1);
            cur.pop_back();
        }
    };
    /* Start from the largest allowed part not exceeding k. */
    std::size_t start = spec.allowed.size();
    rec(k, start);
    return out;
}

/* Generating function of the spec: prod (1 - q^e)^{-1} over allowed parts
 * for unrestricted partitions, prod (1 + q^e) for distinct ones. */
inline QSeries gf_from_spec(const PartSpec& spec, int order)
{
    spec.validate();
    std::vector<int> exps;
    for (int p : spec.allowed)
        if (p <= order) exps.push_back(p);
    if (spec.distinct) return product_build(exps, +1, std::nullopt, order);
    if (exps.empty()) return QSeries::one(order);
    return inverse(product_build(exps, -1, std::nullopt, order));
}

/* --- two-color partition statistics ---------------------------------- */

enum class ColoredVariant { AN, BN, CN, AD, BD, CD };

inline const char* variant_name(ColoredVariant v)
{
    switch (v) {
        case ColoredVariant::AN: return "AN";
        case ColoredVariant::BN: return "BN";
        case ColoredVariant::CN: return "CN";
        case ColoredVariant::AD: return "AD";
        case ColoredVariant::BD: return "BD";
        case ColoredVariant::CD: return "CD";
    }
    return "?";
}

inline ColoredVariant variant_from_name(const std::string& s)
{
    for (ColoredVariant v : {ColoredVariant::AN, ColoredVariant::BN, ColoredVariant::CN,
                             ColoredVariant::AD, ColoredVariant::BD, ColoredVariant::CD})
        if (s == variant_name(v)) return v;
    throw std::invalid_argument("unknown colored variant '" + s + "' (expected AN|BN|CN|AD|BD|CD)");
}

namespace detail {

/* partitions of w into exactly `count` distinct parts >= minp */
inline std::uint64_t count_exact_distinct(int w, int count, int minp)
{
    if (count == 0) return w == 0 ? 1 : 0;
    if (w < 0) return 0;
    std::uint64_t total = 0;
    /* smallest part p; the remaining count-1 parts are >= p+1 */
    for (int p = minp; static_cast<long>(p) * count + static_cast<long>(count) * (count - 1) / 2 <= w; ++p)
        total += count_exact_distinct(w - p, count - 1, p + 1);
    return total;
}

/* sum over sets of j distinct blue parts >= minp with pairwise gaps >= 2,
 * invoking f(sum of blues) for each */
inline void for_gap2_blues(int j, int minp, int budget, const std::function<void(int)>& f)
{
    std::function<void(int, int, int)> rec = [&](int cnt, int lo, int used) {
        if (cnt == 0) {
            f(used);
            return;
        }
        for (int p = lo; static_cast<long>(cnt) * p + static_cast<long>(cnt) * (cnt - 1) <= budget - used; ++p)
            rec(cnt - 1, p + 2, used + p);
    };
    rec(j, minp, 0);
}

/* enumerate sets of `count` distinct positive parts summing to exactly n */
inline void for_distinct_sets(int n, int count, const std::function<void(const std::vector<int>&)>& f)
{
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int lo) {
        const int cnt = count - static_cast<int>(cur.size());
        if (cnt == 0) {
            if (rem == 0) f(cur);
            return;
        }
        for (int p = lo; static_cast<long>(cnt) * p + static_cast<long>(cnt) * (cnt - 1) / 2 <= rem; ++p) {
            cur.push_back(p);
            rec(rem - p, p + 1);
            cur.pop_back();
        }
    };
    rec(n, 1);
}

} // namespace detail

inline constexpr int colored_n_cap = 30;
inline constexpr int colored_ij_cap = 8;

/* Count of two-color partitions of n with statistics (i, j), per variant:
 *
 *   AN: i+j distinct positive red parts and j distinct blue parts drawn from
 *       0..i+j-1 (a single blue zero is allowed).
 *   BN: i distinct red parts, every red part > j; j distinct positive blue
 *       parts with pairwise differences >= 2.
 *   CN: i red and j blue parts, all i+j values distinct, and below each blue
 *       part v there is a gap of at least 2: no part of either color is v-1.
 *   AD: as AN with blue parts drawn from 1..i+j.
 *   BD: as BN with blue part 1 forbidden.
 *   CD: as CN with blue part 1 forbidden.
 */
inline std::uint64_t count_colored(ColoredVariant variant, int n, int i, int j,
                                   int n_cap = colored_n_cap, int ij_cap = colored_ij_cap)
{
    if (n < 0 || i < 0 || j < 0) throw std::invalid_argument("count_colored: negative argument");
    if (n > n_cap)
        throw std::invalid_argument("count_colored: n exceeds enumeration cap "
                                    + std::to_string(n_cap));
    if (i + j > ij_cap)
        throw std::invalid_argument("count_colored: i+j exceeds cap " + std::to_string(ij_cap));

    std::uint64_t total = 0;
    switch (variant) {
        case ColoredVariant::AN:
        case ColoredVariant::AD: {
            /* blue parts are j-subsets of a window of i+j values */
            const int lo = variant == ColoredVariant::AN ? 0 : 1;
            const int hi = variant == ColoredVariant::AN ? i + j - 1 : i + j;
            std::vector<int> pick;
            std::function<void(int, int)> rec = [&](int next, int used) {
                if (static_cast<int>(pick.size()) == j) {
                    if (n - used >= 0) total += detail::count_exact_distinct(n - used, i + j, 1);
                    return;
                }
                for (int v = next; v <= hi; ++v) {
                    pick.push_back(v);
                    rec(v + 1, used + v);
                    pick.pop_back();
                }
            };
            rec(lo, 0);
            break;
        }
        case ColoredVariant::BN:
        case ColoredVariant::BD: {
            const int minblue = variant == ColoredVariant::BN ? 1 : 2;
            detail::for_gap2_blues(j, minblue, n, [&](int bluesum) {
                total += detail::count_exact_distinct(n - bluesum, i, j + 1);
            });
            break;
        }
        case ColoredVariant::CN:
        case ColoredVariant::CD: {
            const bool no_blue_one = variant == ColoredVariant::CD;
            detail::for_distinct_sets(n, i + j, [&](const std::vector<int>& parts) {
                /* choose which j of the distinct parts are blue */
                std::vector<int> idx;
                std::function<void(std::size_t)> choose = [&](std::size_t from) {
                    if (static_cast<int>(idx.size()) == j) {
                        ++total;
                        return;
                    }
                    for (std::size_t t = from; t < parts.size(); ++t) {
                        const int v = parts[t];
                        if (no_blue_one && v == 1) continue;
                        if (std::binary_search(parts.begin(), parts.end(), v - 1)) continue;
                        idx.push_back(v);
                        choose(t + 1);
                        idx.pop_back();
                    }
                };
                choose(0);
            });
            break;
        }
    }
    return total;
}

/* CSV table of colored counts, columns: n,i,j,variant,count. */
inline std::string colored_csv(ColoredVariant variant, int max_n, int max_i, int max_j)
{
    std::string out = "n,i,j,variant,count\n";
    for (int n = 0; n <= max_n; ++n)
        for (int i = 0; i <= max_i; ++i)
            for (int j = 0; j <= max_j; ++j)
                out += std::to_string(n) + "," + std::to_string(i) + "," + std::to_string(j)
                       + "," + variant_name(variant) + ","
                       + std::to_string(count_colored(variant, n, i, j)) + "\n";
    return out;
}

} // namespace partitions
} // namespace qcf
