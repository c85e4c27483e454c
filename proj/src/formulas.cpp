#include "latcount/formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace latcount {
namespace {

Count P(long n, long k) { return partition_count(n, k); }

// Shared inner sums. Each mirrors one printed nested sum; loops with an
// upper bound below the lower bound contribute nothing.

// Blocks over B_1 and B_2.
Count sum_b1_shape(int j) {
    Count total = 0;
    for (int s = 1; s <= j - 6; ++s)
        for (int r = 1; r <= j - s - 5; ++r)
            for (int l = 2; l <= j - s - r - 3; ++l) total += (j - s - r - l - 2) * P(l, 2);
    return total;
}

// B_4: L'(j - t; 2, 2) summed over the length t of the outer chain.
Count sum_b4_shape(int j) {
    Count total = 0;
    for (int t = 1; t <= j - 7; ++t)
        for (int i = 2; i <= j - t - 5; ++i) total += (i - 1) * P(j - t - i - 2, 3);
    return total;
}

Count sum_b5_shape(int j) {
    Count total = 0;
    for (int p = 4; p <= j - 4; ++p)
        for (int t = 1; t <= j - p - 3; ++t) total += t * P(j - p - t - 1, 2) * P(p - 2, 2);
    return total;
}

// B_6 .. B_12.
Count sum_b6_shape(int j) {
    Count total = 0;
    for (int t = 1; t <= j - 7; ++t)
        for (int r = 1; r <= j - t - 6; ++r)
            for (int l = 1; l <= j - t - r - 5; ++l)
                for (int i = 1; i <= j - t - r - l - 4; ++i) total += P(j - t - r - l - i - 2, 2);
    return total;
}

// B_13, B_14.
Count sum_b13_shape(int j) {
    Count total = 0;
    for (int r = 0; r <= j - 9; ++r)
        for (int p = 5; p <= j - r - 4; ++p) total += P(p - 2, 3) * P(j - p - r - 2, 2);
    return total;
}

// B_15 .. B_18.
Count sum_b15_shape(int j) {
    Count total = 0;
    for (int p = 4; p <= j - 5; ++p)
        for (int l = 1; l <= j - p - 4; ++l)
            for (int i = 1; i <= j - p - l - 3; ++i) total += P(p - 2, 2) * P(j - p - l - i - 1, 2);
    return total;
}

// B_19, B_20.
Count sum_b19_shape(int j) {
    Count total = 0;
    for (int r = 1; r <= j - 8; ++r)
        for (int q = 1; q <= j - r - 7; ++q)
            for (int l = 4; l <= j - q - r - 3; ++l) total += P(l - 2, 2) * P(j - q - r - l - 1, 2);
    return total;
}

Count sum_b21_shape(int j) {
    Count total = 0;
    for (int t = 1; t <= j - 8; ++t)
        for (int m = 0; m <= j - t - 8; ++m)
            for (int s = 4; s <= j - t - m - 4; ++s)
                total += (j - t - m - 7) * P(s - 2, 2) * P(j - t - m - s - 2, 2);
    return total;
}

Count sum_b22_shape(int j) {
    Count total = 0;
    for (int p = 7; p <= j - 3; ++p)
        for (int l = 4; l <= p - 3; ++l) total += P(j - p - 1, 2) * P(l - 2, 2) * P(p - l - 1, 2);
    return total;
}

}  // namespace

Count count_L_2red(int n, int k) {
    if (n < 4 || k < 1 || k > n - 3) return 0;
    Count total = 0;
    for (int j = 1; j <= n - k - 2; ++j) total += j * P(n - j - 1, k + 1);
    return total;
}

Count count_B_3red_F1F2(int m, int k) {
    if (m < 6 || k < 2 || k > m - 4) return 0;
    Count total = 0;
    for (int l = 1; l <= m - 5; ++l)
        for (int i = 1; i <= m - l - 4; ++i) total += P(m - l - i - 2, k);
    for (int r = 5; r <= m - 2; ++r)
        for (int s = 1; s <= k - 2; ++s)
            for (int i = 1; i <= r - 4; ++i) total += P(r - i - 2, s + 1) * P(m - r, k - s);
    return total;
}

Count count_B_3red_F3(int m, int k) {
    if (m < 7 || k < 2 || k > m - 5) return 0;
    Count total = 0;
    for (int l = 4; l <= m - 3; ++l)
        for (int t = 1; t <= k - 1; ++t) total += P(l - 2, t + 1) * P(m - l - 1, k - t + 1);
    return total;
}

Count count_B_3red_F4(int m, int k) {
    if (m < 8 || k < 3 || k > m - 5) return 0;
    Count total = 0;
    for (int r = 1; r <= m - 7; ++r)
        for (int l = 4; l <= m - r - 3; ++l)
            for (int t = 1; t <= k - 2; ++t) total += P(l - 2, t + 1) * P(m - r - l - 1, k - t);
    for (int r = 2; r <= m - 7; ++r)
        for (int s = 2; s <= k - 2; ++s)
            for (int l = 4; l <= m - r - 3; ++l)
                for (int t = 1; t <= k - s - 1; ++t)
                    total += P(l - 2, t + 1) * P(m - r - l - 1, k - s - t + 1) * P(r, s);
    return total;
}

Count count_B_3red(int m, int k) {
    if (m < 6) return 0;
    return 2 * count_B_3red_F1F2(m, k) + count_B_3red_F3(m, k) + count_B_3red_F4(m, k);
}

Count count_L_3red(int n, int k) {
    if (n < 6 || k < 2 || k > n - 4) return 0;
    Count total = 0;
    for (int i = 0; i <= n - 6; ++i) total += (i + 1) * count_B_3red(n - i, k);
    return total;
}

Count count_B_42_h(int j, int h) {
    switch (h) {
        case 3:
            return j >= 6 ? binomial(j - 2, 4) : Count(0);
        case 4: {
            if (j < 7) return 0;
            Count total = 0;
            for (int i = 1; i <= j - 6; ++i)
                for (int l = 2; l <= j - i - 4; ++l) total += (l - 1) * P(j - i - l - 2, 2);
            return total;
        }
        case 5: {
            if (j < 8) return 0;
            Count total = 0;
            for (int m = 0; m <= j - 8; ++m)
                for (int s = 4; s <= j - m - 4; ++s) total += (j - m - 7) * P(s - 2, 2) * P(j - m - s - 2, 2);
            return total;
        }
        default:
            return 0;
    }
}

Count count_B_42(int j) {
    if (j < 6) return 0;
    return count_B_42_h(j, 3) + count_B_42_h(j, 4) + count_B_42_h(j, 5);
}

Count count_L_42(int n) {
    if (n < 6) return 0;
    Count total = 0;
    for (int i = 0; i <= n - 6; ++i) total += (i + 1) * count_B_42(n - i);
    return total;
}

Count count_L_sandwiched_22(int n) {
    if (n < 7) return 0;
    Count total = 0;
    for (int i = 2; i <= n - 5; ++i) total += (i - 1) * P(n - i - 2, 3);
    return total;
}

Count count_BB_43(int j, int i) {
    if (i < 1 || i > 22) throw std::out_of_range("basic block index must be in 1..22");
    const int threshold = i <= 3 ? 7 : i <= 12 ? 8 : i <= 21 ? 9 : 10;
    if (j < threshold) return 0;
    if (i <= 2) return sum_b1_shape(j);
    if (i == 3) {
        Count total = 0;
        for (int p = 1; p <= j - 6; ++p) total += binomial(j - p - 2, 4);
        return total;
    }
    if (i == 4) return sum_b4_shape(j);
    if (i == 5) return sum_b5_shape(j);
    if (i <= 12) return sum_b6_shape(j);
    if (i <= 14) return sum_b13_shape(j);
    if (i <= 18) return sum_b15_shape(j);
    if (i <= 20) return sum_b19_shape(j);
    if (i == 21) return sum_b21_shape(j);
    return sum_b22_shape(j);
}

Count count_B_43_h(int j, int h) {
    int first = 0;
    int last = -1;
    switch (h) {
        case 3: first = 1, last = 3; break;
        case 4: first = 4, last = 12; break;
        case 5: first = 13, last = 21; break;
        case 6: first = 22, last = 22; break;
        default: return 0;
    }
    Count total = 0;
    for (int i = first; i <= last; ++i) total += count_BB_43(j, i);
    return total;
}

Count count_B_43_h_merged(int j, int h) {
    switch (h) {
        case 3: {
            if (j < 7) return 0;
            Count total = 2 * sum_b1_shape(j);
            for (int p = 1; p <= j - 6; ++p) total += binomial(j - p - 2, 4);
            return total;
        }
        case 4:
            if (j < 8) return 0;
            return sum_b4_shape(j) + sum_b5_shape(j) + 7 * sum_b6_shape(j);
        case 5:
            if (j < 9) return 0;
            return 2 * sum_b13_shape(j) + 4 * sum_b15_shape(j) + 2 * sum_b19_shape(j) + sum_b21_shape(j);
        case 6:
            return j >= 10 ? sum_b22_shape(j) : Count(0);
        default:
            return 0;
    }
}

Count count_B_43(int j) {
    if (j < 7) return 0;
    Count total = 0;
    for (int h = 3; h <= 6; ++h) total += count_B_43_h(j, h);
    return total;
}

Count count_L_43(int n) {
    if (n < 7) return 0;
    Count total = 0;
    for (int i = 0; i <= n - 7; ++i) total += (i + 1) * count_B_43(n - i);
    return total;
}

Count compose_direct_sum(const Sequence& first, const Sequence& second, int n) {
    Count total = 0;
    for (int p = 1; p <= n - 1; ++p) total += first(p) * second(n - p);
    return total;
}

Count compose_vertical(const Sequence& first, const Sequence& second, int n) {
    Count total = 0;
    for (int p = 1; p <= n; ++p) total += first(p) * second(n - p + 1);
    return total;
}

const std::vector<FormulaInfo>& formula_registry() {
    static const std::vector<FormulaInfo> registry = [] {
        std::vector<FormulaInfo> out = {
            {"P", true, "partitions of n into exactly k parts", [](int n, int k) { return partition_count(n, k); }},
            {"L2", true, "lattices, r=2, nullity k", count_L_2red},
            {"B3.F1", true, "maximal blocks over F1, r=3, nullity k", count_B_3red_F1F2},
            {"B3.F2", true, "maximal blocks over F2, r=3, nullity k", count_B_3red_F1F2},
            {"B3.F3", true, "maximal blocks over F3, r=3, nullity k", count_B_3red_F3},
            {"B3.F4", true, "maximal blocks over F4, r=3, nullity k", count_B_3red_F4},
            {"B3", true, "maximal blocks, r=3, nullity k", count_B_3red},
            {"L3", true, "lattices, r=3, nullity k", count_L_3red},
            {"B42.3", false, "maximal blocks, r=4, k=2, basic block height 3", [](int j, int) { return count_B_42_h(j, 3); }},
            {"B42.4", false, "maximal blocks, r=4, k=2, basic block height 4", [](int j, int) { return count_B_42_h(j, 4); }},
            {"B42.5", false, "maximal blocks, r=4, k=2, basic block height 5", [](int j, int) { return count_B_42_h(j, 5); }},
            {"B42", false, "maximal blocks, r=4, k=2", [](int j, int) { return count_B_42(j); }},
            {"L42", false, "lattices, r=4, k=2", [](int n, int) { return count_L_42(n); }},
            {"L22S", false, "lattices C+B+C', r=2, k=2, both chains non-empty",
             [](int n, int) { return count_L_sandwiched_22(n); }},
        };
        for (int i = 1; i <= 22; ++i) {
            out.push_back({"BB43." + std::to_string(i), false,
                           "maximal blocks, r=4, k=3, basic block B" + std::to_string(i),
                           [i](int j, int) { return count_BB_43(j, i); }});
        }
        for (int h = 3; h <= 6; ++h) {
            out.push_back({"B43." + std::to_string(h), false,
                           "maximal blocks, r=4 comparable, k=3, basic block height " + std::to_string(h),
                           [h](int j, int) { return count_B_43_h(j, h); }});
        }
        out.push_back({"B43", false, "maximal blocks, r=4 comparable, k=3", [](int j, int) { return count_B_43(j); }});
        out.push_back({"L43", false, "lattices, r=4 comparable, k=3", [](int n, int) { return count_L_43(n); }});
        return out;
    }();
    return registry;
}

const FormulaInfo* find_formula(std::string_view id) {
    const auto& registry = formula_registry();
    const auto it = std::find_if(registry.begin(), registry.end(), [&](const FormulaInfo& f) { return f.id == id; });
    return it == registry.end() ? nullptr : &*it;
}

}  // namespace latcount
