#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace latcount {

using Count = mpz_class;

/// Number of partitions of n into exactly k positive parts. Zero outside
/// 1 <= k <= n, except P(0, 0) = 1.
Count partition_count(long n, long k);

/// C(n, k), zero when k < 0, n < 0 or k > n.
Count binomial(long n, long k);

// Lattices with two or three reducible elements -------------------------------

/// |L(n; 2, k)| for n >= 4, 1 <= k <= n - 3.
Count count_L_2red(int n, int k);

/// |B_1(m; 3, k)| = |B_2(m; 3, k)|, maximal blocks over F1 (or F2).
Count count_B_3red_F1F2(int m, int k);
/// |B_3(m; 3, k)|, maximal blocks over F3.
Count count_B_3red_F3(int m, int k);
/// |B_4(m; 3, k)|, maximal blocks over F4.
Count count_B_3red_F4(int m, int k);
Count count_B_3red(int m, int k);
Count count_L_3red(int n, int k);

// Four reducible elements, nullity two ----------------------------------------

/// |B(j; 4, 2, h)| for h = 3, 4, 5.
Count count_B_42_h(int j, int h);
Count count_B_42(int j);
Count count_L_42(int n);

/// Lattices C + B + C' with r = 2, k = 2 and both chains non-empty.
Count count_L_sandwiched_22(int n);

// Four comparable reducible elements, nullity three ---------------------------

/// Maximal blocks on j elements whose basic block is B_i, 1 <= i <= 22.
/// Throws std::out_of_range for any other i.
Count count_BB_43(int j, int i);

/// |B(j; 4, 3, h)| for h = 3..6, as the sum of its member classes.
Count count_B_43_h(int j, int h);

/// The same totals for h = 3, 4, 5 evaluated from the merged sums with
/// multiplicities, as printed for the whole height class.
Count count_B_43_h_merged(int j, int h);

Count count_B_43(int j);
Count count_L_43(int n);

// Composition of classes under sums -------------------------------------------

using Sequence = std::function<Count(int)>;

/// sum_{p=1}^{n-1} first(p) * second(n - p)
Count compose_direct_sum(const Sequence& first, const Sequence& second, int n);
/// sum_{p=1}^{n} first(p) * second(n - p + 1)
Count compose_vertical(const Sequence& first, const Sequence& second, int n);

// Registry used by the CLI and reports -----------------------------------------

struct FormulaInfo {
    std::string id;
    bool takes_k;
    std::string summary;
    std::function<Count(int, int)> eval;
};

const std::vector<FormulaInfo>& formula_registry();
const FormulaInfo* find_formula(std::string_view id);

}  // namespace latcount
