#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latcount/formulas.hpp"

namespace latcount {

struct TableRow {
    int n = 0;
    std::optional<int> k;
    Count value;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Values of one registered formula over a parameter grid, n-major.
struct FormulaTable {
    std::string formula_id;
    bool takes_k = false;
    std::vector<TableRow> rows;

    std::string to_csv() const;
    std::string to_json() const;
    static FormulaTable from_json(const std::string& text);

    friend bool operator==(const FormulaTable&, const FormulaTable&) = default;
};

/// Grid n_lo..n_hi (times k_lo..k_hi when the formula takes k). A reversed
/// bound gives an empty table. Throws std::invalid_argument for an unknown
/// id or negative bounds.
FormulaTable formula_table(const std::string& id, int n_lo, int n_hi, int k_lo = 0, int k_hi = -1);

}  // namespace latcount
