#include "latcount/table.hpp"

#include <stdexcept>

#include "json.hpp"

namespace latcount {

std::string FormulaTable::to_csv() const {
    std::string out = "formula_id,n,k,value\n";
    for (const TableRow& row : rows) {
        out += formula_id + ',' + std::to_string(row.n) + ',';
        if (row.k) out += std::to_string(*row.k);
        out += ',' + row.value.get_str() + '\n';
    }
    return out;
}

std::string FormulaTable::to_json() const {
    nlohmann::ordered_json doc;
    doc["formula_id"] = formula_id;
    doc["takes_k"] = takes_k;
    auto& items = doc["rows"] = nlohmann::ordered_json::array();
    for (const TableRow& row : rows) {
        nlohmann::ordered_json item;
        item["n"] = row.n;
        item["k"] = row.k ? nlohmann::ordered_json(*row.k) : nlohmann::ordered_json(nullptr);
        // Decimal strings keep values exact past 64 bits.
        item["value"] = row.value.get_str();
        items.push_back(std::move(item));
    }
    return doc.dump(2) + "\n";
}

FormulaTable FormulaTable::from_json(const std::string& text) {
    const auto doc = nlohmann::json::parse(text);
    FormulaTable table;
    table.formula_id = doc.at("formula_id").get<std::string>();
    table.takes_k = doc.at("takes_k").get<bool>();
    for (const auto& item : doc.at("rows")) {
        TableRow row;
        row.n = item.at("n").get<int>();
        if (!item.at("k").is_null()) row.k = item.at("k").get<int>();
        row.value = Count(item.at("value").get<std::string>());
        table.rows.push_back(std::move(row));
    }
    return table;
}

FormulaTable formula_table(const std::string& id, int n_lo, int n_hi, int k_lo, int k_hi) {
    const FormulaInfo* formula = find_formula(id);
    if (formula == nullptr) throw std::invalid_argument("unknown formula id: " + id);
    if (n_lo < 0 || n_hi < 0 || (formula->takes_k && (k_lo < 0 || k_hi < -1))) {
        throw std::invalid_argument("ranges must be non-negative");
    }
    FormulaTable table{id, formula->takes_k, {}};
    for (int n = n_lo; n <= n_hi; ++n) {
        if (!formula->takes_k) {
            table.rows.push_back({n, std::nullopt, formula->eval(n, 0)});
            continue;
        }
        for (int k = k_lo; k <= k_hi; ++k) table.rows.push_back({n, k, formula->eval(n, k)});
    }
    return table;
}

}  // namespace latcount
