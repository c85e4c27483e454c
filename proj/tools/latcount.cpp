// latcount: formula evaluation, brute-force oracles and catalog export.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "latcount/canon.hpp"
#include "latcount/construct.hpp"
#include "latcount/enumerate.hpp"
#include "latcount/formulas.hpp"
#include "latcount/reduce.hpp"
#include "latcount/table.hpp"

using namespace latcount;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitRefused = 2;
constexpr int kExitUsage = 64;

struct Range {
    int lo = 0;
    int hi = -1;
};

// "a..b" or a single integer "a".
Range parse_range(const std::string& text) {
    Range range;
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            range.lo = range.hi = std::stoi(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
        } else {
            const std::string lo = text.substr(0, dots);
            const std::string hi = text.substr(dots + 2);
            range.lo = std::stoi(lo, &used);
            if (used != lo.size()) throw std::invalid_argument(text);
            range.hi = std::stoi(hi, &used);
            if (used != hi.size()) throw std::invalid_argument(text);
        }
    } catch (const std::logic_error&) {
        throw CLI::ValidationError("range", "expected a..b or an integer, got '" + text + "'");
    }
    if (range.lo < 0 || range.hi < 0) throw CLI::ValidationError("range", "bounds must be non-negative");
    return range;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string block_header(const CatalogEntry& entry) {
    std::ostringstream out;
    out << name_of(entry.id) << " n=" << entry.poset.size() << " r=" << entry.reducibles << " k=" << entry.nullity
        << " h=" << entry.height;
    return out.str();
}

std::string class_line(const ClassKey& key) {
    std::ostringstream out;
    out << "n=" << key.n << " r=" << key.r << " k=" << key.k << " rc=" << (key.rc ? "true" : "false") << " h=";
    if (key.h) {
        out << *key.h;
    } else {
        out << '-';
    }
    return out.str();
}

Poset read_poset_argument(const std::string& path) {
    if (path == "-") return read_text(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_text(in);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counting lattices by reducible elements and nullity"};
    app.require_subcommand(1);

    // formula
    auto* formula_cmd = app.add_subcommand("formula", "Evaluate one counting formula");
    std::string formula_id;
    std::optional<int> formula_n;
    std::optional<int> formula_k;
    formula_cmd->add_option("id", formula_id, "Formula id (see 'formula list')")->required();
    formula_cmd->add_option("--n", formula_n, "Size parameter (n, m or j)");
    formula_cmd->add_option("--k", formula_k, "Nullity or part count, for formulas that take one");

    // table
    auto* table_cmd = app.add_subcommand("table", "Tabulate a formula over a parameter grid");
    std::string table_id;
    std::string table_n = "1..12";
    std::string table_k = "1..3";
    std::string table_format = "csv";
    table_cmd->add_option("id", table_id, "Formula id")->required();
    table_cmd->add_option("--n", table_n, "Range a..b of n")->capture_default_str();
    table_cmd->add_option("--k", table_k, "Range a..b of k, ignored for formulas without k")->capture_default_str();
    table_cmd->add_option("--format", table_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Compare formulas with brute-force lattice counts");
    int verify_n_max = 8;
    std::string verify_classes;
    std::string verify_oracle = "auto";
    std::string verify_format = "csv";
    verify_cmd->add_option("--n-max", verify_n_max, "Largest lattice size")->capture_default_str();
    verify_cmd->add_option("--classes", verify_classes, "Comma-separated class ids (default: all)");
    verify_cmd->add_option("--oracle", verify_oracle, "auto, exhaustive or adjunct")
        ->check(CLI::IsMember({"auto", "exhaustive", "adjunct"}))
        ->capture_default_str();
    verify_cmd->add_option("--format", verify_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "Print catalog basic blocks");
    std::string catalog_id;
    bool catalog_dot = false;
    catalog_cmd->add_option("id", catalog_id, "Block id (F1..F7, B1..B22) or 'all'")->required();
    catalog_cmd->add_flag("--dot", catalog_dot, "Graphviz output");

    // enumerate
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List lattices up to isomorphism");
    int enumerate_n = 0;
    std::string enumerate_oracle = "exhaustive";
    int enumerate_k_max = 3;
    std::string enumerate_format = "keys";
    enumerate_cmd->add_option("--n", enumerate_n, "Lattice size")->required();
    enumerate_cmd->add_option("--oracle", enumerate_oracle, "exhaustive or adjunct")
        ->check(CLI::IsMember({"exhaustive", "adjunct"}))
        ->capture_default_str();
    enumerate_cmd->add_option("--k-max", enumerate_k_max, "Largest nullity for the adjunct oracle")
        ->capture_default_str();
    enumerate_cmd->add_option("--format", enumerate_format, "keys, text, dot or classes")
        ->check(CLI::IsMember({"keys", "text", "dot", "classes"}))
        ->capture_default_str();

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "Print the basic block of a poset file");
    std::string reduce_path;
    bool reduce_dot = false;
    reduce_cmd->add_option("file", reduce_path, "Poset text file, or - for stdin")->required();
    reduce_cmd->add_flag("--dot", reduce_dot, "Graphviz output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*formula_cmd) {
            if (formula_id == "list") {
                for (const FormulaInfo& f : formula_registry()) {
                    std::cout << f.id << (f.takes_k ? " (n, k)" : " (n)") << "  " << f.summary << '\n';
                }
                return 0;
            }
            const FormulaInfo* formula = find_formula(formula_id);
            if (formula == nullptr) {
                std::cerr << "unknown formula id '" << formula_id << "'\n" << formula_cmd->help();
                return kExitUsage;
            }
            if (!formula_n) {
                std::cerr << "formula " << formula_id << " needs --n\n" << formula_cmd->help();
                return kExitUsage;
            }
            if (formula->takes_k && !formula_k) {
                std::cerr << "formula " << formula_id << " needs --k\n" << formula_cmd->help();
                return kExitUsage;
            }
            std::cout << formula->eval(*formula_n, formula_k.value_or(0)).get_str() << '\n';
            return 0;
        }

        if (*table_cmd) {
            if (find_formula(table_id) == nullptr) {
                std::cerr << "unknown formula id '" << table_id << "'\n" << table_cmd->help();
                return kExitUsage;
            }
            const Range n = parse_range(table_n);
            const Range k = parse_range(table_k);
            const FormulaTable table = formula_table(table_id, n.lo, n.hi, k.lo, k.hi);
            std::cout << (table_format == "json" ? table.to_json() : table.to_csv());
            return 0;
        }

        if (*verify_cmd) {
            const std::vector<std::string> classes =
                verify_classes.empty() ? verifiable_classes() : split_list(verify_classes);
            OraclePolicy policy = OraclePolicy::Auto;
            if (verify_oracle == "exhaustive") policy = OraclePolicy::Exhaustive;
            if (verify_oracle == "adjunct") policy = OraclePolicy::Adjunct;
            VerifyReport report;
            try {
                report = verify(verify_n_max, classes, policy);
            } catch (const BudgetError& e) {
                std::cerr << "refused: " << e.what() << '\n';
                return kExitRefused;
            }
            std::cout << (verify_format == "json" ? report.to_json() : report.to_csv());
            return report.passed() ? 0 : kExitMismatch;
        }

        if (*catalog_cmd) {
            std::vector<BasicBlockId> ids;
            if (catalog_id == "all") {
                ids.assign(all_block_ids().begin(), all_block_ids().end());
            } else if (auto id = parse_block_id(catalog_id)) {
                ids.push_back(*id);
            } else {
                std::cerr << "unknown block id '" << catalog_id << "'\n";
                return kExitUsage;
            }
            for (BasicBlockId id : ids) {
                const CatalogEntry& entry = catalog_entry(id);
                if (catalog_dot) {
                    std::cout << "// " << block_header(entry) << '\n' << to_dot(entry.poset, std::string(name_of(id)));
                } else {
                    std::cout << "# " << block_header(entry) << '\n' << to_text(entry.poset);
                }
            }
            return 0;
        }

        if (*enumerate_cmd) {
            std::vector<CanonicalForm> keys;
            try {
                keys = enumerate_oracle == "exhaustive" ? enumerate_all_lattices(enumerate_n)
                                                        : enumerate_adjunct_lattices(enumerate_n, enumerate_k_max);
            } catch (const BudgetError& e) {
                std::cerr << "refused: " << e.what() << '\n';
                return kExitRefused;
            }
            if (enumerate_format == "classes") {
                std::map<ClassKey, int> counts;
                for (const CanonicalForm& key : keys) ++counts[classify(key.poset())];
                for (const auto& [cls, count] : counts) std::cout << class_line(cls) << " count=" << count << '\n';
                return 0;
            }
            int index = 0;
            for (const CanonicalForm& key : keys) {
                if (enumerate_format == "keys") {
                    std::cout << key.hex() << '\n';
                } else if (enumerate_format == "text") {
                    std::cout << "# " << key.hex() << '\n' << to_text(key.poset());
                } else {
                    std::cout << to_dot(key.poset(), "L" + std::to_string(index));
                }
                ++index;
            }
            return 0;
        }

        if (*reduce_cmd) {
            const Poset input = read_poset_argument(reduce_path);
            const Poset block = basic_block(input);
            std::string header = "basic block n=" + std::to_string(block.size()) +
                                 " r=" + std::to_string(popcount(reducible_elements(block))) +
                                 " k=" + std::to_string(nullity(block));
            if (is_lattice(block)) {
                header += " h=" + std::to_string(height(block));
                if (auto id = identify_block(block)) header += " block=" + std::string(name_of(*id));
            }
            if (reduce_dot) {
                std::cout << "// " << header << '\n' << to_dot(block, "block");
            } else {
                std::cout << "# " << header << '\n' << to_text(block);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
