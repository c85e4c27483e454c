#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "latcount/canon.hpp"
#include "latcount/construct.hpp"
#include "latcount/formulas.hpp"
#include "latcount/poset.hpp"

namespace latcount {

/// Classification of a lattice: size, reducible count, nullity, whether the
/// reducibles form a chain, and the height of its basic block (r >= 2).
struct ClassKey {
    int n = 0;
    int r = 0;
    int k = 0;
    bool rc = true;
    std::optional<int> h;

    friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
    friend bool operator==(const ClassKey&, const ClassKey&) = default;
};

ClassKey classify(const Poset& p);

/// Largest n accepted by the exhaustive and adjunct oracles.
inline constexpr int kExhaustiveMaxN = 10;
inline constexpr int kAdjunctMaxN = 12;
inline constexpr int kAdjunctMaxK = 4;

class BudgetError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Worker threads used by the oracles: LATCOUNT_WORKERS if set, else 1.
int default_workers();

/// One canonical key per isomorphism class of n-element lattices, sorted.
std::vector<CanonicalForm> enumerate_all_lattices(int n, int workers = default_workers());

/// Isomorphism classes of adjuncts of at most k_max + 1 chains on n
/// elements, i.e. dismantlable lattices of nullity <= k_max, sorted.
std::vector<CanonicalForm> enumerate_adjunct_lattices(int n, int k_max, int workers = default_workers());

// Census and verification ------------------------------------------------------

enum class Oracle { Exhaustive, Adjunct };
std::string_view name_of(Oracle oracle);

/// Everything the formula checks need to know about one lattice.
struct LatticeFacts {
    CanonicalForm key;
    ClassKey cls;
    bool maximal_block = false;   // least element meet-reducible, greatest join-reducible
    bool sandwiched = false;      // neither bound reducible
    bool dismantlable = false;
    std::optional<BasicBlockId> block;       // exact catalog match of the basic block
    std::optional<BasicBlockId> block_type;  // F1..F4 when r = 3
};

LatticeFacts lattice_facts(const Poset& lattice);

struct Census {
    int n = 0;
    Oracle oracle = Oracle::Exhaustive;
    /// Largest nullity present in full; -1 means unbounded.
    int k_limit = -1;
    std::vector<LatticeFacts> lattices;
};

Census take_census(int n, Oracle oracle, int workers = default_workers());

struct VerifyRow {
    std::string formula_id;
    int n = 0;
    std::optional<int> k;
    std::optional<int> h;
    Count formula_value;
    Count oracle_value;
    bool match = false;
    Oracle oracle = Oracle::Exhaustive;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;

    bool passed() const;
    std::string to_csv() const;
    std::string to_json() const;
};

/// Checkable class ids: L2, L3, L42, L43, L22S, B3, B3.F1..B3.F4, B42,
/// B42.3..B42.5, B43, B43.3..B43.6, BB43.1..BB43.22.
const std::vector<std::string>& verifiable_classes();

enum class OraclePolicy { Auto, Exhaustive, Adjunct };

/// Compares every formula value in `classes` with the oracle count for
/// sizes up to n_max. Auto uses the exhaustive oracle within its budget
/// and the adjunct oracle above it. Rows the chosen oracle cannot decide
/// (nullity above its limit) are left out.
VerifyReport verify(int n_max, const std::vector<std::string>& classes, OraclePolicy policy = OraclePolicy::Auto,
                    int workers = default_workers());

/// Same comparison against precomputed censuses (indexed by n).
VerifyReport verify_against(const std::vector<Census>& censuses, const std::vector<std::string>& classes);

}  // namespace latcount
