#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latcount/poset.hpp"

namespace latcount {

Poset chain(int m);

/// Every element of p below every element of q; q is relabelled after p.
Poset direct_sum(const Poset& p, const Poset& q);

/// Glues top(p) to bottom(q). Throws PosetError if either is missing.
Poset vertical_sum(const Poset& p, const Poset& q);

enum class AdjunctFault { NotLattice, NotBelow, Covering };

class AdjunctError : public std::invalid_argument {
public:
    AdjunctError(AdjunctFault fault, int stage, const std::string& what)
        : std::invalid_argument(what), fault_(fault), stage_(stage) {}
    AdjunctFault fault() const { return fault_; }
    /// Index of the offending adjunct pair in realize(), -1 otherwise.
    int stage() const { return stage_; }

private:
    AdjunctFault fault_;
    int stage_;
};

/// L1 ]^b_a L2: L2 is placed strictly between a and b, adding the covers
/// a < bottom(L2) and top(L2) < b. L2 is relabelled after L1.
Poset adjunct(const Poset& l1, Element a, Element b, const Poset& l2);

/// C0 ]^{b1}_{a1} C1 ... ]^{bk}_{ak} Ck. Chain i occupies the labels after
/// chains 0..i-1, listed bottom to top; pairs[i-1] attaches chain i and
/// may name any element placed before it.
struct AdjunctRep {
    std::vector<int> chains;
    std::vector<std::pair<Element, Element>> pairs;

    int size() const;
    friend bool operator==(const AdjunctRep&, const AdjunctRep&) = default;
};

Poset realize(const AdjunctRep& rep);

// Basic-block catalog --------------------------------------------------------

enum class BasicBlockId {
    F1, F2, F3, F4, F5, F6, F7,
    B1, B2, B3, B4, B5, B6, B7, B8, B9, B10, B11,
    B12, B13, B14, B15, B16, B17, B18, B19, B20, B21, B22,
};

inline constexpr int kBasicBlockCount = 29;

std::string_view name_of(BasicBlockId id);
std::optional<BasicBlockId> parse_block_id(std::string_view text);
const std::array<BasicBlockId, kBasicBlockCount>& all_block_ids();

/// Index 1..22 of a B-block, 1..7 of an F-block.
int block_index(BasicBlockId id);
bool is_b_block(BasicBlockId id);

struct CatalogEntry {
    BasicBlockId id;
    Poset poset;
    int reducibles;
    int nullity;
    int height;
};

const CatalogEntry& catalog_entry(BasicBlockId id);
const Poset& catalog(BasicBlockId id);

/// The adjunct-of-chains representation quoted for a block, when one is
/// given (B1, B3, B4, B5, B6, B13, B15, B19, B21, B22).
std::optional<AdjunctRep> quoted_representation(BasicBlockId id);

}  // namespace latcount
