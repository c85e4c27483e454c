#include <algorithm>

#include "latcount/construct.hpp"

namespace latcount {
namespace {

struct Transcription {
    BasicBlockId id;
    int size;
    std::vector<Cover> covers;
    int reducibles;
    int nullity;
    int height;
};

// Hasse diagrams of the basic blocks, read off the published figures.
// Labels run bottom to top by drawing height, left to right within a row.
const std::vector<Transcription>& transcriptions() {
    static const std::vector<Transcription> data = {
        {BasicBlockId::F1, 6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 5}, {4, 5}}, 3, 2, 3},
        {BasicBlockId::F2, 6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}}, 3, 2, 3},
        {BasicBlockId::F3, 7, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 6}}, 3, 2, 4},
        {BasicBlockId::F4, 8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 7}}, 3, 3, 4},
        {BasicBlockId::F5, 6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 5}, {4, 5}}, 4, 2, 3},
        {BasicBlockId::F6, 7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 6}, {3, 5}, {4, 5}, {5, 6}}, 4, 2, 4},
        {BasicBlockId::F7, 8, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 7}, {6, 7}}, 4, 2, 5},
        {BasicBlockId::B1, 7, {{0, 1}, {0, 2}, {0, 3}, {1, 5}, {2, 5}, {3, 4}, {3, 5}, {4, 6}, {5, 6}}, 4, 3, 3},
        {BasicBlockId::B2, 7, {{0, 1}, {0, 2}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 6}, {4, 6}, {5, 6}}, 4, 3, 3},
        {BasicBlockId::B3, 7, {{0, 1}, {0, 2}, {0, 3}, {1, 5}, {2, 4}, {2, 5}, {3, 6}, {4, 6}, {5, 6}}, 4, 3, 3},
        {BasicBlockId::B4, 8, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 7}, {3, 6}, {4, 6}, {5, 6}, {6, 7}}, 4, 3, 4},
        {BasicBlockId::B5, 8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 7}, {3, 7}, {4, 6}, {5, 6}, {6, 7}}, 4, 3, 4},
        {BasicBlockId::B6, 8, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {3, 6}, {4, 7}, {5, 7}, {6, 7}}, 4, 3, 4},
        {BasicBlockId::B7, 8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 6}, {4, 5}, {4, 6}, {5, 7}, {6, 7}}, 4, 3, 4},
        {BasicBlockId::B8, 8, {{0, 1}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {2, 6}, {3, 7}, {4, 7}, {5, 7}, {6, 7}}, 4, 3, 4},
        {BasicBlockId::B9, 8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 7}, {4, 6}, {5, 6}, {6, 7}}, 4, 3, 4},
        {BasicBlockId::B10, 8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 7}, {3, 6}, {4, 6}, {5, 6}, {6, 7}}, 4, 3, 4},
        {BasicBlockId::B11, 8, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 7}, {3, 7}, {4, 6}, {5, 6}, {6, 7}}, 4, 3, 4},
        {BasicBlockId::B12, 8, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 6}, {3, 6}, {4, 6}, {5, 7}, {6, 7}}, 4, 3, 4},
        {BasicBlockId::B13, 9, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {6, 8}, {7, 8}}, 4, 3, 5},
        {BasicBlockId::B14, 9, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {4, 7}, {5, 8}, {6, 8}, {7, 8}}, 4, 3, 5},
        {BasicBlockId::B15, 9, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {3, 6}, {4, 7}, {5, 7}, {6, 8}, {7, 8}}, 4, 3, 5},
        {BasicBlockId::B16, 9, {{0, 1}, {0, 2}, {1, 5}, {2, 3}, {2, 4}, {3, 5}, {4, 5}, {5, 6}, {5, 7}, {6, 8}, {7, 8}}, 4, 3, 5},
        {BasicBlockId::B17, 9, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}, {5, 6}, {5, 7}, {6, 8}, {7, 8}}, 4, 3, 5},
        {BasicBlockId::B18, 9, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 8}, {5, 6}, {5, 7}, {6, 8}, {7, 8}}, 4, 3, 5},
        {BasicBlockId::B19, 9, {{0, 1}, {0, 2}, {0, 5}, {1, 3}, {2, 3}, {3, 4}, {3, 6}, {4, 7}, {5, 8}, {6, 7}, {7, 8}}, 4, 3, 5},
        {BasicBlockId::B20, 9, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 8}, {3, 5}, {4, 5}, {5, 6}, {5, 7}, {6, 8}, {7, 8}}, 4, 3, 5},
        {BasicBlockId::B21, 9, {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {2, 3}, {3, 5}, {4, 8}, {5, 6}, {5, 7}, {6, 8}, {7, 8}}, 4, 3, 5},
        {BasicBlockId::B22, 10, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 6}, {6, 7}, {6, 8}, {7, 9}, {8, 9}}, 4, 3, 6},
    };
    return data;
}

constexpr std::array<std::string_view, kBasicBlockCount> kNames = {
    "F1", "F2", "F3", "F4", "F5", "F6", "F7",
    "B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "B9", "B10", "B11",
    "B12", "B13", "B14", "B15", "B16", "B17", "B18", "B19", "B20", "B21", "B22",
};

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;
    for (const auto& t : transcriptions()) {
        out.push_back({t.id, Poset(t.size, t.covers), t.reducibles, t.nullity, t.height});
    }
    return out;
}

}  // namespace

std::string_view name_of(BasicBlockId id) { return kNames[static_cast<std::size_t>(id)]; }

std::optional<BasicBlockId> parse_block_id(std::string_view text) {
    const auto it = std::find(kNames.begin(), kNames.end(), text);
    if (it == kNames.end()) return std::nullopt;
    return static_cast<BasicBlockId>(it - kNames.begin());
}

const std::array<BasicBlockId, kBasicBlockCount>& all_block_ids() {
    static const auto ids = [] {
        std::array<BasicBlockId, kBasicBlockCount> out{};
        for (int i = 0; i < kBasicBlockCount; ++i) out[i] = static_cast<BasicBlockId>(i);
        return out;
    }();
    return ids;
}

bool is_b_block(BasicBlockId id) { return id >= BasicBlockId::B1; }

int block_index(BasicBlockId id) {
    const int raw = static_cast<int>(id);
    return is_b_block(id) ? raw - static_cast<int>(BasicBlockId::B1) + 1 : raw + 1;
}

const CatalogEntry& catalog_entry(BasicBlockId id) {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries[static_cast<std::size_t>(id)];
}

const Poset& catalog(BasicBlockId id) { return catalog_entry(id).poset; }

std::optional<AdjunctRep> quoted_representation(BasicBlockId id) {
    // Base chain C is labelled 0..|C|-1 bottom to top; each extra chain is
    // a single element.
    switch (id) {
        case BasicBlockId::B1:  // C: 0 a b 1
            return AdjunctRep{{4, 1, 1, 1}, {{1, 3}, {0, 2}, {0, 2}}};
        case BasicBlockId::B3:
            return AdjunctRep{{4, 1, 1, 1}, {{0, 2}, {1, 3}, {0, 3}}};
        case BasicBlockId::B4:  // C: 0 a x b 1
            return AdjunctRep{{5, 1, 1, 1}, {{1, 3}, {1, 3}, {0, 4}}};
        case BasicBlockId::B5:
            return AdjunctRep{{5, 1, 1, 1}, {{1, 3}, {0, 4}, {0, 4}}};
        case BasicBlockId::B6:  // C: 0 a b y 1
            return AdjunctRep{{5, 1, 1, 1}, {{1, 4}, {2, 4}, {0, 2}}};
        case BasicBlockId::B13:  // C: 0 x a b y 1
            return AdjunctRep{{6, 1, 1, 1}, {{0, 2}, {0, 2}, {3, 5}}};
        case BasicBlockId::B15:  // C: 0 x a y b 1
            return AdjunctRep{{6, 1, 1, 1}, {{0, 2}, {2, 4}, {2, 5}}};
        case BasicBlockId::B19:
            return AdjunctRep{{6, 1, 1, 1}, {{0, 2}, {2, 4}, {0, 5}}};
        case BasicBlockId::B21:  // C: 0 x a b y 1
            return AdjunctRep{{6, 1, 1, 1}, {{0, 2}, {3, 5}, {0, 5}}};
        case BasicBlockId::B22:  // C: 0 x a y b z 1
            return AdjunctRep{{7, 1, 1, 1}, {{0, 2}, {2, 4}, {4, 6}}};
        default:
            return std::nullopt;
    }
}

}  // namespace latcount
