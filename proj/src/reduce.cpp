#include "latcount/reduce.hpp"

#include <algorithm>
#include <map>

#include "latcount/canon.hpp"

namespace latcount {

bool is_retractible(const Poset& p, Element x) {
    if (x < 0 || x >= p.size()) throw PosetError("element out of range");
    const ElementSet ups = p.upper_covers(x);
    const ElementSet downs = p.lower_covers(x);
    if (popcount(ups) > 1 || popcount(downs) > 1) {
        throw PosetError("element " + std::to_string(x) + " is not doubly irreducible");
    }
    if (ups == 0 || downs == 0) return true;
    const Element y = std::countr_zero(downs);
    const Element z = std::countr_zero(ups);
    const ElementSet red = reducible_elements(p);
    if (!(red & bit(y)) || !(red & bit(z))) return true;
    // Another directed path leaves y through a different upper cover.
    for (Element w : elements_of(p.upper_covers(y) & ~bit(x))) {
        if (p.leq(w, z)) return false;
    }
    return true;
}

Element lowest_element(ElementSet candidates) { return std::countr_zero(candidates); }

namespace {

void remove(Reduction& r, Element x) {
    r.poset = r.poset.without(x);
    r.origin.erase(r.origin.begin() + x);
}

}  // namespace

Reduction basic_retract_trace(const Poset& p, const RemovalPolicy& choose) {
    Reduction r{p, {}};
    r.origin.resize(p.size());
    for (Element x = 0; x < p.size(); ++x) r.origin[x] = x;
    for (;;) {
        ElementSet candidates = 0;
        for (Element x : elements_of(irr_star(r.poset))) {
            if (is_retractible(r.poset, x)) candidates |= bit(x);
        }
        if (candidates == 0) return r;
        remove(r, choose(candidates));
    }
}

Poset basic_retract(const Poset& p) { return basic_retract_trace(p).poset; }

Reduction basic_block_trace(const Poset& p, const RemovalPolicy& choose) {
    Reduction r = basic_retract_trace(p, choose);
    for (;;) {
        const ElementSet pendants = pendant_vertices(r.poset);
        if (pendants == 0) return r;
        remove(r, choose(pendants));
    }
}

Poset basic_block(const Poset& p) { return basic_block_trace(p).poset; }

std::optional<BasicBlockId> identify_block(const Poset& block) {
    static const std::map<CanonicalForm, BasicBlockId> index = [] {
        std::map<CanonicalForm, BasicBlockId> out;
        for (BasicBlockId id : all_block_ids()) out.emplace(canonical_form(catalog(id)), id);
        return out;
    }();
    const auto it = index.find(canonical_form(block));
    if (it == index.end()) return std::nullopt;
    return it->second;
}

std::optional<BasicBlockId> three_reducible_type(const Poset& lattice) {
    const ElementSet red = lattice_reducibles(lattice);
    if (popcount(red) != 3) return std::nullopt;
    std::vector<Element> chain_of = elements_of(red);
    std::sort(chain_of.begin(), chain_of.end(),
              [&](Element u, Element v) { return popcount(lattice.down_set(u)) < popcount(lattice.down_set(v)); });
    const Element y = chain_of[1];
    const bool meet_red = popcount(lattice.upper_covers(y)) >= 2;
    const bool join_red = popcount(lattice.lower_covers(y)) >= 2;
    if (!join_red) return BasicBlockId::F1;
    if (!meet_red) return BasicBlockId::F2;
    const ElementSet comparable = lattice.up_set(y) | lattice.down_set(y);
    return comparable == lattice.all() ? BasicBlockId::F3 : BasicBlockId::F4;
}

}  // namespace latcount
