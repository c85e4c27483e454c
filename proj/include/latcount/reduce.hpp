#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "latcount/construct.hpp"
#include "latcount/poset.hpp"

namespace latcount {

/// x must be doubly irreducible. Retractible when x does not sit between
/// two reducible covers, or when the path through x is the only directed
/// path between them.
bool is_retractible(const Poset& p, Element x);

/// A reduced poset together with origin[i], the label in the input of
/// element i of the result.
struct Reduction {
    Poset poset;
    std::vector<Element> origin;
};

/// Picks one element out of a non-empty candidate set.
using RemovalPolicy = std::function<Element(ElementSet)>;

/// Lowest label first.
Element lowest_element(ElementSet candidates);

/// Removes retractible elements of Irr* one at a time, recomputing after
/// each removal, until none is left.
Reduction basic_retract_trace(const Poset& p, const RemovalPolicy& choose = lowest_element);
Poset basic_retract(const Poset& p);

/// Basic retract followed by repeated removal of pendant vertices.
Reduction basic_block_trace(const Poset& p, const RemovalPolicy& choose = lowest_element);
Poset basic_block(const Poset& p);

/// Catalog block isomorphic to `block`, if any.
std::optional<BasicBlockId> identify_block(const Poset& block);

/// Type F1..F4 of a lattice with exactly three reducible elements
/// x < y < z, read off the middle one: meet-reducible only (F1), join-reducible
/// only (F2), both and comparable to every element (F3), both otherwise (F4).
/// Empty when the lattice does not have three reducible elements.
std::optional<BasicBlockId> three_reducible_type(const Poset& lattice);

}  // namespace latcount
