#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latcount {

/// Element sets are bitmasks over the dense labels 0..n-1.
using ElementSet = std::uint64_t;
using Element = int;

/// x covers-below y: x < y with nothing strictly between.
struct Cover {
    Element lower;
    Element upper;
    friend auto operator<=>(const Cover&, const Cover&) = default;
};

class PosetError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline int popcount(ElementSet s) { return std::popcount(s); }
inline ElementSet bit(Element x) { return ElementSet{1} << x; }
std::vector<Element> elements_of(ElementSet s);

/// A finite poset stored as its Hasse diagram, with the reflexive
/// order relation precomputed. Immutable once built.
class Poset {
public:
    static constexpr int kMaxElements = 64;

    Poset() = default;

    /// Throws PosetError unless `covers` is an acyclic, transitively
    /// reduced relation on 0..n-1.
    Poset(int n, std::vector<Cover> covers);

    /// Builds the poset whose order relation is `up_sets` (row x holds
    /// every y with x <= y). The rows must describe a partial order.
    static Poset from_order(std::vector<ElementSet> up_sets);

    int size() const { return n_; }
    const std::vector<Cover>& covers() const { return covers_; }
    int edge_count() const { return static_cast<int>(covers_.size()); }

    ElementSet all() const { return n_ == 64 ? ~ElementSet{0} : bit(n_) - 1; }
    ElementSet upper_covers(Element x) const { return up_covers_[x]; }
    ElementSet lower_covers(Element x) const { return down_covers_[x]; }
    ElementSet up_set(Element x) const { return up_[x]; }
    ElementSet down_set(Element x) const { return down_[x]; }

    bool leq(Element x, Element y) const { return (up_[x] >> y) & 1U; }
    bool less(Element x, Element y) const { return x != y && leq(x, y); }
    bool covered_by(Element x, Element y) const { return (up_covers_[x] >> y) & 1U; }
    bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

    /// Unique least / greatest element, if any.
    std::optional<Element> bottom() const;
    std::optional<Element> top() const;

    /// Relabels element x as perm[x].
    Poset relabel(std::span<const Element> perm) const;

    /// Induced subposet on `keep`, relabelled densely in increasing order.
    Poset induced(ElementSet keep) const;
    Poset without(Element x) const { return induced(all() & ~bit(x)); }

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.n_ == b.n_ && a.covers_ == b.covers_;
    }

private:
    void build_closure();

    int n_ = 0;
    std::vector<Cover> covers_;
    std::vector<ElementSet> up_covers_;
    std::vector<ElementSet> down_covers_;
    std::vector<ElementSet> up_;
    std::vector<ElementSet> down_;
};

/// Reflexive order relation as an n x n boolean matrix.
std::vector<std::vector<bool>> transitive_closure(const Poset& p);

bool is_lattice(const Poset& p);

/// Number of components of the undirected cover graph.
int component_count(const Poset& p);

/// Cycle rank of the cover graph: edges - vertices + components.
int nullity(const Poset& p);

/// Length (number of covers) of a longest chain.
int height(const Poset& p);

/// Elements with at least two upper covers or two lower covers.
ElementSet reducible_elements(const Poset& p);

/// Irr: at most one upper and one lower cover.
ElementSet doubly_irreducible(const Poset& p);
/// Irr*: exactly one upper and one lower cover.
ElementSet irr_star(const Poset& p);

/// True iff the reducible elements form a chain. Throws on non-lattices.
bool is_rc(const Poset& p);

/// Same as reducible_elements but rejects non-lattices.
ElementSet lattice_reducibles(const Poset& p);

Poset dual(const Poset& p);

/// Elements of degree one in the undirected cover graph.
ElementSet pendant_vertices(const Poset& p);

/// Removes doubly irreducible elements until one element is left or
/// none can be removed. Only meaningful for lattices.
bool is_dismantlable(const Poset& p);

// Text format: first line n, then one "x y" line per cover x < y.
std::string to_text(const Poset& p);
Poset parse_text(const std::string& text);
Poset read_text(std::istream& in);

/// Graphviz digraph; each cover is drawn with the upper element on top.
std::string to_dot(const Poset& p, const std::string& name = "P",
                   const std::vector<std::string>& labels = {});

}  // namespace latcount
