#include "latcount/construct.hpp"

#include <numeric>

namespace latcount {

Poset chain(int m) {
    if (m < 1) throw PosetError("chain length must be positive");
    std::vector<Cover> covers;
    for (Element i = 0; i + 1 < m; ++i) covers.push_back({i, i + 1});
    return Poset(m, std::move(covers));
}

namespace {

std::vector<Cover> shifted(const Poset& p, int offset) {
    std::vector<Cover> out;
    out.reserve(p.covers().size());
    for (const auto& [x, y] : p.covers()) out.push_back({x + offset, y + offset});
    return out;
}

ElementSet maximal_elements(const Poset& p) {
    ElementSet out = 0;
    for (Element x = 0; x < p.size(); ++x) {
        if (p.upper_covers(x) == 0) out |= bit(x);
    }
    return out;
}

ElementSet minimal_elements(const Poset& p) {
    ElementSet out = 0;
    for (Element x = 0; x < p.size(); ++x) {
        if (p.lower_covers(x) == 0) out |= bit(x);
    }
    return out;
}

}  // namespace

Poset direct_sum(const Poset& p, const Poset& q) {
    const int offset = p.size();
    std::vector<Cover> covers = p.covers();
    auto upper = shifted(q, offset);
    covers.insert(covers.end(), upper.begin(), upper.end());
    for (Element x : elements_of(maximal_elements(p))) {
        for (Element y : elements_of(minimal_elements(q))) covers.push_back({x, y + offset});
    }
    return Poset(p.size() + q.size(), std::move(covers));
}

Poset vertical_sum(const Poset& p, const Poset& q) {
    const auto top = p.top();
    const auto bottom = q.bottom();
    if (!top) throw PosetError("vertical sum needs a greatest element in the lower operand");
    if (!bottom) throw PosetError("vertical sum needs a least element in the upper operand");
    // q's bottom becomes p's top; its other elements follow p's labels.
    std::vector<Element> relabel(q.size());
    Element next = p.size();
    for (Element x = 0; x < q.size(); ++x) relabel[x] = (x == *bottom) ? *top : next++;
    std::vector<Cover> covers = p.covers();
    for (const auto& [x, y] : q.covers()) covers.push_back({relabel[x], relabel[y]});
    return Poset(p.size() + q.size() - 1, std::move(covers));
}

namespace {

Poset adjunct_at(const Poset& l1, Element a, Element b, const Poset& l2, int stage) {
    if (!is_lattice(l1) || !is_lattice(l2)) {
        throw AdjunctError(AdjunctFault::NotLattice, stage, "adjunct operands must be lattices");
    }
    if (a < 0 || b < 0 || a >= l1.size() || b >= l1.size() || !l1.less(a, b)) {
        throw AdjunctError(AdjunctFault::NotBelow, stage,
                           "adjunct pair (" + std::to_string(a) + ", " + std::to_string(b) + ") needs a < b");
    }
    if (l1.covered_by(a, b)) {
        throw AdjunctError(AdjunctFault::Covering, stage,
                           "adjunct pair (" + std::to_string(a) + ", " + std::to_string(b) + ") is a cover");
    }
    const int offset = l1.size();
    std::vector<Cover> covers = l1.covers();
    auto inner = shifted(l2, offset);
    covers.insert(covers.end(), inner.begin(), inner.end());
    covers.push_back({a, *l2.bottom() + offset});
    covers.push_back({*l2.top() + offset, b});
    return Poset(l1.size() + l2.size(), std::move(covers));
}

}  // namespace

Poset adjunct(const Poset& l1, Element a, Element b, const Poset& l2) { return adjunct_at(l1, a, b, l2, -1); }

int AdjunctRep::size() const { return std::accumulate(chains.begin(), chains.end(), 0); }

Poset realize(const AdjunctRep& rep) {
    if (rep.chains.empty()) throw AdjunctError(AdjunctFault::NotLattice, -1, "representation has no chains");
    if (rep.pairs.size() + 1 != rep.chains.size()) {
        throw AdjunctError(AdjunctFault::NotLattice, -1, "need exactly one adjunct pair per extra chain");
    }
    Poset out = chain(rep.chains.front());
    for (std::size_t i = 0; i < rep.pairs.size(); ++i) {
        const auto [a, b] = rep.pairs[i];
        out = adjunct_at(out, a, b, chain(rep.chains[i + 1]), static_cast<int>(i));
    }
    return out;
}

}  // namespace latcount
