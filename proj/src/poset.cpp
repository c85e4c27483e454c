#include "latcount/poset.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

namespace latcount {

std::vector<Element> elements_of(ElementSet s) {
    std::vector<Element> out;
    out.reserve(popcount(s));
    while (s != 0) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

Poset::Poset(int n, std::vector<Cover> covers) : n_(n), covers_(std::move(covers)) {
    if (n < 1 || n > kMaxElements) {
        throw PosetError("element count must be in 1.." + std::to_string(kMaxElements));
    }
    std::sort(covers_.begin(), covers_.end());
    if (std::adjacent_find(covers_.begin(), covers_.end()) != covers_.end()) {
        throw PosetError("duplicate cover pair");
    }
    up_covers_.assign(n, 0);
    down_covers_.assign(n, 0);
    for (const auto& [x, y] : covers_) {
        if (x < 0 || y < 0 || x >= n || y >= n) {
            throw PosetError("cover endpoint out of range");
        }
        if (x == y) {
            throw PosetError("self cover on element " + std::to_string(x));
        }
        up_covers_[x] |= bit(y);
        down_covers_[y] |= bit(x);
    }
    build_closure();
    for (const auto& [x, y] : covers_) {
        for (Element z : elements_of(up_covers_[x] & ~bit(y))) {
            if (leq(z, y)) {
                throw PosetError("transitive cover " + std::to_string(x) + " " + std::to_string(y));
            }
        }
    }
}

void Poset::build_closure() {
    // Kahn's algorithm from the top down so every upper cover is final
    // before its lower covers read it.
    std::vector<int> pending(n_);
    std::vector<Element> ready;
    for (Element x = 0; x < n_; ++x) {
        pending[x] = popcount(up_covers_[x]);
        if (pending[x] == 0) ready.push_back(x);
    }
    up_.assign(n_, 0);
    int done = 0;
    while (!ready.empty()) {
        Element x = ready.back();
        ready.pop_back();
        ++done;
        ElementSet acc = bit(x);
        for (Element y : elements_of(up_covers_[x])) acc |= up_[y];
        up_[x] = acc;
        for (Element w : elements_of(down_covers_[x])) {
            if (--pending[w] == 0) ready.push_back(w);
        }
    }
    if (done != n_) throw PosetError("cover relation has a cycle");
    down_.assign(n_, 0);
    for (Element x = 0; x < n_; ++x) {
        for (Element y : elements_of(up_[x])) down_[y] |= bit(x);
    }
}

Poset Poset::from_order(std::vector<ElementSet> up_sets) {
    const int n = static_cast<int>(up_sets.size());
    if (n < 1 || n > kMaxElements) {
        throw PosetError("element count must be in 1.." + std::to_string(kMaxElements));
    }
    for (Element x = 0; x < n; ++x) {
        if (!(up_sets[x] & bit(x))) throw PosetError("order relation is not reflexive");
        for (Element y : elements_of(up_sets[x])) {
            if (y >= n) throw PosetError("order relation out of range");
            if (y != x && (up_sets[y] & bit(x))) throw PosetError("order relation is not antisymmetric");
            if ((up_sets[y] & ~up_sets[x]) != 0) throw PosetError("order relation is not transitive");
        }
    }
    std::vector<Cover> covers;
    for (Element x = 0; x < n; ++x) {
        const ElementSet strict = up_sets[x] & ~bit(x);
        ElementSet above_strict = 0;
        for (Element z : elements_of(strict)) above_strict |= up_sets[z] & ~bit(z);
        for (Element y : elements_of(strict & ~above_strict)) covers.push_back({x, y});
    }
    return Poset(n, std::move(covers));
}

std::optional<Element> Poset::bottom() const {
    for (Element x = 0; x < n_; ++x) {
        if (up_[x] == all()) return x;
    }
    return std::nullopt;
}

std::optional<Element> Poset::top() const {
    for (Element x = 0; x < n_; ++x) {
        if (down_[x] == all()) return x;
    }
    return std::nullopt;
}

Poset Poset::relabel(std::span<const Element> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw PosetError("permutation size mismatch");
    std::vector<Cover> out;
    out.reserve(covers_.size());
    for (const auto& [x, y] : covers_) out.push_back({perm[x], perm[y]});
    return Poset(n_, std::move(out));
}

Poset Poset::induced(ElementSet keep) const {
    keep &= all();
    std::vector<Element> index(n_, -1);
    std::vector<Element> kept = elements_of(keep);
    for (std::size_t i = 0; i < kept.size(); ++i) index[kept[i]] = static_cast<Element>(i);
    std::vector<ElementSet> rows;
    rows.reserve(kept.size());
    for (Element x : kept) {
        ElementSet row = 0;
        for (Element y : elements_of(up_[x] & keep)) row |= bit(index[y]);
        rows.push_back(row);
    }
    return from_order(std::move(rows));
}

std::vector<std::vector<bool>> transitive_closure(const Poset& p) {
    std::vector<std::vector<bool>> m(p.size(), std::vector<bool>(p.size(), false));
    for (Element x = 0; x < p.size(); ++x) {
        for (Element y : elements_of(p.up_set(x))) m[x][y] = true;
    }
    return m;
}

bool is_lattice(const Poset& p) {
    const int n = p.size();
    for (Element x = 0; x < n; ++x) {
        for (Element y = x + 1; y < n; ++y) {
            const ElementSet ub = p.up_set(x) & p.up_set(y);
            const ElementSet lb = p.down_set(x) & p.down_set(y);
            bool has_join = false;
            for (Element z : elements_of(ub)) {
                if ((ub & ~p.up_set(z)) == 0) {
                    has_join = true;
                    break;
                }
            }
            if (!has_join) return false;
            bool has_meet = false;
            for (Element z : elements_of(lb)) {
                if ((lb & ~p.down_set(z)) == 0) {
                    has_meet = true;
                    break;
                }
            }
            if (!has_meet) return false;
        }
    }
    return true;
}

int component_count(const Poset& p) {
    std::vector<Element> parent(p.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Element x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = p.size();
    for (const auto& [x, y] : p.covers()) {
        const Element a = find(x);
        const Element b = find(y);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components;
}

int nullity(const Poset& p) { return p.edge_count() - p.size() + component_count(p); }

int height(const Poset& p) {
    // Strictly larger down-sets come later, so this order is a linear extension.
    std::vector<Element> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Element a, Element b) {
        return popcount(p.down_set(a)) < popcount(p.down_set(b));
    });
    std::vector<int> level(p.size(), 0);
    int best = 0;
    for (Element x : order) {
        for (Element w : elements_of(p.lower_covers(x))) level[x] = std::max(level[x], level[w] + 1);
        best = std::max(best, level[x]);
    }
    return best;
}

ElementSet reducible_elements(const Poset& p) {
    ElementSet out = 0;
    for (Element x = 0; x < p.size(); ++x) {
        if (popcount(p.upper_covers(x)) >= 2 || popcount(p.lower_covers(x)) >= 2) out |= bit(x);
    }
    return out;
}

ElementSet doubly_irreducible(const Poset& p) { return p.all() & ~reducible_elements(p); }

ElementSet irr_star(const Poset& p) {
    ElementSet out = 0;
    for (Element x = 0; x < p.size(); ++x) {
        if (popcount(p.upper_covers(x)) == 1 && popcount(p.lower_covers(x)) == 1) out |= bit(x);
    }
    return out;
}

ElementSet lattice_reducibles(const Poset& p) {
    if (!is_lattice(p)) throw PosetError("poset is not a lattice");
    return reducible_elements(p);
}

bool is_rc(const Poset& p) {
    const auto red = elements_of(lattice_reducibles(p));
    for (std::size_t i = 0; i < red.size(); ++i) {
        for (std::size_t j = i + 1; j < red.size(); ++j) {
            if (!p.comparable(red[i], red[j])) return false;
        }
    }
    return true;
}

Poset dual(const Poset& p) {
    std::vector<Cover> out;
    out.reserve(p.covers().size());
    for (const auto& [x, y] : p.covers()) out.push_back({y, x});
    return Poset(p.size(), std::move(out));
}

ElementSet pendant_vertices(const Poset& p) {
    ElementSet out = 0;
    for (Element x = 0; x < p.size(); ++x) {
        if (popcount(p.upper_covers(x)) + popcount(p.lower_covers(x)) == 1) out |= bit(x);
    }
    return out;
}

bool is_dismantlable(const Poset& p) {
    Poset cur = p;
    while (cur.size() > 1) {
        const ElementSet irr = doubly_irreducible(cur);
        if (irr == 0) return false;
        cur = cur.without(std::countr_zero(irr));
    }
    return true;
}

std::string to_text(const Poset& p) {
    std::ostringstream out;
    out << p.size() << '\n';
    for (const auto& [x, y] : p.covers()) out << x << ' ' << y << '\n';
    return out.str();
}

Poset read_text(std::istream& in) {
    std::string line;
    std::ostringstream body;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        body << line << '\n';
    }
    std::istringstream tokens(body.str());
    long long n = 0;
    if (!(tokens >> n)) throw PosetError("missing element count");
    if (n < 1 || n > Poset::kMaxElements) throw PosetError("element count out of range");
    std::vector<Cover> covers;
    long long x = 0;
    long long y = 0;
    while (tokens >> x) {
        if (!(tokens >> y)) throw PosetError("dangling cover endpoint");
        if (x < 0 || y < 0 || x >= n || y >= n) throw PosetError("cover endpoint out of range");
        covers.push_back({static_cast<Element>(x), static_cast<Element>(y)});
    }
    if (!tokens.eof()) throw PosetError("malformed cover line");
    return Poset(static_cast<int>(n), std::move(covers));
}

Poset parse_text(const std::string& text) {
    std::istringstream in(text);
    return read_text(in);
}

std::string to_dot(const Poset& p, const std::string& name, const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (Element x = 0; x < p.size(); ++x) {
        out << "  " << x;
        if (static_cast<std::size_t>(x) < labels.size() && !labels[x].empty()) {
            out << " [label=\"" << labels[x] << "\"]";
        }
        out << ";\n";
    }
    for (const auto& [x, y] : p.covers()) out << "  " << x << " -> " << y << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace latcount
