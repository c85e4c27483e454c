#include "latcount/canon.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <tuple>

namespace latcount {
namespace {

using Coloring = std::vector<int>;

// Replaces arbitrary sortable keys by dense ranks 0..k-1 in key order.
template <typename Key>
int rank_keys(const std::vector<Key>& keys, Coloring& color) {
    std::vector<int> idx(keys.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    int rank = -1;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i == 0 || keys[idx[i - 1]] < keys[idx[i]]) ++rank;
        color[idx[i]] = rank;
    }
    return rank + 1;
}

int count_colors(const Coloring& color) {
    return color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
}

class Search {
public:
    explicit Search(const Poset& p) : p_(p), n_(p.size()) {}

    std::vector<Element> run() {
        Coloring color(n_);
        initial_coloring(color);
        refine(color);
        descend(color);
        return best_perm_;
    }

private:
    void initial_coloring(Coloring& color) const {
        std::vector<int> level_up(n_, 0);
        std::vector<int> level_down(n_, 0);
        std::vector<Element> order(n_);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](Element a, Element b) {
            return popcount(p_.down_set(a)) < popcount(p_.down_set(b));
        });
        for (Element x : order) {
            for (Element w : elements_of(p_.lower_covers(x))) level_up[x] = std::max(level_up[x], level_up[w] + 1);
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            for (Element y : elements_of(p_.upper_covers(*it))) {
                level_down[*it] = std::max(level_down[*it], level_down[y] + 1);
            }
        }
        std::vector<std::array<int, 6>> keys(n_);
        for (Element x = 0; x < n_; ++x) {
            keys[x] = {level_up[x],
                       level_down[x],
                       popcount(p_.lower_covers(x)),
                       popcount(p_.upper_covers(x)),
                       popcount(p_.down_set(x)),
                       popcount(p_.up_set(x))};
        }
        rank_keys(keys, color);
    }

    // Colour refinement over the cover digraph, to a fixpoint.
    void refine(Coloring& color) const {
        int colors = count_colors(color);
        std::vector<std::vector<int>> keys(n_);
        while (colors < n_) {
            for (Element x = 0; x < n_; ++x) {
                auto& key = keys[x];
                key.clear();
                key.push_back(color[x]);
                std::vector<int> up;
                std::vector<int> down;
                for (Element y : elements_of(p_.upper_covers(x))) up.push_back(color[y]);
                for (Element w : elements_of(p_.lower_covers(x))) down.push_back(color[w]);
                std::sort(up.begin(), up.end());
                std::sort(down.begin(), down.end());
                key.push_back(static_cast<int>(up.size()));
                key.insert(key.end(), up.begin(), up.end());
                key.push_back(-1);
                key.insert(key.end(), down.begin(), down.end());
            }
            const int next = rank_keys(keys, color);
            if (next == colors) break;
            colors = next;
        }
    }

    void descend(const Coloring& color) {
        if (count_colors(color) == n_) {
            leaf(color);
            return;
        }
        // First non-singleton cell.
        std::vector<int> cell_size(n_, 0);
        for (int c : color) ++cell_size[c];
        int target = 0;
        while (cell_size[target] < 2) ++target;

        std::vector<std::pair<ElementSet, ElementSet>> tried;
        for (Element v = 0; v < n_; ++v) {
            if (color[v] != target) continue;
            // Swapping two elements with identical cover neighbourhoods is an
            // automorphism fixing the current colouring, so their subtrees agree.
            const std::pair<ElementSet, ElementSet> nbhd{p_.upper_covers(v), p_.lower_covers(v)};
            if (std::find(tried.begin(), tried.end(), nbhd) != tried.end()) continue;
            tried.push_back(nbhd);

            Coloring child(n_);
            std::vector<std::pair<int, int>> keys(n_);
            for (Element u = 0; u < n_; ++u) keys[u] = {color[u], u == v ? 0 : 1};
            rank_keys(keys, child);
            refine(child);
            descend(child);
        }
    }

    void leaf(const Coloring& color) {
        std::vector<std::uint64_t> rows(n_, 0);
        for (Element x = 0; x < n_; ++x) {
            std::uint64_t row = 0;
            for (Element y : elements_of(p_.upper_covers(x))) row |= bit(color[y]);
            rows[color[x]] = row;
        }
        if (best_perm_.empty() || rows < best_rows_) {
            best_rows_ = std::move(rows);
            best_perm_.assign(color.begin(), color.end());
        }
    }

    const Poset& p_;
    int n_;
    std::vector<std::uint64_t> best_rows_;
    std::vector<Element> best_perm_;
};

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw PosetError("invalid hex digit in canonical key");
}

}  // namespace

std::vector<Element> canonical_labeling(const Poset& p) { return Search(p).run(); }

CanonicalForm canonical_form(const Poset& p) {
    const auto perm = canonical_labeling(p);
    std::vector<std::uint64_t> rows(p.size(), 0);
    for (Element x = 0; x < p.size(); ++x) {
        std::uint64_t row = 0;
        for (Element y : elements_of(p.upper_covers(x))) row |= bit(perm[y]);
        rows[perm[x]] = row;
    }
    return CanonicalForm(p.size(), std::move(rows));
}

bool is_isomorphic(const Poset& p, const Poset& q) {
    if (p.size() != q.size() || p.edge_count() != q.edge_count()) return false;
    return canonical_form(p) == canonical_form(q);
}

Poset CanonicalForm::poset() const {
    std::vector<Cover> covers;
    for (int x = 0; x < size_; ++x) {
        for (Element y : elements_of(rows_[x])) covers.push_back({x, y});
    }
    return Poset(size_, std::move(covers));
}

std::string CanonicalForm::hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    const int width = (size_ + 3) / 4;
    std::string out;
    out.reserve(2 + rows_.size() * width);
    out.push_back(kDigits[(size_ >> 4) & 0xF]);
    out.push_back(kDigits[size_ & 0xF]);
    for (std::uint64_t row : rows_) {
        for (int d = width - 1; d >= 0; --d) out.push_back(kDigits[(row >> (4 * d)) & 0xF]);
    }
    return out;
}

CanonicalForm CanonicalForm::from_hex(const std::string& text) {
    if (text.size() < 2) throw PosetError("canonical key too short");
    const int size = hex_digit(text[0]) * 16 + hex_digit(text[1]);
    const int width = (size + 3) / 4;
    if (size < 1 || size > Poset::kMaxElements || text.size() != 2 + static_cast<std::size_t>(size) * width) {
        throw PosetError("canonical key has the wrong length");
    }
    std::vector<std::uint64_t> rows(size, 0);
    for (int x = 0; x < size; ++x) {
        for (int d = 0; d < width; ++d) {
            rows[x] = (rows[x] << 4) | static_cast<std::uint64_t>(hex_digit(text[2 + x * width + d]));
        }
    }
    return CanonicalForm(size, std::move(rows));
}

}  // namespace latcount
