#pragma once

// Independent reference implementations and random generators shared by the
// test binaries. Nothing here calls into the closure or canonical-form code
// it is used to check.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "latcount/construct.hpp"
#include "latcount/poset.hpp"

namespace testing {

using latcount::AdjunctRep;
using latcount::Cover;
using latcount::Element;
using latcount::Poset;

using Matrix = std::vector<std::vector<bool>>;

// Reflexive closure of the cover relation by Warshall's algorithm.
inline Matrix naive_order(const Poset& p) {
    const int n = p.size();
    Matrix leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) leq[i][i] = true;
    for (const Cover& c : p.covers()) leq[c.lower][c.upper] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (leq[i][k] && leq[k][j]) leq[i][j] = true;
    return leq;
}

// Every pair has a least common upper bound and a greatest common lower bound.
inline bool naive_is_lattice(const Poset& p) {
    const int n = p.size();
    const Matrix leq = naive_order(p);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            int joins = 0;
            int meets = 0;
            for (int z = 0; z < n; ++z) {
                if (leq[x][z] && leq[y][z]) {
                    bool least = true;
                    for (int w = 0; w < n; ++w)
                        if (leq[x][w] && leq[y][w] && !leq[z][w]) least = false;
                    joins += least;
                }
                if (leq[z][x] && leq[z][y]) {
                    bool greatest = true;
                    for (int w = 0; w < n; ++w)
                        if (leq[w][x] && leq[w][y] && !leq[w][z]) greatest = false;
                    meets += greatest;
                }
            }
            if (joins != 1 || meets != 1) return false;
        }
    }
    return true;
}

inline std::set<std::pair<int, int>> cover_set(const Poset& p) {
    std::set<std::pair<int, int>> out;
    for (const Cover& c : p.covers()) out.insert({c.lower, c.upper});
    return out;
}

// Tries all n! relabellings of p.
inline bool brute_isomorphic(const Poset& p, const Poset& q) {
    if (p.size() != q.size() || p.edge_count() != q.edge_count()) return false;
    const auto target = cover_set(q);
    std::vector<int> perm(p.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const Cover& c : p.covers()) {
            if (!target.count({perm[c.lower], perm[c.upper]})) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Partitions of n into exactly k positive parts, by listing them.
inline long brute_partitions(int n, int k, int max_part = -1) {
    if (max_part < 0) max_part = n;
    if (k == 0) return n == 0 ? 1 : 0;
    long total = 0;
    for (int first = std::min(n, max_part); first >= 1; --first) total += brute_partitions(n - first, k - 1, first);
    return total;
}

inline std::vector<Element> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<Element> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

// Random valid adjunct representation with `pairs` adjunct pairs and at most
// `max_size` elements. Pairs may land on any element placed so far.
inline AdjunctRep random_adjunct_rep(std::mt19937_64& rng, int pairs, int max_size) {
    for (;;) {
        AdjunctRep rep;
        std::uniform_int_distribution<int> base_len(3, std::max(3, max_size - pairs));
        rep.chains.push_back(base_len(rng));
        Poset current = latcount::chain(rep.chains[0]);
        bool ok = true;
        for (int i = 0; i < pairs && ok; ++i) {
            std::vector<std::pair<Element, Element>> valid;
            for (Element a = 0; a < current.size(); ++a)
                for (Element b = 0; b < current.size(); ++b)
                    if (current.less(a, b) && !current.covered_by(a, b)) valid.push_back({a, b});
            const int room = max_size - current.size() - (pairs - i - 1);
            if (valid.empty() || room < 1) {
                ok = false;
                break;
            }
            const auto pair = valid[std::uniform_int_distribution<std::size_t>(0, valid.size() - 1)(rng)];
            const int len = std::uniform_int_distribution<int>(1, std::min(room, 3))(rng);
            rep.chains.push_back(len);
            rep.pairs.push_back(pair);
            current = latcount::adjunct(current, pair.first, pair.second, latcount::chain(len));
        }
        if (ok) return rep;
    }
}

}  // namespace testing
