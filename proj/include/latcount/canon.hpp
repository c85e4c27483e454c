#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "latcount/poset.hpp"

namespace latcount {

/// Isomorphism-class key of a poset: the upper-cover rows of the
/// lexicographically least relabelling reachable by the refinement
/// search. Two posets share a key iff they are order-isomorphic.
class CanonicalForm {
public:
    CanonicalForm() = default;
    CanonicalForm(int size, std::vector<std::uint64_t> rows) : size_(size), rows_(std::move(rows)) {}

    int size() const { return size_; }
    const std::vector<std::uint64_t>& rows() const { return rows_; }

    /// Rebuilds the canonically labelled poset.
    Poset poset() const;

    std::string hex() const;
    static CanonicalForm from_hex(const std::string& text);

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

private:
    int size_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// perm[x] is the canonical label of element x.
std::vector<Element> canonical_labeling(const Poset& p);

CanonicalForm canonical_form(const Poset& p);

bool is_isomorphic(const Poset& p, const Poset& q);

}  // namespace latcount
