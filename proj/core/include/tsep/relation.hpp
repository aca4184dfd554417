#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "tsep/vertex_set.hpp"

namespace tsep {

/// Binary relation on {0, ..., n-1}: a boolean n x n matrix stored as n rows
/// of 64-bit words. contains(a, b) reads "a relates to b"; compositions,
/// closures and the lattice operations below are the whole algebra the rest
/// of the library is written in.
class relation {
public:
    relation() = default;
    explicit relation(std::size_t universe_size)
        : n_(universe_size), words_(vertex_set::word_count(universe_size)),
          bits_(n_ * words_, 0) {}

    /// Identity relation (the diagonal).
    static relation diagonal(std::size_t n);
    /// Partial identity: pairs (b, b) for b in `dom` only.
    static relation subdiagonal(const vertex_set& dom);
    static relation full(std::size_t n);
    static relation from_pairs(std::size_t n,
                               std::initializer_list<std::pair<std::size_t, std::size_t>> ps);

    std::size_t universe_size() const { return n_; }
    std::size_t pair_count() const;
    bool empty() const;

    bool contains(std::size_t a, std::size_t b) const {
        return a < n_ && b < n_ && (row_ptr(a)[b >> 6] >> (b & 63)) & 1;
    }
    void insert(std::size_t a, std::size_t b);
    void erase(std::size_t a, std::size_t b);

    relation& operator|=(const relation& o);
    relation& operator&=(const relation& o);
    relation& operator-=(const relation& o);
    friend relation operator|(relation a, const relation& b) { return a |= b; }
    friend relation operator&(relation a, const relation& b) { return a &= b; }
    friend relation operator-(relation a, const relation& b) { return a -= b; }
    relation complement() const;

    bool operator==(const relation&) const = default;
    bool subset_of(const relation& o) const;

    relation converse() const;

    /// Paths of length >= 1 (bit-parallel Warshall).
    relation transitive_closure() const;
    /// Same result, computed by repeated squaring; kept as a second, independent
    /// route so the two can be cross-checked.
    relation transitive_closure_by_squaring() const;
    /// Paths of length >= 0.
    relation reflexive_transitive_closure() const;

    bool is_reflexive() const;
    bool is_irreflexive() const;
    bool is_symmetric() const;
    bool is_antisymmetric() const;
    bool is_transitive() const;
    bool is_preorder() const { return is_reflexive() && is_transitive(); }
    /// Symmetric and transitive (an equivalence on its own field).
    bool is_partial_equivalence() const { return is_symmetric() && is_transitive(); }

    /// Row a as a set: everything a relates to.
    vertex_set afterset_of(std::size_t a) const;
    /// Column b as a set: everything relating to b.
    vertex_set foreset_of(std::size_t b) const;

    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
    /// Debug rendering: "{0->1, 2->2}", pairs in row-major order.
    std::string to_string() const;

    const std::uint64_t* row_ptr(std::size_t a) const { return bits_.data() + a * words_; }
    std::uint64_t* row_ptr(std::size_t a) { return bits_.data() + a * words_; }
    std::size_t words_per_row() const { return words_; }

private:
    void check_vertex(std::size_t v) const;
    void check_universe(const relation& o) const;
    void mask_tail();

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// (a, c) in compose(r, s) iff a r b and b s c for some b.
relation compose(const relation& r, const relation& s);

/// { a : a r b for some b in c } — union of columns of `c`.
vertex_set foreset(const relation& r, const vertex_set& c);
/// { c : b r c for some b in b_ } — union of rows of `b_`.
vertex_set afterset(const relation& r, const vertex_set& b_);

} // namespace tsep
