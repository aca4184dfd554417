#include "tsep/relation.hpp"

#include <bit>
#include <sstream>

namespace tsep {

relation relation::diagonal(std::size_t n) {
    relation r(n);
    for (std::size_t v = 0; v < n; ++v) r.insert(v, v);
    return r;
}

relation relation::subdiagonal(const vertex_set& dom) {
    relation r(dom.universe_size());
    dom.for_each([&](std::size_t v) { r.insert(v, v); });
    return r;
}

relation relation::full(std::size_t n) {
    relation r(n);
    for (auto& w : r.bits_) w = ~std::uint64_t{0};
    r.mask_tail();
    return r;
}

relation relation::from_pairs(std::size_t n,
                              std::initializer_list<std::pair<std::size_t, std::size_t>> ps) {
    relation r(n);
    for (auto [a, b] : ps) r.insert(a, b);
    return r;
}

std::size_t relation::pair_count() const {
    std::size_t c = 0;
    for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool relation::empty() const {
    for (auto w : bits_)
        if (w) return false;
    return true;
}

void relation::insert(std::size_t a, std::size_t b) {
    check_vertex(a);
    check_vertex(b);
    row_ptr(a)[b >> 6] |= std::uint64_t{1} << (b & 63);
}

void relation::erase(std::size_t a, std::size_t b) {
    check_vertex(a);
    check_vertex(b);
    row_ptr(a)[b >> 6] &= ~(std::uint64_t{1} << (b & 63));
}

relation& relation::operator|=(const relation& o) {
    check_universe(o);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    return *this;
}

relation& relation::operator&=(const relation& o) {
    check_universe(o);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
    return *this;
}

relation& relation::operator-=(const relation& o) {
    check_universe(o);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
    return *this;
}

relation relation::complement() const {
    relation r(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = ~bits_[i];
    r.mask_tail();
    return r;
}

bool relation::subset_of(const relation& o) const {
    check_universe(o);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~o.bits_[i]) return false;
    return true;
}

relation relation::converse() const {
    relation r(n_);
    for (std::size_t a = 0; a < n_; ++a) {
        const std::uint64_t* row = row_ptr(a);
        for (std::size_t i = 0; i < words_; ++i) {
            std::uint64_t w = row[i];
            while (w) {
                std::size_t b = (i << 6) + static_cast<std::size_t>(std::countr_zero(w));
                r.insert(b, a);
                w &= w - 1;
            }
        }
    }
    return r;
}

relation relation::transitive_closure() const {
    relation r = *this;
    for (std::size_t k = 0; k < n_; ++k) {
        const std::uint64_t* rk = r.row_ptr(k);
        for (std::size_t i = 0; i < n_; ++i) {
            if (!r.contains(i, k) || i == k) continue;
            std::uint64_t* ri = r.row_ptr(i);
            for (std::size_t w = 0; w < words_; ++w) ri[w] |= rk[w];
        }
    }
    return r;
}

relation relation::transitive_closure_by_squaring() const {
    relation acc = *this;
    for (;;) {
        relation next = acc | compose(acc, acc);
        if (next == acc) return acc;
        acc = std::move(next);
    }
}

relation relation::reflexive_transitive_closure() const {
    return transitive_closure() | diagonal(n_);
}

bool relation::is_reflexive() const {
    for (std::size_t v = 0; v < n_; ++v)
        if (!contains(v, v)) return false;
    return true;
}

bool relation::is_irreflexive() const {
    for (std::size_t v = 0; v < n_; ++v)
        if (contains(v, v)) return false;
    return true;
}

bool relation::is_symmetric() const { return *this == converse(); }

bool relation::is_antisymmetric() const {
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = a + 1; b < n_; ++b)
            if (contains(a, b) && contains(b, a)) return false;
    return true;
}

bool relation::is_transitive() const { return compose(*this, *this).subset_of(*this); }

vertex_set relation::afterset_of(std::size_t a) const {
    check_vertex(a);
    vertex_set s(n_);
    const std::uint64_t* row = row_ptr(a);
    for (std::size_t i = 0; i < words_; ++i) s.words()[i] = row[i];
    return s;
}

vertex_set relation::foreset_of(std::size_t b) const {
    check_vertex(b);
    vertex_set s(n_);
    for (std::size_t a = 0; a < n_; ++a)
        if (contains(a, b)) s.insert(a);
    return s;
}

std::vector<std::pair<std::size_t, std::size_t>> relation::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(pair_count());
    for (std::size_t a = 0; a < n_; ++a) {
        const std::uint64_t* row = row_ptr(a);
        for (std::size_t i = 0; i < words_; ++i) {
            std::uint64_t w = row[i];
            while (w) {
                out.emplace_back(a, (i << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }
    return out;
}

std::string relation::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto [a, b] : pairs()) {
        if (!first) os << ", ";
        first = false;
        os << a << "->" << b;
    }
    os << '}';
    return os.str();
}

void relation::check_vertex(std::size_t v) const {
    if (v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                                std::to_string(n_));
}

void relation::check_universe(const relation& o) const {
    if (n_ != o.n_)
        throw universe_mismatch_error("relations over universes of size " + std::to_string(n_) +
                                      " and " + std::to_string(o.n_));
}

void relation::mask_tail() {
    if (n_ & 63) {
        std::uint64_t m = (~std::uint64_t{0}) >> (64 - (n_ & 63));
        for (std::size_t a = 0; a < n_; ++a) row_ptr(a)[words_ - 1] &= m;
    }
}

relation compose(const relation& r, const relation& s) {
    if (r.universe_size() != s.universe_size())
        throw universe_mismatch_error("composing relations over universes of size " +
                                      std::to_string(r.universe_size()) + " and " +
                                      std::to_string(s.universe_size()));
    std::size_t n = r.universe_size(), words = r.words_per_row();
    relation out(n);
    for (std::size_t a = 0; a < n; ++a) {
        const std::uint64_t* ra = r.row_ptr(a);
        std::uint64_t* oa = out.row_ptr(a);
        for (std::size_t i = 0; i < words; ++i) {
            std::uint64_t w = ra[i];
            while (w) {
                std::size_t b = (i << 6) + static_cast<std::size_t>(std::countr_zero(w));
                const std::uint64_t* sb = s.row_ptr(b);
                for (std::size_t j = 0; j < words; ++j) oa[j] |= sb[j];
                w &= w - 1;
            }
        }
    }
    return out;
}

vertex_set foreset(const relation& r, const vertex_set& c) {
    if (r.universe_size() != c.universe_size())
        throw universe_mismatch_error("foreset: relation on " +
                                      std::to_string(r.universe_size()) + " vs set on " +
                                      std::to_string(c.universe_size()));
    std::size_t n = r.universe_size(), words = r.words_per_row();
    vertex_set out(n);
    for (std::size_t a = 0; a < n; ++a) {
        const std::uint64_t* row = r.row_ptr(a);
        for (std::size_t i = 0; i < words; ++i) {
            if (row[i] & c.words()[i]) {
                out.insert(a);
                break;
            }
        }
    }
    return out;
}

vertex_set afterset(const relation& r, const vertex_set& b_) {
    if (r.universe_size() != b_.universe_size())
        throw universe_mismatch_error("afterset: relation on " +
                                      std::to_string(r.universe_size()) + " vs set on " +
                                      std::to_string(b_.universe_size()));
    std::size_t words = r.words_per_row();
    vertex_set out(r.universe_size());
    b_.for_each([&](std::size_t a) {
        const std::uint64_t* row = r.row_ptr(a);
        for (std::size_t i = 0; i < words; ++i) out.words()[i] |= row[i];
    });
    return out;
}

} // namespace tsep
