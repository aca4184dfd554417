#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "tsep/error.hpp"

namespace tsep {

/// Subset of a fixed universe {0, ..., n-1}, stored as a bit vector.
/// All binary operations require both operands to share the universe size.
class vertex_set {
public:
    vertex_set() = default;

    explicit vertex_set(std::size_t universe_size)
        : n_(universe_size), bits_(word_count(universe_size), 0) {}

    static vertex_set full(std::size_t universe_size) {
        vertex_set s(universe_size);
        for (auto& w : s.bits_) w = ~std::uint64_t{0};
        s.mask_tail();
        return s;
    }

    static vertex_set of(std::size_t universe_size, std::initializer_list<std::size_t> members) {
        vertex_set s(universe_size);
        for (std::size_t v : members) s.insert(v);
        return s;
    }

    std::size_t universe_size() const { return n_; }

    bool empty() const {
        for (auto w : bits_)
            if (w) return false;
        return true;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool contains(std::size_t v) const {
        return v < n_ && (bits_[v >> 6] >> (v & 63)) & 1;
    }

    void insert(std::size_t v) {
        check_vertex(v);
        bits_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void erase(std::size_t v) {
        check_vertex(v);
        bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    vertex_set& operator|=(const vertex_set& o) {
        check_universe(o);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
        return *this;
    }
    vertex_set& operator&=(const vertex_set& o) {
        check_universe(o);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
        return *this;
    }
    vertex_set& operator-=(const vertex_set& o) {
        check_universe(o);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
        return *this;
    }

    friend vertex_set operator|(vertex_set a, const vertex_set& b) { return a |= b; }
    friend vertex_set operator&(vertex_set a, const vertex_set& b) { return a &= b; }
    friend vertex_set operator-(vertex_set a, const vertex_set& b) { return a -= b; }

    vertex_set complement() const {
        vertex_set s(n_);
        for (std::size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = ~bits_[i];
        s.mask_tail();
        return s;
    }

    bool operator==(const vertex_set&) const = default;

    bool subset_of(const vertex_set& o) const {
        check_universe(o);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & ~o.bits_[i]) return false;
        return true;
    }

    bool intersects(const vertex_set& o) const {
        check_universe(o);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & o.bits_[i]) return true;
        return false;
    }

    /// Members in ascending order.
    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t v) { out.push_back(v); });
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            std::uint64_t w = bits_[i];
            while (w) {
                f((i << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    const std::vector<std::uint64_t>& words() const { return bits_; }
    std::vector<std::uint64_t>& words() { return bits_; }

    static std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

private:
    void check_vertex(std::size_t v) const {
        if (v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                                    std::to_string(n_));
    }
    void check_universe(const vertex_set& o) const {
        if (n_ != o.n_)
            throw universe_mismatch_error("vertex sets over universes of size " +
                                          std::to_string(n_) + " and " + std::to_string(o.n_));
    }
    void mask_tail() {
        if (n_ & 63) bits_.back() &= (~std::uint64_t{0}) >> (64 - (n_ & 63));
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> bits_;
};

} // namespace tsep
