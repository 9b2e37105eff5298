#pragma once
// Element sets as fixed-width bit vectors.  Every carrier this library deals
// with (algebra elements, closed subsets, base points, game nodes) stays well
// under 64 at desk scale, so one machine word per set is enough; constructors
// that could exceed that throw MalformedInput rather than silently truncate.

#include <cstdint>
#include <string>
#include <vector>

#include "finrep/errors.hpp"

namespace finrep {

inline constexpr int kMaxElements = 64;

inline void require_carrier_size(int n) {
    if (n < 0 || n > kMaxElements)
        throw MalformedInput("carrier size " + std::to_string(n) +
                             " out of supported range [0," +
                             std::to_string(kMaxElements) + "]");
}

// A subset of {0,..,63}.  Plain value type; bit i <=> element i.
class ElementSet {
public:
    constexpr ElementSet() : bits_(0) {}
    constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr ElementSet single(int i) { return ElementSet(1ULL << i); }
    static constexpr ElementSet first_n(int n) {
        return ElementSet(n >= 64 ? ~0ULL : (1ULL << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    int count() const { return __builtin_popcountll(bits_); }
    constexpr bool contains(int i) const { return (bits_ >> i) & 1; }
    constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }

    void add(int i) { bits_ |= 1ULL << i; }
    void remove(int i) { bits_ &= ~(1ULL << i); }

    constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
    constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
    constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
    ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
    ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
    constexpr bool operator==(const ElementSet&) const = default;

    // smallest member; only meaningful on non-empty sets
    int min() const { return __builtin_ctzll(bits_); }

    // Iteration over members in increasing order:
    //   for (int i : set.members()) ...
    class iterator {
    public:
        explicit iterator(std::uint64_t rest) : rest_(rest) {}
        int operator*() const { return __builtin_ctzll(rest_); }
        iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
    private:
        std::uint64_t rest_;
    };
    class member_range {
    public:
        explicit member_range(std::uint64_t bits) : bits_(bits) {}
        iterator begin() const { return iterator(bits_); }
        iterator end() const { return iterator(0); }
    private:
        std::uint64_t bits_;
    };
    member_range members() const { return member_range(bits_); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i : members()) out.push_back(i);
        return out;
    }

    // "{0,2,3}" -- used for diagnostics and derived point labels
    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for (int i : members()) {
            if (sep) s += ",";
            s += std::to_string(i);
            sep = true;
        }
        return s + "}";
    }

private:
    std::uint64_t bits_;
};

// n x n tables of element indices (composition, join, residuals).
using Table = std::vector<std::vector<int>>;

// Square 0/1 matrices stored as one ElementSet per row.
using BoolMatrix = std::vector<ElementSet>;

inline BoolMatrix bool_matrix_from(const std::vector<std::vector<int>>& rows) {
    BoolMatrix m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        ElementSet r;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j]) r.add(static_cast<int>(j));
        m.push_back(r);
    }
    return m;
}

} // namespace finrep
