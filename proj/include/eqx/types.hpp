#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "eqx/errors.hpp"

namespace eqx {

using Value = std::int64_t;
using Item = std::size_t;
using Agent = std::size_t;

inline constexpr std::size_t kMaxItems = 256;

/// Overflow-checked arithmetic on Value.
inline Value checked_add(Value a, Value b) {
    Value r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("integer overflow in addition");
    return r;
}

inline Value checked_sub(Value a, Value b) {
    Value r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticError("integer overflow in subtraction");
    return r;
}

inline Value checked_mul(Value a, Value b) {
    Value r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("integer overflow in multiplication");
    return r;
}

inline Value checked_neg(Value a) { return checked_sub(0, a); }

/// Fixed-capacity set of item indices in [0, kMaxItems).
class ItemSet {
public:
    ItemSet() = default;
    ItemSet(std::initializer_list<Item> items) {
        for (Item x : items) insert(x);
    }

    /// {0, 1, ..., m-1}
    static ItemSet range(std::size_t m);

    /// Set of the low bits of `mask`; mask bit x is item x.
    static ItemSet from_mask(std::uint64_t mask) {
        ItemSet s;
        s.words_[0] = mask;
        return s;
    }

    bool contains(Item x) const noexcept {
        return x < kMaxItems && ((words_[x / 64] >> (x % 64)) & 1U) != 0;
    }

    void insert(Item x) {
        check(x);
        words_[x / 64] |= std::uint64_t{1} << (x % 64);
    }

    void erase(Item x) {
        check(x);
        words_[x / 64] &= ~(std::uint64_t{1} << (x % 64));
    }

    ItemSet with(Item x) const {
        ItemSet s = *this;
        s.insert(x);
        return s;
    }

    ItemSet without(Item x) const {
        ItemSet s = *this;
        s.erase(x);
        return s;
    }

    std::size_t size() const noexcept {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool empty() const noexcept {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    /// Items in ascending order.
    std::vector<Item> items() const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w != 0) {
                const int bit = std::countr_zero(w);
                f(static_cast<Item>(k * 64 + static_cast<std::size_t>(bit)));
                w &= w - 1;
            }
        }
    }

    /// Bitmask of items below 64. Only meaningful when every item is < 64.
    std::uint64_t low_mask() const noexcept { return words_[0]; }

    /// True when some item is >= limit.
    bool has_item_at_or_above(std::size_t limit) const noexcept;

    bool is_subset_of(const ItemSet& other) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if ((words_[k] & ~other.words_[k]) != 0) return false;
        return true;
    }

    bool intersects(const ItemSet& other) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if ((words_[k] & other.words_[k]) != 0) return true;
        return false;
    }

    ItemSet& operator|=(const ItemSet& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    ItemSet& operator&=(const ItemSet& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    ItemSet& operator-=(const ItemSet& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }
    friend ItemSet operator|(ItemSet a, const ItemSet& b) noexcept { return a |= b; }
    friend ItemSet operator&(ItemSet a, const ItemSet& b) noexcept { return a &= b; }
    friend ItemSet operator-(ItemSet a, const ItemSet& b) noexcept { return a -= b; }

    friend bool operator==(const ItemSet&, const ItemSet&) = default;
    friend auto operator<=>(const ItemSet&, const ItemSet&) = default;

private:
    static void check(Item x) {
        if (x >= kMaxItems) throw InputError("item index " + std::to_string(x) + " exceeds capacity");
    }

    std::array<std::uint64_t, kMaxItems / 64> words_{};
};

/// Rational epsilon in [0, 1), stored as num/den with 0 <= num < den.
/// Comparisons that involve it are done by cross-multiplication.
class Epsilon {
public:
    constexpr Epsilon() = default;
    Epsilon(Value num, Value den);

    /// Parses "a/b" or a bare "0".
    static Epsilon parse(std::string_view text);

    Value num() const noexcept { return num_; }
    Value den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_ == 0; }
    std::string to_string() const;

    friend bool operator==(const Epsilon&, const Epsilon&) = default;

private:
    Value num_ = 0;
    Value den_ = 1;
};

/// Solver direction for monotone instances and approximate checks.
enum class Direction { goods, chores };

std::string_view to_string(Direction d);
Direction parse_direction(std::string_view text);

}  // namespace eqx
