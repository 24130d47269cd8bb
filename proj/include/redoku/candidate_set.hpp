#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <iterator>
#include <stdexcept>

namespace redoku {

/// One of the nine Sudoku symbols, 1..9.
class Symbol {
public:
    explicit constexpr Symbol(int value) : value_(static_cast<std::int8_t>(value)) {
        if (value < 1 || value > 9)
            throw std::invalid_argument("symbol must be in 1..9");
    }

    constexpr int value() const noexcept { return value_; }

    friend constexpr auto operator<=>(Symbol, Symbol) = default;

private:
    std::int8_t value_;
};

/// The set of symbols a cell may still take, stored as a 9-bit mask.
/// All operations are exact set algebra. An empty set is representable and
/// marks a contradiction; it is never a legal "solved" state.
class CandidateSet {
public:
    constexpr CandidateSet() = default;  ///< the empty set

    static constexpr CandidateSet full() noexcept { return CandidateSet(kFullMask); }
    static constexpr CandidateSet of(Symbol s) noexcept { return CandidateSet(bit(s)); }
    static constexpr CandidateSet from_bits(std::uint16_t bits) {
        if (bits & static_cast<std::uint16_t>(~kFullMask))
            throw std::invalid_argument("candidate bits out of range");
        return CandidateSet(bits);
    }

    constexpr std::uint16_t bits() const noexcept { return mask_; }
    constexpr int size() const noexcept { return std::popcount(mask_); }
    constexpr bool empty() const noexcept { return mask_ == 0; }
    constexpr bool is_singleton() const noexcept { return std::has_single_bit(mask_); }
    constexpr bool contains(Symbol s) const noexcept { return (mask_ & bit(s)) != 0; }

    /// The sole member of a singleton set.
    constexpr Symbol sole() const noexcept {
        assert(is_singleton());
        return Symbol(std::countr_zero(mask_) + 1);
    }

    constexpr void insert(Symbol s) noexcept { mask_ |= bit(s); }

    /// Removes s; returns true when it was present.
    constexpr bool erase(Symbol s) noexcept {
        const bool present = contains(s);
        mask_ &= static_cast<std::uint16_t>(~bit(s));
        return present;
    }

    /// Removes every symbol of `other`; returns how many were present.
    constexpr int erase_all(CandidateSet other) noexcept {
        const int removed = std::popcount(static_cast<std::uint16_t>(mask_ & other.mask_));
        mask_ &= static_cast<std::uint16_t>(~other.mask_);
        return removed;
    }

    constexpr CandidateSet operator|(CandidateSet o) const noexcept {
        return CandidateSet(mask_ | o.mask_);
    }
    constexpr CandidateSet operator&(CandidateSet o) const noexcept {
        return CandidateSet(mask_ & o.mask_);
    }
    /// Set difference.
    constexpr CandidateSet operator-(CandidateSet o) const noexcept {
        return CandidateSet(mask_ & static_cast<std::uint16_t>(~o.mask_));
    }

    constexpr bool is_subset_of(CandidateSet o) const noexcept {
        return (mask_ & static_cast<std::uint16_t>(~o.mask_)) == 0;
    }

    friend constexpr bool operator==(CandidateSet, CandidateSet) = default;

    /// Forward iteration over members in ascending symbol order.
    class iterator {
    public:
        using value_type = Symbol;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::forward_iterator_tag;

        constexpr iterator() = default;
        constexpr Symbol operator*() const noexcept { return Symbol(std::countr_zero(rest_) + 1); }
        constexpr iterator& operator++() noexcept {
            rest_ &= static_cast<std::uint16_t>(rest_ - 1);
            return *this;
        }
        constexpr iterator operator++(int) noexcept {
            iterator old = *this;
            ++*this;
            return old;
        }
        friend constexpr bool operator==(iterator, iterator) = default;

    private:
        friend class CandidateSet;
        explicit constexpr iterator(std::uint16_t rest) : rest_(rest) {}
        std::uint16_t rest_ = 0;
    };

    constexpr iterator begin() const noexcept { return iterator(mask_); }
    constexpr iterator end() const noexcept { return iterator(0); }

private:
    explicit constexpr CandidateSet(std::uint16_t mask) : mask_(mask) {}
    static constexpr std::uint16_t bit(Symbol s) noexcept {
        return static_cast<std::uint16_t>(1u << (s.value() - 1));
    }
    static constexpr std::uint16_t kFullMask = 0x1FF;

    std::uint16_t mask_ = 0;
};

}  // namespace redoku
