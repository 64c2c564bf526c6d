#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hyperlab {

/// Points are the indices 0..ground_size-1; a subset is a bit pattern over them.
using Mask = std::uint32_t;

/// Hard cap on ground sets: every subset fits a 16-bit pattern, every family of
/// subsets fits a 65536-slot table, and all closure operators stay exact and fast.
inline constexpr int kMaxGround = 16;

inline Mask full_mask(int ground_size) { return (Mask{1} << ground_size) - Mask{1}; }

void check_ground(int ground_size);

/// One subset of a fixed finite ground set. Immutable value type; equality is bitwise.
class Subset {
public:
    Subset(int ground_size, Mask bits);

    static Subset empty(int ground_size) { return Subset(ground_size, 0); }
    static Subset full(int ground_size) { return Subset(ground_size, full_mask(ground_size)); }
    static Subset of(int ground_size, std::initializer_list<int> points);

    int ground_size() const { return ground_; }
    Mask bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool is_empty() const { return bits_ == 0; }
    bool is_full() const { return bits_ == full_mask(ground_); }

    bool contains(int point) const { return point >= 0 && point < ground_ && ((bits_ >> point) & 1u); }
    bool subset_of(const Subset& other) const;
    bool intersects(const Subset& other) const;

    Subset union_with(const Subset& other) const;
    Subset intersection(const Subset& other) const;
    Subset difference(const Subset& other) const;
    Subset complement() const { return Subset(ground_, full_mask(ground_) & ~bits_); }

    std::vector<int> points() const;
    std::string to_string() const;

    friend bool operator==(const Subset&, const Subset&) = default;
    friend auto operator<=>(const Subset&, const Subset&) = default;

private:
    int ground_;
    Mask bits_;
};

/// A duplicate-free collection of subsets of one ground set, kept in canonical
/// order (ascending bit-pattern value). May contain the empty set; may itself
/// be empty.
class SetFamily {
public:
    explicit SetFamily(int ground_size);
    SetFamily(int ground_size, std::vector<Mask> masks);

    static SetFamily of(int ground_size, std::initializer_list<std::initializer_list<int>> sets);
    /// All 2^ground_size subsets.
    static SetFamily power(int ground_size);

    int ground_size() const { return ground_; }
    std::size_t size() const { return masks_.size(); }
    bool empty() const { return masks_.empty(); }

    const std::vector<Mask>& masks() const { return masks_; }
    Subset at(std::size_t i) const { return Subset(ground_, masks_[i]); }

    bool contains(Mask m) const;
    bool contains(const Subset& s) const { return s.ground_size() == ground_ && contains(s.bits()); }
    bool contains_empty_set() const { return contains(Mask{0}); }
    /// Index in canonical order, or -1.
    int index_of(Mask m) const;

    SetFamily with(Mask m) const;
    SetFamily without(Mask m) const;
    SetFamily union_with(const SetFamily& other) const;
    SetFamily intersection(const SetFamily& other) const;
    SetFamily difference(const SetFamily& other) const;
    bool subfamily_of(const SetFamily& other) const;

    std::string to_string() const;

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    int ground_;
    std::vector<Mask> masks_;
};

/// {m in M : m subseteq A}
SetFamily plus_sets(const Subset& a, const SetFamily& m);
/// {m in M : m meets A}
SetFamily minus_sets(const Subset& a, const SetFamily& m);

/// Elementwise plus_sets over F, duplicates collapsed, canonical order.
std::vector<SetFamily> lift_plus(const SetFamily& f, const SetFamily& m);
std::vector<SetFamily> lift_minus(const SetFamily& f, const SetFamily& m);

/// All nonempty subsets of cardinality <= n.
SetFamily fin_n(int ground_size, int n);
/// All nonempty subsets.
SetFamily fin(int ground_size);

/// Smallest family containing F and closed under (finite, hence binary)
/// intersection. F must be nonempty.
SetFamily intersection_closure(const SetFamily& f);
/// Dual: closure under finite union.
SetFamily union_closure(const SetFamily& f);

}  // namespace hyperlab
