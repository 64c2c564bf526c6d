#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hyperlab::intervals {

/// An exact rational extended with -inf and +inf. Denominator 0 encodes the
/// infinities (numerator sign decides which); finite values are normalized
/// with positive denominator and coprime parts.
class ExtRational {
public:
    ExtRational() : num_(0), den_(1) {}
    ExtRational(long long value) : num_(value), den_(1) {}
    ExtRational(long long num, long long den);

    static ExtRational pos_inf();
    static ExtRational neg_inf();

    bool is_finite() const { return den_ != 0; }
    bool is_pos_inf() const { return den_ == 0 && num_ > 0; }
    bool is_neg_inf() const { return den_ == 0 && num_ < 0; }
    long long num() const { return num_; }
    long long den() const { return den_; }

    ExtRational operator+(const ExtRational& o) const;  // finite operands only
    ExtRational operator-(const ExtRational& o) const;
    ExtRational operator-() const;
    /// Exact midpoint of two finite values.
    static ExtRational midpoint(const ExtRational& a, const ExtRational& b);

    std::strong_ordering operator<=>(const ExtRational& o) const;
    bool operator==(const ExtRational& o) const = default;

    std::string to_string() const;

private:
    long long num_;
    long long den_;
};

/// A finite union of intervals over the extended rational line, kept
/// normalized: components sorted, pairwise disjoint and non-adjacent, each
/// nonempty, infinite endpoints always open.
class IntervalSet {
public:
    struct Component {
        ExtRational lo, hi;
        bool lo_closed = false, hi_closed = false;

        bool operator==(const Component&) const = default;
    };

    IntervalSet() = default;  // empty set

    static IntervalSet empty() { return IntervalSet(); }
    static IntervalSet whole();
    static IntervalSet open(const ExtRational& lo, const ExtRational& hi);
    static IntervalSet closed(const ExtRational& lo, const ExtRational& hi);
    static IntervalSet segment(const ExtRational& lo, bool lo_closed, const ExtRational& hi,
                               bool hi_closed);
    static IntervalSet point(const ExtRational& q);

    const std::vector<Component>& components() const { return comps_; }
    bool is_empty() const { return comps_.empty(); }
    /// Exactly one component with both endpoints open.
    bool is_single_open_interval() const;

    bool contains(const ExtRational& q) const;
    bool intersects(const IntervalSet& other) const;
    bool subset_of(const IntervalSet& other) const;

    IntervalSet union_with(const IntervalSet& other) const;
    IntervalSet intersection(const IntervalSet& other) const;
    IntervalSet complement() const;

    /// Topological closure: finite endpoints become closed, then merge.
    IntervalSet closure() const;

    bool operator==(const IntervalSet&) const = default;

    std::string to_string() const;

private:
    explicit IntervalSet(std::vector<Component> comps);
    static IntervalSet normalized(std::vector<Component> comps);

    std::vector<Component> comps_;
};

/// The closed witness set of the membership argument behind the built-in
/// real-line example: for a single open interval v containing {1/2, 3/2} and
/// open intervals us each meeting {1/2, 3/2}, the set [1/2, 3/2] lies in the
/// corresponding basic neighborhood yet contains the excluded point 1.
/// Throws std::invalid_argument if the preconditions fail and
/// std::logic_error if any verification fails (which cannot happen).
IntervalSet novietoris_witness(const IntervalSet& v, const std::vector<IntervalSet>& us);

/// Decision for the interval-family regularity pattern at (x, u), with the
/// family of all open intervals: true iff NO pair v, w of open intervals has
/// x in v, v inside the complement of w, and that complement inside u.
/// By endpoint case analysis this holds exactly when u is bounded.
/// Throws std::invalid_argument unless u is a single open interval with x in u.
bool notpreg_witness(const ExtRational& x, const IntervalSet& u);

/// The separating pair proving notpreg_witness(x, u) == false, when one exists.
struct RegPair {
    IntervalSet v, w;
};
std::optional<RegPair> preg_separating_pair(const ExtRational& x, const IntervalSet& u);

}  // namespace hyperlab::intervals
