#include "hyperlab/intervals.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hyperlab::intervals {

namespace {

using int128 = __int128;

long long checked_ll(int128 v, const char* what) {
    if (v > int128{0x7fffffffffffffffLL} || v < -int128{0x7fffffffffffffffLL})
        throw std::overflow_error(std::string("rational overflow in ") + what);
    return static_cast<long long>(v);
}

}  // namespace

ExtRational::ExtRational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) {
        if (num_ == 0) throw std::invalid_argument("0/0 is not a rational or an infinity");
        num_ = num_ > 0 ? 1 : -1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

ExtRational ExtRational::pos_inf() { return ExtRational(1, 0); }
ExtRational ExtRational::neg_inf() { return ExtRational(-1, 0); }

ExtRational ExtRational::operator+(const ExtRational& o) const {
    if (!is_finite() || !o.is_finite())
        throw std::domain_error("arithmetic on an infinite endpoint");
    int128 n = int128{num_} * o.den_ + int128{o.num_} * den_;
    int128 d = int128{den_} * o.den_;
    return ExtRational(checked_ll(n, "+"), checked_ll(d, "+"));
}

ExtRational ExtRational::operator-(const ExtRational& o) const { return *this + (-o); }

ExtRational ExtRational::operator-() const {
    if (!is_finite()) return num_ > 0 ? neg_inf() : pos_inf();
    return ExtRational(-num_, den_);
}

ExtRational ExtRational::midpoint(const ExtRational& a, const ExtRational& b) {
    if (!a.is_finite() || !b.is_finite())
        throw std::domain_error("midpoint of an infinite endpoint");
    int128 n = int128{a.num_} * b.den_ + int128{b.num_} * a.den_;
    int128 d = int128{2} * a.den_ * b.den_;
    return ExtRational(checked_ll(n, "midpoint"), checked_ll(d, "midpoint"));
}

std::strong_ordering ExtRational::operator<=>(const ExtRational& o) const {
    if (den_ == 0 || o.den_ == 0) {
        int a = den_ == 0 ? (num_ > 0 ? 2 : -2) : 0;
        int b = o.den_ == 0 ? (o.num_ > 0 ? 2 : -2) : 0;
        if (a != b) return a <=> b;
        if (a != 0) return std::strong_ordering::equal;  // same infinity
        // both finite: fall through
    }
    int128 l = int128{num_} * o.den_;
    int128 r = int128{o.num_} * den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string ExtRational::to_string() const {
    if (is_pos_inf()) return "inf";
    if (is_neg_inf()) return "-inf";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

using Component = IntervalSet::Component;

bool component_empty(const Component& c) {
    if (c.lo > c.hi) return true;
    if (c.lo == c.hi) return !(c.lo_closed && c.hi_closed) || !c.lo.is_finite();
    if (c.lo.is_pos_inf() || c.hi.is_neg_inf()) return true;
    return false;
}

Component canonical(Component c) {
    if (!c.lo.is_finite()) c.lo_closed = false;
    if (!c.hi.is_finite()) c.hi_closed = false;
    return c;
}

// starts_before: a begins strictly earlier on the line than b
bool starts_before(const Component& a, const Component& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
}

// the two components overlap or touch without a gap between them
bool mergeable(const Component& a, const Component& b) {
    // assumes a starts at or before b
    if (b.lo < a.hi) return true;
    if (b.lo == a.hi) return a.hi_closed || b.lo_closed;
    return false;
}

}  // namespace

IntervalSet::IntervalSet(std::vector<Component> comps) : comps_(std::move(comps)) {}

IntervalSet IntervalSet::normalized(std::vector<Component> comps) {
    std::vector<Component> kept;
    for (Component& c : comps) {
        c = canonical(c);
        if (!component_empty(c)) kept.push_back(c);
    }
    std::sort(kept.begin(), kept.end(),
              [](const Component& a, const Component& b) { return starts_before(a, b); });
    std::vector<Component> merged;
    for (const Component& c : kept) {
        if (!merged.empty() && mergeable(merged.back(), c)) {
            Component& last = merged.back();
            if (c.hi > last.hi) {
                last.hi = c.hi;
                last.hi_closed = c.hi_closed;
            } else if (c.hi == last.hi) {
                last.hi_closed = last.hi_closed || c.hi_closed;
            }
        } else {
            merged.push_back(c);
        }
    }
    return IntervalSet(std::move(merged));
}

IntervalSet IntervalSet::whole() {
    return normalized({Component{ExtRational::neg_inf(), ExtRational::pos_inf(), false, false}});
}

IntervalSet IntervalSet::open(const ExtRational& lo, const ExtRational& hi) {
    return normalized({Component{lo, hi, false, false}});
}

IntervalSet IntervalSet::closed(const ExtRational& lo, const ExtRational& hi) {
    return normalized({Component{lo, hi, true, true}});
}

IntervalSet IntervalSet::segment(const ExtRational& lo, bool lo_closed, const ExtRational& hi,
                                 bool hi_closed) {
    return normalized({Component{lo, hi, lo_closed, hi_closed}});
}

IntervalSet IntervalSet::point(const ExtRational& q) { return closed(q, q); }

bool IntervalSet::is_single_open_interval() const {
    return comps_.size() == 1 && !comps_[0].lo_closed && !comps_[0].hi_closed;
}

bool IntervalSet::contains(const ExtRational& q) const {
    if (!q.is_finite()) return false;
    for (const Component& c : comps_) {
        if (q < c.lo || (q == c.lo && !c.lo_closed)) continue;
        if (q > c.hi || (q == c.hi && !c.hi_closed)) continue;
        return true;
    }
    return false;
}

IntervalSet IntervalSet::intersection(const IntervalSet& other) const {
    std::vector<Component> out;
    for (const Component& a : comps_)
        for (const Component& b : other.comps_) {
            Component c;
            if (a.lo > b.lo || (a.lo == b.lo && !a.lo_closed)) {
                c.lo = a.lo;
                c.lo_closed = a.lo_closed;
            } else {
                c.lo = b.lo;
                c.lo_closed = b.lo_closed && (a.lo != b.lo || a.lo_closed);
            }
            if (a.hi < b.hi || (a.hi == b.hi && !a.hi_closed)) {
                c.hi = a.hi;
                c.hi_closed = a.hi_closed;
            } else {
                c.hi = b.hi;
                c.hi_closed = b.hi_closed && (a.hi != b.hi || a.hi_closed);
            }
            out.push_back(c);
        }
    return normalized(std::move(out));
}

bool IntervalSet::intersects(const IntervalSet& other) const {
    return !intersection(other).is_empty();
}

IntervalSet IntervalSet::complement() const {
    std::vector<Component> out;
    ExtRational cursor = ExtRational::neg_inf();
    bool cursor_closed = false;  // whether the cursor point itself is still missing
    for (const Component& c : comps_) {
        out.push_back(Component{cursor, c.lo, cursor_closed, !c.lo_closed});
        cursor = c.hi;
        cursor_closed = !c.hi_closed;
    }
    out.push_back(Component{cursor, ExtRational::pos_inf(), cursor_closed, false});
    return normalized(std::move(out));
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
    return intersection(other.complement()).is_empty();
}

IntervalSet IntervalSet::union_with(const IntervalSet& other) const {
    std::vector<Component> out = comps_;
    out.insert(out.end(), other.comps_.begin(), other.comps_.end());
    return normalized(std::move(out));
}

IntervalSet IntervalSet::closure() const {
    std::vector<Component> out = comps_;
    for (Component& c : out) {
        if (c.lo.is_finite()) c.lo_closed = true;
        if (c.hi.is_finite()) c.hi_closed = true;
    }
    return normalized(std::move(out));
}

std::string IntervalSet::to_string() const {
    if (comps_.empty()) return "{}";
    std::string s;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        const Component& c = comps_[i];
        if (i) s += " u ";
        s += c.lo_closed ? "[" : "(";
        s += c.lo.to_string() + "," + c.hi.to_string();
        s += c.hi_closed ? "]" : ")";
    }
    return s;
}

IntervalSet novietoris_witness(const IntervalSet& v, const std::vector<IntervalSet>& us) {
    const ExtRational half(1, 2), three_halves(3, 2), one(1);
    if (!v.is_single_open_interval())
        throw std::invalid_argument("v must be a single open interval");
    if (!v.contains(half) || !v.contains(three_halves))
        throw std::invalid_argument("v must contain both 1/2 and 3/2");
    for (const IntervalSet& u : us) {
        if (!u.is_single_open_interval())
            throw std::invalid_argument("every u must be a single open interval");
        if (!u.contains(half) && !u.contains(three_halves))
            throw std::invalid_argument("every u must meet {1/2, 3/2}");
    }
    IntervalSet g = IntervalSet::closed(half, three_halves);
    if (!g.subset_of(v)) throw std::logic_error("witness escaped the plus-constraint");
    for (const IntervalSet& u : us)
        if (!g.intersects(u)) throw std::logic_error("witness missed a minus-constraint");
    IntervalSet excluded =
        IntervalSet::open(ExtRational(0), one).union_with(IntervalSet::open(one, ExtRational(2)));
    if (!g.contains(one) || excluded.contains(one))
        throw std::logic_error("witness lost the separating point");
    return g;
}

namespace {

IntervalSet::Component single_open(const IntervalSet& u, const ExtRational& x) {
    if (!u.is_single_open_interval())
        throw std::invalid_argument("u must be a single open interval");
    if (!u.contains(x)) throw std::invalid_argument("x must lie in u");
    return u.components()[0];
}

}  // namespace

bool notpreg_witness(const ExtRational& x, const IntervalSet& u) {
    // The complement of an open interval w fits inside u only when w swallows
    // everything outside u. For bounded u that forces w = (-inf, inf), whose
    // complement is empty and admits no v; one-sided u leaves room, and the
    // constructed pair below demonstrates it.
    auto c = single_open(u, x);
    return c.lo.is_finite() && c.hi.is_finite();
}

std::optional<RegPair> preg_separating_pair(const ExtRational& x, const IntervalSet& u) {
    auto c = single_open(u, x);
    if (c.lo.is_finite() && c.hi.is_finite()) return std::nullopt;
    const ExtRational one(1), two(2);
    RegPair pair;
    if (c.lo.is_finite()) {
        // u = (a, inf): w = (-inf, d) with a < d < x, v sits inside [d, inf)
        ExtRational d = ExtRational::midpoint(c.lo, x);
        pair.w = IntervalSet::open(ExtRational::neg_inf(), d);
        pair.v = IntervalSet::open(d, x + one);
    } else if (c.hi.is_finite()) {
        ExtRational d = ExtRational::midpoint(x, c.hi);
        pair.w = IntervalSet::open(d, ExtRational::pos_inf());
        pair.v = IntervalSet::open(x - one, d);
    } else {
        pair.w = IntervalSet::open(x + one, x + two);
        pair.v = IntervalSet::open(x - one, x + one);
    }
    if (!pair.v.contains(x) || !pair.v.subset_of(pair.w.complement()) ||
        !pair.w.complement().subset_of(u))
        throw std::logic_error("separating pair failed its own verification");
    return pair;
}

}  // namespace hyperlab::intervals
