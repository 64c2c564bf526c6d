#include "hyperlab/setcore.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperlab {

void check_ground(int ground_size) {
    if (ground_size < 1 || ground_size > kMaxGround)
        throw std::invalid_argument("ground size must be in 1.." + std::to_string(kMaxGround) +
                                    ", got " + std::to_string(ground_size));
}

namespace {

void check_same_ground(int a, int b) {
    if (a != b)
        throw std::invalid_argument("ground-size mismatch: " + std::to_string(a) + " vs " +
                                    std::to_string(b));
}

}  // namespace

Subset::Subset(int ground_size, Mask bits) : ground_(ground_size), bits_(bits) {
    check_ground(ground_size);
    if (bits & ~full_mask(ground_size))
        throw std::invalid_argument("subset references points outside the ground set");
}

Subset Subset::of(int ground_size, std::initializer_list<int> points) {
    Mask bits = 0;
    for (int p : points) {
        if (p < 0 || p >= ground_size)
            throw std::invalid_argument("point index out of range");
        bits |= Mask{1} << p;
    }
    return Subset(ground_size, bits);
}

bool Subset::subset_of(const Subset& other) const {
    check_same_ground(ground_, other.ground_);
    return (bits_ & ~other.bits_) == 0;
}

bool Subset::intersects(const Subset& other) const {
    check_same_ground(ground_, other.ground_);
    return (bits_ & other.bits_) != 0;
}

Subset Subset::union_with(const Subset& other) const {
    check_same_ground(ground_, other.ground_);
    return Subset(ground_, bits_ | other.bits_);
}

Subset Subset::intersection(const Subset& other) const {
    check_same_ground(ground_, other.ground_);
    return Subset(ground_, bits_ & other.bits_);
}

Subset Subset::difference(const Subset& other) const {
    check_same_ground(ground_, other.ground_);
    return Subset(ground_, bits_ & ~other.bits_);
}

std::vector<int> Subset::points() const {
    std::vector<int> out;
    for (int p = 0; p < ground_; ++p)
        if ((bits_ >> p) & 1u) out.push_back(p);
    return out;
}

std::string Subset::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int p : points()) {
        if (!first) s += ",";
        s += std::to_string(p);
        first = false;
    }
    return s + "}";
}

SetFamily::SetFamily(int ground_size) : ground_(ground_size) { check_ground(ground_size); }

SetFamily::SetFamily(int ground_size, std::vector<Mask> masks)
    : ground_(ground_size), masks_(std::move(masks)) {
    check_ground(ground_size);
    for (Mask m : masks_)
        if (m & ~full_mask(ground_size))
            throw std::invalid_argument("family member references points outside the ground set");
    std::sort(masks_.begin(), masks_.end());
    masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
}

SetFamily SetFamily::of(int ground_size, std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<Mask> masks;
    masks.reserve(sets.size());
    for (const auto& s : sets) masks.push_back(Subset::of(ground_size, s).bits());
    return SetFamily(ground_size, std::move(masks));
}

SetFamily SetFamily::power(int ground_size) {
    check_ground(ground_size);
    std::vector<Mask> masks(std::size_t{1} << ground_size);
    for (Mask m = 0; m < masks.size(); ++m) masks[m] = m;
    return SetFamily(ground_size, std::move(masks));
}

bool SetFamily::contains(Mask m) const {
    return std::binary_search(masks_.begin(), masks_.end(), m);
}

int SetFamily::index_of(Mask m) const {
    auto it = std::lower_bound(masks_.begin(), masks_.end(), m);
    if (it == masks_.end() || *it != m) return -1;
    return static_cast<int>(it - masks_.begin());
}

SetFamily SetFamily::with(Mask m) const {
    std::vector<Mask> out = masks_;
    out.push_back(m);
    return SetFamily(ground_, std::move(out));
}

SetFamily SetFamily::without(Mask m) const {
    std::vector<Mask> out;
    out.reserve(masks_.size());
    for (Mask x : masks_)
        if (x != m) out.push_back(x);
    return SetFamily(ground_, std::move(out));
}

SetFamily SetFamily::union_with(const SetFamily& other) const {
    check_same_ground(ground_, other.ground_);
    std::vector<Mask> out;
    out.reserve(masks_.size() + other.masks_.size());
    std::set_union(masks_.begin(), masks_.end(), other.masks_.begin(), other.masks_.end(),
                   std::back_inserter(out));
    return SetFamily(ground_, std::move(out));
}

SetFamily SetFamily::intersection(const SetFamily& other) const {
    check_same_ground(ground_, other.ground_);
    std::vector<Mask> out;
    std::set_intersection(masks_.begin(), masks_.end(), other.masks_.begin(), other.masks_.end(),
                          std::back_inserter(out));
    return SetFamily(ground_, std::move(out));
}

SetFamily SetFamily::difference(const SetFamily& other) const {
    check_same_ground(ground_, other.ground_);
    std::vector<Mask> out;
    std::set_difference(masks_.begin(), masks_.end(), other.masks_.begin(), other.masks_.end(),
                        std::back_inserter(out));
    return SetFamily(ground_, std::move(out));
}

bool SetFamily::subfamily_of(const SetFamily& other) const {
    check_same_ground(ground_, other.ground_);
    return std::includes(other.masks_.begin(), other.masks_.end(), masks_.begin(), masks_.end());
}

std::string SetFamily::to_string() const {
    std::string s = "{";
    bool first = true;
    for (Mask m : masks_) {
        if (!first) s += ",";
        s += Subset(ground_, m).to_string();
        first = false;
    }
    return s + "}";
}

SetFamily plus_sets(const Subset& a, const SetFamily& m) {
    check_same_ground(a.ground_size(), m.ground_size());
    std::vector<Mask> out;
    for (Mask x : m.masks())
        if ((x & ~a.bits()) == 0) out.push_back(x);
    return SetFamily(m.ground_size(), std::move(out));
}

SetFamily minus_sets(const Subset& a, const SetFamily& m) {
    check_same_ground(a.ground_size(), m.ground_size());
    std::vector<Mask> out;
    for (Mask x : m.masks())
        if ((x & a.bits()) != 0) out.push_back(x);
    return SetFamily(m.ground_size(), std::move(out));
}

namespace {

std::vector<SetFamily> lift_with(const SetFamily& f, const SetFamily& m, bool plus) {
    std::vector<SetFamily> out;
    out.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        Subset a = f.at(i);
        out.push_back(plus ? plus_sets(a, m) : minus_sets(a, m));
    }
    auto less = [](const SetFamily& x, const SetFamily& y) { return x.masks() < y.masks(); };
    std::sort(out.begin(), out.end(), less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<SetFamily> lift_plus(const SetFamily& f, const SetFamily& m) {
    return lift_with(f, m, true);
}

std::vector<SetFamily> lift_minus(const SetFamily& f, const SetFamily& m) {
    return lift_with(f, m, false);
}

SetFamily fin_n(int ground_size, int n) {
    check_ground(ground_size);
    if (n < 1) throw std::invalid_argument("fin_n requires n >= 1");
    std::vector<Mask> out;
    for (Mask m = 1; m <= full_mask(ground_size); ++m)
        if (std::popcount(m) <= n) out.push_back(m);
    return SetFamily(ground_size, std::move(out));
}

SetFamily fin(int ground_size) { return fin_n(ground_size, ground_size); }

// Both closures run over the full 2^g table with a subset-sum (resp.
// superset-sum) sweep: a candidate T belongs to the union closure iff it
// equals the union of the members below it, and dually for intersections.
SetFamily union_closure(const SetFamily& f) {
    if (f.empty()) throw std::invalid_argument("union_closure of an empty family");
    const int g = f.ground_size();
    const std::size_t n = std::size_t{1} << g;
    std::vector<Mask> acc(n, 0);
    std::vector<char> has(n, 0);
    for (Mask m : f.masks()) {
        acc[m] = m;
        has[m] = 1;
    }
    for (int b = 0; b < g; ++b) {
        const Mask bit = Mask{1} << b;
        for (Mask t = 0; t < n; ++t)
            if (t & bit) {
                acc[t] |= acc[t ^ bit];
                has[t] |= has[t ^ bit];
            }
    }
    std::vector<Mask> out;
    for (Mask t = 0; t < n; ++t)
        if (has[t] && acc[t] == t) out.push_back(t);
    return SetFamily(g, std::move(out));
}

SetFamily intersection_closure(const SetFamily& f) {
    if (f.empty()) throw std::invalid_argument("intersection_closure of an empty family");
    const int g = f.ground_size();
    const std::size_t n = std::size_t{1} << g;
    const Mask all = full_mask(g);
    std::vector<Mask> acc(n, all);
    std::vector<char> has(n, 0);
    for (Mask m : f.masks()) {
        acc[m] = m;
        has[m] = 1;
    }
    for (int b = 0; b < g; ++b) {
        const Mask bit = Mask{1} << b;
        for (Mask t = 0; t < n; ++t)
            if (!(t & bit)) {
                acc[t] &= acc[t | bit];
                has[t] |= has[t | bit];
            }
    }
    std::vector<Mask> out;
    for (Mask t = 0; t < n; ++t)
        if (has[t] && acc[t] == t) out.push_back(t);
    return SetFamily(g, std::move(out));
}

}  // namespace hyperlab
