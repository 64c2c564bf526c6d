#include "hyperlab/hyperspace.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hyperlab {

namespace {

void check_family(int base_ground, const SetFamily& family) {
    if (family.ground_size() != base_ground)
        throw std::invalid_argument("family ground does not match the base space");
    if (family.empty()) throw std::invalid_argument("hyperspace family must be nonempty");
    if (family.contains_empty_set())
        throw std::invalid_argument("hyperspace family must not contain the empty set");
}

void check_topo(const SetFamily& family, const FiniteTopology& topo) {
    if (topo.ground_size() != static_cast<int>(family.size()))
        throw std::invalid_argument("hypertopology ground must equal the family size");
}

}  // namespace

HyperSpace::HyperSpace(FiniteTopology base, SetFamily family, FiniteTopology topo)
    : base_ground_(base.ground_size()),
      base_(std::move(base)),
      family_(std::move(family)),
      topo_(std::move(topo)) {
    check_family(base_ground_, family_);
    check_topo(family_, topo_);
}

HyperSpace::HyperSpace(int base_ground, SetFamily family, FiniteTopology topo)
    : base_ground_(base_ground), family_(std::move(family)), topo_(std::move(topo)) {
    check_ground(base_ground);
    check_family(base_ground_, family_);
    check_topo(family_, topo_);
}

int HyperSpace::index_of(const Subset& member) const {
    if (member.ground_size() != base_ground_) return -1;
    return family_.index_of(member.bits());
}

Subset HyperSpace::member_of(int index) const {
    if (index < 0 || index >= static_cast<int>(family_.size()))
        throw std::invalid_argument("member index out of range");
    return family_.at(static_cast<std::size_t>(index));
}

Subset HyperSpace::plus_index_set(const Subset& a) const {
    Mask out = 0;
    for (std::size_t i = 0; i < family_.size(); ++i)
        if ((family_.masks()[i] & ~a.bits()) == 0) out |= Mask{1} << i;
    return Subset(topo_.ground_size(), out);
}

Subset HyperSpace::minus_index_set(const Subset& a) const {
    Mask out = 0;
    for (std::size_t i = 0; i < family_.size(); ++i)
        if ((family_.masks()[i] & a.bits()) != 0) out |= Mask{1} << i;
    return Subset(topo_.ground_size(), out);
}

SetFamily HyperSpace::decode(const Subset& index_set) const {
    std::vector<Mask> out;
    for (int i = 0; i < index_set.ground_size(); ++i)
        if (index_set.contains(i)) out.push_back(family_.masks()[static_cast<std::size_t>(i)]);
    return SetFamily(base_ground_, std::move(out));
}

namespace {

enum class Lift { plus, minus };

SetFamily lifted_family(const SetFamily& m, const SetFamily& source, Lift kind) {
    const int h = static_cast<int>(m.size());
    std::vector<Mask> out;
    out.reserve(source.size());
    for (Mask a : source.masks()) {
        Mask idx = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            Mask mem = m.masks()[i];
            bool in = (kind == Lift::plus) ? ((mem & ~a) == 0) : ((mem & a) != 0);
            if (in) idx |= Mask{1} << i;
        }
        out.push_back(idx);
    }
    return SetFamily(h, std::move(out));
}

}  // namespace

HyperSpace upper_vietoris(const FiniteTopology& t, const SetFamily& m) {
    check_family(t.ground_size(), m);
    SetFamily base = lifted_family(m, t.opens(), Lift::plus);
    // the plus-lifts of a topology are a base: X+ covers and (U^V)+ = U+ ^ V+
    const int h = static_cast<int>(m.size());
    SetFamily opens = union_closure(base).with(Mask{0}).with(full_mask(h));
    return HyperSpace(t, m, topology_unchecked(h, std::move(opens)));
}

HyperSpace lower_vietoris(const FiniteTopology& t, const SetFamily& m) {
    check_family(t.ground_size(), m);
    SetFamily sub = lifted_family(m, t.opens(), Lift::minus);
    return HyperSpace(t, m, from_subbase(static_cast<int>(m.size()), sub));
}

HyperSpace vietoris(const FiniteTopology& t, const SetFamily& m) {
    check_family(t.ground_size(), m);
    SetFamily sub = lifted_family(m, t.opens(), Lift::plus)
                        .union_with(lifted_family(m, t.opens(), Lift::minus));
    return HyperSpace(t, m, from_subbase(static_cast<int>(m.size()), sub));
}

HyperSpace restrict_hyper(const HyperSpace& h, const SetFamily& n) {
    if (!n.subfamily_of(h.family()))
        throw std::invalid_argument("restriction family is not a subfamily");
    if (n.empty()) throw std::invalid_argument("restriction family must be nonempty");
    Mask keep = 0;
    for (std::size_t i = 0; i < h.family().size(); ++i)
        if (n.contains(h.family().masks()[i])) keep |= Mask{1} << i;
    Subspace sub = subspace_topology(h.topo(), Subset(h.topo().ground_size(), keep));
    if (h.base()) return HyperSpace(*h.base(), n, std::move(sub.topo));
    return HyperSpace(h.base_ground(), n, std::move(sub.topo));
}

SetFamily plus_open_family(const HyperSpace& h) {
    const int g = h.base_ground();
    if (g > kDeriveGroundCap)
        throw std::invalid_argument("derived families limited to " +
                                    std::to_string(kDeriveGroundCap) + " base points");
    std::vector<Mask> out;
    for (Mask a = 0; a <= full_mask(g); ++a)
        if (h.topo().is_open(h.plus_index_set(Subset(g, a)).bits())) out.push_back(a);
    return SetFamily(g, std::move(out));
}

SetFamily minus_open_family(const HyperSpace& h) {
    const int g = h.base_ground();
    if (g > kDeriveGroundCap)
        throw std::invalid_argument("derived families limited to " +
                                    std::to_string(kDeriveGroundCap) + " base points");
    std::vector<Mask> out;
    for (Mask a = 0; a <= full_mask(g); ++a)
        if (h.topo().is_open(h.minus_index_set(Subset(g, a)).bits())) out.push_back(a);
    return SetFamily(g, std::move(out));
}

DerivedFamilies derive(const HyperSpace& h) {
    const int g = h.base_ground();
    SetFamily b = plus_open_family(h);
    SetFamily p = minus_open_family(h);
    // b always contains X and is intersection-closed; verify rather than assume,
    // a violation here can only mean a defect in the lift machinery.
    if (!b.contains(full_mask(g)))
        throw std::logic_error("plus-open family lost the whole space");
    for (Mask x : b.masks())
        for (Mask y : b.masks())
            if (!b.contains(x & y))
                throw std::logic_error("plus-open family is not intersection-closed");
    FiniteTopology t_plus = topology_unchecked(g, union_closure(b).with(Mask{0}));
    FiniteTopology t_minus = from_subbase(g, p);
    FiniteTopology t_v = from_subbase(g, b.union_with(p));
    return DerivedFamilies{std::move(b), std::move(p), std::move(t_plus), std::move(t_minus),
                           std::move(t_v)};
}

namespace {

SetFamily lift_over(const HyperSpace& h, const SetFamily& source, Lift kind) {
    return lifted_family(h.family(), source, kind);
}

HyperSpace with_topo(const HyperSpace& h, FiniteTopology topo) {
    if (h.base()) return HyperSpace(*h.base(), h.family(), std::move(topo));
    return HyperSpace(h.base_ground(), h.family(), std::move(topo));
}

}  // namespace

HyperSpace o_u(const HyperSpace& h) {
    SetFamily base = lift_over(h, plus_open_family(h), Lift::plus);
    const int n = h.topo().ground_size();
    SetFamily opens = union_closure(base).with(Mask{0}).with(full_mask(n));
    return with_topo(h, topology_unchecked(n, std::move(opens)));
}

HyperSpace o_l(const HyperSpace& h) {
    SetFamily sub = lift_over(h, minus_open_family(h), Lift::minus);
    return with_topo(h, from_subbase(h.topo().ground_size(), sub));
}

bool is_tychonoff_type(const HyperSpace& h) {
    // {A+ : A subseteq X} cut with the opens is exactly the lift of the
    // plus-open family.
    return is_base_for(lift_over(h, plus_open_family(h), Lift::plus), h.topo());
}

bool is_lower_vietoris_type(const HyperSpace& h) {
    return is_subbase_for(lift_over(h, minus_open_family(h), Lift::minus), h.topo());
}

bool is_vietoris_type(const HyperSpace& h) {
    SetFamily sub = lift_over(h, plus_open_family(h), Lift::plus)
                        .union_with(lift_over(h, minus_open_family(h), Lift::minus));
    const bool by_subbase = is_subbase_for(sub, h.topo());
    const bool by_join = join_topologies(o_u(h).topo(), o_l(h).topo()) == h.topo();
    if (by_subbase != by_join)
        throw std::logic_error("vietoris-type formulations disagree; implementation bug");
    return by_subbase;
}

bool is_strong_vietoris_type(const HyperSpace& h) {
    if (!is_vietoris_type(h))
        throw std::invalid_argument("strong classification requires a vietoris-type topology");
    DerivedFamilies d = derive(h);
    return d.t_plus == d.t_minus;
}

bool is_natural_family(int base_ground, const SetFamily& m) {
    if (m.ground_size() != base_ground)
        throw std::invalid_argument("family ground does not match the base space");
    for (int x = 0; x < base_ground; ++x)
        if (!m.contains(Mask{1} << x)) return false;
    return true;
}

HyperSpace join_hyper(const HyperSpace& a, const HyperSpace& b) {
    if (a.family() != b.family())
        throw std::invalid_argument("join requires the same underlying family");
    if (a.base_ground() != b.base_ground() ||
        (a.base() && b.base() && !(*a.base() == *b.base())))
        throw std::invalid_argument("join requires the same base space");
    FiniteTopology topo = join_topologies(a.topo(), b.topo());
    if (a.base()) return HyperSpace(*a.base(), a.family(), std::move(topo));
    if (b.base()) return HyperSpace(*b.base(), a.family(), std::move(topo));
    return HyperSpace(a.base_ground(), a.family(), std::move(topo));
}

SetFamily card_at_most(const SetFamily& m, int n) {
    std::vector<Mask> out;
    for (Mask x : m.masks())
        if (std::popcount(x) <= n) out.push_back(x);
    return SetFamily(m.ground_size(), std::move(out));
}

JMap j_map(const FiniteTopology& t, const SetFamily& m, int n, const HyperSpace& h) {
    if (!(h.family() == m)) throw std::invalid_argument("hyperspace family differs from m");
    if (!fin_n(t.ground_size(), n).subfamily_of(m))
        throw std::invalid_argument("j_map requires all sets of cardinality <= n in the family");
    FiniteTopology dom = product_topology(t, n);
    HyperSpace target = restrict_hyper(h, card_at_most(m, n));
    std::vector<int> graph(static_cast<std::size_t>(dom.ground_size()));
    for (int p = 0; p < dom.ground_size(); ++p) {
        Mask set = 0;
        for (int x : product_tuple(p, t.ground_size(), n)) set |= Mask{1} << x;
        int idx = target.index_of(Subset(t.ground_size(), set));
        if (idx < 0) throw std::logic_error("collapsed tuple not present in the target family");
        graph[static_cast<std::size_t>(p)] = idx;
    }
    SpaceMap map{std::move(dom), target.topo(), std::move(graph)};
    return JMap{std::move(map), std::move(target)};
}

std::vector<SetFamily> natural_families(int ground_size) {
    check_ground(ground_size);
    std::vector<Mask> fixed;
    for (int x = 0; x < ground_size; ++x) fixed.push_back(Mask{1} << x);
    std::vector<Mask> optional_sets;
    for (Mask a = 1; a <= full_mask(ground_size); ++a)
        if (std::popcount(a) >= 2) optional_sets.push_back(a);
    std::vector<SetFamily> out;
    out.reserve(std::size_t{1} << optional_sets.size());
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << optional_sets.size()); ++pick) {
        std::vector<Mask> members = fixed;
        for (std::size_t i = 0; i < optional_sets.size(); ++i)
            if ((pick >> i) & 1u) members.push_back(optional_sets[i]);
        out.push_back(SetFamily(ground_size, std::move(members)));
    }
    auto less = [](const SetFamily& x, const SetFamily& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x.masks() < y.masks();
    };
    std::sort(out.begin(), out.end(), less);
    return out;
}

}  // namespace hyperlab
