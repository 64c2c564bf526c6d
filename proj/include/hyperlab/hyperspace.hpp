#pragma once

#include <optional>

#include "hyperlab/topology.hpp"

namespace hyperlab {

/// A hyperspace: a family M of nonempty subsets of a base ground set together
/// with a topology on M. The topology lives on the index set of M; point i of
/// it stands for the i-th member of M in canonical order, and that ordering is
/// the index map used everywhere a member must be decoded.
class HyperSpace {
public:
    /// Hypertopology over a family of subsets of a full base space.
    HyperSpace(FiniteTopology base, SetFamily family, FiniteTopology topo);
    /// Same, but the base carries no topology (the hypertopology is abstract).
    HyperSpace(int base_ground, SetFamily family, FiniteTopology topo);

    int base_ground() const { return base_ground_; }
    const std::optional<FiniteTopology>& base() const { return base_; }
    const SetFamily& family() const { return family_; }
    const FiniteTopology& topo() const { return topo_; }

    int index_of(const Subset& member) const;  // -1 when absent
    Subset member_of(int index) const;

    /// A's plus-set {m in M : m subseteq A} as a subset of the index space.
    Subset plus_index_set(const Subset& a) const;
    /// A's minus-set {m in M : m meets A} as a subset of the index space.
    Subset minus_index_set(const Subset& a) const;

    /// Decode an index-space subset back into the family members it selects.
    SetFamily decode(const Subset& index_set) const;

    friend bool operator==(const HyperSpace&, const HyperSpace&) = default;

private:
    int base_ground_;
    std::optional<FiniteTopology> base_;
    SetFamily family_;
    FiniteTopology topo_;
};

/// Topology on M with base {U+ : U open in t}.
HyperSpace upper_vietoris(const FiniteTopology& t, const SetFamily& m);
/// Topology on M with subbase {U- : U open in t}.
HyperSpace lower_vietoris(const FiniteTopology& t, const SetFamily& m);
/// Join of the two: subbase {U+ : U open} united with {U- : U open}.
HyperSpace vietoris(const FiniteTopology& t, const SetFamily& m);

/// Subspace of the hypertopology over a subfamily N of M.
HyperSpace restrict_hyper(const HyperSpace& h, const SetFamily& n);

/// The two families induced on the base set by a hypertopology, and the three
/// topologies they generate there.
struct DerivedFamilies {
    SetFamily b_family;      // {A : A+ open}, contains X, closed under intersection
    SetFamily p_family;      // {A : A- open}, closed under union
    FiniteTopology t_plus;   // generated by b_family as a base
    FiniteTopology t_minus;  // generated by p_family as a subbase
    FiniteTopology t_v;      // generated by their union as a subbase
};

/// Number of base points above which derive() refuses to sweep all subsets.
inline constexpr int kDeriveGroundCap = 12;

SetFamily plus_open_family(const HyperSpace& h);   // {A : A+ open}
SetFamily minus_open_family(const HyperSpace& h);  // {A : A- open}
DerivedFamilies derive(const HyperSpace& h);

/// Hypertopology rebuilt from the open plus-sets as a base.
HyperSpace o_u(const HyperSpace& h);
/// Hypertopology rebuilt from the open minus-sets as a subbase.
HyperSpace o_l(const HyperSpace& h);

/// The open plus-sets form a base of the hypertopology.
bool is_tychonoff_type(const HyperSpace& h);
/// The open minus-sets form a subbase of the hypertopology.
bool is_lower_vietoris_type(const HyperSpace& h);
/// The open plus-sets and open minus-sets together form a subbase. Evaluated
/// through both equivalent formulations (subbase test, and topo == o_u v o_l);
/// a disagreement raises std::logic_error since it can only be a bug.
bool is_vietoris_type(const HyperSpace& h);
/// Vietoris-type and the two induced topologies on the base set coincide.
/// Requires is_vietoris_type(h); throws std::invalid_argument otherwise.
bool is_strong_vietoris_type(const HyperSpace& h);

/// Every singleton of the base ground set belongs to m.
bool is_natural_family(int base_ground, const SetFamily& m);

/// Supremum of two hypertopologies over the same family (and base, when given).
HyperSpace join_hyper(const HyperSpace& a, const HyperSpace& b);

/// The tuple-collapse map x1..xn -> {x1,..,xn} from the n-fold product of t
/// into the subspace of h over the members of cardinality <= n.
struct JMap {
    SpaceMap map;
    HyperSpace target;  // h restricted to the members of cardinality <= n
};
JMap j_map(const FiniteTopology& t, const SetFamily& m, int n, const HyperSpace& h);

/// Members of m with cardinality <= n, as a subfamily.
SetFamily card_at_most(const SetFamily& m, int n);

/// All families over the ground set that contain every singleton, in
/// canonical order (by size, then member masks).
std::vector<SetFamily> natural_families(int ground_size);

}  // namespace hyperlab
