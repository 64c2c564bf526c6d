#pragma once

#include <optional>
#include <vector>

#include "hyperlab/setcore.hpp"

namespace hyperlab {

/// A topology on a finite ground set: the family of open sets. Construction
/// always validates that the family contains the empty set and the whole
/// ground set and is closed under binary union and intersection (which on a
/// finite ground set is the same as arbitrary union and finite intersection).
class FiniteTopology {
public:
    static FiniteTopology from_opens(int ground_size, SetFamily opens);
    static FiniteTopology indiscrete(int ground_size);
    static FiniteTopology discrete(int ground_size);

    int ground_size() const { return ground_; }
    const SetFamily& opens() const { return opens_; }
    bool is_open(Mask m) const { return opens_.contains(m); }
    bool is_open(const Subset& s) const;
    bool is_closed(const Subset& s) const;

    /// Smallest closed superset of a.
    Subset closure_of(const Subset& a) const;
    /// All nonempty closed sets.
    SetFamily closed_family() const;
    /// Smallest open set containing the point.
    Subset minimal_open(int point) const;

    friend bool operator==(const FiniteTopology&, const FiniteTopology&) = default;

private:
    struct unchecked_tag {};
    FiniteTopology(int ground_size, SetFamily opens, unchecked_tag);

    int ground_;
    SetFamily opens_;

    friend FiniteTopology topology_unchecked(int, SetFamily);
};

/// Internal fast path for generation routines whose output is closed by
/// construction; validates in debug builds only.
FiniteTopology topology_unchecked(int ground_size, SetFamily opens);

/// Topology generated by an arbitrary family: the whole space is adjoined,
/// then finite intersections, then arbitrary unions, then the empty set.
FiniteTopology from_subbase(int ground_size, const SetFamily& subbase);

/// True iff b covers the space and refines pairwise intersections.
bool is_valid_base(int ground_size, const SetFamily& b);
/// Topology with base b; throws if b is not a valid base.
FiniteTopology from_base(int ground_size, const SetFamily& b);

bool is_t0(const FiniteTopology& t);
bool is_t1(const FiniteTopology& t);
bool is_t2(const FiniteTopology& t);
/// Regularity without the T1 convention: points and disjoint closed sets separate.
bool is_regular(const FiniteTopology& t);
bool is_t3(const FiniteTopology& t);

/// True iff for every x in U in P there are V, W in P with x in V, V inside
/// the complement of W, and that complement inside U. P must be a subbase for t.
bool is_p_regular(const FiniteTopology& t, const SetFamily& p);

/// Minimum size of a subfamily P' of P such that every point of every member
/// of P sits in some member of P' inside it. Exact search; families larger
/// than kWeightCap members report nullopt instead of approximating.
inline constexpr std::size_t kWeightCap = 20;
std::optional<int> weight(int ground_size, const SetFamily& p);
/// A minimum-cardinality refinement subfamily (lexicographically first).
std::optional<SetFamily> weight_witness(int ground_size, const SetFamily& p);

/// b is contained in the opens and every open is a union of members of b.
bool is_base_for(const SetFamily& b, const FiniteTopology& t);
/// s is contained in the opens and generates exactly t.
bool is_subbase_for(const SetFamily& s, const FiniteTopology& t);

/// For each member U of base, a subfamily of p whose intersection is U, when
/// one exists; the union of all witnesses then generates the same topology.
std::optional<SetFamily> intersection_witness_subbase(const SetFamily& p, const SetFamily& base);

/// n-fold product; points are n-tuples in row-major order (first coordinate
/// most significant). ground_size^n must stay within kMaxGround.
FiniteTopology product_topology(const FiniteTopology& t, int n);
int product_point(const std::vector<int>& tuple, int ground_size);
std::vector<int> product_tuple(int point, int ground_size, int n);

/// Subspace re-indexed over the points of a in increasing order;
/// points[i] is the original index of subspace point i.
struct Subspace {
    FiniteTopology topo;
    std::vector<int> points;
    int original_ground;

    Subset embed(const Subset& s) const;    // subspace subset -> original ground
    Subset restrict(const Subset& s) const; // original subset -> trace in subspace
};
Subspace subspace_topology(const FiniteTopology& t, const Subset& a);

/// Total map between finite spaces; graph[x] is the image of point x.
struct SpaceMap {
    FiniteTopology domain;
    FiniteTopology codomain;
    std::vector<int> graph;

    Subset image() const;
    Subset preimage(const Subset& s) const;
    Subset forward(const Subset& s) const;
    bool is_injective() const;
    bool is_bijective() const;
};

bool is_continuous(const SpaceMap& f);
/// The inverse of an injection, restricted to its image with the subspace
/// topology, is continuous. Throws if f is not injective.
bool is_inversely_continuous(const SpaceMap& f);

/// Every open cover has a finite subcover; verified with an actual greedy
/// subcover of the full open cover (trivially true on finite spaces).
bool is_compact(const FiniteTopology& t);

bool is_dense(const FiniteTopology& t, const Subset& d);

enum class EnumerationStrategy {
    preorder,      // reflexive-transitive relations; opens are the up-closed sets
    direct_family  // filter all families of subsets; cross-check oracle, n <= 3
};

/// All labeled topologies on n points in a deterministic order
/// (lexicographic on relation matrices resp. family bit patterns).
std::vector<FiniteTopology> enumerate_topologies(
    int n, EnumerationStrategy strategy = EnumerationStrategy::preorder);

/// Coarsest topology containing both.
FiniteTopology join_topologies(const FiniteTopology& a, const FiniteTopology& b);

/// Some relabeling of points carries the opens of a onto the opens of b.
bool are_homeomorphic(const FiniteTopology& a, const FiniteTopology& b);

}  // namespace hyperlab
