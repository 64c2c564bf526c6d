#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperlab/hyperspace.hpp"
#include "hyperlab/parallel.hpp"

namespace hyperlab::props {

inline constexpr std::uint64_t kDefaultSeed = 0x68797065726c6162ull;

enum class Verdict { pass, fail, hypothesis_not_met };

std::string verdict_name(Verdict v);

/// Outcome of one instance of one statement.
struct Outcome {
    Verdict verdict = Verdict::pass;
    std::string note;
};

/// Counterexample data: enough to rebuild the offending instance.
struct Witness {
    FiniteTopology space;
    std::optional<SetFamily> family;
    std::optional<FiniteTopology> hypertopology;  // over the family's index set
    std::vector<int> points;
    std::string note;
};

/// Aggregated result of a driver sweep. The verdict is fail when any
/// hypothesis-satisfying instance failed its conclusion, pass when at least
/// one was checked and none failed, and hypothesis-not-met otherwise.
struct CheckReport {
    std::string prop_id;
    long long instances_checked = 0;
    long long hypotheses_met = 0;
    long long passed = 0;
    long long failed = 0;
    Verdict verdict = Verdict::hypothesis_not_met;
    std::optional<Witness> witness;
    double elapsed_seconds = 0.0;
    std::uint64_t seed = 0;
};

struct DriverOptions {
    int min_points = 1;
    int max_points = 3;
    int jn_arity = 0;  // for the tuple-map driver; 0 means both n=1 and n=2
    par::Mode mode = par::Mode::openmp;
    std::uint64_t seed = kDefaultSeed;
    int random_hyper_count = 6;
};

// ---------------------------------------------------------------------------
// Single-instance checkers. Each evaluates its hypotheses first and returns
// hypothesis_not_met when they fail; pass/fail reflects only the conclusion.
// Hyperspace arguments must carry a base topology.
// ---------------------------------------------------------------------------

/// x1..xn -> {x1..xn} is continuous into the card<=n subspace.
Outcome jn_continuous_instance(const HyperSpace& h, int n);
/// j1 is a homeomorphism onto the singleton subspace.
Outcome j1_homeo_instance(const HyperSpace& h);
/// The singleton subspace is closed in the hyperspace.
Outcome j1_closed_instance(const HyperSpace& h);
/// A closed singleton subspace forces a Hausdorff base space.
Outcome t2_from_closed_j1_instance(const HyperSpace& h);
/// The finite members are dense in the hyperspace.
Outcome jx_dense_instance(const HyperSpace& h);
/// Finite subsets of a dense set are dense in the hyperspace.
Outcome fin_dense_instance(const HyperSpace& h, const Subset& a);
/// Lower-type weight transfer: the refinement of pprime lifts to a base.
Outcome weight_lower_instance(const HyperSpace& h, const SetFamily& pprime);
/// Upper-side weight transfer under the interpolation hypothesis on b_choice.
Outcome weight_vietoris_instance(const HyperSpace& h, const SetFamily& b_choice);
/// Hyperspaces of complements of minus-open sets (or of plus-open sets) are T0.
Outcome hyper_t0_instance(const HyperSpace& h);
/// Compactness of coarser hypertopologies over the closed sets.
Outcome compact_instance(const HyperSpace& h);

enum class T1Mode { complements, star, double_star };
std::string t1_mode_name(T1Mode mode);

/// Hypertopology generated from a subbase p of the base space: strong
/// Vietoris-type, induced topology recovered, and T1.
Outcome t1_instance(const FiniteTopology& t, const SetFamily& p, const SetFamily& m, T1Mode mode);
/// Same construction from a p-regular base space: additionally T2.
Outcome t2_instance(const FiniteTopology& t, const SetFamily& p, const SetFamily& m, T1Mode mode);

enum class PregMode { exact, relaxed };

/// Converse: a Hausdorff hyperspace of complements forces p-regularity.
Outcome preg_converse_instance(const FiniteTopology& t, const SetFamily& p, const SetFamily& m,
                               PregMode mode);

/// Closure embedding of the subspace hyperspace under a minus-generated topology.
Outcome embedding_minus_instance(const FiniteTopology& t, const SetFamily& p, const Subset& a);
/// Trace hypertopology is strong Vietoris-type and the closure map's
/// (inverse) continuity matches its plus-part's.
Outcome subspace_equivalence_instance(const HyperSpace& h, const Subset& a);
/// Continuity into joins from continuity into both factors.
Outcome join_continuity_instance(const std::vector<int>& graph, const FiniteTopology& o1,
                                 const FiniteTopology& o2);

/// Condition (*): separating members of m through p.
bool star_condition(const SetFamily& p, const SetFamily& m);
/// Condition (**): separating members of m from outside points through p.
bool double_star_condition(const SetFamily& p, const SetFamily& m);

// ---------------------------------------------------------------------------
// Exhaustive drivers
// ---------------------------------------------------------------------------

/// Stable identifiers accepted by run_prop.
std::vector<std::string> known_props();

/// Runs the exhaustive driver for one statement over all topologies with
/// min_points..max_points points. Unknown ids raise std::invalid_argument.
CheckReport run_prop(const std::string& prop_id, const DriverOptions& opt = {});

/// Deterministic candidate hypertopologies over (t, m): the three canonical
/// constructions followed by seeded random-subbase ones, deduplicated.
std::vector<HyperSpace> hyper_candidates(const FiniteTopology& t, const SetFamily& m,
                                         int random_count, std::uint64_t seed);

/// Families swept by the generic drivers: closed sets, bounded-cardinality
/// families, and (up to 3 base points) every natural family.
std::vector<SetFamily> standard_family_pool(const FiniteTopology& t);

// ---------------------------------------------------------------------------
// Counterexample search
// ---------------------------------------------------------------------------

enum class FamilyPolicy { closed_only, all_natural, fin_n, explicit_list };
enum class HyperPolicy { vietoris, upper, lower, random_subbase, enumerate_all };

struct SearchConfig {
    int min_points = 1;
    int max_points = 3;
    FamilyPolicy family_policy = FamilyPolicy::closed_only;
    int fin_arity = 2;                        // for FamilyPolicy::fin_n
    std::vector<SetFamily> explicit_families; // for FamilyPolicy::explicit_list
    HyperPolicy hyper_policy = HyperPolicy::vietoris;
    std::uint64_t seed = kDefaultSeed;
    int random_count = 32;                    // for HyperPolicy::random_subbase
    std::vector<std::string> hypotheses;
    std::string conclusion;
};

/// Named predicates usable in search implications.
std::vector<std::string> known_predicates();
bool eval_predicate(const std::string& id, const HyperSpace& h);

/// Enumerates instances ordered by (points, |family|, |opens|) and reports the
/// first counterexample to hypotheses => conclusion, or pass within bounds.
/// Deterministic for a fixed config.
CheckReport search_counterexamples(const SearchConfig& cfg);

// ---------------------------------------------------------------------------
// Built-in example reproduction
// ---------------------------------------------------------------------------

/// The 3-point space whose hypertopology over its closed sets collapses on
/// the plus side.
FiniteTopology novt_space();
/// The 3-point space whose plus-induced topology recovers the original one.
FiniteTopology novt1_space();

/// Recomputes every displayed family of one of the built-in examples
/// ("novt", "novt1", "novietoris") and compares against embedded expected
/// values. The real-line example verifies its witness over the canonical
/// neighborhood and 200 seeded random ones.
CheckReport reproduce(const std::string& example_id);

}  // namespace hyperlab::props
