#include "hyperlab/propositions.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <stdexcept>

#include "hyperlab/intervals.hpp"

namespace hyperlab::props {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::hypothesis_not_met: return "hypothesis-not-met";
    }
    return "?";
}

std::string t1_mode_name(T1Mode mode) {
    switch (mode) {
        case T1Mode::complements: return "complements";
        case T1Mode::star: return "star";
        case T1Mode::double_star: return "double-star";
    }
    return "?";
}

namespace {

Outcome pass() { return Outcome{Verdict::pass, ""}; }
Outcome fail(std::string note) { return Outcome{Verdict::fail, std::move(note)}; }
Outcome hnm(std::string note) { return Outcome{Verdict::hypothesis_not_met, std::move(note)}; }

const FiniteTopology& base_of(const HyperSpace& h) {
    if (!h.base()) throw std::invalid_argument("instance requires a base topology");
    return *h.base();
}

SetFamily minus_lifts(const SetFamily& m, const SetFamily& source) {
    std::vector<Mask> out;
    out.reserve(source.size());
    for (Mask a : source.masks()) {
        Mask idx = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            if ((m.masks()[i] & a) != 0) idx |= Mask{1} << i;
        out.push_back(idx);
    }
    return SetFamily(static_cast<int>(m.size()), std::move(out));
}

SetFamily plus_lifts(const SetFamily& m, const SetFamily& source) {
    std::vector<Mask> out;
    out.reserve(source.size());
    for (Mask a : source.masks()) {
        Mask idx = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            if ((m.masks()[i] & ~a) == 0) idx |= Mask{1} << i;
        out.push_back(idx);
    }
    return SetFamily(static_cast<int>(m.size()), std::move(out));
}

SetFamily complements_of(const SetFamily& f) {
    const Mask all = full_mask(f.ground_size());
    std::vector<Mask> out;
    out.reserve(f.size());
    for (Mask m : f.masks()) out.push_back(all & ~m);
    return SetFamily(f.ground_size(), std::move(out));
}

Subset singleton_indices(const HyperSpace& h) {
    Mask out = 0;
    for (std::size_t i = 0; i < h.family().size(); ++i)
        if (std::popcount(h.family().masks()[i]) == 1) out |= Mask{1} << i;
    return Subset(h.topo().ground_size(), out);
}

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) { return mix(a ^ mix(b)); }

}  // namespace

// ---------------------------------------------------------------------------
// Instance checkers
// ---------------------------------------------------------------------------

Outcome jn_continuous_instance(const HyperSpace& h, int n) {
    const FiniteTopology& t = base_of(h);
    if (!fin_n(t.ground_size(), n).subfamily_of(h.family()))
        return hnm("family misses some set of cardinality <= n");
    if (!is_vietoris_type(h)) return hnm("hypertopology is not vietoris-type");
    DerivedFamilies d = derive(h);
    if (!d.t_v.opens().subfamily_of(t.opens()))
        return hnm("induced topology is not coarser than the base topology");
    JMap jm = j_map(t, h.family(), n, h);
    if (!is_continuous(jm.map)) return fail("tuple-collapse map is not continuous");
    return pass();
}

Outcome j1_homeo_instance(const HyperSpace& h) {
    const FiniteTopology& t = base_of(h);
    if (!is_natural_family(t.ground_size(), h.family())) return hnm("family is not natural");
    if (!is_vietoris_type(h)) return hnm("hypertopology is not vietoris-type");
    DerivedFamilies d = derive(h);
    if (!(d.t_v == t)) return hnm("induced topology differs from the base topology");
    JMap jm = j_map(t, h.family(), 1, h);
    if (!jm.map.is_bijective()) return fail("point embedding is not a bijection");
    if (!is_continuous(jm.map)) return fail("point embedding is not continuous");
    if (!is_inversely_continuous(jm.map)) return fail("point embedding inverse is not continuous");
    return pass();
}

Outcome j1_closed_instance(const HyperSpace& h) {
    const FiniteTopology& t = base_of(h);
    if (!is_t2(t)) return hnm("base space is not hausdorff");
    if (!is_natural_family(t.ground_size(), h.family())) return hnm("family is not natural");
    if (!is_vietoris_type(h)) return hnm("hypertopology is not vietoris-type");
    DerivedFamilies d = derive(h);
    if (!t.opens().subfamily_of(d.t_minus.opens()))
        return hnm("minus-induced topology is not finer than the base topology");
    Subset j1 = singleton_indices(h);
    if (!h.topo().is_open(j1.complement())) return fail("singleton subspace is not closed");
    return pass();
}

Outcome t2_from_closed_j1_instance(const HyperSpace& h) {
    const FiniteTopology& t = base_of(h);
    if (!fin_n(t.ground_size(), 2).subfamily_of(h.family()))
        return hnm("family misses some set of cardinality <= 2");
    if (!is_vietoris_type(h)) return hnm("hypertopology is not vietoris-type");
    DerivedFamilies d = derive(h);
    if (!d.t_v.opens().subfamily_of(t.opens()))
        return hnm("induced topology is not coarser than the base topology");
    if (!h.topo().is_open(singleton_indices(h).complement()))
        return hnm("singleton subspace is not closed");
    if (!is_t2(t)) return fail("base space is not hausdorff");
    return pass();
}

Outcome jx_dense_instance(const HyperSpace& h) {
    const FiniteTopology& t = base_of(h);
    if (!fin(t.ground_size()).subfamily_of(h.family()))
        return hnm("family misses some finite set");
    if (!is_vietoris_type(h)) return hnm("hypertopology is not vietoris-type");
    Mask finite = 0;  // all members are finite here; keep the computation honest
    for (std::size_t i = 0; i < h.family().size(); ++i) finite |= Mask{1} << i;
    if (!is_dense(h.topo(), Subset(h.topo().ground_size(), finite)))
        return fail("finite members are not dense");
    return pass();
}

Outcome fin_dense_instance(const HyperSpace& h, const Subset& a) {
    const FiniteTopology& t = base_of(h);
    if (!fin(t.ground_size()).subfamily_of(h.family()))
        return hnm("family misses some finite set");
    if (!is_vietoris_type(h)) return hnm("hypertopology is not vietoris-type");
    DerivedFamilies d = derive(h);
    if (!(d.t_v == t)) return hnm("induced topology differs from the base topology");
    if (a.is_empty() || !is_dense(t, a)) return hnm("chosen set is not dense in the base");
    if (!is_dense(h.topo(), h.plus_index_set(a)))
        return fail("finite subsets of a dense set are not dense");
    return pass();
}

Outcome weight_lower_instance(const HyperSpace& h, const SetFamily& pprime) {
    if (!is_lower_vietoris_type(h)) return hnm("hypertopology is not lower-vietoris-type");
    SetFamily lifted = minus_lifts(h.family(), pprime);
    if (!is_subbase_for(lifted, h.topo()))
        return hnm("minus-lifts of the chosen family are not a subbase");
    auto refinement = weight_witness(h.base_ground(), pprime);
    if (!refinement) return hnm("refinement family exceeds the exact-search cap");
    if (refinement->empty()) return hnm("refinement family is empty");
    SetFamily candidate = intersection_closure(minus_lifts(h.family(), *refinement));
    if (!is_base_for(candidate, h.topo()))
        return fail("intersection closure of lifted refinement is not a base");
    auto w = weight(h.topo().ground_size(), h.topo().opens());
    if (w && *w > static_cast<int>(candidate.size()))
        return fail("hyperspace weight exceeds the constructed base size");
    return pass();
}

Outcome weight_vietoris_instance(const HyperSpace& h, const SetFamily& b_choice) {
    if (!is_vietoris_type(h)) return hnm("hypertopology is not vietoris-type");
    SetFamily b_open = plus_open_family(h);
    if (!b_choice.subfamily_of(b_open)) return hnm("chosen family is not within the plus-open sets");
    for (std::size_t i = 0; i < h.family().size(); ++i) {
        Mask member = h.family().masks()[i];
        for (Mask u : b_open.masks()) {
            if ((member & ~u) != 0) continue;
            bool interpolated = false;
            for (Mask v : b_choice.masks())
                if ((member & ~v) == 0 && (v & ~u) == 0) {
                    interpolated = true;
                    break;
                }
            if (!interpolated) return hnm("interpolation hypothesis fails");
        }
    }
    SetFamily b_lift = plus_lifts(h.family(), b_choice);
    if (!is_base_for(b_lift, o_u(h).topo()))
        return fail("lifted family is not a base for the upper part");
    auto refinement = weight_witness(h.base_ground(), minus_open_family(h));
    if (!refinement || refinement->empty()) return hnm("no refinement family for the lower part");
    SetFamily lower_base = intersection_closure(minus_lifts(h.family(), *refinement));
    const Mask all = full_mask(h.topo().ground_size());
    std::vector<Mask> combined;
    for (Mask b : b_lift.with(all).masks())
        for (Mask c : lower_base.with(all).masks()) combined.push_back(b & c);
    SetFamily joint(h.topo().ground_size(), std::move(combined));
    if (!is_base_for(joint, h.topo()))
        return fail("combined upper/lower family is not a base for the hypertopology");
    auto w = weight(h.topo().ground_size(), h.topo().opens());
    if (w && *w > static_cast<int>(joint.size()))
        return fail("hyperspace weight exceeds the combined base size");
    return pass();
}

Outcome hyper_t0_instance(const HyperSpace& h) {
    SetFamily p_open = minus_open_family(h);
    SetFamily b_open = plus_open_family(h);
    bool via_minus = h.family().subfamily_of(complements_of(p_open));
    bool via_plus = h.family().subfamily_of(b_open);
    if (!via_minus && !via_plus)
        return hnm("family lies neither in the complements of minus-open sets nor in plus-open sets");
    if (!is_t0(h.topo())) return fail("hyperspace is not t0");
    return pass();
}

Outcome compact_instance(const HyperSpace& h) {
    const FiniteTopology& t = base_of(h);
    if (!is_compact(t) || !is_t1(t)) return hnm("base space is not compact t1");
    if (!(h.family() == t.closed_family())) return hnm("family is not the closed sets");
    if (!is_vietoris_type(h)) return hnm("hypertopology is not vietoris-type");
    DerivedFamilies d = derive(h);
    if (!(d.t_v == t)) return hnm("induced topology differs from the base topology");
    if (!is_compact(h.topo())) return fail("hyperspace is not compact");
    HyperSpace full = vietoris(t, h.family());
    std::vector<int> identity(static_cast<std::size_t>(h.topo().ground_size()));
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
    if (!is_continuous(SpaceMap{full.topo(), h.topo(), identity}))
        return fail("identity from the full hypertopology is not continuous");
    return pass();
}

bool star_condition(const SetFamily& p, const SetFamily& m) {
    for (Mask mi : m.masks())
        for (Mask mj : m.masks()) {
            if ((mi & ~mj) == 0) continue;  // mi minus mj empty
            bool found_u = false, found_v = false;
            for (Mask u : p.masks())
                if ((mj & ~u) == 0 && (mi & ~u) != 0) {
                    found_u = true;
                    break;
                }
            for (Mask v : p.masks())
                if ((mi & v) != 0 && (mj & v) == 0) {
                    found_v = true;
                    break;
                }
            if (!found_u || !found_v) return false;
        }
    return true;
}

bool double_star_condition(const SetFamily& p, const SetFamily& m) {
    const int g = p.ground_size();
    for (Mask mi : m.masks())
        for (int x = 0; x < g; ++x) {
            if ((mi >> x) & 1u) continue;
            const Mask xbit = Mask{1} << x;
            bool found_u = false, found_v = false;
            for (Mask u : p.masks())
                if ((mi & ~u) == 0 && (u & xbit) == 0) {
                    found_u = true;
                    break;
                }
            for (Mask v : p.masks())
                if ((v & xbit) != 0 && (v & mi) == 0) {
                    found_v = true;
                    break;
                }
            if (!found_u || !found_v) return false;
        }
    return true;
}

namespace {

struct T1Conclusions {
    bool strong = false;
    bool induced = false;
    HyperSpace hyper;
};

std::optional<T1Conclusions> t1_shared(const FiniteTopology& t, const SetFamily& p,
                                       const SetFamily& m, T1Mode mode, Outcome& out) {
    if (!is_subbase_for(p, t)) {
        out = hnm("family is not a subbase for the base topology");
        return std::nullopt;
    }
    if (m.empty() || m.contains_empty_set() || !is_natural_family(t.ground_size(), m)) {
        out = hnm("family of sets is not natural");
        return std::nullopt;
    }
    bool shape_ok = false;
    switch (mode) {
        case T1Mode::complements: shape_ok = m.subfamily_of(complements_of(p)); break;
        case T1Mode::star: shape_ok = star_condition(p, m); break;
        case T1Mode::double_star: shape_ok = double_star_condition(p, m); break;
    }
    if (!shape_ok) {
        out = hnm("family does not satisfy the " + t1_mode_name(mode) + " hypothesis");
        return std::nullopt;
    }
    SetFamily sub = minus_lifts(m, p).union_with(plus_lifts(m, p));
    HyperSpace h(t, m, from_subbase(static_cast<int>(m.size()), sub));
    DerivedFamilies d = derive(h);
    bool vt = is_vietoris_type(h);
    return T1Conclusions{vt && d.t_plus == d.t_minus, d.t_v == t, std::move(h)};
}

}  // namespace

Outcome t1_instance(const FiniteTopology& t, const SetFamily& p, const SetFamily& m, T1Mode mode) {
    Outcome out = pass();
    auto c = t1_shared(t, p, m, mode, out);
    if (!c) return out;
    if (!c->strong) return fail("hypertopology is not strong vietoris-type");
    if (!c->induced) return fail("induced topology differs from the base topology");
    if (!is_t1(c->hyper.topo())) return fail("hyperspace is not t1");
    return pass();
}

Outcome t2_instance(const FiniteTopology& t, const SetFamily& p, const SetFamily& m, T1Mode mode) {
    Outcome out = pass();
    auto c = t1_shared(t, p, m, mode, out);
    if (!c) return out;
    if (!is_p_regular(t, p)) return hnm("base space is not p-regular");
    if (!c->strong) return fail("hypertopology is not strong vietoris-type");
    if (!c->induced) return fail("induced topology differs from the base topology");
    if (!is_t2(c->hyper.topo())) return fail("hyperspace is not t2");
    return pass();
}

Outcome preg_converse_instance(const FiniteTopology& t, const SetFamily& p, const SetFamily& m,
                               PregMode mode) {
    if (p.empty() || !is_base_for(p, t)) return hnm("family is not a base for the base topology");
    if (!(intersection_closure(p) == p)) return hnm("base family is not intersection-closed");
    SetFamily comps = complements_of(p).without(Mask{0});
    if (mode == PregMode::exact) {
        if (!(m == comps)) return hnm("family is not the complements of the base family");
        if (m.empty() || !is_natural_family(t.ground_size(), m))
            return hnm("family of complements is not natural");
    } else {
        if (!comps.subfamily_of(m)) return hnm("family misses some complement");
        if (!fin(t.ground_size()).subfamily_of(m)) return hnm("family misses some finite set");
        const Mask all = full_mask(t.ground_size());
        for (Mask u : p.masks())
            for (int x = 0; x < t.ground_size(); ++x) {
                if (!((u >> x) & 1u)) continue;
                if (!m.contains((Mask{1} << x) | (all & ~u)))
                    return hnm("family misses a point-plus-complement set");
            }
    }
    if (m.empty() || m.contains_empty_set()) return hnm("family is empty or contains the empty set");
    SetFamily sub = minus_lifts(m, p).union_with(plus_lifts(m, p));
    HyperSpace h(t, m, from_subbase(static_cast<int>(m.size()), sub));
    if (!is_t2(h.topo())) return hnm("hyperspace is not t2");
    if (!is_p_regular(t, p)) return fail("base space is not p-regular");
    return pass();
}

Outcome embedding_minus_instance(const FiniteTopology& t, const SetFamily& p, const Subset& a) {
    if (!p.contains(full_mask(t.ground_size()))) return hnm("subbase does not contain the space");
    if (!is_subbase_for(p, t)) return hnm("family is not a subbase for the base topology");
    if (a.is_empty()) return hnm("subspace is empty");
    SetFamily cl_x = t.closed_family();
    FiniteTopology o = from_subbase(static_cast<int>(cl_x.size()), minus_lifts(cl_x, p));
    Subspace sub = subspace_topology(t, a);
    SetFamily cl_a = sub.topo.closed_family();
    std::vector<Mask> traces;
    for (Mask u : p.masks()) traces.push_back(sub.restrict(Subset(t.ground_size(), u)).bits());
    SetFamily p_a(sub.topo.ground_size(), std::move(traces));
    FiniteTopology o_a = from_subbase(static_cast<int>(cl_a.size()), minus_lifts(cl_a, p_a));
    std::vector<int> graph;
    for (std::size_t i = 0; i < cl_a.size(); ++i) {
        Subset lifted = sub.embed(cl_a.at(i));
        int idx = cl_x.index_of(t.closure_of(lifted).bits());
        if (idx < 0) return fail("closure map left the closed-set family");
        graph.push_back(idx);
    }
    SpaceMap map{o_a, o, std::move(graph)};
    if (!map.is_injective()) return fail("closure map is not injective");
    if (!is_continuous(map)) return fail("closure map is not continuous");
    if (!is_inversely_continuous(map)) return fail("closure map inverse is not continuous");
    return pass();
}

Outcome subspace_equivalence_instance(const HyperSpace& h, const Subset& a) {
    const FiniteTopology& t = base_of(h);
    if (!is_t1(t)) return hnm("base space is not t1");
    if (!(h.family() == t.closed_family())) return hnm("family is not the closed sets");
    if (!is_vietoris_type(h)) return hnm("hypertopology is not vietoris-type");
    DerivedFamilies d = derive(h);
    if (!(d.t_plus == d.t_minus)) return hnm("hypertopology is not strong vietoris-type");
    if (!(d.t_v == t)) return hnm("induced topology differs from the base topology");
    if (a.is_empty()) return hnm("subspace is empty");

    Subspace sub = subspace_topology(t, a);
    SetFamily m_a = sub.topo.closed_family();
    const int ha = static_cast<int>(m_a.size());
    auto trace_family = [&](const SetFamily& f) {
        std::vector<Mask> out;
        for (Mask u : f.masks()) out.push_back(sub.restrict(Subset(t.ground_size(), u)).bits());
        return SetFamily(sub.topo.ground_size(), std::move(out));
    };
    SetFamily b_a = trace_family(d.b_family);
    SetFamily p_a = trace_family(d.p_family);
    FiniteTopology oa_plus = from_base(ha, plus_lifts(m_a, b_a));
    FiniteTopology oa_minus = from_subbase(ha, minus_lifts(m_a, p_a));
    FiniteTopology oa = join_topologies(oa_plus, oa_minus);
    HyperSpace h_a(sub.topo, m_a, oa);

    DerivedFamilies da = derive(h_a);
    bool part_a = is_vietoris_type(h_a) && da.t_plus == da.t_minus && da.t_v == sub.topo;

    std::vector<int> graph;
    for (std::size_t i = 0; i < m_a.size(); ++i) {
        int idx = h.family().index_of(t.closure_of(sub.embed(m_a.at(i))).bits());
        if (idx < 0) return fail("closure map left the closed-set family");
        graph.push_back(idx);
    }
    SpaceMap full_map{oa, h.topo(), graph};
    SpaceMap plus_map{oa_plus, o_u(h).topo(), graph};
    if (!full_map.is_injective()) return fail("closure map is not injective");
    bool cont_eq = is_continuous(full_map) == is_continuous(plus_map);
    bool inv_eq = is_inversely_continuous(full_map) == is_inversely_continuous(plus_map);
    if (!part_a) return fail("trace hypertopology is not strong vietoris-type over the subspace");
    if (!cont_eq) return fail("continuity of the closure map differs from its plus-part");
    if (!inv_eq) return fail("inverse continuity of the closure map differs from its plus-part");
    return pass();
}

Outcome join_continuity_instance(const std::vector<int>& graph, const FiniteTopology& o1,
                                 const FiniteTopology& o2) {
    if (o1.ground_size() != o2.ground_size())
        throw std::invalid_argument("codomain topologies must share a ground set");
    const int dom_ground = static_cast<int>(graph.size());
    auto preimage_topology = [&](const FiniteTopology& o) {
        std::vector<Mask> out;
        for (Mask v : o.opens().masks()) {
            Mask pre = 0;
            for (int x = 0; x < dom_ground; ++x)
                if ((v >> graph[static_cast<std::size_t>(x)]) & 1u) pre |= Mask{1} << x;
            out.push_back(pre);
        }
        return FiniteTopology::from_opens(dom_ground, SetFamily(dom_ground, std::move(out)));
    };
    FiniteTopology t1 = preimage_topology(o1);
    FiniteTopology t2 = preimage_topology(o2);
    if (!is_continuous(SpaceMap{t1, o1, graph}) || !is_continuous(SpaceMap{t2, o2, graph}))
        return hnm("factor maps are not continuous");
    FiniteTopology dom = join_topologies(t1, t2);
    FiniteTopology cod = join_topologies(o1, o2);
    if (!is_continuous(SpaceMap{dom, cod, graph}))
        return fail("map into the join is not continuous");
    return pass();
}

// ---------------------------------------------------------------------------
// Pools and drivers
// ---------------------------------------------------------------------------

std::vector<HyperSpace> hyper_candidates(const FiniteTopology& t, const SetFamily& m,
                                         int random_count, std::uint64_t seed) {
    std::vector<HyperSpace> out;
    out.push_back(vietoris(t, m));
    out.push_back(upper_vietoris(t, m));
    out.push_back(lower_vietoris(t, m));
    const int h = static_cast<int>(m.size());
    std::mt19937_64 rng(seed);
    for (int c = 0; c < random_count; ++c) {
        std::size_t k = 1 + rng() % 3;
        std::vector<Mask> sub;
        for (std::size_t i = 0; i < k; ++i)
            sub.push_back(static_cast<Mask>(rng() % (std::uint64_t{1} << h)));
        out.push_back(HyperSpace(t, m, from_subbase(h, SetFamily(h, std::move(sub)))));
    }
    std::vector<HyperSpace> dedup;
    for (auto& cand : out) {
        bool seen = false;
        for (const auto& kept : dedup)
            if (kept.topo() == cand.topo()) {
                seen = true;
                break;
            }
        if (!seen) dedup.push_back(std::move(cand));
    }
    return dedup;
}

std::vector<SetFamily> standard_family_pool(const FiniteTopology& t) {
    const int g = t.ground_size();
    std::vector<SetFamily> fams{t.closed_family(), fin_n(g, 1), fin(g)};
    if (g >= 2) fams.push_back(fin_n(g, 2));
    if (g <= 3)
        for (auto& nf : natural_families(g)) fams.push_back(std::move(nf));
    auto less = [](const SetFamily& x, const SetFamily& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x.masks() < y.masks();
    };
    std::sort(fams.begin(), fams.end(), less);
    fams.erase(std::unique(fams.begin(), fams.end()), fams.end());
    return fams;
}

namespace {

std::vector<SetFamily> dedup_families(std::vector<SetFamily> fams) {
    auto less = [](const SetFamily& x, const SetFamily& y) { return x.masks() < y.masks(); };
    std::sort(fams.begin(), fams.end(), less);
    fams.erase(std::unique(fams.begin(), fams.end()), fams.end());
    return fams;
}

std::vector<SetFamily> subbase_pool(const FiniteTopology& t) {
    const int g = t.ground_size();
    std::vector<SetFamily> out{t.opens(), t.opens().without(Mask{0}), SetFamily::power(g)};
    if (auto ww = weight_witness(g, t.opens())) out.push_back(std::move(*ww));
    return dedup_families(std::move(out));
}

std::vector<SetFamily> base_pool(const FiniteTopology& t) {
    const int g = t.ground_size();
    std::vector<SetFamily> out{t.opens(), SetFamily::power(g)};
    if (auto ww = weight_witness(g, t.opens())) out.push_back(intersection_closure(*ww));
    return dedup_families(std::move(out));
}

std::vector<SetFamily> subbase_pool_with_space(const FiniteTopology& t) {
    std::vector<SetFamily> out;
    for (auto& p : subbase_pool(t)) out.push_back(p.with(full_mask(t.ground_size())));
    return dedup_families(std::move(out));
}

struct Job {
    std::function<Outcome()> run;
    FiniteTopology space;
    std::optional<SetFamily> family;
    std::optional<FiniteTopology> hyper_opens;
};

CheckReport sweep(std::string prop_id, std::vector<Job> jobs, par::Mode mode, std::uint64_t seed) {
    auto start = std::chrono::steady_clock::now();
    auto outcomes =
        par::map_indexed<Outcome>(jobs.size(), mode, [&](std::size_t i) { return jobs[i].run(); });
    CheckReport rep;
    rep.prop_id = std::move(prop_id);
    rep.seed = seed;
    rep.instances_checked = static_cast<long long>(jobs.size());
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        switch (outcomes[i].verdict) {
            case Verdict::pass:
                ++rep.hypotheses_met;
                ++rep.passed;
                break;
            case Verdict::fail:
                ++rep.hypotheses_met;
                ++rep.failed;
                if (!rep.witness)
                    rep.witness = Witness{jobs[i].space, jobs[i].family, jobs[i].hyper_opens,
                                          {}, outcomes[i].note};
                break;
            case Verdict::hypothesis_not_met: break;
        }
    }
    rep.verdict = rep.failed > 0 ? Verdict::fail
                  : rep.passed > 0 ? Verdict::pass
                                   : Verdict::hypothesis_not_met;
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

using InstanceFn = std::function<Outcome(const HyperSpace&)>;

std::vector<Job> hyper_sweep_jobs(const DriverOptions& opt, const InstanceFn& fn,
                                  bool closed_family_only = false) {
    std::vector<Job> jobs;
    for (int p = opt.min_points; p <= opt.max_points; ++p) {
        auto topologies = enumerate_topologies(p);
        for (std::size_t ti = 0; ti < topologies.size(); ++ti) {
            const FiniteTopology& t = topologies[ti];
            std::vector<SetFamily> fams =
                closed_family_only ? std::vector<SetFamily>{t.closed_family()}
                                   : standard_family_pool(t);
            for (std::size_t mi = 0; mi < fams.size(); ++mi) {
                auto cands = hyper_candidates(t, fams[mi], opt.random_hyper_count,
                                              mix(opt.seed, mix(p, mix(ti, mi))));
                for (auto& h : cands) {
                    FiniteTopology hyper_opens = h.topo();
                    jobs.push_back(Job{[fn, h = std::move(h)]() { return fn(h); }, t, fams[mi],
                                       std::move(hyper_opens)});
                }
            }
        }
    }
    return jobs;
}

CheckReport drive_jn(const DriverOptions& opt) {
    std::vector<int> arities;
    if (opt.jn_arity > 0)
        arities.push_back(opt.jn_arity);
    else
        arities = {1, 2};
    std::vector<Job> jobs;
    for (int n : arities) {
        DriverOptions scoped = opt;
        // stay inside the product-space cap
        while (scoped.max_points >= scoped.min_points) {
            long long pts = 1;
            bool ok = true;
            for (int i = 0; i < n; ++i) {
                pts *= scoped.max_points;
                if (pts > kMaxGround) ok = false;
            }
            if (ok) break;
            --scoped.max_points;
        }
        if (scoped.max_points < scoped.min_points) continue;
        auto batch = hyper_sweep_jobs(scoped,
                                      [n](const HyperSpace& h) { return jn_continuous_instance(h, n); });
        for (auto& j : batch) jobs.push_back(std::move(j));
    }
    return sweep("prop-2.7.20a", std::move(jobs), opt.mode, opt.seed);
}

CheckReport drive_density(const DriverOptions& opt) {
    std::vector<Job> jobs;
    for (int p = opt.min_points; p <= opt.max_points; ++p) {
        auto topologies = enumerate_topologies(p);
        for (std::size_t ti = 0; ti < topologies.size(); ++ti) {
            const FiniteTopology& t = topologies[ti];
            SetFamily m = fin(p);  // the only family containing every finite set
            auto cands = hyper_candidates(t, m, opt.random_hyper_count, mix(opt.seed, mix(p, ti)));
            for (auto& h : cands)
                for (Mask a = 1; a <= full_mask(p); ++a) {
                    FiniteTopology hyper_opens = h.topo();
                    jobs.push_back(Job{[h, a, p]() { return fin_dense_instance(h, Subset(p, a)); },
                                       t, m, std::move(hyper_opens)});
                }
        }
    }
    return sweep("prop-2.7.20e", std::move(jobs), opt.mode, opt.seed);
}

CheckReport drive_weight_lower(const DriverOptions& opt) {
    auto fn = [](const HyperSpace& h) {
        Outcome a = weight_lower_instance(h, minus_open_family(h));
        if (a.verdict == Verdict::fail) return a;
        Outcome b = weight_lower_instance(h, base_of(h).opens());
        if (b.verdict == Verdict::fail) return b;
        if (a.verdict == Verdict::pass || b.verdict == Verdict::pass) return pass();
        return a;
    };
    auto jobs = hyper_sweep_jobs(opt, fn);
    return sweep("prop-3.3", std::move(jobs), opt.mode, opt.seed);
}

CheckReport drive_weight_vietoris(const DriverOptions& opt) {
    auto fn = [](const HyperSpace& h) {
        SetFamily b_open = plus_open_family(h);
        Outcome a = weight_vietoris_instance(h, b_open);
        if (a.verdict == Verdict::fail) return a;
        Outcome b = hnm("no union-closed refinement inside the plus-open sets");
        if (auto ww = weight_witness(h.base_ground(), b_open)) {
            SetFamily closed = union_closure(*ww);
            b = weight_vietoris_instance(h, closed);
        }
        if (b.verdict == Verdict::fail) return b;
        if (a.verdict == Verdict::pass || b.verdict == Verdict::pass) return pass();
        return a;
    };
    auto jobs = hyper_sweep_jobs(opt, fn);
    return sweep("prop-teglovi", std::move(jobs), opt.mode, opt.seed);
}

CheckReport drive_t1_family(const std::string& id, const DriverOptions& opt, bool want_t2) {
    std::vector<Job> jobs;
    for (int p = opt.min_points; p <= opt.max_points; ++p) {
        auto topologies = enumerate_topologies(p);
        auto naturals = natural_families(p);
        for (const FiniteTopology& t : topologies)
            for (const SetFamily& pp : subbase_pool(t))
                for (const SetFamily& m : naturals)
                    for (T1Mode mode : {T1Mode::complements, T1Mode::star, T1Mode::double_star})
                        jobs.push_back(Job{[t, pp, m, mode, want_t2]() {
                                               return want_t2 ? t2_instance(t, pp, m, mode)
                                                              : t1_instance(t, pp, m, mode);
                                           },
                                           t, m, std::nullopt});
    }
    return sweep(id, std::move(jobs), opt.mode, opt.seed);
}

CheckReport drive_preg(const DriverOptions& opt) {
    std::vector<Job> jobs;
    for (int p = opt.min_points; p <= opt.max_points; ++p) {
        auto topologies = enumerate_topologies(p);
        for (const FiniteTopology& t : topologies)
            for (const SetFamily& pp : base_pool(t)) {
                SetFamily exact_m = complements_of(pp).without(Mask{0});
                if (!exact_m.empty())
                    jobs.push_back(Job{[t, pp, exact_m]() {
                                           return preg_converse_instance(t, pp, exact_m,
                                                                         PregMode::exact);
                                       },
                                       t, exact_m, std::nullopt});
                SetFamily relaxed_m = fin(p);
                jobs.push_back(Job{[t, pp, relaxed_m]() {
                                       return preg_converse_instance(t, pp, relaxed_m,
                                                                     PregMode::relaxed);
                                   },
                                   t, relaxed_m, std::nullopt});
            }
    }
    return sweep("prop-proPreg", std::move(jobs), opt.mode, opt.seed);
}

CheckReport drive_embedding(const DriverOptions& opt) {
    std::vector<Job> jobs;
    for (int p = opt.min_points; p <= opt.max_points; ++p) {
        auto topologies = enumerate_topologies(p);
        for (const FiniteTopology& t : topologies)
            for (const SetFamily& pp : subbase_pool_with_space(t))
                for (Mask a = 1; a <= full_mask(p); ++a)
                    jobs.push_back(Job{[t, pp, a, p]() {
                                           return embedding_minus_instance(t, pp, Subset(p, a));
                                       },
                                       t, pp, std::nullopt});
    }
    return sweep("prop-iA", std::move(jobs), opt.mode, opt.seed);
}

CheckReport drive_subspace_equivalence(const DriverOptions& opt) {
    std::vector<Job> jobs;
    for (int p = opt.min_points; p <= opt.max_points; ++p) {
        auto topologies = enumerate_topologies(p);
        for (std::size_t ti = 0; ti < topologies.size(); ++ti) {
            const FiniteTopology& t = topologies[ti];
            SetFamily m = t.closed_family();
            auto cands = hyper_candidates(t, m, opt.random_hyper_count * 2,
                                          mix(opt.seed, mix(p, ti)));
            for (auto& h : cands)
                for (Mask a = 1; a <= full_mask(p); ++a) {
                    FiniteTopology hyper_opens = h.topo();
                    jobs.push_back(
                        Job{[h, a, p]() { return subspace_equivalence_instance(h, Subset(p, a)); },
                            t, m, std::move(hyper_opens)});
                }
        }
    }
    return sweep("prop-iAX", std::move(jobs), opt.mode, opt.seed);
}

CheckReport drive_join_continuity(const DriverOptions& opt) {
    std::vector<Job> jobs;
    for (int p = opt.min_points; p <= opt.max_points; ++p) {
        auto topologies = enumerate_topologies(p);
        long long maps = 1;
        for (int i = 0; i < p; ++i) maps *= p;
        for (long long mi = 0; mi < maps; ++mi) {
            std::vector<int> graph(static_cast<std::size_t>(p));
            long long rest = mi;
            for (int x = 0; x < p; ++x) {
                graph[static_cast<std::size_t>(x)] = static_cast<int>(rest % p);
                rest /= p;
            }
            for (const FiniteTopology& o1 : topologies)
                for (const FiniteTopology& o2 : topologies)
                    jobs.push_back(Job{[graph, o1, o2]() {
                                           return join_continuity_instance(graph, o1, o2);
                                       },
                                       o1, std::nullopt, std::make_optional(o2)});
        }
    }
    return sweep("prop-2.6-0", std::move(jobs), opt.mode, opt.seed);
}

}  // namespace

std::vector<std::string> known_props() {
    return {"prop-2.7.20a", "prop-2.7.20b", "prop-2.7.20v", "prop-2.7.20g", "prop-2.7.20d",
            "prop-2.7.20e", "prop-3.3",     "prop-teglovi", "prop-T0",      "prop-T1",
            "prop-T2",      "prop-proPreg", "prop-mycom",   "prop-iA",      "prop-iAX",
            "prop-2.6-0",   "example-novt", "example-novt1", "example-novietoris"};
}

CheckReport run_prop(const std::string& prop_id, const DriverOptions& opt) {
    if (opt.min_points < 1 || opt.max_points > 4 || opt.min_points > opt.max_points)
        throw std::invalid_argument("point range must sit within 1..4");
    if (prop_id == "prop-2.7.20a") return drive_jn(opt);
    if (prop_id == "prop-2.7.20b")
        return sweep(prop_id, hyper_sweep_jobs(opt, j1_homeo_instance), opt.mode, opt.seed);
    if (prop_id == "prop-2.7.20v")
        return sweep(prop_id, hyper_sweep_jobs(opt, j1_closed_instance), opt.mode, opt.seed);
    if (prop_id == "prop-2.7.20g")
        return sweep(prop_id, hyper_sweep_jobs(opt, t2_from_closed_j1_instance), opt.mode,
                     opt.seed);
    if (prop_id == "prop-2.7.20d")
        return sweep(prop_id, hyper_sweep_jobs(opt, jx_dense_instance), opt.mode, opt.seed);
    if (prop_id == "prop-2.7.20e") return drive_density(opt);
    if (prop_id == "prop-3.3") return drive_weight_lower(opt);
    if (prop_id == "prop-teglovi") return drive_weight_vietoris(opt);
    if (prop_id == "prop-T0")
        return sweep(prop_id, hyper_sweep_jobs(opt, hyper_t0_instance), opt.mode, opt.seed);
    if (prop_id == "prop-T1") return drive_t1_family("prop-T1", opt, false);
    if (prop_id == "prop-T2") return drive_t1_family("prop-T2", opt, true);
    if (prop_id == "prop-proPreg") return drive_preg(opt);
    if (prop_id == "prop-mycom")
        return sweep(prop_id, hyper_sweep_jobs(opt, compact_instance, true), opt.mode, opt.seed);
    if (prop_id == "prop-iA") return drive_embedding(opt);
    if (prop_id == "prop-iAX") return drive_subspace_equivalence(opt);
    if (prop_id == "prop-2.6-0") return drive_join_continuity(opt);
    if (prop_id == "example-novt" || prop_id == "example-novt1" ||
        prop_id == "example-novietoris")
        return reproduce(prop_id.substr(8));
    throw std::invalid_argument("unknown proposition id: " + prop_id);
}

// ---------------------------------------------------------------------------
// Counterexample search
// ---------------------------------------------------------------------------

std::vector<std::string> known_predicates() {
    return {"vietoris-topology", "tychonoff-topology",   "upper-vietoris-topology",
            "lower-vietoris-topology", "vietoris-type",  "tychonoff-type",
            "lower-vietoris-type",     "strong-vietoris-type", "natural-family",
            "hyper-t0", "hyper-t1", "hyper-t2", "hyper-regular", "hyper-compact",
            "base-t0",  "base-t1",  "base-t2",  "base-regular",  "base-compact",
            "tv-subset-t", "tv-equals-t"};
}

bool eval_predicate(const std::string& id, const HyperSpace& h) {
    if (id == "vietoris-topology") return h.topo() == vietoris(base_of(h), h.family()).topo();
    if (id == "tychonoff-topology" || id == "upper-vietoris-topology")
        return h.topo() == upper_vietoris(base_of(h), h.family()).topo();
    if (id == "lower-vietoris-topology")
        return h.topo() == lower_vietoris(base_of(h), h.family()).topo();
    if (id == "vietoris-type") return is_vietoris_type(h);
    if (id == "tychonoff-type") return is_tychonoff_type(h);
    if (id == "lower-vietoris-type") return is_lower_vietoris_type(h);
    if (id == "strong-vietoris-type") {
        if (!is_vietoris_type(h)) return false;
        DerivedFamilies d = derive(h);
        return d.t_plus == d.t_minus;
    }
    if (id == "natural-family") return is_natural_family(h.base_ground(), h.family());
    if (id == "hyper-t0") return is_t0(h.topo());
    if (id == "hyper-t1") return is_t1(h.topo());
    if (id == "hyper-t2") return is_t2(h.topo());
    if (id == "hyper-regular") return is_regular(h.topo());
    if (id == "hyper-compact") return is_compact(h.topo());
    if (id == "base-t0") return is_t0(base_of(h));
    if (id == "base-t1") return is_t1(base_of(h));
    if (id == "base-t2") return is_t2(base_of(h));
    if (id == "base-regular") return is_regular(base_of(h));
    if (id == "base-compact") return is_compact(base_of(h));
    if (id == "tv-subset-t") return derive(h).t_v.opens().subfamily_of(base_of(h).opens());
    if (id == "tv-equals-t") return derive(h).t_v == base_of(h);
    throw std::invalid_argument("unknown predicate: " + id);
}

namespace {

std::vector<SetFamily> search_families(const SearchConfig& cfg, const FiniteTopology& t) {
    switch (cfg.family_policy) {
        case FamilyPolicy::closed_only: return {t.closed_family()};
        case FamilyPolicy::all_natural: return natural_families(t.ground_size());
        case FamilyPolicy::fin_n: return {fin_n(t.ground_size(), cfg.fin_arity)};
        case FamilyPolicy::explicit_list: {
            std::vector<SetFamily> out;
            for (const auto& f : cfg.explicit_families)
                if (f.ground_size() == t.ground_size() && !f.empty() && !f.contains_empty_set())
                    out.push_back(f);
            return out;
        }
    }
    return {};
}

std::vector<HyperSpace> search_hypers(const SearchConfig& cfg, const FiniteTopology& t,
                                      const SetFamily& m, std::uint64_t instance_seed) {
    std::vector<HyperSpace> out;
    switch (cfg.hyper_policy) {
        case HyperPolicy::vietoris: out.push_back(vietoris(t, m)); break;
        case HyperPolicy::upper: out.push_back(upper_vietoris(t, m)); break;
        case HyperPolicy::lower: out.push_back(lower_vietoris(t, m)); break;
        case HyperPolicy::random_subbase: {
            const int h = static_cast<int>(m.size());
            std::mt19937_64 rng(instance_seed);
            for (int c = 0; c < cfg.random_count; ++c) {
                std::size_t k = 1 + rng() % 3;
                std::vector<Mask> sub;
                for (std::size_t i = 0; i < k; ++i)
                    sub.push_back(static_cast<Mask>(rng() % (std::uint64_t{1} << h)));
                out.push_back(HyperSpace(t, m, from_subbase(h, SetFamily(h, std::move(sub)))));
            }
            break;
        }
        case HyperPolicy::enumerate_all: {
            if (m.size() > 4) break;  // full enumeration only for tiny families
            for (auto& topo : enumerate_topologies(static_cast<int>(m.size())))
                out.push_back(HyperSpace(t, m, std::move(topo)));
            break;
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const HyperSpace& a, const HyperSpace& b) {
        if (a.topo().opens().size() != b.topo().opens().size())
            return a.topo().opens().size() < b.topo().opens().size();
        return a.topo().opens().masks() < b.topo().opens().masks();
    });
    std::vector<HyperSpace> dedup;
    for (auto& cand : out) {
        if (!dedup.empty() && dedup.back().topo() == cand.topo()) continue;
        dedup.push_back(std::move(cand));
    }
    return dedup;
}

}  // namespace

CheckReport search_counterexamples(const SearchConfig& cfg) {
    if (cfg.min_points < 1 || cfg.max_points > 4 || cfg.min_points > cfg.max_points)
        throw std::invalid_argument("search points must sit within 1..4");
    if (cfg.conclusion.empty()) throw std::invalid_argument("search needs a conclusion predicate");
    auto known = known_predicates();
    auto check_known = [&](const std::string& id) {
        if (std::find(known.begin(), known.end(), id) == known.end())
            throw std::invalid_argument("unknown predicate: " + id);
    };
    check_known(cfg.conclusion);
    for (const auto& hyp : cfg.hypotheses) check_known(hyp);

    auto start = std::chrono::steady_clock::now();
    CheckReport rep;
    rep.prop_id = "search:" + cfg.conclusion;
    rep.seed = cfg.seed;

    for (int p = cfg.min_points; p <= cfg.max_points && !rep.witness; ++p) {
        struct Entry {
            std::size_t t_index;
            SetFamily family;
            HyperSpace hyper;
        };
        auto topologies = enumerate_topologies(p);
        std::vector<Entry> entries;
        for (std::size_t ti = 0; ti < topologies.size(); ++ti)
            for (auto& m : search_families(cfg, topologies[ti])) {
                auto hypers = search_hypers(cfg, topologies[ti], m,
                                            mix(cfg.seed, mix(p, ti)));
                for (auto& h : hypers) entries.push_back(Entry{ti, m, std::move(h)});
            }
        // minimal witnesses first: family size, then hypertopology size
        std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
            if (a.family.size() != b.family.size()) return a.family.size() < b.family.size();
            return a.hyper.topo().opens().size() < b.hyper.topo().opens().size();
        });
        for (const Entry& e : entries) {
            ++rep.instances_checked;
            bool hyps_hold = true;
            for (const auto& hyp : cfg.hypotheses)
                if (!eval_predicate(hyp, e.hyper)) {
                    hyps_hold = false;
                    break;
                }
            if (!hyps_hold) continue;
            ++rep.hypotheses_met;
            if (eval_predicate(cfg.conclusion, e.hyper)) {
                ++rep.passed;
                continue;
            }
            ++rep.failed;
            rep.witness = Witness{topologies[e.t_index], e.family, e.hyper.topo(), {},
                                  "conclusion " + cfg.conclusion + " fails"};
            break;
        }
    }
    rep.verdict = rep.failed > 0 ? Verdict::fail
                  : rep.passed > 0 ? Verdict::pass
                                   : Verdict::hypothesis_not_met;
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

// ---------------------------------------------------------------------------
// Built-in examples
// ---------------------------------------------------------------------------

FiniteTopology novt_space() {
    return FiniteTopology::from_opens(3, SetFamily(3, {0u, 1u, 5u, 7u}));
}

FiniteTopology novt1_space() {
    return FiniteTopology::from_opens(3, SetFamily(3, {0u, 1u, 4u, 5u, 6u, 7u}));
}

namespace {

struct Comparator {
    long long checks = 0;
    long long failures = 0;
    std::string first_failure;

    template <typename T>
    void expect(const T& got, const T& want, const std::string& what) {
        ++checks;
        if (!(got == want)) {
            ++failures;
            if (first_failure.empty()) first_failure = what;
        }
    }
    void expect_true(bool got, const std::string& what) { expect(got, true, what); }
};

CheckReport finish(Comparator& cmp, std::string id,
                   const std::optional<FiniteTopology>& witness_space,
                   std::chrono::steady_clock::time_point start) {
    CheckReport rep;
    rep.prop_id = std::move(id);
    rep.instances_checked = cmp.checks;
    rep.hypotheses_met = cmp.checks;
    rep.passed = cmp.checks - cmp.failures;
    rep.failed = cmp.failures;
    rep.verdict = cmp.failures ? Verdict::fail : Verdict::pass;
    if (cmp.failures && witness_space)
        rep.witness = Witness{*witness_space, std::nullopt, std::nullopt, {}, cmp.first_failure};
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

CheckReport reproduce_novt() {
    auto start = std::chrono::steady_clock::now();
    Comparator cmp;
    FiniteTopology t = novt_space();
    SetFamily cl = t.closed_family();
    cmp.expect(cl, SetFamily(3, {2u, 6u, 7u}), "closed family");

    HyperSpace lower = lower_vietoris(t, cl);
    HyperSpace upper = upper_vietoris(t, cl);
    HyperSpace vie = vietoris(t, cl);
    // displayed plus/minus index sets for all eight subsets
    const std::vector<std::pair<Mask, std::pair<Mask, Mask>>> table = {
        {0u, {0u, 0u}}, {1u, {0u, 4u}}, {2u, {1u, 7u}}, {3u, {1u, 7u}},
        {4u, {0u, 6u}}, {5u, {0u, 6u}}, {6u, {3u, 7u}}, {7u, {7u, 7u}}};
    for (const auto& [a, expected] : table) {
        cmp.expect(vie.plus_index_set(Subset(3, a)).bits(), expected.first,
                   "plus-set of " + Subset(3, a).to_string());
        cmp.expect(vie.minus_index_set(Subset(3, a)).bits(), expected.second,
                   "minus-set of " + Subset(3, a).to_string());
    }
    cmp.expect(lower.topo().opens(), SetFamily(3, {0u, 4u, 6u, 7u}), "lower hypertopology");
    cmp.expect(upper.topo().opens(), SetFamily(3, {0u, 7u}), "upper hypertopology");
    cmp.expect(vie.topo().opens(), lower.topo().opens(), "join equals the lower hypertopology");

    DerivedFamilies d = derive(vie);
    cmp.expect(d.b_family, SetFamily(3, {0u, 1u, 4u, 5u, 7u}), "plus-open family");
    cmp.expect(d.p_family, SetFamily::power(3), "minus-open family");
    cmp.expect(d.t_plus.opens(), SetFamily(3, {0u, 1u, 4u, 5u, 7u}), "plus-induced topology");
    cmp.expect(d.t_minus.opens(), SetFamily::power(3), "minus-induced topology");
    cmp.expect(d.t_v.opens(), d.t_minus.opens(), "v-topology equals the minus-induced one");
    cmp.expect_true(is_vietoris_type(vie), "hypertopology is vietoris-type");
    cmp.expect_true(!is_strong_vietoris_type(vie), "hypertopology is not strong");
    cmp.expect_true(!(d.t_plus == d.t_minus), "induced topologies differ");
    cmp.expect_true(!(d.t_plus == t) && !(d.t_minus == t) && !(d.t_v == t),
                    "induced topologies differ from the base");
    cmp.expect_true(is_t0(t) && !is_t1(t), "base space is t0 and not t1");
    return finish(cmp, "example-novt", t, start);
}

CheckReport reproduce_novt1() {
    auto start = std::chrono::steady_clock::now();
    Comparator cmp;
    FiniteTopology t = novt1_space();
    SetFamily cl = t.closed_family();
    cmp.expect(cl, SetFamily(3, {1u, 2u, 3u, 6u, 7u}), "closed family");

    HyperSpace lower = lower_vietoris(t, cl);
    HyperSpace upper = upper_vietoris(t, cl);
    HyperSpace vie = vietoris(t, cl);
    cmp.expect(lower.topo().opens(),
               SetFamily(5, {0u, 16u, 20u, 21u, 24u, 28u, 29u, 30u, 31u}), "lower hypertopology");
    cmp.expect(upper.topo().opens(), SetFamily(5, {0u, 1u, 10u, 11u, 31u}), "upper hypertopology");
    cmp.expect(vie.topo().opens(),
               SetFamily(5, {0u, 1u, 8u, 9u, 10u, 11u, 16u, 17u, 20u, 21u, 24u, 25u, 26u, 27u,
                             28u, 29u, 30u, 31u}),
               "join hypertopology");
    cmp.expect(join_hyper(upper, lower).topo().opens(), vie.topo().opens(),
               "join of parts equals the full construction");

    const std::vector<std::pair<Mask, std::pair<Mask, Mask>>> table = {
        {0u, {0u, 0u}},  {1u, {1u, 21u}}, {2u, {2u, 30u}}, {3u, {7u, 31u}},
        {4u, {0u, 24u}}, {5u, {1u, 29u}}, {6u, {10u, 30u}}, {7u, {31u, 31u}}};
    for (const auto& [a, expected] : table) {
        cmp.expect(vie.plus_index_set(Subset(3, a)).bits(), expected.first,
                   "plus-set of " + Subset(3, a).to_string());
        cmp.expect(vie.minus_index_set(Subset(3, a)).bits(), expected.second,
                   "minus-set of " + Subset(3, a).to_string());
    }

    DerivedFamilies d = derive(vie);
    cmp.expect(d.b_family, t.opens(), "plus-open family equals the base opens");
    cmp.expect(d.p_family, SetFamily::power(3), "minus-open family");
    cmp.expect(d.t_plus.opens(), t.opens(), "plus-induced topology recovers the base");
    cmp.expect(d.t_minus.opens(), SetFamily::power(3), "minus-induced topology is discrete");
    cmp.expect(d.t_v.opens(), d.t_minus.opens(), "v-topology equals the minus-induced one");
    cmp.expect_true(d.t_plus.opens().subfamily_of(d.t_minus.opens()) &&
                        d.t_plus.opens().size() < d.t_minus.opens().size(),
                    "plus-induced topology is strictly coarser");
    cmp.expect_true(is_vietoris_type(vie), "hypertopology is vietoris-type");
    cmp.expect_true(!is_strong_vietoris_type(vie), "hypertopology is not strong");
    cmp.expect_true(is_t0(t) && !is_t1(t), "base space is t0 and not t1");
    return finish(cmp, "example-novt1", t, start);
}

CheckReport reproduce_novietoris() {
    using namespace intervals;
    auto start = std::chrono::steady_clock::now();
    Comparator cmp;
    const ExtRational half(1, 2), three_halves(3, 2);
    const IntervalSet expected_g = IntervalSet::closed(half, three_halves);

    IntervalSet canonical_v = IntervalSet::open(ExtRational(0), ExtRational(2));
    std::vector<IntervalSet> canonical_us = {
        IntervalSet::open(ExtRational(0), ExtRational(1)),
        IntervalSet::open(ExtRational(1), ExtRational(2))};
    cmp.expect(novietoris_witness(canonical_v, canonical_us), expected_g, "canonical witness");

    std::mt19937_64 rng(kDefaultSeed);
    auto positive = [&rng]() {
        long long num = 1 + static_cast<long long>(rng() % 128);
        long long den = 1 + static_cast<long long>(rng() % 64);
        return ExtRational(num, den);
    };
    for (int trial = 0; trial < 200; ++trial) {
        ExtRational lo = half - positive();
        ExtRational hi = three_halves + positive();
        IntervalSet v = IntervalSet::open(lo, hi);
        std::size_t count = 1 + rng() % 4;
        std::vector<IntervalSet> us;
        for (std::size_t i = 0; i < count; ++i) {
            ExtRational target = (rng() % 2) ? half : three_halves;
            us.push_back(IntervalSet::open(target - positive(), target + positive()));
        }
        bool ok = true;
        try {
            ok = novietoris_witness(v, us) == expected_g;
        } catch (const std::exception&) {
            ok = false;
        }
        cmp.expect_true(ok, "random witness " + std::to_string(trial));
    }
    return finish(cmp, "example-novietoris", std::nullopt, start);
}

}  // namespace

CheckReport reproduce(const std::string& example_id) {
    if (example_id == "novt") return reproduce_novt();
    if (example_id == "novt1") return reproduce_novt1();
    if (example_id == "novietoris") return reproduce_novietoris();
    throw std::invalid_argument("unknown example id: " + example_id);
}

}  // namespace hyperlab::props
