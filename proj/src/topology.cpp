#include "hyperlab/topology.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hyperlab {

namespace {

void check_same_ground(int a, int b) {
    if (a != b)
        throw std::invalid_argument("ground-size mismatch: " + std::to_string(a) + " vs " +
                                    std::to_string(b));
}

bool opens_are_valid(int ground_size, const SetFamily& opens) {
    if (opens.ground_size() != ground_size) return false;
    if (!opens.contains(Mask{0}) || !opens.contains(full_mask(ground_size))) return false;
    return union_closure(opens) == opens && intersection_closure(opens) == opens;
}

}  // namespace

FiniteTopology::FiniteTopology(int ground_size, SetFamily opens, unchecked_tag)
    : ground_(ground_size), opens_(std::move(opens)) {}

FiniteTopology FiniteTopology::from_opens(int ground_size, SetFamily opens) {
    check_ground(ground_size);
    if (!opens_are_valid(ground_size, opens))
        throw std::invalid_argument("family is not a topology on " + std::to_string(ground_size) +
                                    " points");
    return FiniteTopology(ground_size, std::move(opens), unchecked_tag{});
}

FiniteTopology topology_unchecked(int ground_size, SetFamily opens) {
    assert(opens_are_valid(ground_size, opens));
    return FiniteTopology(ground_size, std::move(opens), FiniteTopology::unchecked_tag{});
}

FiniteTopology FiniteTopology::indiscrete(int ground_size) {
    check_ground(ground_size);
    return FiniteTopology(ground_size, SetFamily(ground_size, {Mask{0}, full_mask(ground_size)}),
                          unchecked_tag{});
}

FiniteTopology FiniteTopology::discrete(int ground_size) {
    return FiniteTopology(ground_size, SetFamily::power(ground_size), unchecked_tag{});
}

bool FiniteTopology::is_open(const Subset& s) const {
    check_same_ground(ground_, s.ground_size());
    return opens_.contains(s.bits());
}

bool FiniteTopology::is_closed(const Subset& s) const { return is_open(s.complement()); }

Subset FiniteTopology::closure_of(const Subset& a) const {
    check_same_ground(ground_, a.ground_size());
    Mask away = 0;
    for (Mask u : opens_.masks())
        if ((u & a.bits()) == 0) away |= u;
    return Subset(ground_, full_mask(ground_) & ~away);
}

SetFamily FiniteTopology::closed_family() const {
    std::vector<Mask> out;
    for (Mask u : opens_.masks()) {
        Mask c = full_mask(ground_) & ~u;
        if (c != 0) out.push_back(c);
    }
    return SetFamily(ground_, std::move(out));
}

Subset FiniteTopology::minimal_open(int point) const {
    if (point < 0 || point >= ground_) throw std::invalid_argument("point out of range");
    Mask acc = full_mask(ground_);
    for (Mask u : opens_.masks())
        if ((u >> point) & 1u) acc &= u;
    return Subset(ground_, acc);
}

FiniteTopology from_subbase(int ground_size, const SetFamily& subbase) {
    check_same_ground(ground_size, subbase.ground_size());
    SetFamily seeded = subbase.with(full_mask(ground_size));
    SetFamily opens = union_closure(intersection_closure(seeded)).with(Mask{0});
    return topology_unchecked(ground_size, std::move(opens));
}

bool is_valid_base(int ground_size, const SetFamily& b) {
    if (b.ground_size() != ground_size) return false;
    Mask covered = 0;
    for (Mask u : b.masks()) covered |= u;
    if (covered != full_mask(ground_size)) return false;
    for (Mask u : b.masks())
        for (Mask v : b.masks()) {
            Mask cut = u & v;
            Mask refined = 0;
            for (Mask w : b.masks())
                if ((w & ~cut) == 0) refined |= w;
            if ((cut & ~refined) != 0) return false;  // some x in u&v has no w around it
        }
    return true;
}

FiniteTopology from_base(int ground_size, const SetFamily& b) {
    check_same_ground(ground_size, b.ground_size());
    if (!is_valid_base(ground_size, b))
        throw std::invalid_argument("family is not a base: fails cover or refinement");
    SetFamily opens = union_closure(b).with(Mask{0}).with(full_mask(ground_size));
    return topology_unchecked(ground_size, std::move(opens));
}

bool is_t0(const FiniteTopology& t) {
    const int g = t.ground_size();
    for (int x = 0; x < g; ++x)
        for (int y = x + 1; y < g; ++y) {
            bool split = false;
            for (Mask u : t.opens().masks()) {
                bool hx = (u >> x) & 1u, hy = (u >> y) & 1u;
                if (hx != hy) {
                    split = true;
                    break;
                }
            }
            if (!split) return false;
        }
    return true;
}

bool is_t1(const FiniteTopology& t) {
    const int g = t.ground_size();
    for (int x = 0; x < g; ++x)
        for (int y = 0; y < g; ++y) {
            if (x == y) continue;
            bool found = false;
            for (Mask u : t.opens().masks())
                if (((u >> x) & 1u) && !((u >> y) & 1u)) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
    return true;
}

bool is_t2(const FiniteTopology& t) {
    const int g = t.ground_size();
    for (int x = 0; x < g; ++x)
        for (int y = x + 1; y < g; ++y) {
            bool found = false;
            for (Mask u : t.opens().masks()) {
                if (!((u >> x) & 1u)) continue;
                for (Mask v : t.opens().masks())
                    if (((v >> y) & 1u) && (u & v) == 0) {
                        found = true;
                        break;
                    }
                if (found) break;
            }
            if (!found) return false;
        }
    return true;
}

bool is_regular(const FiniteTopology& t) {
    const int g = t.ground_size();
    const Mask all = full_mask(g);
    for (Mask u : t.opens().masks()) {
        Mask c = all & ~u;  // closed set
        for (int x = 0; x < g; ++x) {
            if ((c >> x) & 1u) continue;
            bool found = false;
            for (Mask uu : t.opens().masks()) {
                if (!((uu >> x) & 1u)) continue;
                for (Mask vv : t.opens().masks())
                    if ((c & ~vv) == 0 && (uu & vv) == 0) {
                        found = true;
                        break;
                    }
                if (found) break;
            }
            if (!found) return false;
        }
    }
    return true;
}

bool is_t3(const FiniteTopology& t) { return is_regular(t) && is_t1(t); }

bool is_p_regular(const FiniteTopology& t, const SetFamily& p) {
    check_same_ground(t.ground_size(), p.ground_size());
    if (!is_subbase_for(p, t))
        throw std::invalid_argument("family is not a subbase for the given topology");
    const int g = t.ground_size();
    const Mask all = full_mask(g);
    for (Mask u : p.masks())
        for (int x = 0; x < g; ++x) {
            if (!((u >> x) & 1u)) continue;
            bool found = false;
            for (Mask v : p.masks()) {
                if (!((v >> x) & 1u)) continue;
                for (Mask w : p.masks()) {
                    Mask cw = all & ~w;
                    if ((v & ~cw) == 0 && (cw & ~u) == 0) {
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (!found) return false;
        }
    return true;
}

namespace {

// Refinement constraints as hit-sets over the indices of p: P' is admissible
// iff it intersects every constraint.
std::vector<std::uint32_t> refinement_constraints(int ground_size, const SetFamily& p) {
    std::vector<std::uint32_t> cons;
    for (Mask u : p.masks())
        for (int x = 0; x < ground_size; ++x) {
            if (!((u >> x) & 1u)) continue;
            std::uint32_t cand = 0;
            for (std::size_t j = 0; j < p.size(); ++j) {
                Mask v = p.masks()[j];
                if (((v >> x) & 1u) && (v & ~u) == 0) cand |= std::uint32_t{1} << j;
            }
            cons.push_back(cand);  // never empty: u itself qualifies
        }
    std::sort(cons.begin(), cons.end());
    cons.erase(std::unique(cons.begin(), cons.end()), cons.end());
    // drop constraints implied by a subset constraint
    std::vector<std::uint32_t> kept;
    for (std::uint32_t c : cons) {
        bool implied = false;
        for (std::uint32_t d : cons)
            if (d != c && (d & ~c) == 0 && std::popcount(d) < std::popcount(c)) {
                implied = true;
                break;
            }
        if (!implied) kept.push_back(c);
    }
    return kept;
}

std::optional<std::uint32_t> min_hitting_set(const std::vector<std::uint32_t>& cons, int width) {
    if (cons.empty()) return std::uint32_t{0};
    for (int k = 1; k <= width; ++k) {
        // combinations of k indices in lexicographic order
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::uint32_t pick = 0;
            for (int i : idx) pick |= std::uint32_t{1} << i;
            bool ok = true;
            for (std::uint32_t c : cons)
                if ((c & pick) == 0) {
                    ok = false;
                    break;
                }
            if (ok) return pick;
            int i = k - 1;
            while (i >= 0 && idx[i] == width - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<SetFamily> weight_witness(int ground_size, const SetFamily& p) {
    check_same_ground(ground_size, p.ground_size());
    if (p.empty()) throw std::invalid_argument("weight of an empty family");
    if (p.size() > kWeightCap) return std::nullopt;
    auto cons = refinement_constraints(ground_size, p);
    auto pick = min_hitting_set(cons, static_cast<int>(p.size()));
    if (!pick) return std::nullopt;  // unreachable: the full family always hits
    std::vector<Mask> out;
    for (std::size_t j = 0; j < p.size(); ++j)
        if ((*pick >> j) & 1u) out.push_back(p.masks()[j]);
    return SetFamily(ground_size, std::move(out));
}

std::optional<int> weight(int ground_size, const SetFamily& p) {
    auto w = weight_witness(ground_size, p);
    if (!w) return std::nullopt;
    return static_cast<int>(w->size());
}

bool is_base_for(const SetFamily& b, const FiniteTopology& t) {
    check_same_ground(b.ground_size(), t.ground_size());
    if (!b.subfamily_of(t.opens())) return false;
    for (Mask u : t.opens().masks()) {
        Mask acc = 0;
        for (Mask x : b.masks())
            if ((x & ~u) == 0) acc |= x;
        if (acc != u) return false;
    }
    return true;
}

bool is_subbase_for(const SetFamily& s, const FiniteTopology& t) {
    check_same_ground(s.ground_size(), t.ground_size());
    if (!s.subfamily_of(t.opens())) return false;
    return from_subbase(t.ground_size(), s) == t;
}

std::optional<SetFamily> intersection_witness_subbase(const SetFamily& p, const SetFamily& base) {
    check_same_ground(p.ground_size(), base.ground_size());
    const int g = p.ground_size();
    std::vector<Mask> selected;
    for (Mask u : base.masks()) {
        Mask cut = full_mask(g);
        bool any = false;
        for (Mask v : p.masks())
            if ((u & ~v) == 0) {
                cut &= v;
                any = true;
            }
        if (!any || cut != u) return std::nullopt;  // u is not an intersection of members of p
        if (p.contains(u)) {
            selected.push_back(u);
            continue;
        }
        Mask cur = full_mask(g);
        for (Mask v : p.masks()) {
            if (cur == u) break;
            if ((u & ~v) != 0) continue;
            if ((cur & v) != cur) {
                cur &= v;
                selected.push_back(v);
            }
        }
    }
    return SetFamily(g, std::move(selected));
}

int product_point(const std::vector<int>& tuple, int ground_size) {
    int idx = 0;
    for (int x : tuple) idx = idx * ground_size + x;
    return idx;
}

std::vector<int> product_tuple(int point, int ground_size, int n) {
    std::vector<int> tuple(n);
    for (int i = n - 1; i >= 0; --i) {
        tuple[i] = point % ground_size;
        point /= ground_size;
    }
    return tuple;
}

FiniteTopology product_topology(const FiniteTopology& t, int n) {
    if (n < 1) throw std::invalid_argument("product power must be >= 1");
    const int g = t.ground_size();
    long long pts = 1;
    for (int i = 0; i < n; ++i) {
        pts *= g;
        if (pts > kMaxGround)
            throw std::domain_error("product space would exceed " + std::to_string(kMaxGround) +
                                    " points");
    }
    if (n == 1) return t;
    const int pg = static_cast<int>(pts);
    const auto& opens = t.opens().masks();
    std::vector<Mask> boxes;
    std::vector<std::size_t> pick(n, 0);  // odometer over open-set choices
    while (true) {
        Mask box = 0;
        for (int p = 0; p < pg; ++p) {
            auto tup = product_tuple(p, g, n);
            bool in = true;
            for (int i = 0; i < n; ++i)
                if (!((opens[pick[i]] >> tup[i]) & 1u)) {
                    in = false;
                    break;
                }
            if (in) box |= Mask{1} << p;
        }
        boxes.push_back(box);
        int i = n - 1;
        while (i >= 0 && pick[i] + 1 == opens.size()) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
    }
    SetFamily base(pg, std::move(boxes));
    SetFamily prod_opens = union_closure(base).with(Mask{0});
    return topology_unchecked(pg, std::move(prod_opens));
}

Subset Subspace::embed(const Subset& s) const {
    Mask out = 0;
    for (int i = 0; i < s.ground_size(); ++i)
        if (s.contains(i)) out |= Mask{1} << points[static_cast<std::size_t>(i)];
    return Subset(original_ground, out);
}

Subset Subspace::restrict(const Subset& s) const {
    Mask out = 0;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (s.contains(points[i])) out |= Mask{1} << i;
    return Subset(topo.ground_size(), out);
}

Subspace subspace_topology(const FiniteTopology& t, const Subset& a) {
    check_same_ground(t.ground_size(), a.ground_size());
    if (a.is_empty()) throw std::invalid_argument("subspace over the empty set");
    std::vector<int> pts = a.points();
    const int sg = static_cast<int>(pts.size());
    std::vector<Mask> traces;
    for (Mask u : t.opens().masks()) {
        Mask tr = 0;
        for (int i = 0; i < sg; ++i)
            if ((u >> pts[static_cast<std::size_t>(i)]) & 1u) tr |= Mask{1} << i;
        traces.push_back(tr);
    }
    return Subspace{topology_unchecked(sg, SetFamily(sg, std::move(traces))), std::move(pts),
                    t.ground_size()};
}

Subset SpaceMap::image() const {
    Mask out = 0;
    for (int y : graph) out |= Mask{1} << y;
    return Subset(codomain.ground_size(), out);
}

Subset SpaceMap::preimage(const Subset& s) const {
    Mask out = 0;
    for (std::size_t x = 0; x < graph.size(); ++x)
        if (s.contains(graph[x])) out |= Mask{1} << x;
    return Subset(domain.ground_size(), out);
}

Subset SpaceMap::forward(const Subset& s) const {
    Mask out = 0;
    for (std::size_t x = 0; x < graph.size(); ++x)
        if (s.contains(static_cast<int>(x))) out |= Mask{1} << graph[x];
    return Subset(codomain.ground_size(), out);
}

bool SpaceMap::is_injective() const {
    return image().size() == static_cast<int>(graph.size());
}

bool SpaceMap::is_bijective() const {
    return is_injective() && image().size() == codomain.ground_size();
}

namespace {

void validate_map(const SpaceMap& f) {
    if (static_cast<int>(f.graph.size()) != f.domain.ground_size())
        throw std::invalid_argument("map graph is not total on the domain");
    for (int y : f.graph)
        if (y < 0 || y >= f.codomain.ground_size())
            throw std::invalid_argument("map image point outside the codomain");
}

}  // namespace

bool is_continuous(const SpaceMap& f) {
    validate_map(f);
    for (Mask v : f.codomain.opens().masks())
        if (!f.domain.is_open(f.preimage(Subset(f.codomain.ground_size(), v)))) return false;
    return true;
}

bool is_inversely_continuous(const SpaceMap& f) {
    validate_map(f);
    if (!f.is_injective())
        throw std::invalid_argument("inverse continuity requested on a non-injective map");
    const Mask img = f.image().bits();
    std::vector<Mask> traces;
    for (Mask v : f.codomain.opens().masks()) traces.push_back(v & img);
    std::sort(traces.begin(), traces.end());
    traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
    for (Mask u : f.domain.opens().masks()) {
        Mask fwd = f.forward(Subset(f.domain.ground_size(), u)).bits();
        if (!std::binary_search(traces.begin(), traces.end(), fwd)) return false;
    }
    return true;
}

bool is_compact(const FiniteTopology& t) {
    // The cover by all opens always admits a finite subcover here; run the
    // greedy extraction anyway so the check is an actual cover argument.
    Mask covered = 0;
    const Mask all = full_mask(t.ground_size());
    for (Mask u : t.opens().masks()) {
        if ((u & ~covered) != 0) covered |= u;
        if (covered == all) return true;
    }
    return covered == all;
}

bool is_dense(const FiniteTopology& t, const Subset& d) {
    check_same_ground(t.ground_size(), d.ground_size());
    return t.closure_of(d).is_full();
}

namespace {

std::vector<FiniteTopology> enumerate_preorder(int n) {
    const int offbits = n * (n - 1);
    std::vector<FiniteTopology> out;
    for (std::uint32_t rel = 0; rel < (std::uint32_t{1} << offbits); ++rel) {
        std::vector<Mask> row(static_cast<std::size_t>(n));
        int k = 0;  // k-th off-diagonal cell, row-major; high bit first
        for (int r = 0; r < n; ++r) {
            row[static_cast<std::size_t>(r)] = Mask{1} << r;
            for (int c = 0; c < n; ++c) {
                if (r == c) continue;
                if ((rel >> (offbits - 1 - k)) & 1u) row[static_cast<std::size_t>(r)] |= Mask{1} << c;
                ++k;
            }
        }
        bool transitive = true;
        for (int r = 0; r < n && transitive; ++r)
            for (int c = 0; c < n; ++c)
                if ((row[static_cast<std::size_t>(r)] >> c) & 1u)
                    if ((row[static_cast<std::size_t>(c)] & ~row[static_cast<std::size_t>(r)]) != 0) {
                        transitive = false;
                        break;
                    }
        if (!transitive) continue;
        std::vector<Mask> opens;
        for (Mask u = 0; u <= full_mask(n); ++u) {
            bool closed_up = true;
            for (int x = 0; x < n; ++x)
                if (((u >> x) & 1u) && (row[static_cast<std::size_t>(x)] & ~u) != 0) {
                    closed_up = false;
                    break;
                }
            if (closed_up) opens.push_back(u);
        }
        out.push_back(topology_unchecked(n, SetFamily(n, std::move(opens))));
    }
    return out;
}

std::vector<FiniteTopology> enumerate_direct(int n) {
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<FiniteTopology> out;
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
        if (!((fam >> 0) & 1u)) continue;
        if (!((fam >> full_mask(n)) & 1u)) continue;
        std::vector<Mask> members;
        for (Mask m = 0; m < subsets; ++m)
            if ((fam >> m) & 1u) members.push_back(m);
        bool closed = true;
        for (Mask u : members) {
            for (Mask v : members) {
                if (!((fam >> (u | v)) & 1u) || !((fam >> (u & v)) & 1u)) {
                    closed = false;
                    break;
                }
            }
            if (!closed) break;
        }
        if (closed) out.push_back(topology_unchecked(n, SetFamily(n, std::move(members))));
    }
    return out;
}

}  // namespace

std::vector<FiniteTopology> enumerate_topologies(int n, EnumerationStrategy strategy) {
    if (strategy == EnumerationStrategy::preorder) {
        if (n < 1 || n > 4)
            throw std::invalid_argument("preorder enumeration supports 1..4 points");
        return enumerate_preorder(n);
    }
    if (n < 1 || n > 3)
        throw std::invalid_argument("direct family enumeration supports 1..3 points");
    return enumerate_direct(n);
}

FiniteTopology join_topologies(const FiniteTopology& a, const FiniteTopology& b) {
    check_same_ground(a.ground_size(), b.ground_size());
    return from_subbase(a.ground_size(), a.opens().union_with(b.opens()));
}

bool are_homeomorphic(const FiniteTopology& a, const FiniteTopology& b) {
    if (a.ground_size() != b.ground_size()) return false;
    if (a.opens().size() != b.opens().size()) return false;
    const int g = a.ground_size();
    std::vector<int> perm(static_cast<std::size_t>(g));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<Mask> mapped;
        mapped.reserve(a.opens().size());
        for (Mask u : a.opens().masks()) {
            Mask v = 0;
            for (int x = 0; x < g; ++x)
                if ((u >> x) & 1u) v |= Mask{1} << perm[static_cast<std::size_t>(x)];
            mapped.push_back(v);
        }
        if (SetFamily(g, std::move(mapped)) == b.opens()) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace hyperlab
