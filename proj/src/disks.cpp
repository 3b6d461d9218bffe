#include "augres/disks.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>

namespace augres {

namespace {

[[noreturn]] void engine_fail(const std::string& msg) {
    throw std::logic_error("disk engine: " + msg);
}

struct WalkSearcher {
    const ClosureDiagram& d;
    int A;        // queried vertex
    int s;        // +1: disk on the left of the walk; -1: on the right
    int sq = 0;   // start quadrant tick
    int p_in = 0; // port whose arrival closes the walk
    std::size_t cap;
    std::vector<bool> used;  // directed arcs the boundary already traverses
    std::vector<DiskEvent> events;
    std::vector<int> trail;      // halfedges of the pending walk, in order
    std::vector<int> face_left;  // halfedge -> face on its left
    int outer_face = -1;
    int extra_vertex = -1;  // second positive corner, if taken
    std::vector<int> side_count;  // face -> walk halfedges with it disk-side
    std::vector<int> bf_dist;     // Bellman-Ford scratch
    DiskHarvest& out;

    WalkSearcher(const ClosureDiagram& dg, const WalkLimits& l, int a,
                 DiskHarvest& o)
        : d(dg), A(a),
          s(dg.conv.disk_on_right ? -1 : 1),
          cap(l.cap_for(dg.num_crossings())),
          used(2 * dg.arcs.size(), false),
          face_left(2 * dg.arcs.size(), -1),
          side_count(dg.faces.size(), 0),
          bf_dist(dg.faces.size() + 1, 0),
          out(o) {
        for (int f = 0; f < (int)d.faces.size(); ++f) {
            for (int h : d.faces[f].halfedges) face_left[h] = f;
            if (d.faces[f].unbounded) outer_face = f;
        }
    }

    // Face on the disk side of halfedge h.
    int disk_side_face(int h) const {
        return s > 0 ? face_left[h] : face_left[h ^ 1];
    }

    // Relaxed feasibility of the final winding test.  Every completion of
    // the current walk crosses each directed arc at most once, so the final
    // jump of the face winding across an arc lies in a small interval that
    // only tightens as arcs are consumed; faces already touched on the disk
    // side need winding at least one, and the unbounded face needs exactly
    // zero.  If no winding function meets these difference constraints the
    // walk can never pass bounds_immersed_disk, whatever the suffix, so the
    // search can turn back.  Checked by Bellman-Ford over the face-dual
    // graph plus one virtual ground node.
    bool winding_feasible() {
        const int F = (int)d.faces.size();
        const int Z = F;  // ground node pinned to zero
        std::fill(bf_dist.begin(), bf_dist.end(), 0);
        bool changed = true;
        for (int round = 0; round <= F && changed; ++round) {
            changed = false;
            auto relax = [&](int u, int v, int c) {
                if (bf_dist[u] + c < bf_dist[v]) {
                    bf_dist[v] = bf_dist[u] + c;
                    changed = true;
                }
            };
            for (int a = 0; a < (int)d.arcs.size(); ++a) {
                int h = 2 * a, t = 2 * a + 1;
                int f = face_left[h], g = face_left[t];
                int uh = used[h] ? 1 : 0, ut = used[t] ? 1 : 0;
                // w(f) - w(g) = final #crossings of h minus of its twin.
                int hi = uh - ut + (uh ? 0 : 1);
                int lo = uh - ut - (ut ? 0 : 1);
                relax(g, f, hi);
                relax(f, g, -lo);
            }
            for (int f = 0; f < F; ++f)
                relax(f, Z, side_count[f] > 0 ? -1 : 0);  // w(f) >= 0 or 1
            relax(Z, outer_face, 0);                      // w(outer) <= 0
        }
        return !changed;
    }

    // A closed walk with convex corners and rotation number one need not
    // bound an immersed disk.  Accept it only when the winding numbers of
    // the walk define a consistent immersed surface: every face is covered
    // a nonnegative number of times, the sheets over each arc and each
    // crossing split into whole interior and boundary lifts, and the lifted
    // cell counts give Euler characteristic one.  A connected surface with
    // nonempty boundary and Euler characteristic one is a disk.
    bool bounds_immersed_disk() {
        std::vector<int> cross(2 * d.arcs.size(), 0);
        for (int h : trail) ++cross[h];

        // Winding number per face: integrate net crossing counts from the
        // unbounded face inward.  w(left of h) - w(right of h) = net number
        // of traversals of h's arc in the direction of h.
        std::vector<long> w(d.faces.size(), 0);
        std::vector<char> seen(d.faces.size(), 0);
        std::vector<int> stack{outer_face};
        seen[outer_face] = 1;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (int h : d.faces[f].halfedges) {
                int g = face_left[h ^ 1];  // across the arc of h
                long wg = w[f] - cross[h] + cross[h ^ 1];
                if (!seen[g]) {
                    seen[g] = 1;
                    w[g] = wg;
                    stack.push_back(g);
                } else if (w[g] != wg) {
                    engine_fail("inconsistent walk winding");
                }
            }
        }
        long F = 0;
        for (int f = 0; f < (int)d.faces.size(); ++f) {
            if (w[f] < 0) return false;
            F += w[f];
        }

        long E = 0;
        for (int a = 0; a < (int)d.arcs.size(); ++a) {
            long cover = w[face_left[2 * a]] + w[face_left[2 * a + 1]];
            long bdry = cross[2 * a] + cross[2 * a + 1];
            long inter = cover - bdry;  // sheets glued in pairs
            if (inter < 0 || inter % 2) return false;
            E += inter / 2 + bdry;
        }

        std::vector<int> pass_at(d.vertices.size(), 0);
        std::vector<int> corner_at(d.vertices.size(), 0);
        corner_at[A] = 1;  // the starting corner
        for (const auto& e : events)
            ++(e.corner ? corner_at : pass_at)[e.vertex];
        long V = 0;
        for (int v = 0; v < (int)d.vertices.size(); ++v) {
            long quads = 0;
            for (int t : d.vertices[v].quadrant_ticks())
                quads += w[d.face_of_quadrant.at({v, t})];
            long inter = quads - 2 * pass_at[v] - corner_at[v];
            if (inter < 0 || inter % 4) return false;
            V += inter / 4 + pass_at[v] + corner_at[v];
        }
        return V - E + F == 1;
    }

    void record() {
        if (!bounds_immersed_disk()) return;
        Disk dk;
        dk.boundary.reserve(events.size() + 1);
        dk.boundary.push_back(DiskEvent{A, true, sq, -1, true});
        dk.boundary.insert(dk.boundary.end(), events.begin(), events.end());
        for (auto& e : events)
            if (e.corner && !e.positive)
                dk.word.letters.push_back(d.vertices[e.vertex].gen);
        // Words read the negative corners in the direction opposite to the
        // search traversal; the worked noncommutative examples fix this.
        std::reverse(dk.word.letters.begin(), dk.word.letters.end());
        if (extra_vertex < 0)
            out.one_positive.push_back(std::move(dk));
        else
            out.two_positive[d.vertices[extra_vertex].gen].push_back(std::move(dk));
    }

    void step(int v, int out_port, const DiskEvent& e, int turn) {
        int h = d.out_halfedge.at({v, out_port});
        if (used[h]) return;  // no directed arc is traversed twice
        used[h] = true;
        ++side_count[disk_side_face(h)];
        trail.push_back(h);
        bool took_positive = e.corner && e.positive;
        if (took_positive) extra_vertex = e.vertex;
        events.push_back(e);
        dfs(h, turn + d.halfedge_turn(h));
        events.pop_back();
        if (took_positive) extra_vertex = -1;
        trail.pop_back();
        --side_count[disk_side_face(h)];
        used[h] = false;
    }

    void dfs(int h, int turn) {
        if (events.size() > cap)
            throw CapExceeded("boundary-walk event cap exceeded at crossing " +
                              d.vertices[A].gen.name());
        if (!winding_feasible()) return;
        int v = d.head_vertex(h), p = d.head_port(h);
        // Closing up: the walk is back at the start crossing through the
        // port that completes the starting corner, with rotation number one.
        if (v == A && p == p_in && turn + 2 * s == 8 * s) record();
        // The boundary of an immersed polygon may revisit a crossing any
        // number of times (the start crossing included), so after testing
        // for closure the walk still branches between a convex corner and a
        // straight pass.  A corner at the start crossing must be positive:
        // a chord never appears in its own image word, because the height
        // of the inbound chord strictly dominates the heights in the word.
        int qt = tick_wrap(p - s);
        bool pos = d.vertices[v].quadrant_positive(qt);
        bool allow_corner = pos ? extra_vertex < 0 : v != A;
        if (allow_corner)
            step(v, tick_wrap(p - 2 * s), DiskEvent{v, true, qt, -1, pos},
                 turn + 2 * s);
        step(v, tick_wrap(p + 4), DiskEvent{v, false, -1, p % 4, false}, turn);
    }

    void run() {
        for (int t : d.vertices[A].positive_ticks) {
            sq = t;
            p_in = tick_wrap(t + s);
            int p_out = tick_wrap(t - s);
            int h0 = d.out_halfedge.at({A, p_out});
            used[h0] = true;
            ++side_count[disk_side_face(h0)];
            trail.push_back(h0);
            dfs(h0, d.halfedge_turn(h0));
            trail.pop_back();
            --side_count[disk_side_face(h0)];
            used[h0] = false;
        }
    }
};

void sort_harvest(DiskHarvest& h) {
    std::sort(h.one_positive.begin(), h.one_positive.end());
    for (auto& kv : h.two_positive)
        std::sort(kv.second.begin(), kv.second.end());
}

}  // namespace

DiskHarvest harvest_disks_walk(const ClosureDiagram& d, const GeneratorId& at,
                               const WalkLimits& lim) {
    auto it = d.vertex_of.find(at);
    if (it == d.vertex_of.end())
        engine_fail("unknown crossing " + at.name());
    DiskHarvest out;
    WalkSearcher searcher(d, lim, it->second, out);
    searcher.run();
    sort_harvest(out);
    return out;
}

EmbeddedDiskOracle::EmbeddedDiskOracle(const ClosureDiagram& d,
                                       std::size_t face_bound)
    : diag_(d) {
    std::vector<int> bounded;
    std::vector<int> slot_of_face(d.faces.size(), -1);
    for (int f = 0; f < (int)d.faces.size(); ++f)
        if (!d.faces[f].unbounded) {
            slot_of_face[f] = (int)bounded.size();
            bounded.push_back(f);
        }
    if (face_bound > 30) face_bound = 30;
    if (bounded.size() > face_bound)
        throw FaceBoundExceeded(
            "diagram has " + std::to_string(bounded.size()) +
            " bounded faces, oracle bound is " + std::to_string(face_bound));
    int B = (int)bounded.size();

    std::vector<int> face_of_h(2 * d.arcs.size(), -1);
    for (int f = 0; f < (int)d.faces.size(); ++f)
        for (int h : d.faces[f].halfedges) face_of_h[h] = f;

    std::vector<std::uint32_t> adj(B, 0);
    for (int a = 0; a < (int)d.arcs.size(); ++a) {
        int s0 = slot_of_face[face_of_h[2 * a]];
        int s1 = slot_of_face[face_of_h[2 * a + 1]];
        if (s0 >= 0 && s1 >= 0 && s0 != s1) {
            adj[s0] |= 1u << s1;
            adj[s1] |= 1u << s0;
        }
    }

    int s = d.conv.disk_on_right ? -1 : 1;
    auto in_mask = [&](std::uint32_t mask, int face) {
        int slot = slot_of_face[face];
        return slot >= 0 && (mask >> slot & 1u) != 0;
    };

    for (std::uint32_t mask = 1; mask < (1u << B); ++mask) {
        // Connectivity through shared arcs.
        std::uint32_t reach = mask & (~mask + 1), prev = 0;
        while (reach != prev) {
            prev = reach;
            std::uint32_t acc = reach;
            for (int i = 0; i < B; ++i)
                if (reach >> i & 1u) acc |= adj[i] & mask;
            reach = acc;
        }
        if (reach != mask) continue;

        // Quadrant coverage at each crossing on the closure.
        std::map<int, std::uint8_t> cover;
        for (int i = 0; i < B; ++i)
            if (mask >> i & 1u)
                for (auto& [v, qt] : d.faces[bounded[i]].corners)
                    cover[v] |= std::uint8_t(1u << qt);
        bool ok = true;
        for (auto& [v, m] : cover) {
            int c = std::popcount((unsigned)m);
            if (c == 1 || c == 4) continue;
            if (c == 3) {  // concave corner
                ok = false;
                break;
            }
            // Two quadrants: adjacent is a pass, opposite is a pinch.
            int t0 = std::countr_zero((unsigned)m);
            if (m == (std::uint8_t)((1u << t0) | (1u << (t0 + 4)))) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;

        // Euler characteristic of the closed region must be 1.
        long Vp = (long)cover.size(), Ep = 0, Fp = std::popcount(mask);
        for (int a = 0; a < (int)d.arcs.size(); ++a)
            if (in_mask(mask, face_of_h[2 * a]) ||
                in_mask(mask, face_of_h[2 * a + 1]))
                ++Ep;
        if (Vp - Ep + Fp != 1) continue;

        // Trace the boundary with the region on side s of the traversal.
        auto is_boundary = [&](int h) {
            bool left = in_mask(mask, face_of_h[h]);
            bool right = in_mask(mask, face_of_h[h ^ 1]);
            return s > 0 ? (left && !right) : (right && !left);
        };
        int start_h = -1, boundary_count = 0;
        for (int h = 0; h < (int)(2 * d.arcs.size()); ++h)
            if (is_boundary(h)) {
                ++boundary_count;
                if (start_h < 0) start_h = h;
            }
        if (start_h < 0) engine_fail("disk region with empty boundary");

        RawDisk rd;
        int turn = 0, steps = 0, h = start_h;
        do {
            if (!is_boundary(h)) engine_fail("boundary trace left the boundary");
            turn += d.halfedge_turn(h);
            int v = d.head_vertex(h), p = d.head_port(h);
            std::uint8_t m = cover.at(v);
            int q1 = tick_wrap(p - s), q2 = tick_wrap(p - 3 * s);
            if (!(m >> q1 & 1u)) engine_fail("boundary trace misses its quadrant");
            int out_port;
            if (m >> q2 & 1u) {
                rd.events.push_back(DiskEvent{v, false, -1, p % 4, false});
                out_port = tick_wrap(p + 4);
            } else {
                bool pos = d.vertices[v].quadrant_positive(q1);
                if (pos) rd.positive_positions.push_back(rd.events.size());
                rd.events.push_back(DiskEvent{v, true, q1, -1, pos});
                turn += 2 * s;
                out_port = tick_wrap(p - 2 * s);
            }
            h = d.out_halfedge.at({v, out_port});
            ++steps;
        } while (h != start_h && steps <= boundary_count);
        if (h != start_h || steps != boundary_count)
            engine_fail("disk boundary is not a single cycle");
        if (turn != 8 * s) engine_fail("disk boundary rotation is not one");
        if (rd.positive_positions.size() <= 2) raw_.push_back(std::move(rd));
    }
}

DiskHarvest EmbeddedDiskOracle::harvest(const GeneratorId& at) const {
    auto it = diag_.vertex_of.find(at);
    if (it == diag_.vertex_of.end()) engine_fail("unknown crossing " + at.name());
    int A = it->second;
    DiskHarvest out;
    for (const RawDisk& rd : raw_) {
        if (rd.positive_positions.empty()) continue;
        std::size_t r = rd.events.size();
        for (std::size_t pos : rd.positive_positions)
            if (rd.events[pos].vertex == A) r = pos;
        if (r == rd.events.size()) continue;  // no positive corner at `at`
        Disk dk;
        dk.boundary.reserve(rd.events.size());
        for (std::size_t k = 0; k < rd.events.size(); ++k)
            dk.boundary.push_back(rd.events[(r + k) % rd.events.size()]);
        for (auto& e : dk.boundary)
            if (e.corner && !e.positive)
                dk.word.letters.push_back(diag_.vertices[e.vertex].gen);
        // Same reading order as the walk engine: words run opposite to the
        // traversal direction.
        std::reverse(dk.word.letters.begin(), dk.word.letters.end());
        if (rd.positive_positions.size() == 1) {
            out.one_positive.push_back(std::move(dk));
        } else if (rd.positive_positions.size() == 2) {
            std::size_t other = rd.positive_positions[0] == r
                                    ? rd.positive_positions[1]
                                    : rd.positive_positions[0];
            int xv = rd.events[other].vertex;
            if (xv != A)
                out.two_positive[diag_.vertices[xv].gen].push_back(std::move(dk));
        }
    }
    sort_harvest(out);
    return out;
}

std::optional<std::string> harvest_difference(const DiskHarvest& walk,
                                              const DiskHarvest& oracle) {
    auto describe = [](const std::vector<Disk>& v) {
        std::ostringstream os;
        os << v.size() << " disks:";
        for (auto& dk : v) os << " [" << dk.word.str() << "]";
        return os.str();
    };
    if (walk.one_positive != oracle.one_positive)
        return "one-positive disks differ: walk has " +
               describe(walk.one_positive) + "; oracle has " +
               describe(oracle.one_positive);
    if (walk.two_positive != oracle.two_positive) {
        for (auto& [g, v] : walk.two_positive) {
            auto it = oracle.two_positive.find(g);
            if (it == oracle.two_positive.end())
                return "two-positive bucket " + g.name() + " only in walk engine";
            if (it->second != v)
                return "two-positive bucket " + g.name() + " differs: walk has " +
                       describe(v) + "; oracle has " + describe(it->second);
        }
        for (auto& [g, v] : oracle.two_positive)
            if (!walk.two_positive.count(g))
                return "two-positive bucket " + g.name() + " only in oracle";
        return "two-positive harvests differ";
    }
    return std::nullopt;
}

DiskHarvest harvest_disks(const ClosureDiagram& d, const GeneratorId& at,
                          DiskEngine engine, const WalkLimits& lim,
                          std::size_t face_bound) {
    switch (engine) {
        case DiskEngine::Walk:
            return harvest_disks_walk(d, at, lim);
        case DiskEngine::Oracle:
            return EmbeddedDiskOracle(d, face_bound).harvest(at);
        case DiskEngine::Both: {
            DiskHarvest w = harvest_disks_walk(d, at, lim);
            DiskHarvest o = EmbeddedDiskOracle(d, face_bound).harvest(at);
            if (auto diff = harvest_difference(w, o))
                engine_fail("engines disagree at " + at.name() + ": " + *diff);
            return w;
        }
    }
    engine_fail("bad engine");
}

std::vector<Disk> enumerate_disks(const ClosureDiagram& d, const DiskQuery& q,
                                  DiskEngine engine, const WalkLimits& lim,
                                  std::size_t face_bound) {
    DiskHarvest h = harvest_disks(d, q.at, engine, lim, face_bound);
    if (!q.second) return std::move(h.one_positive);
    auto it = h.two_positive.find(*q.second);
    if (it == h.two_positive.end()) return {};
    return std::move(it->second);
}

Dga differential_dga(const ClosureDiagram& d, DiskEngine engine,
                     const WalkLimits& lim, std::size_t face_bound) {
    Dga out;
    out.generators = closure_generators(d.spec);
    std::optional<EmbeddedDiskOracle> oracle;
    if (engine != DiskEngine::Walk) oracle.emplace(d, face_bound);
    for (auto& g : out.generators) {
        DiskHarvest h;
        if (engine == DiskEngine::Walk) {
            h = harvest_disks_walk(d, g, lim);
        } else if (engine == DiskEngine::Oracle) {
            h = oracle->harvest(g);
        } else {
            h = harvest_disks_walk(d, g, lim);
            DiskHarvest o = oracle->harvest(g);
            if (auto diff = harvest_difference(h, o))
                engine_fail("engines disagree at " + g.name() + ": " + *diff);
        }
        std::vector<Word> words;
        words.reserve(h.one_positive.size());
        for (auto& dk : h.one_positive) words.push_back(dk.word);
        out.differential[g] = Poly::from_words(words);
    }
    return out;
}

}  // namespace augres
