#include "augres/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

namespace augres {

std::string Conventions::describe() const {
    std::ostringstream os;
    os << "flip_braid_levels=" << flip_braid_levels
       << " kink_on_dive=" << kink_on_dive
       << " braid_positive_ew=" << braid_positive_ew
       << " c_positive_nesw=" << c_positive_nesw
       << " s_mixed_positive_nesw=" << s_mixed_positive_nesw
       << " s_self_positive_nesw=" << s_self_positive_nesw
       << " disk_on_right=" << disk_on_right;
    return os.str();
}

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::logic_error("diagram construction: " + msg);
}

struct Builder {
    const BraidSpec& spec;
    const Conventions& conv;
    ClosureDiagram d;
    int p, q, cols;

    // --- layout coordinates ---
    // Strand level lev (0-based) runs along y = 2*lev; braid columns at
    // x = 2c.  Closure arc k (1-based, entering and leaving the braid at
    // level k-1) leaves the braid heading east, dives south at x = e_x(k)
    // across the exit segments of the lower arcs (crossings s[k,j], j < k),
    // curls through its kink s[k,k], wraps west below the diagram, and
    // climbs at x = w_x(k) across the entry segments of the lower arcs
    // (crossings c[k,j], j < k) before re-entering the braid.  The dives
    // are staggered so the innermost wrap belongs to arc p.  With
    // kink_on_dive the kink sits at the foot of the dive, at the level of
    // the arc's own wrap, lobe south-east of the crossing; otherwise it
    // sits at the arc's east turn, lobe north-east.
    long col_x(int c) const { return 2L * c; }               // braid column
    long level_y(int lev) const { return 2L * lev; }         // strand level, 0-based
    long braid_east() const { return 2L * cols + 2; }        // east edge of braid box
    long e_x(int k) const { return braid_east() + 2 + 4L * (p - k); }
    long w_x(int k) const { return -2 - 2L * (p - k); }
    long u_y(int k) const {
        return conv.kink_on_dive ? -2 - 4L * (p - k) : -4 - 2L * (p - k);
    }

    // Strand levels crossed by braid letter (i,j), 0-based (lo, lo+1).
    int letter_level_lo(int j) const {
        return conv.flip_braid_levels ? (p - 1 - j) : (j - 1);
    }

    std::array<int, 2> positive_ticks_for(const GeneratorId& g, bool braid) const {
        bool nesw;
        if (braid)
            return conv.braid_positive_ew ? std::array<int, 2>{0, 4}
                                          : std::array<int, 2>{2, 6};
        if (g.kind == GenKind::C)
            nesw = conv.c_positive_nesw;
        else if (g.i == g.j)
            nesw = conv.s_self_positive_nesw;
        else
            nesw = conv.s_mixed_positive_nesw;
        return nesw ? std::array<int, 2>{1, 5} : std::array<int, 2>{3, 7};
    }

    int add_vertex(const GeneratorId& g, bool braid, long x, long y) {
        ClosureVertex v;
        v.gen = g;
        v.braid_vertex = braid;
        v.x = x;
        v.y = y;
        v.positive_ticks = positive_ticks_for(g, braid);
        d.vertices.push_back(v);
        int idx = (int)d.vertices.size() - 1;
        if (!d.vertex_of.emplace(g, idx).second)
            fail("duplicate generator label " + g.name());
        return idx;
    }

    // --- strand walk state ---
    std::vector<std::pair<long, long>> pending;  // bends since last crossing
    bool have_head = false;
    std::vector<std::pair<long, long>> head_waypoints;
    int head_vertex = -1, head_port = -1;
    int last_vertex = -1, last_port = -1;  // exit of previous crossing

    void add_waypoint(long x, long y) {
        if (!pending.empty() && pending.back() == std::make_pair(x, y)) return;
        pending.push_back({x, y});
    }

    void emit_arc(int v0, int p0, int v1, int p1,
                  std::vector<std::pair<long, long>> wps) {
        ClosureArc a;
        a.v[0] = v0;
        a.port[0] = p0;
        a.v[1] = v1;
        a.port[1] = p1;
        // Collapse duplicate consecutive points (straight-through bends).
        std::vector<std::pair<long, long>> pts;
        pts.push_back({d.vertices[v0].x, d.vertices[v0].y});
        for (auto& w : wps)
            if (pts.back() != w) pts.push_back(w);
        auto endpt = std::make_pair(d.vertices[v1].x, d.vertices[v1].y);
        if (pts.back() == endpt) pts.pop_back();
        pts.push_back(endpt);
        if (pts.size() < 2) fail("degenerate arc");
        auto heading_of = [&](const std::pair<long, long>& s0,
                              const std::pair<long, long>& s1) {
            long dx = s1.first - s0.first, dy = s1.second - s0.second;
            int sx = (dx > 0) - (dx < 0), sy = (dy > 0) - (dy < 0);
            if (sx != 0 && sy != 0 && std::abs(dx) != std::abs(dy))
                fail("diagonal segment not at 45 degrees");
            for (int t = 0; t < 8; ++t)
                if (tick_dx(t) == sx && tick_dy(t) == sy) return t;
            fail("zero-length segment");
        };
        // Drop interior points that do not bend the arc; such points arise
        // when the exit diagonal of one crossing continues straight into the
        // entry diagonal of the next.
        std::vector<std::pair<long, long>> bends;
        bends.push_back(pts.front());
        for (std::size_t s = 1; s + 1 < pts.size(); ++s)
            if (heading_of(bends.back(), pts[s]) != heading_of(pts[s], pts[s + 1]))
                bends.push_back(pts[s]);
        bends.push_back(pts.back());
        pts = std::move(bends);
        a.waypoints.assign(pts.begin() + 1, pts.end() - 1);
        // Turning: headings of successive segments.
        int turn = 0;
        int prev_heading = -1;
        for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
            int heading = heading_of(pts[s], pts[s + 1]);
            if (s == 0) {
                if (heading != p0) fail("arc leaves through wrong port");
            } else {
                int t = tick_turn(prev_heading, heading);
                if (t == 0 || std::abs(t) > 2) {
                    std::ostringstream os;
                    os << "bad bend in arc " << d.vertices[v0].gen.name() << " -> "
                       << d.vertices[v1].gen.name() << " at (" << pts[s].first
                       << "," << pts[s].second << ")";
                    fail(os.str());
                }
                turn += t;
            }
            prev_heading = heading;
        }
        if (prev_heading != tick_wrap(p1 + 4)) fail("arc arrives at wrong port");
        a.turn = turn;
        d.arcs.push_back(a);
    }

    void passage(int v, int in_port, int out_port) {
        if (!have_head) {
            have_head = true;
            head_waypoints = std::move(pending);
            head_vertex = v;
            head_port = in_port;
        } else {
            emit_arc(last_vertex, last_port, v, in_port, std::move(pending));
        }
        pending.clear();
        last_vertex = v;
        last_port = out_port;
    }

    void close_component() {
        if (!have_head) fail("closed strand without crossings");
        auto wps = std::move(pending);
        wps.insert(wps.end(), head_waypoints.begin(), head_waypoints.end());
        emit_arc(last_vertex, last_port, head_vertex, head_port, std::move(wps));
        pending.clear();
        have_head = false;
        last_vertex = last_port = head_vertex = head_port = -1;
        head_waypoints.clear();
    }

    void walk_component(int start_level, const std::vector<int>& braid_vertex_of_col,
                        const std::vector<std::vector<int>>& s_vertex,
                        const std::vector<std::vector<int>>& c_vertex,
                        std::vector<bool>& seen) {
        int lev = start_level;
        do {
            seen[lev] = true;
            // Braid box, west to east.
            for (int c = 1; c <= cols; ++c) {
                int vb = braid_vertex_of_col[c];
                if (vb < 0) continue;  // deleted letter: strands run straight
                int j = (c - 1) % (p - 1) + 1;
                int lo = letter_level_lo(j), hi = lo + 1;
                if (lev == lo) {
                    add_waypoint(col_x(c) - 1, level_y(lo));
                    passage(vb, 5 /*SW*/, 1 /*NE*/);
                    add_waypoint(col_x(c) + 1, level_y(hi));
                    lev = hi;
                } else if (lev == hi) {
                    add_waypoint(col_x(c) - 1, level_y(hi));
                    passage(vb, 3 /*NW*/, 7 /*SE*/);
                    add_waypoint(col_x(c) + 1, level_y(lo));
                    lev = lo;
                }
            }
            // Closure arc k = lev+1: east past the dives of the higher arcs,
            // kink, dive, wrap, climb, and east again into the braid.
            int k = lev + 1;
            long yk = level_y(lev), ex = e_x(k), wx = w_x(k), uy = u_y(k);
            for (int w = p; w > k; --w) passage(s_vertex[w][k], 4 /*W*/, 0 /*E*/);
            if (conv.kink_on_dive) {
                add_waypoint(ex, yk);
                for (int j = k - 1; j >= 1; --j) passage(s_vertex[k][j], 2 /*N*/, 6 /*S*/);
                passage(s_vertex[k][k], 2 /*N*/, 6 /*S*/);
                add_waypoint(ex, uy - 2);
                add_waypoint(ex + 2, uy - 2);
                add_waypoint(ex + 2, uy);
                passage(s_vertex[k][k], 0 /*E*/, 4 /*W*/);
            } else {
                passage(s_vertex[k][k], 4 /*W*/, 0 /*E*/);
                add_waypoint(ex + 2, yk);
                add_waypoint(ex + 2, yk + 2);
                add_waypoint(ex, yk + 2);
                passage(s_vertex[k][k], 2 /*N*/, 6 /*S*/);
                for (int j = k - 1; j >= 1; --j) passage(s_vertex[k][j], 2 /*N*/, 6 /*S*/);
                add_waypoint(ex, uy);
            }
            add_waypoint(wx, uy);
            for (int j = 1; j <= k - 1; ++j) passage(c_vertex[k][j], 6 /*S*/, 2 /*N*/);
            add_waypoint(wx, yk);
            for (int w = k + 1; w <= p; ++w) passage(c_vertex[w][k], 4 /*W*/, 0 /*E*/);
        } while (lev != start_level);
        close_component();
    }

    void build_faces() {
        // Outgoing halfedge per (vertex, port).
        for (int a = 0; a < (int)d.arcs.size(); ++a) {
            for (int e = 0; e < 2; ++e) {
                auto key = std::make_pair(d.arcs[a].v[e], d.arcs[a].port[e]);
                if (!d.out_halfedge.emplace(key, 2 * a + e).second)
                    fail("two arcs claim one port");
            }
        }
        for (int v = 0; v < (int)d.vertices.size(); ++v)
            for (int t : d.vertices[v].port_ticks())
                if (!d.out_halfedge.count({v, t})) fail("unused port");

        // Face orbits: after arriving through port P, leave through the next
        // port clockwise (P - 2 ticks); the face lies on the left and the
        // corner swept has bisector tick P - 1.
        std::vector<int> face_of(2 * d.arcs.size(), -1);
        for (int h0 = 0; h0 < (int)(2 * d.arcs.size()); ++h0) {
            if (face_of[h0] >= 0) continue;
            DiagramFace f;
            int h = h0;
            do {
                face_of[h] = (int)d.faces.size();
                f.halfedges.push_back(h);
                f.turning += d.halfedge_turn(h);
                int v = d.head_vertex(h);
                int in = d.head_port(h);
                f.corners.push_back({v, tick_wrap(in - 1)});
                f.turning += 2;
                h = d.out_halfedge.at({v, tick_wrap(in - 2)});
            } while (h != h0);
            if (f.turning != 8 && f.turning != -8)
                fail("face turning " + std::to_string(f.turning));
            f.unbounded = f.turning == -8;
            d.faces.push_back(std::move(f));
        }
        int unbounded = 0;
        for (auto& f : d.faces) unbounded += f.unbounded ? 1 : 0;
        if (unbounded != 1) fail("expected exactly one unbounded face");
        for (int fi = 0; fi < (int)d.faces.size(); ++fi)
            for (auto& c : d.faces[fi].corners)
                if (!d.face_of_quadrant.emplace(c, fi).second)
                    fail("quadrant in two faces");
        for (int v = 0; v < (int)d.vertices.size(); ++v)
            for (int t : d.vertices[v].quadrant_ticks())
                if (!d.face_of_quadrant.count({v, t})) fail("uncovered quadrant");

        long V = (long)d.vertices.size(), E = (long)d.arcs.size(),
             F = (long)d.faces.size();
        if (V - E + F != 2) fail("Euler relation violated");
    }

    void check_connected() {
        if (d.vertices.empty()) fail("empty diagram");
        std::vector<bool> vis(d.vertices.size(), false);
        std::vector<int> stack{0};
        vis[0] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int t : d.vertices[v].port_ticks()) {
                int h = d.out_halfedge.at({v, t});
                int w = d.head_vertex(h);
                if (!vis[w]) {
                    vis[w] = true;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        if (count != d.vertices.size()) fail("diagram not connected");
    }

    // All drawn segments must be pairwise disjoint except at shared crossing
    // points; this certifies the combinatorial map matches the geometry.
    void check_embedding() {
        struct Seg {
            long x0, y0, x1, y1;
            int arc;
            int idx;  // position within the arc's polyline
        };
        std::vector<Seg> segs;
        for (int ai = 0; ai < (int)d.arcs.size(); ++ai) {
            const auto& a = d.arcs[ai];
            std::vector<std::pair<long, long>> pts;
            pts.push_back({d.vertices[a.v[0]].x, d.vertices[a.v[0]].y});
            for (auto& w : a.waypoints) pts.push_back(w);
            pts.push_back({d.vertices[a.v[1]].x, d.vertices[a.v[1]].y});
            for (std::size_t s = 0; s + 1 < pts.size(); ++s)
                segs.push_back({pts[s].first, pts[s].second, pts[s + 1].first,
                                pts[s + 1].second, ai, (int)s});
        }
        std::set<std::pair<long, long>> vertex_pts;
        for (auto& v : d.vertices) vertex_pts.insert({v.x, v.y});

        auto orient = [](long ax, long ay, long bx, long by, long cx, long cy) {
            long v = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
            return v > 0 ? 1 : v < 0 ? -1 : 0;
        };
        auto on_seg = [&](const Seg& s, long x, long y) {
            if (orient(s.x0, s.y0, s.x1, s.y1, x, y) != 0) return false;
            return std::min(s.x0, s.x1) <= x && x <= std::max(s.x0, s.x1) &&
                   std::min(s.y0, s.y1) <= y && y <= std::max(s.y0, s.y1);
        };
        auto share_allowed = [&](long x, long y) {
            return vertex_pts.count({x, y}) > 0;
        };
        for (std::size_t i = 0; i < segs.size(); ++i) {
            for (std::size_t j = i + 1; j < segs.size(); ++j) {
                const Seg &a = segs[i], &b = segs[j];
                // Consecutive segments of one arc legitimately share a bend.
                if (a.arc == b.arc && std::abs(a.idx - b.idx) == 1) continue;
                int o1 = orient(a.x0, a.y0, a.x1, a.y1, b.x0, b.y0);
                int o2 = orient(a.x0, a.y0, a.x1, a.y1, b.x1, b.y1);
                int o3 = orient(b.x0, b.y0, b.x1, b.y1, a.x0, a.y0);
                int o4 = orient(b.x0, b.y0, b.x1, b.y1, a.x1, a.y1);
                bool meet = false;
                long mx = 0, my = 0;
                if (o1 != o2 && o3 != o4 && o1 && o2 && o3 && o4) {
                    // Proper interior crossing: never allowed.
                    fail("segments cross away from a crossing point");
                }
                auto try_pt = [&](long x, long y, const Seg& other) {
                    if (on_seg(other, x, y)) {
                        if (meet && (mx != x || my != y))
                            fail("segments overlap");
                        meet = true;
                        mx = x;
                        my = y;
                    }
                };
                try_pt(b.x0, b.y0, a), try_pt(b.x1, b.y1, a);
                try_pt(a.x0, a.y0, b), try_pt(a.x1, a.y1, b);
                // Collinear overlap of distinct segments.
                if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
                    // Project on the dominant axis.
                    bool usex = a.x0 != a.x1 || b.x0 != b.x1;
                    long a0 = usex ? std::min(a.x0, a.x1) : std::min(a.y0, a.y1);
                    long a1 = usex ? std::max(a.x0, a.x1) : std::max(a.y0, a.y1);
                    long b0 = usex ? std::min(b.x0, b.x1) : std::min(b.y0, b.y1);
                    long b1 = usex ? std::max(b.x0, b.x1) : std::max(b.y0, b.y1);
                    if (std::max(a0, b0) < std::min(a1, b1))
                        fail("segments overlap along a line");
                }
                if (meet && !share_allowed(mx, my))
                    fail("segments touch away from a crossing point");
            }
        }
    }

    ClosureDiagram run() {
        p = spec.p;
        q = spec.q;
        cols = p >= 2 ? q * (p - 1) : 0;
        d.spec = spec;
        d.conv = conv;

        std::vector<int> braid_vertex_of_col(cols + 1, -1);
        for (int c = 1; c <= cols; ++c) {
            int i = (c - 1) / std::max(1, p - 1) + 1;
            int j = (c - 1) % std::max(1, p - 1) + 1;
            if (!spec.retained(i, j)) continue;
            int lo = letter_level_lo(j);
            braid_vertex_of_col[c] =
                add_vertex(gen_b(i, j), true, col_x(c), level_y(lo) + 1);
        }
        std::vector<std::vector<int>> s_vertex(p + 1, std::vector<int>(p + 1, -1));
        std::vector<std::vector<int>> c_vertex(p + 1, std::vector<int>(p + 1, -1));
        for (int i = 1; i <= p; ++i)
            for (int j = 1; j <= i; ++j) {
                long sy = (j == i && conv.kink_on_dive) ? u_y(i) : level_y(j - 1);
                s_vertex[i][j] = add_vertex(gen_s(i, j), false, e_x(i), sy);
                if (j < i)
                    c_vertex[i][j] =
                        add_vertex(gen_c(i, j), false, w_x(i), level_y(j - 1));
            }

        Census want = census_of(spec);
        std::size_t nb = 0, nc = 0, ns = 0;
        for (auto& v : d.vertices) {
            if (v.gen.kind == GenKind::B) ++nb;
            if (v.gen.kind == GenKind::C) ++nc;
            if (v.gen.kind == GenKind::S) ++ns;
        }
        if (nb != want.num_b || nc != want.num_c || ns != want.num_s)
            fail("generator census mismatch");

        std::vector<bool> seen(p, false);
        for (int lev = 0; lev < p; ++lev)
            if (!seen[lev])
                walk_component(lev, braid_vertex_of_col, s_vertex, c_vertex, seen);

        build_faces();
        check_connected();
        check_embedding();
        return std::move(d);
    }
};

}  // namespace

std::vector<GeneratorId> ClosureDiagram::generator_list() const {
    std::vector<GeneratorId> out;
    out.reserve(vertices.size());
    for (auto& kv : vertex_of) out.push_back(kv.first);
    return out;
}

ClosureDiagram build_closure(const BraidSpec& spec, const Conventions& conv) {
    Builder b{spec, conv};
    return b.run();
}

}  // namespace augres
