#pragma once

#include "augres/braid.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace augres {

// Compass ticks in 45-degree units, counterclockwise from east.
//   0:E  1:NE  2:N  3:NW  4:W  5:SW  6:S  7:SE
// Ports of a crossing are the four outward strand germs:
//   axis-aligned crossings (closure region): ports E,N,W,S (even ticks);
//   braid crossings (diagonal strands): ports NE,NW,SW,SE (odd ticks).
// A quadrant of a crossing is the sector between two adjacent ports and is
// identified by the tick of its bisector (odd ticks for axis-aligned
// crossings, even ticks for braid crossings).
inline int tick_wrap(int t) { return ((t % 8) + 8) % 8; }
inline int tick_dx(int t) {
    static const int dx[8] = {1, 1, 0, -1, -1, -1, 0, 1};
    return dx[tick_wrap(t)];
}
inline int tick_dy(int t) {
    static const int dy[8] = {0, 1, 1, 1, 0, -1, -1, -1};
    return dy[tick_wrap(t)];
}
// Normalize a tick difference to (-4, 4].
inline int tick_turn(int from, int to) {
    int d = tick_wrap(to - from);
    return d > 4 ? d - 8 : d;
}

// Discrete layout and sign choices for the closure diagram.  The defaults
// are the frozen house conventions (see docs/conventions.md); the fields
// exist so the convention-selection harness can sweep the alternatives.
struct Conventions {
    // Braid letter sigma_j crosses strand levels (j-1, j) counted from the
    // bottom; when flipped, levels (p-1-j, p-j).
    bool flip_braid_levels = false;
    // Each closure arc crosses itself once.  The kink sits on the arc's
    // dive below the crossing grid (lobe south-east) when true; at the
    // arc's east turn above its exit level (lobe north-east) when false.
    bool kink_on_dive = false;
    // Positive quadrant pair per crossing class.
    bool braid_positive_ew = true;     // {E,W} vs {N,S}
    bool c_positive_nesw = true;       // {NE,SW} vs {NW,SE}
    bool s_mixed_positive_nesw = true;
    bool s_self_positive_nesw = true;  // {SE,NW} when false
    // Side of the walk on which disks lie; fixes the word reading order.
    bool disk_on_right = false;

    std::string describe() const;
};

struct ClosureVertex {
    GeneratorId gen;
    bool braid_vertex = false;  // diagonal ports when true
    long x = 0, y = 0;
    std::array<int, 2> positive_ticks{};  // bisector ticks of + quadrants

    bool quadrant_positive(int tick) const {
        return tick == positive_ticks[0] || tick == positive_ticks[1];
    }
    // The four quadrant bisector ticks of this vertex.
    std::array<int, 4> quadrant_ticks() const {
        int base = braid_vertex ? 0 : 1;
        return {base, base + 2, base + 4, base + 6};
    }
    std::array<int, 4> port_ticks() const {
        int base = braid_vertex ? 1 : 0;
        return {base, base + 2, base + 4, base + 6};
    }
};

struct ClosureArc {
    int v[2];
    int port[2];  // port tick at each endpoint
    int turn = 0;  // total turning, in ticks, traversing end 0 -> end 1
    std::vector<std::pair<long, long>> waypoints;  // interior bends, 0 -> 1
};

struct DiagramFace {
    std::vector<int> halfedges;  // 2*arc + end, traversal order
    std::vector<std::pair<int, int>> corners;  // (vertex, quadrant tick)
    int turning = 0;
    bool unbounded = false;
};

struct ClosureDiagram {
    BraidSpec spec;
    Conventions conv;
    std::vector<ClosureVertex> vertices;
    std::vector<ClosureArc> arcs;
    std::vector<DiagramFace> faces;
    std::map<GeneratorId, int> vertex_of;
    // (vertex, port tick) -> halfedge leaving the vertex through that port.
    std::map<std::pair<int, int>, int> out_halfedge;
    // (vertex, quadrant tick) -> face index.
    std::map<std::pair<int, int>, int> face_of_quadrant;

    int p() const { return spec.p; }
    std::size_t num_crossings() const { return vertices.size(); }

    // Halfedge helpers: halfedge h = 2*arc + e travels from end e to end 1-e.
    int arc_of(int h) const { return h / 2; }
    int head_vertex(int h) const { return arcs[h / 2].v[1 - h % 2]; }
    int head_port(int h) const { return arcs[h / 2].port[1 - h % 2]; }
    int tail_vertex(int h) const { return arcs[h / 2].v[h % 2]; }
    int tail_port(int h) const { return arcs[h / 2].port[h % 2]; }
    int halfedge_turn(int h) const {
        return h % 2 == 0 ? arcs[h / 2].turn : -arcs[h / 2].turn;
    }
    int twin(int h) const { return h ^ 1; }

    std::vector<GeneratorId> generator_list() const;
};

// Build the Lagrangian diagram of the Legendrian closure of `spec`.
// Validates the generator census, planarity (Euler relation), connectivity
// and segment disjointness; throws std::logic_error on any violation.
ClosureDiagram build_closure(const BraidSpec& spec,
                             const Conventions& conv = Conventions{});

}  // namespace augres
