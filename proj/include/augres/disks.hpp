#pragma once

#include "augres/dga.hpp"
#include "augres/diagram.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace augres {

// One boundary event of a disk: either a convex corner occupying a single
// quadrant of a crossing, or a transverse pass through a crossing.
struct DiskEvent {
    int vertex = -1;
    bool corner = false;
    int quadrant_tick = -1;  // corners: bisector tick of the occupied quadrant
    int strand_axis = -1;    // passes: entry port tick mod 4
    bool positive = false;   // corners: sign of the occupied quadrant
    auto operator<=>(const DiskEvent&) const = default;
};

struct Disk {
    // Negative-corner letters in boundary order (positive corners omitted).
    Word word;
    // Boundary events in traversal order, starting at the positive corner of
    // the queried crossing.
    std::vector<DiskEvent> boundary;
    auto operator<=>(const Disk&) const = default;
};

struct DiskQuery {
    GeneratorId at;                      // distinguished positive corner
    std::optional<GeneratorId> second;   // second positive corner, if any
};

enum class DiskEngine { Walk, Oracle, Both };

struct WalkLimits {
    // Hard cap on boundary events per walk: cap_factor * #crossings, unless
    // an absolute event cap is supplied.
    std::size_t cap_factor = 4;
    std::optional<std::size_t> cap_events;

    std::size_t cap_for(std::size_t num_crossings) const {
        return cap_events ? *cap_events : cap_factor * num_crossings;
    }
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FaceBoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Disks with one positive corner at a fixed crossing, plus at most one more
// positive corner elsewhere, keyed by that second crossing.  Vectors sorted.
struct DiskHarvest {
    std::vector<Disk> one_positive;
    std::map<GeneratorId, std::vector<Disk>> two_positive;

    bool operator==(const DiskHarvest&) const = default;
};

// Boundary-walk engine: depth-first search over boundary walks that branch
// at each crossing between a straight pass and a convex corner, accepting
// closed walks of total rotation one.  Crossings may be revisited -- the
// boundary of an immersed polygon is not simple in general -- but no
// directed arc of the diagram is traversed twice.  Multiplicities are
// counted per distinct walk.
DiskHarvest harvest_disks_walk(const ClosureDiagram& d, const GeneratorId& at,
                               const WalkLimits& lim = WalkLimits{});

// Independent reference engine: enumerates connected unions of bounded faces,
// keeps those that are embedded disks (no pinch or concave vertex, Euler
// characteristic one) and reads their boundaries.
class EmbeddedDiskOracle {
  public:
    explicit EmbeddedDiskOracle(const ClosureDiagram& d,
                                std::size_t face_bound = 24);
    DiskHarvest harvest(const GeneratorId& at) const;
    std::size_t num_disk_regions() const { return raw_.size(); }

  private:
    struct RawDisk {
        std::vector<DiskEvent> events;  // cyclic boundary, fixed traversal
        std::vector<std::size_t> positive_positions;
    };
    const ClosureDiagram& diag_;
    std::vector<RawDisk> raw_;
};

// Unified entry point.  Engine Both runs both engines and throws
// std::logic_error if they disagree.
DiskHarvest harvest_disks(const ClosureDiagram& d, const GeneratorId& at,
                          DiskEngine engine, const WalkLimits& lim = WalkLimits{},
                          std::size_t face_bound = 24);

std::vector<Disk> enumerate_disks(const ClosureDiagram& d, const DiskQuery& q,
                                  DiskEngine engine,
                                  const WalkLimits& lim = WalkLimits{},
                                  std::size_t face_bound = 24);

// Human-readable first difference between harvests, if any.
std::optional<std::string> harvest_difference(const DiskHarvest& walk,
                                              const DiskHarvest& oracle);

// Expected dimension of the moduli space of disks with positive corners at a
// degree-d chord and k copies of a degree-a chord, and negative corners of
// total degree negs: d + k*a - negs + k.  Rigid disks have index one.
constexpr int index_of(int d_degree, int a_degree, int k, int negs_degree_sum) {
    return d_degree + k * a_degree - negs_degree_sum + k;
}

// Differential of the closure DGA: the boundary of each generator is the sum
// over its one-positive disks of their negative-corner words.
Dga differential_dga(const ClosureDiagram& d, DiskEngine engine = DiskEngine::Walk,
                     const WalkLimits& lim = WalkLimits{},
                     std::size_t face_bound = 24);

}  // namespace augres
