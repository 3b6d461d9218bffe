#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace augres {

// A positive braid presented as a (p,q) torus braid with a set of deleted
// (0-resolved) crossings.  The torus braid on p strands with q rows has
// braid word (sigma_1 sigma_2 ... sigma_{p-1})^q; the letter in row i at
// column j is the crossing slot (i,j), 1 <= i <= q, 1 <= j <= p-1.
struct BraidSpec {
    int p = 1;
    int q = 0;
    std::set<std::pair<int, int>> deleted;

    bool retained(int i, int j) const {
        return i >= 1 && i <= q && j >= 1 && j <= p - 1 &&
               !deleted.count({i, j});
    }
    // Retained crossing slots in row-major order.
    std::vector<std::pair<int, int>> retained_slots() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 1; i <= q; ++i)
            for (int j = 1; j <= p - 1; ++j)
                if (!deleted.count({i, j})) out.push_back({i, j});
        return out;
    }
    bool operator==(const BraidSpec& o) const {
        return p == o.p && q == o.q && deleted == o.deleted;
    }
};

enum class GenKind : std::uint8_t { B = 0, C = 1, S = 2 };

// Name of a Reeb chord / crossing of the closure diagram.
//   kind B: braid crossing b[i,j]     (degree 0)
//   kind C: closure crossing c[i,j], 1 <= j < i <= p  (degree 0)
//   kind S: closure crossing s[i,j], 1 <= j <= i <= p (degree 1)
struct GeneratorId {
    GenKind kind = GenKind::B;
    int i = 0;
    int j = 0;

    int degree() const { return kind == GenKind::S ? 1 : 0; }

    auto operator<=>(const GeneratorId&) const = default;

    std::string name() const {
        static const char* k = "bcs";
        return std::string(1, k[static_cast<int>(kind)]) + "[" +
               std::to_string(i) + "," + std::to_string(j) + "]";
    }
};

inline GeneratorId gen_b(int i, int j) { return {GenKind::B, i, j}; }
inline GeneratorId gen_c(int i, int j) { return {GenKind::C, i, j}; }
inline GeneratorId gen_s(int i, int j) { return {GenKind::S, i, j}; }

// Parse "b[2,1]" / "c[3,1]" / "s[1,1]".  Throws std::invalid_argument.
GeneratorId parse_generator(const std::string& text);

// The (p,q) torus braid.  Rejects p < 1 or q < 0.
BraidSpec torus_braid(int p, int q);

// Delete one retained crossing (0-resolution at the diagram level).
// Rejects out-of-grid targets and doubly-deleted crossings.
BraidSpec resolve_crossing(const BraidSpec& spec, std::pair<int, int> target);

// Text format: "torus(p,q)" optionally followed by "minus (i1,j1) (i2,j2) ...",
// or "word(j1 j2 ...)" which places an explicit positive braid word into the
// smallest containing torus grid row-major.  Throws std::invalid_argument.
BraidSpec parse_braid_text(const std::string& text);

// JSON form {"p":int,"q":int,"deleted":[[i,j],...]}.
BraidSpec parse_braid_json(const std::string& json_text);

// Either of the above, autodetected ('{' starts JSON).
BraidSpec parse_braid_any(const std::string& text);

std::string braid_to_text(const BraidSpec& spec);

// Generator census of the closure diagram of `spec`.
struct Census {
    int num_b = 0, num_c = 0, num_s = 0;
    int total() const { return num_b + num_c + num_s; }
};
Census census_of(const BraidSpec& spec);

// All generators of the closure DGA in a fixed canonical order:
// b's row-major, then c's by (i,j), then s's by (i,j).
std::vector<GeneratorId> closure_generators(const BraidSpec& spec);

}  // namespace augres
