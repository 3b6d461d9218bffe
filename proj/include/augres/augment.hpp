#pragma once

#include "augres/dga.hpp"

#include <map>
#include <vector>

namespace augres {

// A graded algebra map to Z/2: unit goes to 1, compositions with the
// differential vanish, and every generator of nonzero degree goes to 0.
// Only the degree-zero values are stored.
struct Augmentation {
    std::map<GeneratorId, bool> values;

    bool value(const GeneratorId& g) const {
        auto it = values.find(g);
        return it != values.end() && it->second;
    }
    bool eval_word(const Word& w) const {
        for (auto& l : w.letters)
            if (!value(l)) return false;
        return true;
    }
    bool eval_poly(const Poly& p) const {
        bool acc = false;
        for (auto& w : p.monomials) acc ^= eval_word(w);
        return acc;
    }
    std::vector<bool> vector_on(const std::vector<GeneratorId>& gens) const {
        std::vector<bool> out;
        out.reserve(gens.size());
        for (auto& g : gens) out.push_back(value(g));
        return out;
    }
    auto operator<=>(const Augmentation&) const = default;
};

// All augmentations, ordered lexicographically by the value vector on the
// degree-zero generators in algebra order (0 before 1).  Backtracking with
// equation pruning; equivalent to the naive enumeration below.
std::vector<Augmentation> enumerate_augmentations(const Dga& dga,
                                                  std::size_t max_degree0 = 30);

// Independent oracle: tries all 2^n value vectors.
std::vector<Augmentation> enumerate_augmentations_naive(const Dga& dga,
                                                        std::size_t max_degree0 = 12);

// True iff eps kills the differential of every generator.
bool is_augmentation(const Dga& dga, const Augmentation& eps);

// Algebra involution g -> g + eps(g) applied to the differential; the result
// of twisting by an augmentation has no constant terms.
Dga twist_by(const Dga& dga, const Augmentation& eps);

// eps composed with a dga morphism; throws std::logic_error if the result is
// not an augmentation of the source algebra.
Augmentation pushforward(const DgaMap& f, const Augmentation& eps);

}  // namespace augres
