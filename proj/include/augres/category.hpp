#pragma once

#include "augres/augment.hpp"
#include "augres/dga.hpp"
#include "augres/gf2.hpp"

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace augres {

// Arbitrary Z/2 assignment on generators; augmentations are the graded case.
using ValueMap = std::function<bool(const GeneratorId&)>;

inline ValueMap value_map_of(const Augmentation& eps) {
    return [&eps](const GeneratorId& g) { return eps.value(g); };
}

// Coefficient of `target` in the (v1, v2)-linearization of p: sum over words
// w of p and positions k with w[k] == target of v1(w[0..k)) * v2(w[k+1..)).
bool linear_coefficient(const Poly& p, const GeneratorId& target,
                        const ValueMap& v1, const ValueMap& v2);

// Full linear part of p as a sum of single letters (support set).
std::set<GeneratorId> linear_part(const Poly& p, const ValueMap& v1,
                                  const ValueMap& v2);

// Cochain complex of the pair (eps1, eps2): duals of degree-0 chords in
// degree 0, duals of degree-1 chords in degree 1, differential given by the
// bilinearized coefficients of the algebra differential.
struct HomComplex {
    std::vector<GeneratorId> basis0, basis1;  // algebra generator order
    Gf2Matrix d;                              // basis1 rows x basis0 columns
};

HomComplex bilinearized_complex(const Dga& dga, const Augmentation& eps1,
                                const Augmentation& eps2);

struct LchData {
    HomComplex complex;
    std::size_t dim0 = 0, dim1 = 0;
    std::vector<std::vector<bool>> degree0_cocycles;   // kernel basis
    std::vector<std::size_t> degree1_representatives;  // coker basis indices
};

LchData bilinearized_cohomology(const Dga& dga, const Augmentation& eps1,
                                const Augmentation& eps2);

// Composition operation mu_k: takes k chord duals x_1..x_k and k+1
// augmentations (eps_1..eps_{k+1}); input slot t pairs with the t-th jump of
// the augmentation sequence read left to right.  The coefficient of dual(a)
// counts position tuples p_1 < .. < p_k in words of the differential of a
// with w[p_t] == x_t, weighted by eps_t on the t-th gap segment.
std::set<GeneratorId> mu(const Dga& dga,
                         const std::vector<const Augmentation*>& eps,
                         const std::vector<GeneratorId>& inputs);

struct AInfinityReport {
    std::size_t checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Verifies the quadratic composition identities through the given arity for
// every tuple of the supplied augmentations and every input tuple.
AInfinityReport check_a_infinity(const Dga& dga,
                                 const std::vector<Augmentation>& augs,
                                 int max_arity);

}  // namespace augres
