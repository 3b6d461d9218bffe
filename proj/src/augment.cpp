#include "augres/augment.hpp"

#include <algorithm>
#include <stdexcept>

namespace augres {

namespace {

// Equations come from degree-one generators: the value of the differential
// must vanish.  Words containing a letter of nonzero degree evaluate to zero
// under any graded map, so only all-degree-zero words survive.
struct Equation {
    std::vector<std::vector<std::size_t>> words;  // letter indices
    bool constant = false;                        // unit words flip this
    std::size_t max_index = 0;                    // last variable appearing
};

std::vector<Equation> build_equations(
    const Dga& dga, const std::map<GeneratorId, std::size_t>& index_of) {
    std::vector<Equation> eqs;
    for (auto& g : dga.generators) {
        const Poly& dg = dga.d_of(g);
        Equation eq;
        bool any = false;
        for (auto& w : dg.monomials) {
            bool all0 = true;
            for (auto& l : w.letters)
                if (l.degree() != 0) {
                    all0 = false;
                    break;
                }
            if (!all0) continue;
            any = true;
            if (w.is_unit()) {
                eq.constant = !eq.constant;
                continue;
            }
            std::vector<std::size_t> idx;
            for (auto& l : w.letters) idx.push_back(index_of.at(l));
            eq.max_index = std::max(eq.max_index,
                                    *std::max_element(idx.begin(), idx.end()));
            eq.words.push_back(std::move(idx));
        }
        if (any) eqs.push_back(std::move(eq));
    }
    return eqs;
}

bool equation_holds(const Equation& eq, const std::vector<bool>& vals) {
    bool acc = eq.constant;
    for (auto& w : eq.words) {
        bool prod = true;
        for (std::size_t i : w)
            if (!vals[i]) {
                prod = false;
                break;
            }
        acc ^= prod;
    }
    return !acc;
}

Augmentation from_vector(const std::vector<GeneratorId>& deg0,
                         const std::vector<bool>& vals) {
    Augmentation eps;
    for (std::size_t i = 0; i < deg0.size(); ++i)
        if (vals[i]) eps.values[deg0[i]] = true;
    return eps;
}

}  // namespace

std::vector<Augmentation> enumerate_augmentations(const Dga& dga,
                                                  std::size_t max_degree0) {
    std::vector<GeneratorId> deg0 = dga.generators_of_degree(0);
    if (deg0.size() > max_degree0)
        throw std::runtime_error("augmentation search limit: " +
                                 std::to_string(deg0.size()) +
                                 " degree-zero generators");
    std::map<GeneratorId, std::size_t> index_of;
    for (std::size_t i = 0; i < deg0.size(); ++i) index_of[deg0[i]] = i;
    std::vector<Equation> eqs = build_equations(dga, index_of);

    // Equations checked as soon as their last variable is assigned.
    std::vector<std::vector<const Equation*>> due(deg0.size() + 1);
    for (auto& eq : eqs) {
        std::size_t at = eq.words.empty() ? 0 : eq.max_index + 1;
        due[at].push_back(&eq);
    }

    std::vector<Augmentation> out;
    std::vector<bool> vals(deg0.size(), false);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        for (const Equation* eq : due[k])
            if (!equation_holds(*eq, vals)) return;
        if (k == deg0.size()) {
            out.push_back(from_vector(deg0, vals));
            return;
        }
        vals[k] = false;
        self(self, k + 1);
        vals[k] = true;
        self(self, k + 1);
        vals[k] = false;
    };
    rec(rec, 0);
    return out;
}

std::vector<Augmentation> enumerate_augmentations_naive(const Dga& dga,
                                                        std::size_t max_degree0) {
    std::vector<GeneratorId> deg0 = dga.generators_of_degree(0);
    if (deg0.size() > max_degree0)
        throw std::runtime_error("naive augmentation oracle limit: " +
                                 std::to_string(deg0.size()) +
                                 " degree-zero generators");
    std::size_t n = deg0.size();
    std::vector<Augmentation> out;
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
        std::vector<bool> vals(n);
        // Lexicographic order: the first generator is the most significant bit.
        for (std::size_t i = 0; i < n; ++i)
            vals[i] = (bits >> (n - 1 - i)) & 1ull;
        Augmentation eps = from_vector(deg0, vals);
        if (is_augmentation(dga, eps)) out.push_back(std::move(eps));
    }
    return out;
}

bool is_augmentation(const Dga& dga, const Augmentation& eps) {
    for (auto& g : dga.generators)
        if (eps.eval_poly(dga.d_of(g))) return false;
    return true;
}

Dga twist_by(const Dga& dga, const Augmentation& eps) {
    Dga out;
    out.generators = dga.generators;
    for (auto& g : dga.generators) {
        const Poly& dg = dga.d_of(g);
        Poly acc = Poly::zero();
        for (auto& w : dg.monomials) {
            // Substitute l -> l + eps(l) in each letter and expand.
            Poly prod = Poly::unit();
            for (auto& l : w.letters) {
                Poly letter = Poly::from_generator(l);
                if (eps.value(l)) letter = letter.plus(Poly::unit());
                prod = prod.times(letter);
            }
            acc = acc.plus(prod);
        }
        out.differential[g] = acc;
    }
    return out;
}

Augmentation pushforward(const DgaMap& f, const Augmentation& eps) {
    Augmentation out;
    for (auto& g : f.source->generators) {
        bool v = eps.eval_poly(f.of(g));
        if (g.degree() != 0) {
            if (v)
                throw std::logic_error(
                    "pushforward assigns 1 to nonzero-degree generator " +
                    g.name());
            continue;
        }
        if (v) out.values[g] = true;
    }
    if (!is_augmentation(*f.source, out))
        throw std::logic_error("pushforward along the morphism is not an augmentation");
    return out;
}

}  // namespace augres
