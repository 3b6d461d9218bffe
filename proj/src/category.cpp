#include "augres/category.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace augres {

bool linear_coefficient(const Poly& p, const GeneratorId& target,
                        const ValueMap& v1, const ValueMap& v2) {
    bool acc = false;
    for (const Word& w : p.monomials) {
        for (std::size_t k = 0; k < w.letters.size(); ++k) {
            if (!(w.letters[k] == target)) continue;
            bool term = true;
            for (std::size_t i = 0; i < k && term; ++i) term = v1(w.letters[i]);
            for (std::size_t i = k + 1; i < w.letters.size() && term; ++i)
                term = v2(w.letters[i]);
            acc ^= term;
        }
    }
    return acc;
}

std::set<GeneratorId> linear_part(const Poly& p, const ValueMap& v1,
                                  const ValueMap& v2) {
    std::set<GeneratorId> out;
    std::set<GeneratorId> letters;
    for (const Word& w : p.monomials)
        for (auto& l : w.letters) letters.insert(l);
    for (auto& l : letters)
        if (linear_coefficient(p, l, v1, v2)) out.insert(l);
    return out;
}

HomComplex bilinearized_complex(const Dga& dga, const Augmentation& eps1,
                                const Augmentation& eps2) {
    HomComplex h;
    h.basis0 = dga.generators_of_degree(0);
    h.basis1 = dga.generators_of_degree(1);
    h.d = Gf2Matrix(h.basis1.size(), h.basis0.size());
    ValueMap v1 = value_map_of(eps1), v2 = value_map_of(eps2);
    for (std::size_t r = 0; r < h.basis1.size(); ++r) {
        const Poly& da = dga.d_of(h.basis1[r]);
        for (std::size_t c = 0; c < h.basis0.size(); ++c)
            if (linear_coefficient(da, h.basis0[c], v1, v2)) h.d.set(r, c, true);
    }
    return h;
}

LchData bilinearized_cohomology(const Dga& dga, const Augmentation& eps1,
                                const Augmentation& eps2) {
    LchData out;
    out.complex = bilinearized_complex(dga, eps1, eps2);
    std::size_t rank = out.complex.d.rank();
    out.dim0 = out.complex.basis0.size() - rank;
    out.dim1 = out.complex.basis1.size() - rank;
    out.degree0_cocycles = out.complex.d.kernel_basis();
    out.degree1_representatives = out.complex.d.cokernel_representatives();
    return out;
}

namespace {

bool eval_segment(const Augmentation& eps, const std::vector<GeneratorId>& w,
                  std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i)
        if (!eps.value(w[i])) return false;
    return true;
}

using Mask = std::uint64_t;

// Table of mu_k over all input tuples, flattened row-major; entry bit a is
// the coefficient of dual(generators[a]).
std::vector<Mask> build_mu_table(const Dga& dga,
                                 const std::map<GeneratorId, int>& index_of,
                                 const std::vector<const Augmentation*>& eps,
                                 int k) {
    const int n = (int)dga.generators.size();
    std::size_t size = 1;
    for (int t = 0; t < k; ++t) size *= (std::size_t)n;
    std::vector<Mask> table(size, 0);
    for (int a = 0; a < n; ++a) {
        Mask bit = Mask(1) << a;
        const Poly& da = dga.d_of(dga.generators[a]);
        for (const Word& word : da.monomials) {
            std::vector<GeneratorId> w = word.letters;
            auto rec = [&](auto&& self, int t, std::size_t i,
                           std::size_t flat) -> void {
                if (t > k) {
                    if (eval_segment(*eps[k], w, i, w.size())) table[flat] ^= bit;
                    return;
                }
                for (std::size_t p = i; p < w.size(); ++p) {
                    if (!eval_segment(*eps[t - 1], w, i, p)) continue;
                    self(self, t + 1, p + 1,
                         flat * (std::size_t)n + (std::size_t)index_of.at(w[p]));
                }
            };
            rec(rec, 1, 0, 0);
        }
    }
    return table;
}

std::string tuple_str(const std::vector<int>& t) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ")";
    return os.str();
}

}  // namespace

std::set<GeneratorId> mu(const Dga& dga,
                         const std::vector<const Augmentation*>& eps,
                         const std::vector<GeneratorId>& inputs) {
    if (eps.size() != inputs.size() + 1)
        throw std::invalid_argument("mu needs one more augmentation than inputs");
    const std::size_t k = inputs.size();
    std::set<GeneratorId> out;
    for (auto& a : dga.generators) {
        bool coeff = false;
        for (const Word& word : dga.d_of(a).monomials) {
            const auto& w = word.letters;
            auto rec = [&](auto&& self, std::size_t t, std::size_t i) -> bool {
                if (t > k) return eval_segment(*eps[k], w, i, w.size());
                bool acc = false;
                for (std::size_t p = i; p < w.size(); ++p) {
                    if (!(w[p] == inputs[t - 1])) continue;
                    if (!eval_segment(*eps[t - 1], w, i, p)) continue;
                    acc ^= self(self, t + 1, p + 1);
                }
                return acc;
            };
            coeff ^= rec(rec, 1, 0);
        }
        if (coeff) {
            out.insert(a);
        }
    }
    return out;
}

AInfinityReport check_a_infinity(const Dga& dga,
                                 const std::vector<Augmentation>& augs,
                                 int max_arity) {
    AInfinityReport report;
    const int n = (int)dga.generators.size();
    if (n > 63)
        throw std::runtime_error("composition check limited to 63 chords");
    if (augs.empty()) return report;
    std::map<GeneratorId, int> index_of;
    for (int i = 0; i < n; ++i) index_of[dga.generators[i]] = i;
    const int A = (int)augs.size();

    auto add_violation = [&](int arity, const std::vector<int>& tuple,
                             const std::vector<int>& xs, Mask bad) {
        if (report.violations.size() >= 50) return;
        std::ostringstream os;
        os << "arity " << arity << " identity fails for augmentations "
           << tuple_str(tuple) << " at inputs (";
        for (std::size_t i = 0; i < xs.size(); ++i)
            os << (i ? "," : "") << dga.generators[xs[i]].name();
        os << "), residual duals:";
        for (int a = 0; a < n; ++a)
            if (bad >> a & 1) os << " " << dga.generators[a].name();
        report.violations.push_back(os.str());
    };

    auto table = [&](const std::vector<int>& which, int k) {
        std::vector<const Augmentation*> eps;
        for (int i : which) eps.push_back(&augs[i]);
        return build_mu_table(dga, index_of, eps, k);
    };
    auto apply1 = [&](const std::vector<Mask>& t1, Mask v) {
        Mask acc = 0;
        while (v) {
            int y = std::countr_zero(v);
            v &= v - 1;
            acc ^= t1[y];
        }
        return acc;
    };

    // Arity 1: the bilinearized differential squares to zero.
    if (max_arity >= 1) {
        std::vector<int> t(2);
        for (t[0] = 0; t[0] < A; ++t[0])
            for (t[1] = 0; t[1] < A; ++t[1]) {
                auto t1 = table({t[0], t[1]}, 1);
                for (int x = 0; x < n; ++x) {
                    ++report.checked;
                    Mask bad = apply1(t1, t1[x]);
                    if (bad) add_violation(1, t, {x}, bad);
                }
            }
    }

    // Arity 2: Leibniz rule for mu_2 against mu_1.
    if (max_arity >= 2) {
        std::vector<int> t(3);
        for (t[0] = 0; t[0] < A; ++t[0])
            for (t[1] = 0; t[1] < A; ++t[1])
                for (t[2] = 0; t[2] < A; ++t[2]) {
                    auto t2 = table({t[0], t[1], t[2]}, 2);
                    auto t1_12 = table({t[0], t[1]}, 1);
                    auto t1_23 = table({t[1], t[2]}, 1);
                    auto t1_13 = table({t[0], t[2]}, 1);
                    for (int x1 = 0; x1 < n; ++x1)
                        for (int x2 = 0; x2 < n; ++x2) {
                            ++report.checked;
                            Mask bad = 0;
                            Mask inner = t1_12[x1];
                            while (inner) {
                                int y = std::countr_zero(inner);
                                inner &= inner - 1;
                                bad ^= t2[(std::size_t)y * n + x2];
                            }
                            inner = t1_23[x2];
                            while (inner) {
                                int y = std::countr_zero(inner);
                                inner &= inner - 1;
                                bad ^= t2[(std::size_t)x1 * n + y];
                            }
                            bad ^= apply1(t1_13, t2[(std::size_t)x1 * n + x2]);
                            if (bad) add_violation(2, t, {x1, x2}, bad);
                        }
                }
    }

    // Arity 3: pentagon-type identity among mu_1, mu_2, mu_3.
    if (max_arity >= 3) {
        std::vector<int> t(4);
        for (t[0] = 0; t[0] < A; ++t[0])
            for (t[1] = 0; t[1] < A; ++t[1])
                for (t[2] = 0; t[2] < A; ++t[2])
                    for (t[3] = 0; t[3] < A; ++t[3]) {
                        auto t3 = table({t[0], t[1], t[2], t[3]}, 3);
                        auto t2_123 = table({t[0], t[1], t[2]}, 2);
                        auto t2_234 = table({t[1], t[2], t[3]}, 2);
                        auto t2_124 = table({t[0], t[1], t[3]}, 2);
                        auto t2_134 = table({t[0], t[2], t[3]}, 2);
                        auto t1_12 = table({t[0], t[1]}, 1);
                        auto t1_23 = table({t[1], t[2]}, 1);
                        auto t1_34 = table({t[2], t[3]}, 1);
                        auto t1_14 = table({t[0], t[3]}, 1);
                        auto at3 = [&](int a, int b, int c) {
                            return t3[((std::size_t)a * n + b) * n + c];
                        };
                        for (int x1 = 0; x1 < n; ++x1)
                            for (int x2 = 0; x2 < n; ++x2)
                                for (int x3 = 0; x3 < n; ++x3) {
                                    ++report.checked;
                                    Mask bad = 0;
                                    Mask in = t1_12[x1];
                                    while (in) {
                                        int y = std::countr_zero(in);
                                        in &= in - 1;
                                        bad ^= at3(y, x2, x3);
                                    }
                                    in = t1_23[x2];
                                    while (in) {
                                        int y = std::countr_zero(in);
                                        in &= in - 1;
                                        bad ^= at3(x1, y, x3);
                                    }
                                    in = t1_34[x3];
                                    while (in) {
                                        int y = std::countr_zero(in);
                                        in &= in - 1;
                                        bad ^= at3(x1, x2, y);
                                    }
                                    in = t2_123[(std::size_t)x1 * n + x2];
                                    while (in) {
                                        int y = std::countr_zero(in);
                                        in &= in - 1;
                                        bad ^= t2_134[(std::size_t)y * n + x3];
                                    }
                                    in = t2_234[(std::size_t)x2 * n + x3];
                                    while (in) {
                                        int y = std::countr_zero(in);
                                        in &= in - 1;
                                        bad ^= t2_124[(std::size_t)x1 * n + y];
                                    }
                                    bad ^= apply1(t1_14, at3(x1, x2, x3));
                                    if (bad) add_violation(3, t, {x1, x2, x3}, bad);
                                }
                    }
    }

    return report;
}

}  // namespace augres
