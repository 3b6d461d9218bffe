#include "augres/dga.hpp"

namespace augres {

AlgebraReport check_d_squared(const Dga& dga) {
    AlgebraReport report;
    for (const auto& g : dga.generators) {
        Poly dd = dga.d_poly(dga.d_of(g));
        if (!dd.is_zero()) report.violations.push_back({g, dd});
    }
    return report;
}

AlgebraReport verify_chain_map(const DgaMap& f) {
    AlgebraReport report;
    for (const auto& g : f.source->generators) {
        Poly lhs = f.apply_poly(f.source->d_of(g));
        Poly rhs = f.target->d_poly(f.of(g));
        Poly residual = lhs.plus(rhs);
        if (!residual.is_zero()) report.violations.push_back({g, residual});
    }
    return report;
}

AlgebraReport check_degrees(const Dga& dga) {
    AlgebraReport report;
    for (const auto& g : dga.generators) {
        Poly bad;
        for (const auto& w : dga.d_of(g).monomials)
            if (w.degree() != g.degree() - 1)
                bad.monomials.push_back(w);
        if (!bad.monomials.empty()) report.violations.push_back({g, bad});
    }
    return report;
}

AlgebraReport check_map_degrees(const DgaMap& f) {
    AlgebraReport report;
    for (const auto& g : f.source->generators) {
        Poly bad;
        for (const auto& w : f.of(g).monomials)
            if (w.degree() != g.degree()) bad.monomials.push_back(w);
        if (!bad.monomials.empty()) report.violations.push_back({g, bad});
    }
    return report;
}

}  // namespace augres
