#pragma once

#include "augres/braid.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace augres {

// A monomial in the free unital noncommutative algebra on generators.
// The empty word is the unit 1.
struct Word {
    std::vector<GeneratorId> letters;

    Word() = default;
    explicit Word(std::vector<GeneratorId> ls) : letters(std::move(ls)) {}

    bool is_unit() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    int degree() const {
        int d = 0;
        for (const auto& l : letters) d += l.degree();
        return d;
    }

    Word concat(const Word& other) const {
        Word out = *this;
        out.letters.insert(out.letters.end(), other.letters.begin(),
                           other.letters.end());
        return out;
    }

    auto operator<=>(const Word&) const = default;

    std::string str() const {
        if (letters.empty()) return "1";
        std::string out;
        for (std::size_t k = 0; k < letters.size(); ++k) {
            if (k) out += "*";
            out += letters[k].name();
        }
        return out;
    }
};

// A polynomial with Z/2 coefficients: a canonical (sorted, duplicate-free)
// set of words.  Duplicates cancel in pairs.
struct Poly {
    std::vector<Word> monomials;  // canonical form: sorted, no duplicates

    Poly() = default;
    static Poly zero() { return Poly{}; }
    static Poly unit() { return Poly::from_words({Word{}}); }
    static Poly from_word(Word w) { return Poly::from_words({std::move(w)}); }
    static Poly from_words(std::vector<Word> ws) {
        Poly p;
        p.monomials = std::move(ws);
        p.canonicalize();
        return p;
    }
    static Poly from_generator(GeneratorId g) {
        return from_word(Word{{g}});
    }

    bool is_zero() const { return monomials.empty(); }

    void canonicalize() {
        std::sort(monomials.begin(), monomials.end());
        // Z/2: pairs of equal words cancel.
        std::vector<Word> out;
        for (std::size_t k = 0; k < monomials.size();) {
            std::size_t run = k;
            while (run < monomials.size() && monomials[run] == monomials[k])
                ++run;
            if ((run - k) % 2) out.push_back(monomials[k]);
            k = run;
        }
        monomials = std::move(out);
    }

    Poly plus(const Poly& other) const {
        Poly out;
        out.monomials = monomials;
        out.monomials.insert(out.monomials.end(), other.monomials.begin(),
                             other.monomials.end());
        out.canonicalize();
        return out;
    }

    Poly times(const Poly& other) const {
        Poly out;
        for (const auto& a : monomials)
            for (const auto& b : other.monomials)
                out.monomials.push_back(a.concat(b));
        out.canonicalize();
        return out;
    }

    bool operator==(const Poly&) const = default;

    std::string str() const {
        if (monomials.empty()) return "0";
        std::string out;
        for (std::size_t k = 0; k < monomials.size(); ++k) {
            if (k) out += " + ";
            out += monomials[k].str();
        }
        return out;
    }
};

// Free unital noncommutative Z/2 DGA on an ordered list of generators.
struct Dga {
    std::vector<GeneratorId> generators;            // fixed order
    std::map<GeneratorId, Poly> differential;       // generator -> d(generator)

    bool has_generator(GeneratorId g) const {
        return differential.count(g) != 0;
    }
    const Poly& d_of(GeneratorId g) const { return differential.at(g); }

    std::vector<GeneratorId> generators_of_degree(int deg) const {
        std::vector<GeneratorId> out;
        for (const auto& g : generators)
            if (g.degree() == deg) out.push_back(g);
        return out;
    }

    // Extend the differential to a word by the Leibniz rule (Z/2: no signs),
    // then to polynomials additively.
    Poly d_word(const Word& w) const {
        Poly out;
        for (std::size_t k = 0; k < w.letters.size(); ++k) {
            Word prefix(std::vector<GeneratorId>(w.letters.begin(),
                                                 w.letters.begin() + k));
            Word suffix(std::vector<GeneratorId>(w.letters.begin() + k + 1,
                                                 w.letters.end()));
            Poly mid = d_of(w.letters[k]);
            out = out.plus(Poly::from_word(prefix).times(mid).times(
                Poly::from_word(suffix)));
        }
        return out;
    }
    Poly d_poly(const Poly& p) const {
        Poly out;
        for (const auto& w : p.monomials) out = out.plus(d_word(w));
        return out;
    }
};

// A map of DGAs determined by its action on generators, extended
// multiplicatively (unit goes to unit).
struct DgaMap {
    const Dga* source = nullptr;
    const Dga* target = nullptr;
    std::map<GeneratorId, Poly> action;  // source generator -> target poly

    const Poly& of(GeneratorId g) const { return action.at(g); }

    Poly apply_word(const Word& w) const {
        Poly out = Poly::unit();
        for (const auto& l : w.letters) out = out.times(action.at(l));
        return out;
    }
    Poly apply_poly(const Poly& p) const {
        Poly out;
        for (const auto& w : p.monomials) out = out.plus(apply_word(w));
        return out;
    }
};

// Soundness reports: a list of offending generators with residual values.
struct AlgebraReport {
    struct Entry {
        GeneratorId at;
        Poly residual;
    };
    std::vector<Entry> violations;
    bool ok() const { return violations.empty(); }
};

// Evaluates d(d(g)) for every generator; any nonzero residual is reported.
AlgebraReport check_d_squared(const Dga& dga);

// Checks f(dg) + d(f(g)) = 0 for every source generator.
AlgebraReport verify_chain_map(const DgaMap& f);

// Degree bookkeeping: every monomial of d(g) has degree |g| - 1, and every
// monomial of f(g) has degree |g|.
AlgebraReport check_degrees(const Dga& dga);
AlgebraReport check_map_degrees(const DgaMap& f);

}  // namespace augres
