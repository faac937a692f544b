#pragma once

// Concrete graded modules at desk scale: trivial irreducibles on imaginary
// indices, the induced module R_n (x)_{P_n} L and its submodule structure,
// induced products of trivials, characters, the quantum shuffle product of
// characters, the epsilon/delta tail calculus and the Mackey character
// identity.

#include "klr/algebra.hpp"
#include "klr/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace klr {

// Finite-dimensional graded module with exact rational action matrices.
// Every constructor verifies the defining relations as matrix identities
// and degree homogeneity before returning.
class FinModule {
public:
    FinModule(const BorcherdsCartanDatum& datum, std::vector<Seq> componentOf,
              std::vector<long> degrees, std::vector<RatMat> dotAction,
              std::vector<RatMat> crossAction);

    const BorcherdsCartanDatum& datum() const { return *datum_; }
    int dim() const { return static_cast<int>(componentOf_.size()); }
    int strands() const { return strands_; }
    const std::vector<Seq>& componentOf() const { return componentOf_; }
    const std::vector<long>& degrees() const { return degrees_; }
    const RatMat& dotMatrix(int t) const { return dotAction_[t - 1]; }       // 1-based
    const RatMat& crossMatrix(int k) const { return crossAction_[k - 1]; }   // 1-based
    RatMat projector(const Seq& seq) const;

    std::vector<RatMat> allActionMatrices() const; // projectors + dots + crossings

private:
    const BorcherdsCartanDatum* datum_;
    int strands_;
    std::vector<Seq> componentOf_;
    std::vector<long> degrees_;
    std::vector<RatMat> dotAction_;
    std::vector<RatMat> crossAction_;

    void verifyStructure() const;
};

// One-dimensional trivial module V(i^n), i imaginary: everything acts by 0.
FinModule trivialV(const BorcherdsCartanDatum& datum, int i, int n);

// R_n (x)_{P_n} L for imaginary i: n!-dimensional, basis tau_w (x) v.
FinModule lbar(KlrAlgebra& algebra, int i, int n, int guard = 5);

// Ind V(i^n) (x) V(i^m) for imaginary i: basis indexed by minimal coset
// representatives; actions derived by straightening in R((n+m)i).
FinModule inducedTrivials(KlrAlgebra& algebra, int i, int n, int m, int guard = 5);

// Exact submodule analysis via the matrix algebra generated by the action:
// radical by the trace form, socle as its annihilator, J.M for the head.
struct SubmoduleProbe {
    int dim = 0;
    Subspace socle{0};
    Subspace radicalSubmodule{0}; // J.M, the intersection of all maximals when head is simple
    int headDim = 0;
    bool headKilledByGenerators = false;
    bool uniqueMinimalCertified = false;
    bool uniqueMaximalCertified = false;
    std::vector<Subspace> minimalNonzero;
    std::vector<Subspace> maximalProper;
    std::vector<Subspace> generatedByBasisVectors;
};

SubmoduleProbe submoduleLatticeProbe(const FinModule& m, int guard = 30);

// Character: per-sequence graded dimension, exact Laurent polynomials.
class Character {
public:
    Character() = default;

    bool isZero() const { return entries_.empty(); }
    const std::map<Seq, LaurentPoly>& entries() const { return entries_; }
    LaurentPoly at(const Seq& seq) const;
    Weight weight() const; // weight of the support; empty weight when zero

    void add(const Seq& seq, const LaurentPoly& p);
    Character operator+(const Character& o) const;
    Character operator-(const Character& o) const;
    Character scaledBy(const LaurentPoly& p) const;
    bool operator==(const Character& o) const { return entries_ == o.entries_; }
    bool operator!=(const Character& o) const { return !(*this == o); }

    std::string str(const BorcherdsCartanDatum& datum) const;

private:
    std::map<Seq, LaurentPoly> entries_;
};

Character characterOf(const FinModule& m);
Character trivialVCharacter(const BorcherdsCartanDatum& datum, int i, int n);
// [n]_i! . (i^n) for real i (bar-symmetric normalization).
Character charVReal(const BorcherdsCartanDatum& datum, int i, int n);

// Quantum shuffle product: Ch(Ind M (x) N) as the degree-weighted shuffle.
Character induceCharacters(const Character& chM, const Character& chN,
                           const BorcherdsCartanDatum& datum);

// Largest n such that some supported sequence ends in i^n.
int epsilonI(const Character& ch, int i);

// Restrict to sequences ending in i^n and strip the tail.
Character deltaCharacter(const Character& ch, int i, int n);

// Shuffle multiplicity series of Res_{nu,nu'} P_k: per (i, j) the Laurent
// polynomial sum of q^{|u|} over shuffles u in Sh(i, j; k).
std::map<std::pair<Seq, Seq>, LaurentPoly> resProjectiveMultiplicity(
    const Seq& k, const Weight& nu, const Weight& nuPrime, const BorcherdsCartanDatum& datum);

// Character-level Mackey identity: Ch(Res_{nu,nu'} Ind_{mu,mu'} M (x) N)
// equals the lambda-sum of twisted induced restriction characters.  When
// twistUsed is supplied it reports whether a lambda with a nonzero grading
// twist contributed.
bool mackeyCharacterCheck(const Character& chM, const Weight& mu, const Character& chN,
                          const Weight& muPrime, const Weight& nu, const Weight& nuPrime,
                          const BorcherdsCartanDatum& datum, bool* twistUsed = nullptr);

} // namespace klr
