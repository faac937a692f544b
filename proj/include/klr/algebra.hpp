#pragma once

// The quiver Hecke algebra R(nu) in its normal-form basis: every element of
// a corner 1_j R(nu) 1_i is a linear combination of w-hat . x^r, a fixed
// (lex-min) reduced word per transporting permutation followed by a dot
// monomial at the source positions.  Multiplication straightens products
// back into this basis one generator at a time; the local rewriting steps
// are memoized per (generator, permutation, source sequence).

#include "klr/datum.hpp"
#include "klr/polyrep.hpp"
#include "klr/qarith.hpp"
#include "klr/wordcomb.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace klr {

struct PositionOutOfRange : std::out_of_range {
    explicit PositionOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

// Normal-form basis element of a fixed corner: transporting permutation w
// (acting on the source sequence) and dot exponents indexed by source
// position.  target = w(source); degree = crossing degree + sum 2 r dots.
struct BasisElem {
    Permutation w;
    std::vector<int> dots;

    bool operator<(const BasisElem& o) const {
        if (w != o.w) return w < o.w;
        return dots < o.dots;
    }
    bool operator==(const BasisElem& o) const { return w == o.w && dots == o.dots; }
};

class AlgebraElement {
public:
    AlgebraElement() = default; // zero with no corner
    AlgebraElement(Seq source, Seq target) : source_(std::move(source)), target_(std::move(target)) {}

    bool isZero() const { return terms_.empty(); }
    bool hasCorner() const { return !source_.empty() || !target_.empty(); }
    const Seq& source() const { return source_; }
    const Seq& target() const { return target_; }
    const std::map<BasisElem, Rat>& terms() const { return terms_; }

    void addTerm(const BasisElem& b, const Rat& c);
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement scaled(const Rat& c) const;
    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

private:
    Seq source_, target_;
    std::map<BasisElem, Rat> terms_;
};

class KlrAlgebra {
public:
    explicit KlrAlgebra(const BorcherdsCartanDatum& datum) : datum_(&datum), rep_(datum) {}

    const BorcherdsCartanDatum& datum() const { return *datum_; }

    // Generators (normal-form elements).
    AlgebraElement idempotent(const Seq& src) const;
    AlgebraElement dot(int k, const Seq& src) const;      // 1 <= k <= n
    AlgebraElement crossing(int k, const Seq& src) const; // 1 <= k <= n-1
    AlgebraElement basisElement(const Seq& src, const Permutation& w,
                                const std::vector<int>& dots) const;

    long degreeOf(const BasisElem& b, const Seq& src) const;
    bool isHomogeneous(const AlgebraElement& a, long* degreeOut = nullptr) const;

    // Normal-form product; zero when the corners do not match.
    AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);

    // Anti-involution flipping diagrams about the horizontal axis:
    // psi(ab) = psi(b) psi(a), psi^2 = id, degree preserved.
    AlgebraElement psi(const AlgebraElement& a);

    // Faithful action on the polynomial module; satisfies
    // act(mul(a,b), v) = act(a, act(b, v)).
    PolyVector actOnPolyrep(const AlgebraElement& a, const PolyVector& v) const;

    // Evaluate an arbitrary word (letters 1..n-1, applied topmost-first) with
    // bottom dots into normal form.
    AlgebraElement evalWord(const Word& word, const Seq& src, const std::vector<int>& dots);

    // gdim of 1_j R(nu) 1_i truncated at cap.
    QSeries gdimCorner(const Seq& i, const Seq& j, long cap) const;

    // gdim Z(R(nu)): the closed product formula, truncated.
    QSeries gdimCenter(const Weight& nu, long cap) const;

    // Divided-power idempotent 1_i for i in Seqd(nu); idempotency verified
    // at construction.
    AlgebraElement dividedIdempotent(const DividedSequence& shape);

    // gdim of 1_shape R(nu) 1_j via the quantum-factorial division identity.
    QSeries gdimDividedCorner(const DividedSequence& shape, const Seq& j, long cap);

    // True iff the diagonal element assembled from `sym` commutes with every
    // generator.  `sym` maps each index to a polynomial in its block of dot
    // variables, given as exponent-vector -> coefficient.
    bool centerCheck(const std::map<int, std::map<std::vector<int>, Rat>>& sym,
                     const Weight& nu);

    // Basis elements of the corner 1_target R 1_src in a fixed degree.
    std::vector<BasisElem> cornerBasisOfDegree(const Seq& src, const Seq& target, long degree) const;

    // Graded dimension of left multiplication image e . (1_that R 1_src),
    // computed degree by degree as an exact matrix rank (oracle for
    // gdimDividedCorner).
    QSeries gdimLeftIdempotentTruncation(const AlgebraElement& e, const Seq& src, long cap);

    // Graded dimension of the centralizer of R(nu) for nu = n.i (single
    // sequence), computed by exact linear algebra per degree (oracle for
    // gdimCenter).
    QSeries gdimCentralizerOracle(const Seq& seq, long cap);

    std::string elementStr(const AlgebraElement& a) const;

    // A straightening step rewrites (generator . w-hat x^r) as a linear
    // combination of basis terms whose dot vectors are r plus a delta that
    // does not depend on r; memoized per (generator, w, source).
    struct SymTerm {
        Int coef;
        Permutation w;
        std::vector<int> delta;
    };
    using SymElement = std::vector<SymTerm>;

private:
    const BorcherdsCartanDatum* datum_;
    PolyRep rep_;

    using MemoKey = std::tuple<int, std::vector<int>, Seq>;

    mutable std::mutex memoMutex_;
    std::map<MemoKey, SymElement> crossMemo_;
    std::map<MemoKey, SymElement> dotMemo_;
    mutable std::map<std::vector<int>, Word> wordMemo_;

    const Word& canonicalWord(const Permutation& w) const;
    int minLeftDescent(const Permutation& w) const; // 0 when identity

    SymElement leftCrossing(int k, const Permutation& w, const Seq& src);
    SymElement leftDot(int t, const Permutation& w, const Seq& src);

    using TermMap = std::map<BasisElem, Rat>;
    TermMap applyLeftCrossing(int k, const TermMap& terms, const Seq& src);
    TermMap applyLeftDot(int t, const TermMap& terms, const Seq& src);
    // Left-multiplies by a polynomial in top dots at `positions` (1-based).
    TermMap applyTopDotPoly(const std::vector<std::pair<int, int>>& posExps, const TermMap& terms,
                            const Seq& src);

    SymElement composeCrossing(int k, const SymElement& s, const Seq& src);
    SymElement composeDot(int t, const SymElement& s, const Seq& src);
};

} // namespace klr
