#pragma once

// The quantum-group side of the dual oracle: words in the free algebra on
// the f_i, the twisted coproduct rho, and the bilinear form { , } computed
// by the peeling recursion from its defining properties.  Pairing values are
// exact rational functions of q (Laurent numerator over a product of
// (1 - q^E) factors) expanded into truncated series on demand.

#include "klr/algebra.hpp"
#include "klr/datum.hpp"
#include "klr/qarith.hpp"
#include "klr/wordcomb.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace klr {

struct BadPair : std::runtime_error {
    explicit BadPair(const std::string& what) : std::runtime_error(what) {}
};

// Exact value num / prod_E (1 - q^E)^{mult(E)}.
struct PairingValue {
    LaurentPoly num;
    std::map<long, int> denom; // exponent E -> multiplicity

    bool isZero() const { return num.isZero(); }
    QSeries expand(long cap) const;
    std::string str() const;

    static PairingValue zero() { return {}; }
    static PairingValue one() { return {LaurentPoly(Int(1)), {}}; }

    PairingValue operator+(const PairingValue& o) const;
    PairingValue operator*(const PairingValue& o) const;
    PairingValue scaledBy(const LaurentPoly& p) const;
    PairingValue shifted(long e) const;
};

// Element of the free algebra on the f_i: finite Laurent-polynomial
// combination of words, homogeneous per weight component.
class FreeQElement {
public:
    FreeQElement() = default;
    static FreeQElement ofWord(const Seq& word) {
        FreeQElement e;
        e.add(word, LaurentPoly(Int(1)));
        return e;
    }

    void add(const Seq& word, const LaurentPoly& coeff);
    const std::map<Seq, LaurentPoly>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    FreeQElement operator+(const FreeQElement& o) const;
    FreeQElement operator-(const FreeQElement& o) const;
    FreeQElement operator*(const FreeQElement& o) const; // concatenation product

private:
    std::map<Seq, LaurentPoly> terms_;
};

class QGroup {
public:
    explicit QGroup(const BorcherdsCartanDatum& datum) : datum_(&datum) {}

    const BorcherdsCartanDatum& datum() const { return *datum_; }

    struct RhoTerm {
        Seq left, right;
        LaurentPoly coeff;
    };

    // Full expansion of rho(f_{i_1} ... f_{i_n}): 2^n split terms, the
    // coefficient of a split being q^{-sum of i_p . i_q over crossed pairs
    // (p on the right, q on the left, p < q)}.
    std::vector<RhoTerm> rhoExpand(const Seq& word) const;

    // { f_x, f_y } as an exact rational function (memoized recursion).
    PairingValue pairWords(const Seq& x, const Seq& y);
    QSeries pairSeries(const Seq& x, const Seq& y, long cap);

    // Bilinear extension to free-algebra elements, truncated at cap.
    QSeries pairElements(const FreeQElement& x, const FreeQElement& y, long cap);

    // Quantum Serre element sum_{r+s=m} (-1)^r f_i^{(r)} f_j f_i^{(s)} with
    // m = 1 - a_ij; divided powers carried as explicit quantum-factorial
    // scalar denominators.
    struct SerreTerm {
        Seq word;
        int sign;
        LaurentPoly denom; // [r]_i! [s]_i!
    };
    std::vector<SerreTerm> serreElement(int i, int j) const;

    // { serre(i,j) . pre suffixed by post, w }: prepend/append plain words to
    // every Serre term and pair against w; exact series to the deducible cap.
    QSeries pairSerreWithWord(const std::vector<SerreTerm>& serre, const Seq& pre,
                              const Seq& post, const Seq& w, long cap);

    // Dual-oracle identity: pair(f_i-word, f_j-word) equals the graded
    // dimension of the corresponding corner, both to cap.
    bool matchPairingWithGdim(const Seq& i, const Seq& j, KlrAlgebra& algebra, long cap);

    // For i.j = 0: { f_i f_j - f_j f_i, w } = 0 for every word w of the
    // weight, to cap.
    bool commutationCheck(int i, int j, long cap);

private:
    const BorcherdsCartanDatum* datum_;
    std::mutex memoMutex_;
    std::map<std::pair<Seq, Seq>, PairingValue> memo_;
};

} // namespace klr
