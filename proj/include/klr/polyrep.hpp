#pragma once

// The faithful polynomial representation: each sequence i of weight nu
// carries a polynomial ring K[x_1..x_n, y_1..y_n], and the generators act by
// the five-case rule (swap / two divided-difference operators / arrow
// multiplication).  The relation-verification harness below is the
// ground-truth oracle for the normal-form algebra.

#include "klr/datum.hpp"
#include "klr/multipoly.hpp"
#include "klr/wordcomb.hpp"

#include <string>
#include <vector>

namespace klr {

// Element of P_nu: finitely supported map from sequences to polynomials.
// All supported sequences must share one weight.
class PolyVector {
public:
    PolyVector() = default;
    static PolyVector ofComponent(const Seq& seq, const MultiPoly& p);

    bool isZero() const { return comps_.empty(); }
    const std::map<Seq, MultiPoly>& components() const { return comps_; }
    MultiPoly component(const Seq& seq) const;

    PolyVector operator+(const PolyVector& o) const;
    PolyVector operator-(const PolyVector& o) const;
    PolyVector scaled(const Rat& c) const;
    bool operator==(const PolyVector& o) const { return comps_ == o.comps_; }
    bool operator!=(const PolyVector& o) const { return !(*this == o); }

    void addComponent(const Seq& seq, const MultiPoly& p);

private:
    std::map<Seq, MultiPoly> comps_;
};

class PolyRep {
public:
    explicit PolyRep(const BorcherdsCartanDatum& datum) : datum_(&datum) {}

    const BorcherdsCartanDatum& datum() const { return *datum_; }

    // Projection onto the i-component.
    PolyVector actIdempotent(const Seq& seq, const PolyVector& v) const;
    // x_{k,i}: multiplies the i-component by x_k, kills the others (1-based k).
    PolyVector actDot(int k, const Seq& seq, const PolyVector& v) const;
    // tau_{k,i}: the five-case operator; output lives on s_k(i) (equal-label
    // cases keep the component).
    PolyVector actCrossing(int k, const Seq& seq, const PolyVector& v) const;

    // Single-component core used by the operator builders above.
    std::pair<Seq, MultiPoly> crossingOnComponent(int k, const Seq& seq,
                                                  const MultiPoly& f) const;

private:
    const BorcherdsCartanDatum* datum_;
};

struct RelationCheck {
    std::string relation; // "(1)".."(6)", "isotopy"
    Seq seq;
    int position; // 1-based k
    bool pass;
    std::string counterexample; // offending monomial, empty when passing
};

struct RelationReport {
    std::vector<RelationCheck> checks;
    bool allPass = true;
    long instancesChecked = 0;

    const RelationCheck* firstFailure() const;
};

// Verifies every defining relation instance of R(nu) as an exact operator
// identity on all monomials of total degree <= testDegree, for every
// sequence and position.  Guard: ht(nu) <= 6.
RelationReport verify_relations(const BorcherdsCartanDatum& datum, const Weight& nu,
                                int testDegree);

// The braid-defect polynomial: the multiplication operator equal to
// tau_k tau_{k+1} tau_k - tau_{k+1} tau_k tau_{k+1} on the (i j i) pattern
// with real i and i.j != 0; zero in every other pattern.
MultiPoly braidCorrection(const BorcherdsCartanDatum& datum, const Seq& seq, int k);

} // namespace klr
