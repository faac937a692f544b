#include "klr/polyrep.hpp"

#include <sstream>

namespace klr {

PolyVector PolyVector::ofComponent(const Seq& seq, const MultiPoly& p) {
    PolyVector v;
    v.addComponent(seq, p);
    return v;
}

MultiPoly PolyVector::component(const Seq& seq) const {
    auto it = comps_.find(seq);
    return it == comps_.end() ? MultiPoly() : it->second;
}

void PolyVector::addComponent(const Seq& seq, const MultiPoly& p) {
    if (p.isZero()) return;
    if (!comps_.empty()) {
        if (Weight::ofSequence(comps_.begin()->first) != Weight::ofSequence(seq))
            throw WeightMismatch("PolyVector components must share one weight");
    }
    auto it = comps_.find(seq);
    if (it == comps_.end()) {
        comps_[seq] = p;
    } else {
        it->second += p;
        if (it->second.isZero()) comps_.erase(it);
    }
}

PolyVector PolyVector::operator+(const PolyVector& o) const {
    PolyVector r = *this;
    for (const auto& [seq, p] : o.comps_) r.addComponent(seq, p);
    return r;
}

PolyVector PolyVector::operator-(const PolyVector& o) const {
    PolyVector r = *this;
    for (const auto& [seq, p] : o.comps_) r.addComponent(seq, -p);
    return r;
}

PolyVector PolyVector::scaled(const Rat& c) const {
    PolyVector r;
    for (const auto& [seq, p] : comps_) r.addComponent(seq, p.scaled(c));
    return r;
}

PolyVector PolyRep::actIdempotent(const Seq& seq, const PolyVector& v) const {
    PolyVector out;
    auto p = v.component(seq);
    if (!p.isZero()) out.addComponent(seq, p);
    return out;
}

PolyVector PolyRep::actDot(int k, const Seq& seq, const PolyVector& v) const {
    const int n = static_cast<int>(seq.size());
    if (k < 1 || k > n) throw std::out_of_range("dot position out of range");
    PolyVector out;
    MultiPoly f = v.component(seq);
    if (f.isZero()) return out;
    out.addComponent(seq, f * MultiPoly::variable(n, k - 1));
    return out;
}

std::pair<Seq, MultiPoly> PolyRep::crossingOnComponent(int k, const Seq& seq,
                                                       const MultiPoly& f) const {
    const int n = static_cast<int>(seq.size());
    if (k < 1 || k >= n) throw std::out_of_range("crossing position out of range");
    const int xk = k - 1, xk1 = k;         // variable ids of x_k, x_{k+1}
    const int yk = n + k - 1, yk1 = n + k; // variable ids of y_k, y_{k+1}
    const int i = seq[k - 1], j = seq[k];

    Seq swapped = seq;
    std::swap(swapped[k - 1], swapped[k]);

    if (i == j) {
        if (datum_->isReal(i)) {
            // (f - s~f)/(x_k - x_{k+1}), s~ swaps the x's only.
            MultiPoly num = f - f.swapVars(xk, xk1);
            return {seq, num.divideByVarDiff(xk, xk1)};
        }
        // (s~f - sf)/(y_k - y_{k+1}), s swaps x's and y's simultaneously.
        MultiPoly sTilde = f.swapVars(xk, xk1);
        MultiPoly s = sTilde.swapVars(yk, yk1);
        return {seq, (sTilde - s).divideByVarDiff(yk, yk1)};
    }

    MultiPoly sf = f.swapVars(xk, xk1).swapVars(yk, yk1);
    if (datum_->bilinear(i, j) == 0) return {swapped, sf};

    if (datum_->hasArrow(i, j)) {
        // i_k -> i_{k+1}: multiply by x_k^{-a_ji} + x_{k+1}^{-a_ij} after the swap.
        MultiPoly factor = MultiPoly::variable(n, xk, static_cast<int>(-datum_->a(j, i))) +
                           MultiPoly::variable(n, xk1, static_cast<int>(-datum_->a(i, j)));
        return {swapped, factor * sf};
    }
    // i_k <- i_{k+1}: plain swap.
    return {swapped, sf};
}

PolyVector PolyRep::actCrossing(int k, const Seq& seq, const PolyVector& v) const {
    PolyVector out;
    MultiPoly f = v.component(seq);
    if (f.isZero()) return out;
    auto [outSeq, outPoly] = crossingOnComponent(k, seq, f);
    if (!outPoly.isZero()) out.addComponent(outSeq, outPoly);
    return out;
}

MultiPoly braidCorrection(const BorcherdsCartanDatum& datum, const Seq& seq, int k) {
    const int n = static_cast<int>(seq.size());
    const int i = seq[k - 1], jmid = seq[k], i2 = seq[k + 1];
    MultiPoly corr;
    if (i == i2 && i != jmid && datum.isReal(i) && datum.bilinear(i, jmid) != 0) {
        long bound = -datum.a(i, jmid) - 1; // a + b = -a_ij - 1
        for (long a = 0; a <= bound; a++) {
            Mono m(2 * n, 0);
            m[k - 1] = static_cast<int>(a);
            m[k + 1] = static_cast<int>(bound - a);
            corr.addTerm(m, Rat(1));
        }
    }
    return corr;
}

const RelationCheck* RelationReport::firstFailure() const {
    for (const auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

namespace {

struct Harness {
    const BorcherdsCartanDatum& datum;
    PolyRep rep;
    RelationReport& report;
    int testDegree;

    Harness(const BorcherdsCartanDatum& d, RelationReport& r, int deg)
        : datum(d), rep(d), report(r), testDegree(deg) {}

    void record(const std::string& relation, const Seq& seq, int k, bool pass,
                const std::string& counterexample) {
        report.checks.push_back({relation, seq, k, pass, counterexample});
        report.instancesChecked++;
        if (!pass) report.allPass = false;
    }

    // Compares two operators on every monomial of P_i up to the test degree.
    template <typename OpL, typename OpR>
    void checkOperators(const std::string& relation, const Seq& seq, int k, OpL&& lhs,
                        OpR&& rhs) {
        const int n = static_cast<int>(seq.size());
        for (const Mono& m : monomialsUpToDegree(2 * n, testDegree)) {
            PolyVector f = PolyVector::ofComponent(seq, MultiPoly::ofMono(m, Rat(1)));
            PolyVector l = lhs(f);
            PolyVector r = rhs(f);
            if (l != r) {
                record(relation, seq, k, false,
                       "monomial " + MultiPoly::ofMono(m, Rat(1)).str(n));
                return;
            }
        }
        record(relation, seq, k, true, "");
    }

    void checkDoubleCrossing(const Seq& seq, int k) {
        const int n = static_cast<int>(seq.size());
        const int i = seq[k - 1], j = seq[k];
        Seq swapped = seq;
        std::swap(swapped[k - 1], swapped[k]);
        auto lhs = [&](const PolyVector& f) {
            return rep.actCrossing(k, swapped, rep.actCrossing(k, seq, f));
        };
        auto rhs = [&](const PolyVector& f) -> PolyVector {
            if (i == j) return PolyVector();
            if (datum.bilinear(i, j) == 0) return f;
            MultiPoly dots = MultiPoly::variable(n, k - 1, static_cast<int>(-datum.a(i, j))) +
                             MultiPoly::variable(n, k, static_cast<int>(-datum.a(j, i)));
            return PolyVector::ofComponent(seq, dots * f.component(seq));
        };
        checkOperators("(1)", seq, k, lhs, rhs);
    }

    // tau_k x_k - x_{k+1} tau_k = delta . 1  and  x_k tau_k - tau_k x_{k+1} = delta . 1,
    // with delta = 1 exactly on equal real labels (relations (2)-(4)).
    void checkDotSlide(const Seq& seq, int k) {
        const int i = seq[k - 1], j = seq[k];
        Seq swapped = seq;
        std::swap(swapped[k - 1], swapped[k]);
        const bool delta = (i == j && datum.isReal(i));
        std::string name = delta ? "(2)" : (i == j ? "(3)" : "(4)");

        auto lhs1 = [&](const PolyVector& f) {
            return rep.actCrossing(k, seq, rep.actDot(k, seq, f));
        };
        auto rhs1 = [&](const PolyVector& f) {
            PolyVector r = rep.actDot(k + 1, swapped, rep.actCrossing(k, seq, f));
            if (delta) r = r + f;
            return r;
        };
        checkOperators(name, seq, k, lhs1, rhs1);

        auto lhs2 = [&](const PolyVector& f) {
            return rep.actDot(k, swapped, rep.actCrossing(k, seq, f));
        };
        auto rhs2 = [&](const PolyVector& f) {
            PolyVector r = rep.actCrossing(k, seq, rep.actDot(k + 1, seq, f));
            if (delta) r = r + f;
            return r;
        };
        checkOperators(name, seq, k, lhs2, rhs2);
    }

    void checkBraid(const Seq& seq, int k) {
        Seq s1 = seq, s2 = seq;
        std::swap(s1[k - 1], s1[k]); // s_k seq
        std::swap(s2[k], s2[k + 1]); // s_{k+1} seq
        Seq s12 = s1;
        std::swap(s12[k], s12[k + 1]); // s_{k+1} s_k seq
        Seq s21 = s2;
        std::swap(s21[k - 1], s21[k]); // s_k s_{k+1} seq

        MultiPoly corr = braidCorrection(datum, seq, k);
        std::string name = corr.isZero() ? "(6)" : "(5)";
        auto lhs = [&](const PolyVector& f) {
            return rep.actCrossing(k, s12, rep.actCrossing(k + 1, s1, rep.actCrossing(k, seq, f)));
        };
        auto rhs = [&](const PolyVector& f) {
            PolyVector r = rep.actCrossing(k + 1, s21,
                                           rep.actCrossing(k, s2, rep.actCrossing(k + 1, seq, f)));
            if (!corr.isZero())
                r = r + PolyVector::ofComponent(seq, corr * f.component(seq));
            return r;
        };
        checkOperators(name, seq, k, lhs, rhs);
    }

    void checkIsotopy(const Seq& seq, int k) {
        const int n = static_cast<int>(seq.size());
        Seq swapped = seq;
        std::swap(swapped[k - 1], swapped[k]);
        // Far dots commute with the crossing.
        for (int t = 1; t <= n; t++) {
            if (t == k || t == k + 1) continue;
            auto lhs = [&](const PolyVector& f) {
                return rep.actCrossing(k, seq, rep.actDot(t, seq, f));
            };
            auto rhs = [&](const PolyVector& f) {
                return rep.actDot(t, swapped, rep.actCrossing(k, seq, f));
            };
            checkOperators("isotopy", seq, k, lhs, rhs);
        }
        // Distant crossings commute.
        for (int t = k + 2; t < n; t++) {
            Seq tSwapped = seq;
            std::swap(tSwapped[t - 1], tSwapped[t]);
            auto lhs = [&](const PolyVector& f) {
                return rep.actCrossing(t, swapped, rep.actCrossing(k, seq, f));
            };
            auto rhs = [&](const PolyVector& f) {
                return rep.actCrossing(k, tSwapped, rep.actCrossing(t, seq, f));
            };
            checkOperators("isotopy", seq, k, lhs, rhs);
        }
    }
};

} // namespace

RelationReport verify_relations(const BorcherdsCartanDatum& datum, const Weight& nu,
                                int testDegree) {
    if (nu.ht() > 6)
        throw std::invalid_argument("verify_relations guard: ht(nu) <= 6");
    RelationReport report;
    Harness h(datum, report, testDegree);
    for (const Seq& seq : nu.sequences()) {
        const int n = static_cast<int>(seq.size());
        for (int k = 1; k < n; k++) {
            h.checkDoubleCrossing(seq, k);
            h.checkDotSlide(seq, k);
            h.checkIsotopy(seq, k);
        }
        for (int k = 1; k + 1 < n; k++) h.checkBraid(seq, k);
    }
    return report;
}

} // namespace klr
