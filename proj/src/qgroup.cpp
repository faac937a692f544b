#include "klr/qgroup.hpp"

#include <sstream>

namespace klr {

QSeries PairingValue::expand(long cap) const {
    if (num.isZero()) return QSeries::zero(cap);
    long headroom = std::max(0L, -num.minExponent());
    long capExt = cap + headroom;
    QSeries s = QSeries::one(capExt);
    for (auto [e, mult] : denom)
        for (int t = 0; t < mult; t++) s = s * geom_inverse(e, capExt);
    s = s * num;
    QSeries trimmed(s.floorExp(), cap);
    for (const auto& [e, c] : s.coeffs())
        if (e <= cap) trimmed.addTerm(e, c);
    return trimmed;
}

std::string PairingValue::str() const {
    if (num.isZero()) return "0";
    std::ostringstream out;
    out << "(" << num.str() << ")";
    for (auto [e, mult] : denom) {
        out << " / (1-q^" << e << ")";
        if (mult > 1) out << "^" << mult;
    }
    return out.str();
}

PairingValue PairingValue::operator+(const PairingValue& o) const {
    if (num.isZero()) return o;
    if (o.num.isZero()) return *this;
    // common denominator: multiset max per factor
    PairingValue r;
    for (auto [e, m] : denom) r.denom[e] = m;
    for (auto [e, m] : o.denom) r.denom[e] = std::max(r.denom[e], m);
    LaurentPoly left = num, right = o.num;
    for (auto [e, m] : r.denom) {
        auto itL = denom.find(e);
        auto itR = o.denom.find(e);
        int needL = m - (itL == denom.end() ? 0 : itL->second);
        int needR = m - (itR == o.denom.end() ? 0 : itR->second);
        LaurentPoly factor = LaurentPoly(Int(1)) - LaurentPoly::q(e);
        for (int t = 0; t < needL; t++) left *= factor;
        for (int t = 0; t < needR; t++) right *= factor;
    }
    r.num = left + right;
    if (r.num.isZero()) r.denom.clear();
    return r;
}

PairingValue PairingValue::operator*(const PairingValue& o) const {
    PairingValue r;
    r.num = num * o.num;
    if (r.num.isZero()) return PairingValue::zero();
    r.denom = denom;
    for (auto [e, m] : o.denom) r.denom[e] += m;
    return r;
}

PairingValue PairingValue::scaledBy(const LaurentPoly& p) const {
    PairingValue r;
    r.num = num * p;
    if (r.num.isZero()) return PairingValue::zero();
    r.denom = denom;
    return r;
}

PairingValue PairingValue::shifted(long e) const { return scaledBy(LaurentPoly::q(e)); }

void FreeQElement::add(const Seq& word, const LaurentPoly& coeff) {
    if (coeff.isZero()) return;
    auto it = terms_.find(word);
    if (it == terms_.end()) {
        terms_[word] = coeff;
    } else {
        it->second += coeff;
        if (it->second.isZero()) terms_.erase(it);
    }
}

FreeQElement FreeQElement::operator+(const FreeQElement& o) const {
    FreeQElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add(w, c);
    return r;
}

FreeQElement FreeQElement::operator-(const FreeQElement& o) const {
    FreeQElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add(w, -c);
    return r;
}

FreeQElement FreeQElement::operator*(const FreeQElement& o) const {
    FreeQElement r;
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) r.add(seqConcat(w1, w2), c1 * c2);
    return r;
}

std::vector<QGroup::RhoTerm> QGroup::rhoExpand(const Seq& word) const {
    const int n = static_cast<int>(word.size());
    std::vector<RhoTerm> out;
    for (unsigned mask = 0; mask < (1u << n); mask++) {
        RhoTerm term;
        long twist = 0;
        for (int p = 0; p < n; p++) {
            if (mask & (1u << p)) {
                // letter p goes to the left slot; it crosses every earlier
                // right-slot letter
                for (int q = 0; q < p; q++)
                    if (!(mask & (1u << q))) twist -= datum_->bilinear(word[q], word[p]);
                term.left.push_back(word[p]);
            } else {
                term.right.push_back(word[p]);
            }
        }
        term.coeff = LaurentPoly::q(twist);
        out.push_back(std::move(term));
    }
    return out;
}

PairingValue QGroup::pairWords(const Seq& x, const Seq& y) {
    if (Weight::ofSequence(x) != Weight::ofSequence(y)) return PairingValue::zero();
    if (x.empty()) return PairingValue::one();
    auto key = std::make_pair(x, y);
    {
        std::lock_guard<std::mutex> lock(memoMutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }

    // Peel the first letter j of y: {x, f_j y'} = {rho(x), f_j (x) y'}; the
    // only splits pairing nontrivially against f_j put a single j-letter of
    // x on the left, with twist q^{-sum_{p'<p} x_{p'} . j}.
    const int j = y[0];
    Seq yRest(y.begin() + 1, y.end());
    PairingValue total = PairingValue::zero();
    long twist = 0;
    for (size_t p = 0; p < x.size(); p++) {
        if (x[p] == j) {
            Seq xRest = x;
            xRest.erase(xRest.begin() + p);
            PairingValue sub = pairWords(xRest, yRest);
            if (!sub.isZero()) {
                PairingValue contrib = sub.shifted(twist);
                contrib.denom[2L * datum_->r(j)] += 1; // {f_j, f_j} = (1 - q_j^2)^{-1}
                total = total + contrib;
            }
        }
        twist -= datum_->bilinear(x[p], j);
    }
    std::lock_guard<std::mutex> lock(memoMutex_);
    memo_.emplace(key, total);
    return total;
}

QSeries QGroup::pairSeries(const Seq& x, const Seq& y, long cap) {
    return pairWords(x, y).expand(cap);
}

QSeries QGroup::pairElements(const FreeQElement& x, const FreeQElement& y, long cap) {
    PairingValue total = PairingValue::zero();
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms())
            total = total + pairWords(wx, wy).scaledBy(cx * cy);
    return total.expand(cap);
}

std::vector<QGroup::SerreTerm> QGroup::serreElement(int i, int j) const {
    if (!datum_->isReal(i)) throw RealIndexError("serreElement requires a real first index");
    if (i == j) throw BadPair("serreElement requires i != j");
    long m = 1 - datum_->a(i, j);
    std::vector<SerreTerm> out;
    for (long r = 0; r <= m; r++) {
        long s = m - r;
        SerreTerm term;
        for (long t = 0; t < r; t++) term.word.push_back(i);
        term.word.push_back(j);
        for (long t = 0; t < s; t++) term.word.push_back(i);
        term.sign = (r % 2 == 0) ? 1 : -1;
        term.denom = quantum_factorial(r, datum_->r(i)) * quantum_factorial(s, datum_->r(i));
        out.push_back(std::move(term));
    }
    return out;
}

QSeries QGroup::pairSerreWithWord(const std::vector<SerreTerm>& serre, const Seq& pre,
                                  const Seq& post, const Seq& w, long cap) {
    // Divided-power scalars divide the pairing series at the end; extend the
    // cap so the certified result still covers `cap`.
    long headroom = 0;
    for (const auto& t : serre) headroom = std::max(headroom, t.denom.maxExponent());
    long capExt = cap + headroom;
    QSeries total = QSeries::zero(cap);
    bool first = true;
    for (const auto& t : serre) {
        Seq word = seqConcat(seqConcat(pre, t.word), post);
        QSeries value = pairWords(word, w).expand(capExt);
        QSeries divided = series_div_exact(value, t.denom).scaled(Int(t.sign));
        total = first ? divided : total + divided;
        first = false;
    }
    return total;
}

bool QGroup::matchPairingWithGdim(const Seq& i, const Seq& j, KlrAlgebra& algebra, long cap) {
    if (Weight::ofSequence(i) != Weight::ofSequence(j))
        throw WeightMismatch("matchPairingWithGdim: weights differ");
    QSeries quantumSide = pairSeries(i, j, cap);
    QSeries algebraSide = algebra.gdimCorner(j, i, cap);
    return quantumSide.equalUpToCommonCap(algebraSide).has_value();
}

bool QGroup::commutationCheck(int i, int j, long cap) {
    if (datum_->bilinear(i, j) != 0)
        throw BadPair("commutationCheck requires i.j = 0");
    Seq ij{i, j}, ji{j, i};
    Weight nu = Weight::ofSequence(ij);
    for (const Seq& w : nu.sequences()) {
        QSeries a = pairSeries(ij, w, cap);
        QSeries b = pairSeries(ji, w, cap);
        if (!a.equalUpToCommonCap(b).has_value()) return false;
    }
    return true;
}

} // namespace klr
