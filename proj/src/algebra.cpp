#include "klr/algebra.hpp"

#include "klr/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

namespace klr {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(std::string("straightening invariant violated: ") + msg);
}

} // namespace

void AlgebraElement::addTerm(const BasisElem& b, const Rat& c) {
    if (is_zero(c)) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
        Rat v = c;
        v.canonicalize();
        terms_[b] = v;
    } else {
        it->second += c;
        it->second.canonicalize();
        if (is_zero(it->second)) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    if (isZero()) return o;
    if (o.isZero()) return *this;
    if (source_ != o.source_ || target_ != o.target_)
        throw WeightMismatch("adding elements of different corners");
    AlgebraElement r = *this;
    for (const auto& [b, c] : o.terms_) r.addTerm(b, c);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    return *this + o.scaled(Rat(-1));
}

AlgebraElement AlgebraElement::scaled(const Rat& c) const {
    AlgebraElement r(source_, target_);
    if (is_zero(c)) return r;
    for (const auto& [b, a] : terms_) {
        Rat v = a * c;
        v.canonicalize();
        r.terms_[b] = v;
    }
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    if (isZero() && o.isZero()) return true;
    return source_ == o.source_ && target_ == o.target_ && terms_ == o.terms_;
}

AlgebraElement KlrAlgebra::idempotent(const Seq& src) const {
    AlgebraElement e(src, src);
    e.addTerm({Permutation::identity(static_cast<int>(src.size())),
               std::vector<int>(src.size(), 0)},
              Rat(1));
    return e;
}

AlgebraElement KlrAlgebra::dot(int k, const Seq& src) const {
    const int n = static_cast<int>(src.size());
    if (k < 1 || k > n) throw PositionOutOfRange("dot position out of range");
    AlgebraElement e(src, src);
    std::vector<int> dots(n, 0);
    dots[k - 1] = 1;
    e.addTerm({Permutation::identity(n), dots}, Rat(1));
    return e;
}

AlgebraElement KlrAlgebra::crossing(int k, const Seq& src) const {
    const int n = static_cast<int>(src.size());
    if (k < 1 || k >= n) throw PositionOutOfRange("crossing position out of range");
    Permutation sk = Permutation::transposition(n, k);
    AlgebraElement e(src, sk.apply(src));
    e.addTerm({sk, std::vector<int>(n, 0)}, Rat(1));
    return e;
}

AlgebraElement KlrAlgebra::basisElement(const Seq& src, const Permutation& w,
                                        const std::vector<int>& dots) const {
    if (w.size() != static_cast<int>(src.size()) || dots.size() != src.size())
        throw WeightMismatch("basisElement: size mismatch");
    AlgebraElement e(src, w.apply(src));
    e.addTerm({w, dots}, Rat(1));
    return e;
}

long KlrAlgebra::degreeOf(const BasisElem& b, const Seq& src) const {
    long deg = crossingDegree(b.w, src, *datum_);
    for (size_t p = 0; p < src.size(); p++)
        deg += 2L * datum_->r(src[p]) * b.dots[p];
    return deg;
}

bool KlrAlgebra::isHomogeneous(const AlgebraElement& a, long* degreeOut) const {
    if (a.isZero()) return true;
    bool first = true;
    long deg = 0;
    for (const auto& [b, c] : a.terms()) {
        long d = degreeOf(b, a.source());
        if (first) { deg = d; first = false; }
        else if (d != deg) return false;
    }
    if (degreeOut) *degreeOut = deg;
    return true;
}

const Word& KlrAlgebra::canonicalWord(const Permutation& w) const {
    std::lock_guard<std::mutex> lock(memoMutex_);
    auto it = wordMemo_.find(w.oneLine());
    if (it != wordMemo_.end()) return it->second;
    return wordMemo_.emplace(w.oneLine(), lexminReducedWord(w)).first->second;
}

int KlrAlgebra::minLeftDescent(const Permutation& w) const {
    // k is a left descent iff the value k-1 appears to the right of k (0-based).
    const int n = w.size();
    std::vector<int> posOf(n);
    for (int a = 0; a < n; a++) posOf[w(a)] = a;
    for (int k = 1; k < n; k++)
        if (posOf[k - 1] > posOf[k]) return k;
    return 0;
}

// --- SymElement helpers ----------------------------------------------------

namespace {

using SymTerm = KlrAlgebra::SymTerm;

} // namespace

static void addSymTerm(std::vector<SymTerm>& dest, const Int& coef, const Permutation& w,
                       const std::vector<int>& delta) {
    if (is_zero(coef)) return;
    for (auto& t : dest) {
        if (t.w == w && t.delta == delta) {
            t.coef += coef;
            return;
        }
    }
    dest.push_back({coef, w, delta});
}

static void pruneSym(std::vector<SymTerm>& v) {
    v.erase(std::remove_if(v.begin(), v.end(), [](const SymTerm& t) { return is_zero(t.coef); }),
            v.end());
}

KlrAlgebra::SymElement KlrAlgebra::composeCrossing(int k, const SymElement& s, const Seq& src) {
    SymElement out;
    for (const auto& term : s) {
        SymElement lifted = leftCrossing(k, term.w, src);
        for (const auto& lt : lifted) {
            std::vector<int> delta = term.delta;
            for (size_t p = 0; p < delta.size(); p++) delta[p] += lt.delta[p];
            addSymTerm(out, term.coef * lt.coef, lt.w, delta);
        }
    }
    pruneSym(out);
    return out;
}

KlrAlgebra::SymElement KlrAlgebra::composeDot(int t, const SymElement& s, const Seq& src) {
    SymElement out;
    for (const auto& term : s) {
        SymElement lifted = leftDot(t, term.w, src);
        for (const auto& lt : lifted) {
            std::vector<int> delta = term.delta;
            for (size_t p = 0; p < delta.size(); p++) delta[p] += lt.delta[p];
            addSymTerm(out, term.coef * lt.coef, lt.w, delta);
        }
    }
    pruneSym(out);
    return out;
}

// --- Core rewriting steps ---------------------------------------------------

// x_t . w-hat x^r as a normal form; the output dot deltas are independent of
// r.  The dot enters at top position t and slides down the canonical word;
// passing a crossing with equal real labels emits a +-1 correction with that
// crossing deleted.
KlrAlgebra::SymElement KlrAlgebra::leftDot(int t, const Permutation& w, const Seq& src) {
    const int n = static_cast<int>(src.size());
    if (t < 1 || t > n) throw PositionOutOfRange("dot position out of range");
    MemoKey key{t, w.oneLine(), src};
    {
        std::lock_guard<std::mutex> lock(memoMutex_);
        auto it = dotMemo_.find(key);
        if (it != dotMemo_.end()) return it->second;
    }

    SymElement result;
    if (w.isIdentity()) {
        std::vector<int> delta(n, 0);
        delta[t - 1] = 1;
        addSymTerm(result, Int(1), w, delta);
    } else {
        const Word& word = canonicalWord(w);
        const int a = word[0];
        Permutation wPrime = Permutation::transposition(n, a) * w;
        Seq below = wPrime.apply(src); // sequence under the topmost crossing
        const int p = below[a - 1], p2 = below[a];
        const bool equalReal = (p == p2 && datum_->isReal(p));

        if (t != a && t != a + 1) {
            result = composeCrossing(a, leftDot(t, wPrime, src), src);
        } else if (t == a) {
            // x_a tau_a = tau_a x_{a+1} + [equal real] 1
            result = composeCrossing(a, leftDot(a + 1, wPrime, src), src);
            if (equalReal) addSymTerm(result, Int(1), wPrime, std::vector<int>(n, 0));
        } else {
            // x_{a+1} tau_a = tau_a x_a - [equal real] 1
            result = composeCrossing(a, leftDot(a, wPrime, src), src);
            if (equalReal) addSymTerm(result, Int(-1), wPrime, std::vector<int>(n, 0));
        }
        pruneSym(result);
    }

    std::lock_guard<std::mutex> lock(memoMutex_);
    return dotMemo_.emplace(key, std::move(result)).first->second;
}

// tau_k . w-hat x^r as a normal form.  Recursion is well-founded under the
// lexicographic measure (crossing count of the input term, generator index):
// every recursive call either shortens the permutation or keeps its length
// while strictly lowering the generator index (b below is the minimal left
// descent of s_k w and differs from k, hence b < k).
KlrAlgebra::SymElement KlrAlgebra::leftCrossing(int k, const Permutation& w, const Seq& src) {
    const int n = static_cast<int>(src.size());
    if (k < 1 || k >= n) throw PositionOutOfRange("crossing position out of range");
    MemoKey key{k, w.oneLine(), src};
    {
        std::lock_guard<std::mutex> lock(memoMutex_);
        auto it = crossMemo_.find(key);
        if (it != crossMemo_.end()) return it->second;
    }

    const Permutation sk = Permutation::transposition(n, k);
    const Permutation v = sk * w;
    const int lw = w.length(), lv = v.length();
    SymElement result;
    const std::vector<int> noDelta(n, 0);

    if (lv > lw) {
        // Ascent: [k] ++ cw(w) is a reduced word of v.
        const int b = minLeftDescent(v);
        require(b >= 1 && b <= k, "minimal descent must be <= k in ascent case");
        if (b == k) {
            addSymTerm(result, Int(1), v, noDelta);
        } else if (std::abs(b - k) > 1) {
            // tau_k tau_b = tau_b tau_k; rewrite through w' = s_b w.
            Permutation wPrime = Permutation::transposition(n, b) * w;
            require(wPrime.length() == lw - 1, "b must also be a descent of w (far case)");
            SymElement X = leftCrossing(k, wPrime, src);
            SymElement L = leftCrossing(b, wPrime, src);
            result = composeCrossing(b, X, src);
            // L = (w, 0) + lower; subtract tau_k . lower.
            bool sawMain = false;
            for (const auto& lt : L) {
                if (lt.w == w && lt.delta == noDelta) {
                    require(lt.coef == 1, "leading coefficient must be 1");
                    sawMain = true;
                    continue;
                }
                SymElement tail = leftCrossing(k, lt.w, src);
                for (const auto& tt : tail) {
                    std::vector<int> delta = lt.delta;
                    for (size_t p = 0; p < delta.size(); p++) delta[p] += tt.delta[p];
                    addSymTerm(result, -lt.coef * tt.coef, tt.w, delta);
                }
            }
            require(sawMain, "expected leading term in far-commutation rewrite");
        } else {
            // Adjacent braid: v = s_k s_b s_k z with l(z) = l(v) - 3.
            Permutation sb = Permutation::transposition(n, b);
            Permutation z = sk * sb * sk * v;
            require(z.length() == lv - 3, "braid case requires both adjacent descents");
            // w-hat + lower = tau_b tau_k z-hat
            SymElement E1 = leftCrossing(k, z, src);
            SymElement E2 = composeCrossing(b, E1, src);
            // tau_k w-hat = tau_k tau_b tau_k z-hat - tau_k . lower
            //             = tau_b tau_k tau_b z-hat - P . z-hat - tau_k . lower,
            // with P the braid-defect dot polynomial (sign: k = b+1 here).
            SymElement B = composeCrossing(b, composeCrossing(k, leftCrossing(b, z, src), src), src);
            result = B;

            Seq zSeq = z.apply(src);
            const int c = b; // min(k, b) = b since b < k
            const int p1 = zSeq[c - 1], pMid = zSeq[c], p3 = zSeq[c + 1];
            if (p1 == p3 && p1 != pMid && datum_->isReal(p1) && datum_->bilinear(p1, pMid) != 0) {
                long bound = -datum_->a(p1, pMid) - 1;
                for (long e = 0; e <= bound; e++) {
                    SymElement T;
                    addSymTerm(T, Int(1), z, noDelta);
                    for (long rep = 0; rep < e; rep++) T = composeDot(c, T, src);
                    for (long rep = 0; rep < bound - e; rep++) T = composeDot(c + 2, T, src);
                    for (const auto& tt : T) addSymTerm(result, -tt.coef, tt.w, tt.delta);
                }
            }

            bool sawMain = false;
            for (const auto& lt : E2) {
                if (lt.w == w && lt.delta == noDelta) {
                    require(lt.coef == 1, "leading coefficient must be 1 (braid case)");
                    sawMain = true;
                    continue;
                }
                SymElement tail = leftCrossing(k, lt.w, src);
                for (const auto& tt : tail) {
                    std::vector<int> delta = lt.delta;
                    for (size_t p = 0; p < delta.size(); p++) delta[p] += tt.delta[p];
                    addSymTerm(result, -lt.coef * tt.coef, tt.w, delta);
                }
            }
            require(sawMain, "expected leading term in braid rewrite");
        }
    } else {
        // Descent: tau_k w-hat = tau_k^2 u-hat - tau_k . lower, u = s_k w.
        const Permutation& u = v;
        SymElement A = leftCrossing(k, u, src);
        Seq top = u.apply(src);
        const int p = top[k - 1], p2 = top[k];
        if (p == p2) {
            // tau_k^2 = 0 on equal labels
        } else if (datum_->bilinear(p, p2) == 0) {
            addSymTerm(result, Int(1), u, noDelta);
        } else {
            // tau_k^2 = x_k^{-a_{p p2}} + x_{k+1}^{-a_{p2 p}} at the top of u-hat
            SymElement T1;
            addSymTerm(T1, Int(1), u, noDelta);
            for (long rep = 0; rep < -datum_->a(p, p2); rep++) T1 = composeDot(k, T1, src);
            for (const auto& tt : T1) addSymTerm(result, tt.coef, tt.w, tt.delta);
            SymElement T2;
            addSymTerm(T2, Int(1), u, noDelta);
            for (long rep = 0; rep < -datum_->a(p2, p); rep++) T2 = composeDot(k + 1, T2, src);
            for (const auto& tt : T2) addSymTerm(result, tt.coef, tt.w, tt.delta);
        }
        bool sawMain = false;
        const std::vector<int> zeroDelta(n, 0);
        for (const auto& lt : A) {
            if (lt.w == w && lt.delta == zeroDelta) {
                require(lt.coef == 1, "leading coefficient must be 1 (descent case)");
                sawMain = true;
                continue;
            }
            SymElement tail = leftCrossing(k, lt.w, src);
            for (const auto& tt : tail) {
                std::vector<int> delta = lt.delta;
                for (size_t q = 0; q < delta.size(); q++) delta[q] += tt.delta[q];
                addSymTerm(result, -lt.coef * tt.coef, tt.w, delta);
            }
        }
        require(sawMain, "expected leading term in descent rewrite");
    }

    pruneSym(result);
    std::lock_guard<std::mutex> lock(memoMutex_);
    return crossMemo_.emplace(key, std::move(result)).first->second;
}

// --- TermMap plumbing --------------------------------------------------------

KlrAlgebra::TermMap KlrAlgebra::applyLeftCrossing(int k, const TermMap& terms, const Seq& src) {
    TermMap out;
    for (const auto& [b, c] : terms) {
        SymElement lifted = leftCrossing(k, b.w, src);
        for (const auto& lt : lifted) {
            std::vector<int> dots = b.dots;
            for (size_t p = 0; p < dots.size(); p++) dots[p] += lt.delta[p];
            Rat add = c * Rat(lt.coef);
            add.canonicalize();
            Rat& slot = out[{lt.w, dots}];
            slot += add;
            slot.canonicalize();
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = is_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
}

KlrAlgebra::TermMap KlrAlgebra::applyLeftDot(int t, const TermMap& terms, const Seq& src) {
    TermMap out;
    for (const auto& [b, c] : terms) {
        SymElement lifted = leftDot(t, b.w, src);
        for (const auto& lt : lifted) {
            std::vector<int> dots = b.dots;
            for (size_t p = 0; p < dots.size(); p++) dots[p] += lt.delta[p];
            Rat add = c * Rat(lt.coef);
            add.canonicalize();
            Rat& slot = out[{lt.w, dots}];
            slot += add;
            slot.canonicalize();
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = is_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
}

KlrAlgebra::TermMap KlrAlgebra::applyTopDotPoly(const std::vector<std::pair<int, int>>& posExps,
                                                const TermMap& terms, const Seq& src) {
    TermMap cur = terms;
    for (auto [pos, exp] : posExps)
        for (int rep = 0; rep < exp; rep++) cur = applyLeftDot(pos, cur, src);
    return cur;
}

AlgebraElement KlrAlgebra::mul(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.isZero() || b.isZero()) return AlgebraElement();
    if (b.target() != a.source()) return AlgebraElement(); // mismatched corners
    const Seq& src = b.source();
    const int n = static_cast<int>(src.size());

    AlgebraElement out(src, a.target());
    for (const auto& [ab, ac] : a.terms()) {
        TermMap cur;
        for (const auto& [bb, bc] : b.terms()) cur[bb] = bc;
        for (int t = 1; t <= n; t++)
            for (int rep = 0; rep < ab.dots[t - 1]; rep++) cur = applyLeftDot(t, cur, src);
        const Word& word = canonicalWord(ab.w);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            cur = applyLeftCrossing(*it, cur, src);
        for (const auto& [be, c] : cur) out.addTerm(be, c * ac);
    }
    // corner sanity: every surviving term transports source to target
    for (const auto& [be, c] : out.terms())
        require(be.w.apply(src) == a.target(), "product term leaves the corner");
    return out;
}

AlgebraElement KlrAlgebra::evalWord(const Word& word, const Seq& src,
                                    const std::vector<int>& dots) {
    const int n = static_cast<int>(src.size());
    TermMap cur;
    cur[{Permutation::identity(n), dots}] = Rat(1);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        cur = applyLeftCrossing(*it, cur, src);
    Seq target = permOfWord(n, word).apply(src);
    AlgebraElement out(src, target);
    for (const auto& [be, c] : cur) out.addTerm(be, c);
    return out;
}

AlgebraElement KlrAlgebra::psi(const AlgebraElement& a) {
    if (a.isZero()) return AlgebraElement();
    const Seq& newSrc = a.target();
    const int n = static_cast<int>(newSrc.size());
    AlgebraElement out(newSrc, a.source());
    for (const auto& [b, c] : a.terms()) {
        const Word& word = canonicalWord(b.w);
        Word reversed(word.rbegin(), word.rend());
        AlgebraElement flippedWord = evalWord(reversed, newSrc, std::vector<int>(n, 0));
        TermMap cur;
        for (const auto& [bb, bc] : flippedWord.terms()) cur[bb] = bc;
        // dots were at the source of a, which is the target after flipping
        for (int t = 1; t <= n; t++)
            for (int rep = 0; rep < b.dots[t - 1]; rep++) cur = applyLeftDot(t, cur, newSrc);
        for (const auto& [be, cc] : cur) out.addTerm(be, cc * c);
    }
    return out;
}

PolyVector KlrAlgebra::actOnPolyrep(const AlgebraElement& a, const PolyVector& v) const {
    PolyVector out;
    if (a.isZero()) return out;
    MultiPoly f0 = v.component(a.source());
    if (f0.isZero()) return out;
    const int n = static_cast<int>(a.source().size());
    for (const auto& [b, c] : a.terms()) {
        PolyVector cur = PolyVector::ofComponent(a.source(), f0.scaled(c));
        for (int t = 1; t <= n; t++)
            for (int rep = 0; rep < b.dots[t - 1]; rep++) cur = rep_.actDot(t, a.source(), cur);
        Seq curSeq = a.source();
        const Word& word = canonicalWord(b.w);
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            cur = rep_.actCrossing(*it, curSeq, cur);
            std::swap(curSeq[*it - 1], curSeq[*it]);
        }
        out = out + cur;
    }
    return out;
}

QSeries KlrAlgebra::gdimCorner(const Seq& i, const Seq& j, long cap) const {
    if (Weight::ofSequence(i) != Weight::ofSequence(j))
        throw WeightMismatch("gdimCorner: weights differ");
    LaurentPoly wSum;
    for (const Permutation& w : transportSet(i, j))
        wSum.addTerm(crossingDegree(w, i, *datum_), Int(1));
    if (wSum.isZero()) return QSeries::zero(cap);
    long capExt = cap + std::max(0L, -wSum.minExponent());
    QSeries dotsFactor = QSeries::one(capExt);
    for (int idx : i) dotsFactor = dotsFactor * geom_inverse(2 * datum_->r(idx), capExt);
    QSeries total = dotsFactor * wSum;
    // built with enough headroom that the certified cap covers `cap`
    QSeries trimmed(total.floorExp(), cap);
    for (const auto& [e, c] : total.coeffs())
        if (e <= cap) trimmed.addTerm(e, c);
    return trimmed;
}

QSeries KlrAlgebra::gdimCenter(const Weight& nu, long cap) const {
    QSeries total = QSeries::one(cap);
    for (auto [index, mult] : nu.entries())
        for (int c = 1; c <= mult; c++)
            total = total * geom_inverse(2L * datum_->r(index) * c, cap);
    return total;
}

AlgebraElement KlrAlgebra::dividedIdempotent(const DividedSequence& shape) {
    const Seq& hat = shape.expansion();
    const int n = static_cast<int>(hat.size());
    AlgebraElement e = idempotent(hat);
    int offset = 0;
    for (auto [index, nblock] : shape.blocks()) {
        if (nblock > 1) {
            // nil-Hecke primitive idempotent x_1^{n-1} ... x_{n-1} d_{w0},
            // embedded at this block's positions.
            Word local = lexminReducedWord(Permutation::longest(nblock));
            Word embedded;
            for (int letter : local) embedded.push_back(letter + offset);
            AlgebraElement base = evalWord(embedded, hat, std::vector<int>(n, 0));
            TermMap cur;
            for (const auto& [bb, bc] : base.terms()) cur[bb] = bc;
            std::vector<std::pair<int, int>> dots;
            for (int p = 1; p < nblock; p++) dots.push_back({offset + p, nblock - p});
            cur = applyTopDotPoly(dots, cur, hat);
            AlgebraElement blockElem(hat, hat);
            for (const auto& [be, c] : cur) blockElem.addTerm(be, c);
            e = mul(blockElem, e);
        }
        offset += nblock;
    }
    if (mul(e, e) != e)
        throw std::logic_error("divided idempotent failed its idempotency check");
    return e;
}

QSeries KlrAlgebra::gdimDividedCorner(const DividedSequence& shape, const Seq& j, long cap) {
    const Seq& hat = shape.expansion();
    if (Weight::ofSequence(hat) != Weight::ofSequence(j))
        throw WeightMismatch("gdimDividedCorner: weights differ");
    QSeries plain = gdimCorner(j, hat, cap);
    QSeries divided = series_div_exact(plain, shape.factorial(*datum_));
    return divided.shifted(shape.anglePairing());
}

bool KlrAlgebra::centerCheck(const std::map<int, std::map<std::vector<int>, Rat>>& sym,
                             const Weight& nu) {
    // Assemble the diagonal element z: on each sequence, substitute the
    // label-block variables by the dots at that label's positions.
    std::map<Seq, AlgebraElement> z;
    for (const Seq& seq : nu.sequences()) {
        const int n = static_cast<int>(seq.size());
        std::map<int, std::vector<int>> positions;
        for (int p = 0; p < n; p++) positions[seq[p]].push_back(p);
        AlgebraElement total(seq, seq);
        std::vector<std::pair<int, std::vector<std::pair<std::vector<int>, Rat>>>> blocks;
        for (auto& [label, table] : sym) {
            std::vector<std::pair<std::vector<int>, Rat>> terms(table.begin(), table.end());
            blocks.push_back({label, std::move(terms)});
        }
        std::vector<int> dots(n, 0);
        std::function<void(size_t, Rat)> rec = [&](size_t bi, Rat coef) {
            if (bi == blocks.size()) {
                AlgebraElement term(seq, seq);
                term.addTerm({Permutation::identity(n), dots}, coef);
                total = total + term;
                return;
            }
            auto& [label, terms] = blocks[bi];
            const auto& pos = positions[label];
            for (const auto& [exps, c] : terms) {
                if (exps.size() != pos.size())
                    throw WeightMismatch("centerCheck: polynomial arity != multiplicity");
                for (size_t t = 0; t < pos.size(); t++) dots[pos[t]] = exps[t];
                rec(bi + 1, coef * c);
                for (size_t t = 0; t < pos.size(); t++) dots[pos[t]] = 0;
            }
        };
        rec(0, Rat(1));
        z.emplace(seq, std::move(total));
    }

    for (const Seq& seq : nu.sequences()) {
        const int n = static_cast<int>(seq.size());
        for (int t = 1; t <= n; t++) {
            AlgebraElement d = dot(t, seq);
            if (mul(z.at(seq), d) != mul(d, z.at(seq))) return false;
        }
        for (int k = 1; k < n; k++) {
            AlgebraElement c = crossing(k, seq);
            Seq swapped = seq;
            std::swap(swapped[k - 1], swapped[k]);
            if (mul(z.at(swapped), c) != mul(c, z.at(seq))) return false;
        }
    }
    return true;
}

std::vector<BasisElem> KlrAlgebra::cornerBasisOfDegree(const Seq& src, const Seq& target,
                                                       long degree) const {
    std::vector<BasisElem> out;
    const int n = static_cast<int>(src.size());
    for (const Permutation& w : transportSet(src, target)) {
        long rem = degree - crossingDegree(w, src, *datum_);
        if (rem < 0) continue;
        std::vector<int> dots(n, 0);
        std::function<void(int, long)> rec = [&](int p, long left) {
            if (p == n) {
                if (left == 0) out.push_back({w, dots});
                return;
            }
            long step = 2L * datum_->r(src[p]);
            for (long d = 0; d * step <= left; d++) {
                dots[p] = static_cast<int>(d);
                if (p == n - 1) {
                    if (left - d * step == 0) out.push_back({w, dots});
                } else {
                    rec(p + 1, left - d * step);
                }
            }
            dots[p] = 0;
        };
        rec(0, rem);
    }
    return out;
}

QSeries KlrAlgebra::gdimLeftIdempotentTruncation(const AlgebraElement& e, const Seq& src,
                                                 long cap) {
    const Seq& hat = e.source(); // e lives in the (hat, hat) corner
    long dmin = 0;
    for (const Permutation& w : transportSet(src, hat))
        dmin = std::min(dmin, crossingDegree(w, src, *datum_));
    QSeries out(dmin, cap);
    for (long d = dmin; d <= cap; d++) {
        std::vector<BasisElem> basis = cornerBasisOfDegree(src, hat, d);
        if (basis.empty()) continue;
        std::map<BasisElem, int> col;
        for (size_t t = 0; t < basis.size(); t++) col[basis[t]] = static_cast<int>(t);
        RatMat m(basis.size(), RatVec(basis.size(), Rat(0)));
        for (size_t t = 0; t < basis.size(); t++) {
            AlgebraElement image = mul(e, basisElement(src, basis[t].w, basis[t].dots));
            for (const auto& [be, c] : image.terms()) {
                auto it = col.find(be);
                require(it != col.end(), "idempotent truncation left the graded piece");
                m[it->second][t] = c;
            }
        }
        out.addTerm(d, Int(rank(std::move(m))));
    }
    return out;
}

QSeries KlrAlgebra::gdimCentralizerOracle(const Seq& seq, long cap) {
    const int n = static_cast<int>(seq.size());
    long dmin = 0;
    for (const Permutation& w : transportSet(seq, seq))
        dmin = std::min(dmin, crossingDegree(w, seq, *datum_));
    std::vector<AlgebraElement> gens;
    for (int t = 1; t <= n; t++) gens.push_back(dot(t, seq));
    for (int k = 1; k < n; k++) gens.push_back(crossing(k, seq));

    QSeries out(dmin, cap);
    for (long d = dmin; d <= cap; d++) {
        std::vector<BasisElem> basis = cornerBasisOfDegree(seq, seq, d);
        if (basis.empty()) continue;
        RatMat rows;
        for (const AlgebraElement& g : gens) {
            long gdeg = 0;
            isHomogeneous(g, &gdeg);
            std::vector<BasisElem> targetBasis = cornerBasisOfDegree(seq, seq, d + gdeg);
            std::map<BasisElem, int> col;
            for (size_t t = 0; t < targetBasis.size(); t++) col[targetBasis[t]] = static_cast<int>(t);
            // rows: one per target basis vector; columns: unknown coefficients
            RatMat block(targetBasis.size(), RatVec(basis.size(), Rat(0)));
            for (size_t t = 0; t < basis.size(); t++) {
                AlgebraElement b = basisElement(seq, basis[t].w, basis[t].dots);
                AlgebraElement comm = mul(g, b) - mul(b, g);
                for (const auto& [be, c] : comm.terms()) {
                    auto it = col.find(be);
                    require(it != col.end(), "commutator left the expected graded piece");
                    block[it->second][t] = c;
                }
            }
            for (auto& row : block) rows.push_back(std::move(row));
        }
        int nullity = static_cast<int>(basis.size()) - rank(std::move(rows));
        out.addTerm(d, Int(nullity));
    }
    return out;
}

std::string KlrAlgebra::elementStr(const AlgebraElement& a) const {
    if (a.isZero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [b, c] : a.terms()) {
        if (!first) out << " + ";
        first = false;
        out << to_string(c) << " · τ[";
        const Word& word = canonicalWord(b.w);
        for (size_t t = 0; t < word.size(); t++) {
            if (t) out << " ";
            out << word[t];
        }
        out << "] x^[";
        for (size_t p = 0; p < b.dots.size(); p++) {
            if (p) out << ",";
            out << b.dots[p];
        }
        out << "]";
    }
    out << " : " << seqStr(a.source(), *datum_) << " -> " << seqStr(a.target(), *datum_);
    return out.str();
}

} // namespace klr
