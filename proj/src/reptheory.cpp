#include "klr/reptheory.hpp"

#include <algorithm>
#include <numeric>
#include <functional>
#include <sstream>

namespace klr {

namespace {

void check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(std::string("FinModule verification failed: ") + msg);
}

} // namespace

FinModule::FinModule(const BorcherdsCartanDatum& datum, std::vector<Seq> componentOf,
                     std::vector<long> degrees, std::vector<RatMat> dotAction,
                     std::vector<RatMat> crossAction)
    : datum_(&datum),
      componentOf_(std::move(componentOf)),
      degrees_(std::move(degrees)),
      dotAction_(std::move(dotAction)),
      crossAction_(std::move(crossAction)) {
    check(!componentOf_.empty(), "empty module");
    strands_ = static_cast<int>(componentOf_[0].size());
    verifyStructure();
}

RatMat FinModule::projector(const Seq& seq) const {
    RatMat p = matZero(dim(), dim());
    for (int b = 0; b < dim(); b++)
        if (componentOf_[b] == seq) p[b][b] = Rat(1);
    return p;
}

std::vector<RatMat> FinModule::allActionMatrices() const {
    std::vector<RatMat> out;
    std::map<Seq, bool> seen;
    for (const Seq& s : componentOf_)
        if (!seen[s]) {
            seen[s] = true;
            out.push_back(projector(s));
        }
    for (const auto& m : dotAction_) out.push_back(m);
    for (const auto& m : crossAction_) out.push_back(m);
    return out;
}

void FinModule::verifyStructure() const {
    const int d = dim();
    const int n = strands_;
    check(static_cast<int>(degrees_.size()) == d, "degree list size");
    check(static_cast<int>(dotAction_.size()) == n, "dot matrix count");
    check(static_cast<int>(crossAction_.size()) == std::max(0, n - 1), "crossing matrix count");
    for (const Seq& s : componentOf_) check(static_cast<int>(s.size()) == n, "component length");

    // Component and degree discipline per entry.
    for (int t = 1; t <= n; t++) {
        const RatMat& m = dotAction_[t - 1];
        for (int r = 0; r < d; r++)
            for (int c = 0; c < d; c++) {
                if (is_zero(m[r][c])) continue;
                check(componentOf_[r] == componentOf_[c], "dot action must preserve components");
                check(degrees_[r] == degrees_[c] + 2 * datum_->r(componentOf_[c][t - 1]),
                      "dot action must be homogeneous of degree 2 r_i");
            }
    }
    for (int k = 1; k < n; k++) {
        const RatMat& m = crossAction_[k - 1];
        for (int r = 0; r < d; r++)
            for (int c = 0; c < d; c++) {
                if (is_zero(m[r][c])) continue;
                Seq expected = componentOf_[c];
                std::swap(expected[k - 1], expected[k]);
                check(componentOf_[r] == expected, "crossing action must swap components");
                long deg = -datum_->bilinear(componentOf_[c][k - 1], componentOf_[c][k]);
                check(degrees_[r] == degrees_[c] + deg,
                      "crossing action must be homogeneous of degree -i.j");
            }
    }

    // Defining relations as matrix identities, relation by relation on each
    // component projector.
    std::map<Seq, RatMat> projectors;
    for (const Seq& s : componentOf_)
        if (!projectors.count(s)) projectors[s] = projector(s);

    for (const auto& [seq, P] : projectors) {
        for (int k = 1; k < n; k++) {
            const RatMat& T = crossAction_[k - 1];
            const int i = seq[k - 1], j = seq[k];
            // (1) double crossing
            RatMat lhs = matMul(T, matMul(T, P));
            RatMat rhs;
            if (i == j) {
                rhs = matZero(d, d);
            } else if (datum_->bilinear(i, j) == 0) {
                rhs = P;
            } else {
                RatMat dk = matIdentity(d), dk1 = matIdentity(d);
                for (long rep = 0; rep < -datum_->a(i, j); rep++) dk = matMul(dotAction_[k - 1], dk);
                for (long rep = 0; rep < -datum_->a(j, i); rep++) dk1 = matMul(dotAction_[k], dk1);
                rhs = matMul(matAdd(dk, dk1), P);
            }
            check(lhs == rhs, "relation (1)");

            // (2)-(4) dot slides
            bool delta = (i == j && datum_->isReal(i));
            RatMat slide1 = matMul(matSub(matMul(T, dotAction_[k - 1]), matMul(dotAction_[k], T)), P);
            RatMat slide2 = matMul(matSub(matMul(dotAction_[k - 1], T), matMul(T, dotAction_[k])), P);
            check(slide1 == (delta ? P : matZero(d, d)), "relation (2)/(3)/(4) first slide");
            check(slide2 == (delta ? P : matZero(d, d)), "relation (2)/(3)/(4) second slide");

            // far commutations
            for (int t = 1; t <= n; t++) {
                if (t == k || t == k + 1) continue;
                RatMat comm = matMul(matSub(matMul(T, dotAction_[t - 1]), matMul(dotAction_[t - 1], T)), P);
                check(matIsZero(comm), "distant dot commutation");
            }
            for (int t = k + 2; t < n; t++) {
                RatMat comm = matMul(matSub(matMul(T, crossAction_[t - 1]), matMul(crossAction_[t - 1], T)), P);
                check(matIsZero(comm), "distant crossing commutation");
            }
        }
        // (5)/(6) braids
        for (int k = 1; k + 1 < n; k++) {
            const RatMat& Tk = crossAction_[k - 1];
            const RatMat& Tk1 = crossAction_[k];
            RatMat lhs = matMul(matSub(matMul(Tk, matMul(Tk1, Tk)), matMul(Tk1, matMul(Tk, Tk1))), P);
            MultiPoly corr = braidCorrection(*datum_, seq, k);
            RatMat rhs = matZero(d, d);
            for (const auto& [mono, coef] : corr.terms()) {
                RatMat term = matIdentity(d);
                for (int v = 0; v < n; v++)
                    for (int rep = 0; rep < mono[v]; rep++) term = matMul(dotAction_[v], term);
                rhs = matAdd(rhs, matScale(term, coef));
            }
            rhs = matMul(rhs, P);
            check(lhs == rhs, "relation (5)/(6)");
        }
    }
    // dots commute among themselves
    for (int t = 1; t <= n; t++)
        for (int s = t + 1; s <= n; s++)
            check(matMul(dotAction_[t - 1], dotAction_[s - 1]) ==
                      matMul(dotAction_[s - 1], dotAction_[t - 1]),
                  "dots must commute");
}

FinModule trivialV(const BorcherdsCartanDatum& datum, int i, int n) {
    if (!datum.isImaginary(i))
        throw RealIndexError("trivial module V(i^n) requires an imaginary index");
    Seq seq(n, i);
    std::vector<RatMat> dots(n, matZero(1, 1));
    std::vector<RatMat> crossings(std::max(0, n - 1), matZero(1, 1));
    return FinModule(datum, {seq}, {0}, dots, crossings);
}

namespace {

// Shared construction for modules of the form R((n+m)i) . 1 (x) v where the
// subalgebra kills dots: actions computed by straightening tau_g . tau_w and
// discarding every dotted term, keeping only the designated basis
// permutations.
FinModule moduleOnPermBasis(KlrAlgebra& algebra, int i, int strands,
                            const std::vector<Permutation>& basisPerms) {
    const BorcherdsCartanDatum& datum = algebra.datum();
    Seq seq(strands, i);
    const int d = static_cast<int>(basisPerms.size());
    std::map<Permutation, int> indexOf;
    for (int b = 0; b < d; b++) indexOf[basisPerms[b]] = b;

    std::vector<long> degrees(d);
    for (int b = 0; b < d; b++) degrees[b] = crossingDegree(basisPerms[b], seq, datum);

    std::vector<int> zeroDots(strands, 0);
    auto actionOf = [&](const AlgebraElement& g) {
        RatMat m = matZero(d, d);
        for (int b = 0; b < d; b++) {
            AlgebraElement img =
                algebra.mul(g, algebra.basisElement(seq, basisPerms[b], zeroDots));
            for (const auto& [be, c] : img.terms()) {
                if (be.dots != zeroDots) continue; // dots act by zero on v
                auto it = indexOf.find(be.w);
                if (it == indexOf.end()) continue; // non-representative: tau_u v = 0
                m[it->second][b] = c;
            }
        }
        return m;
    };

    std::vector<RatMat> dots, crossings;
    for (int t = 1; t <= strands; t++) dots.push_back(actionOf(algebra.dot(t, seq)));
    for (int k = 1; k < strands; k++) crossings.push_back(actionOf(algebra.crossing(k, seq)));
    std::vector<Seq> componentOf(d, seq);
    return FinModule(datum, componentOf, degrees, dots, crossings);
}

} // namespace

FinModule lbar(KlrAlgebra& algebra, int i, int n, int guard) {
    const BorcherdsCartanDatum& datum = algebra.datum();
    if (!datum.isImaginary(i)) throw RealIndexError("lbar requires an imaginary index");
    if (n > guard) throw GuardExceeded("lbar guard exceeded: n = " + std::to_string(n));
    // Basis tau_w (x) v over all w in S_n.
    std::vector<Permutation> perms;
    std::vector<int> oneLine(n);
    std::iota(oneLine.begin(), oneLine.end(), 0);
    do {
        perms.emplace_back(oneLine);
    } while (std::next_permutation(oneLine.begin(), oneLine.end()));
    std::sort(perms.begin(), perms.end());
    return moduleOnPermBasis(algebra, i, n, perms);
}

FinModule inducedTrivials(KlrAlgebra& algebra, int i, int n, int m, int guard) {
    const BorcherdsCartanDatum& datum = algebra.datum();
    if (!datum.isImaginary(i))
        throw RealIndexError("inducedTrivials requires an imaginary index");
    if (n + m > guard)
        throw GuardExceeded("inducedTrivials guard exceeded: n + m = " + std::to_string(n + m));
    return moduleOnPermBasis(algebra, i, n + m, cosetRepsMin(n, m));
}

namespace {

Subspace generatedSubmodule(const std::vector<RatMat>& actions, const RatVec& seed) {
    const int d = static_cast<int>(seed.size());
    Subspace span(d);
    std::vector<RatVec> frontier;
    if (span.insert(seed)) frontier.push_back(seed);
    while (!frontier.empty()) {
        std::vector<RatVec> next;
        for (const RatVec& v : frontier)
            for (const RatMat& a : actions) {
                RatVec w = matApply(a, v);
                if (span.insert(w)) next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    return span;
}

} // namespace

SubmoduleProbe submoduleLatticeProbe(const FinModule& mod, int guard) {
    const int d = mod.dim();
    if (d > guard) throw GuardExceeded("submoduleLatticeProbe guard exceeded");
    SubmoduleProbe probe;
    probe.dim = d;
    std::vector<RatMat> actions = mod.allActionMatrices();

    // The matrix algebra B generated by the action (with identity): closure
    // under products, tracked as a subspace of flattened matrices.
    auto flatten = [d](const RatMat& m) {
        RatVec v;
        v.reserve(d * d);
        for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
        return v;
    };
    std::vector<RatMat> algebraBasis;
    Subspace algebraSpan(d * d);
    auto insertMatrix = [&](const RatMat& m) {
        if (algebraSpan.insert(flatten(m))) {
            algebraBasis.push_back(m);
            return true;
        }
        return false;
    };
    insertMatrix(matIdentity(d));
    for (const RatMat& a : actions) insertMatrix(a);
    size_t frontierStart = 0;
    while (frontierStart < algebraBasis.size()) {
        size_t frontierEnd = algebraBasis.size();
        for (size_t u = frontierStart; u < frontierEnd; u++)
            for (size_t v = 0; v < frontierEnd; v++) {
                insertMatrix(matMul(algebraBasis[u], algebraBasis[v]));
                if (v >= frontierStart) continue;
                insertMatrix(matMul(algebraBasis[v], algebraBasis[u]));
            }
        frontierStart = frontierEnd;
    }

    // Radical of B by the trace form (char 0, faithful module): x in rad(B)
    // iff tr(x b) = 0 for all b.
    const int s = static_cast<int>(algebraBasis.size());
    RatMat gram(s, RatVec(s, Rat(0)));
    for (int u = 0; u < s; u++)
        for (int v = u; v < s; v++) {
            Rat t = matTrace(matMul(algebraBasis[u], algebraBasis[v]));
            gram[u][v] = t;
            gram[v][u] = t;
        }
    std::vector<RatMat> radBasis;
    for (const RatVec& combo : nullspaceBasis(gram)) {
        RatMat x = matZero(d, d);
        for (int u = 0; u < s; u++)
            if (!is_zero(combo[u])) x = matAdd(x, matScale(algebraBasis[u], combo[u]));
        radBasis.push_back(std::move(x));
    }

    // Socle = annihilator of the radical; radical submodule = J.M.
    Subspace socle(d);
    if (radBasis.empty()) {
        for (int b = 0; b < d; b++) {
            RatVec e(d, Rat(0));
            e[b] = Rat(1);
            socle.insert(e);
        }
    } else {
        RatMat stacked;
        for (const RatMat& j : radBasis)
            for (const auto& row : j) stacked.push_back(row);
        for (const RatVec& v : nullspaceBasis(stacked)) socle.insert(v);
    }
    Subspace radM(d);
    for (const RatMat& j : radBasis)
        for (int b = 0; b < d; b++) {
            RatVec e(d, Rat(0));
            e[b] = Rat(1);
            radM.insert(matApply(j, e));
        }
    probe.socle = socle;
    probe.radicalSubmodule = radM;
    probe.headDim = d - radM.dim();

    // Does every generator map M into J.M (so the head is the trivial-type
    // module)?
    probe.headKilledByGenerators = true;
    for (int t = 1; t <= mod.strands(); t++)
        for (int b = 0; b < d; b++) {
            RatVec e(d, Rat(0));
            e[b] = Rat(1);
            if (!radM.contains(matApply(mod.dotMatrix(t), e))) probe.headKilledByGenerators = false;
        }
    for (int k = 1; k < mod.strands(); k++)
        for (int b = 0; b < d; b++) {
            RatVec e(d, Rat(0));
            e[b] = Rat(1);
            if (!radM.contains(matApply(mod.crossMatrix(k), e))) probe.headKilledByGenerators = false;
        }

    // Generated submodules from basis vectors (auxiliary data).
    for (int b = 0; b < d; b++) {
        RatVec e(d, Rat(0));
        e[b] = Rat(1);
        probe.generatedByBasisVectors.push_back(generatedSubmodule(actions, e));
    }

    if (socle.dim() == 1) {
        probe.minimalNonzero.push_back(socle);
        probe.uniqueMinimalCertified = true;
    } else {
        // fall back: minimal elements among generated submodules
        for (const Subspace& g : probe.generatedByBasisVectors) {
            bool minimal = g.dim() > 0;
            for (const Subspace& h : probe.generatedByBasisVectors)
                if (h.dim() > 0 && h.dim() < g.dim() && g.containsSubspace(h)) minimal = false;
            if (minimal &&
                std::find(probe.minimalNonzero.begin(), probe.minimalNonzero.end(), g) ==
                    probe.minimalNonzero.end())
                probe.minimalNonzero.push_back(g);
        }
    }
    if (probe.headDim == 1) {
        probe.maximalProper.push_back(radM);
        probe.uniqueMaximalCertified = true;
    } else {
        for (const Subspace& g : probe.generatedByBasisVectors) {
            if (g.dim() == d) continue;
            bool maximal = true;
            for (const Subspace& h : probe.generatedByBasisVectors)
                if (h.dim() < d && h.dim() > g.dim() && h.containsSubspace(g)) maximal = false;
            if (maximal &&
                std::find(probe.maximalProper.begin(), probe.maximalProper.end(), g) ==
                    probe.maximalProper.end())
                probe.maximalProper.push_back(g);
        }
    }
    return probe;
}

LaurentPoly Character::at(const Seq& seq) const {
    auto it = entries_.find(seq);
    return it == entries_.end() ? LaurentPoly() : it->second;
}

Weight Character::weight() const {
    if (entries_.empty()) return Weight();
    return Weight::ofSequence(entries_.begin()->first);
}

void Character::add(const Seq& seq, const LaurentPoly& p) {
    if (p.isZero()) return;
    if (!entries_.empty() &&
        Weight::ofSequence(entries_.begin()->first) != Weight::ofSequence(seq))
        throw WeightMismatch("character supported on more than one weight");
    auto it = entries_.find(seq);
    if (it == entries_.end()) {
        entries_[seq] = p;
    } else {
        it->second += p;
        if (it->second.isZero()) entries_.erase(it);
    }
}

Character Character::operator+(const Character& o) const {
    Character r = *this;
    for (const auto& [s, p] : o.entries_) r.add(s, p);
    return r;
}

Character Character::operator-(const Character& o) const {
    Character r = *this;
    for (const auto& [s, p] : o.entries_) r.add(s, -p);
    return r;
}

Character Character::scaledBy(const LaurentPoly& p) const {
    Character r;
    for (const auto& [s, q] : entries_) r.add(s, q * p);
    return r;
}

std::string Character::str(const BorcherdsCartanDatum& datum) const {
    if (entries_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [s, p] : entries_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << p.str() << ")·(" << seqStr(s, datum) << ")";
    }
    return out.str();
}

Character characterOf(const FinModule& m) {
    Character ch;
    for (int b = 0; b < m.dim(); b++)
        ch.add(m.componentOf()[b], LaurentPoly::monomial(Int(1), m.degrees()[b]));
    return ch;
}

Character trivialVCharacter(const BorcherdsCartanDatum& datum, int i, int n) {
    if (!datum.isImaginary(i))
        throw RealIndexError("trivialVCharacter requires an imaginary index");
    Character ch;
    ch.add(Seq(n, i), LaurentPoly(Int(1)));
    return ch;
}

Character charVReal(const BorcherdsCartanDatum& datum, int i, int n) {
    if (!datum.isReal(i)) throw RealIndexError("charVReal requires a real index");
    Character ch;
    ch.add(Seq(n, i), quantum_factorial(n, datum.r(i)));
    return ch;
}

Character induceCharacters(const Character& chM, const Character& chN,
                           const BorcherdsCartanDatum& datum) {
    Character out;
    if (chM.isZero() || chN.isZero()) return out;
    Weight total = chM.weight() + chN.weight();
    for (const Seq& target : total.sequences()) {
        LaurentPoly value;
        for (const auto& [a, pa] : chM.entries())
            for (const auto& [b, pb] : chN.entries())
                for (const Shuffle& u : shuffles(a, b, target, datum))
                    value += (pa * pb).shifted(u.degree);
        out.add(target, value);
    }
    return out;
}

int epsilonI(const Character& ch, int i) {
    int best = 0;
    for (const auto& [seq, p] : ch.entries()) {
        int tail = 0;
        for (auto it = seq.rbegin(); it != seq.rend() && *it == i; ++it) tail++;
        best = std::max(best, tail);
    }
    return best;
}

Character deltaCharacter(const Character& ch, int i, int n) {
    Character out;
    for (const auto& [seq, p] : ch.entries()) {
        if (static_cast<int>(seq.size()) < n) continue;
        bool tail = true;
        for (int t = 0; t < n; t++)
            if (seq[seq.size() - 1 - t] != i) tail = false;
        if (!tail) continue;
        Seq stripped(seq.begin(), seq.end() - n);
        out.add(stripped, p);
    }
    return out;
}

std::map<std::pair<Seq, Seq>, LaurentPoly> resProjectiveMultiplicity(
    const Seq& k, const Weight& nu, const Weight& nuPrime, const BorcherdsCartanDatum& datum) {
    if (nu + nuPrime != Weight::ofSequence(k))
        throw WeightMismatch("resProjectiveMultiplicity: weights do not add up");
    std::map<std::pair<Seq, Seq>, LaurentPoly> out;
    for (const Seq& i : nu.sequences())
        for (const Seq& j : nuPrime.sequences()) {
            LaurentPoly mult;
            for (const Shuffle& u : shuffles(i, j, k, datum)) mult.addTerm(u.degree, Int(1));
            if (!mult.isZero()) out[{i, j}] = mult;
        }
    return out;
}

namespace {

// All lambda in N[I] with lambda <= cap1 and lambda <= cap2 componentwise,
// and nuPrime + lambda - muPrime >= 0.
std::vector<Weight> mackeyLambdas(const Weight& nu, const Weight& muPrime,
                                  const Weight& nuPrime) {
    std::vector<std::pair<int, std::pair<int, int>>> ranges; // index -> [lo, hi]
    std::map<int, int> lows;
    for (auto [idx, c] : muPrime.entries()) {
        int hi = std::min(nu.multiplicity(idx), c);
        int lo = std::max(0, c - nuPrime.multiplicity(idx));
        if (lo > hi) return {};
        ranges.push_back({idx, {lo, hi}});
    }
    std::vector<Weight> out;
    Weight cur;
    std::function<void(size_t)> rec = [&](size_t t) {
        if (t == ranges.size()) {
            out.push_back(cur);
            return;
        }
        auto [idx, range] = ranges[t];
        for (int c = range.first; c <= range.second; c++) {
            Weight next = cur;
            next.add(idx, c);
            std::swap(cur, next);
            rec(t + 1);
            std::swap(cur, next);
        }
    };
    rec(0);
    return out;
}

} // namespace

bool mackeyCharacterCheck(const Character& chM, const Weight& mu, const Character& chN,
                          const Weight& muPrime, const Weight& nu, const Weight& nuPrime,
                          const BorcherdsCartanDatum& datum, bool* twistUsed) {
    if (mu + muPrime != nu + nuPrime)
        throw WeightMismatch("mackeyCharacterCheck: mu + mu' != nu + nu'");
    if (twistUsed) *twistUsed = false;

    // Left side: shuffle then restrict to (Seq(nu), Seq(nu')).
    Character induced = induceCharacters(chM, chN, datum);
    std::map<std::pair<Seq, Seq>, LaurentPoly> lhs;
    for (const Seq& a : nu.sequences())
        for (const Seq& b : nuPrime.sequences()) {
            LaurentPoly v = induced.at(seqConcat(a, b));
            if (!v.isZero()) lhs[{a, b}] = v;
        }

    // Right side: sum over lambda of the twisted induced pieces.
    std::map<std::pair<Seq, Seq>, LaurentPoly> rhs;
    for (const Weight& lambda : mackeyLambdas(nu, muPrime, nuPrime)) {
        Weight w1 = nu - lambda;                  // from M
        Weight w2 = nuPrime + lambda - muPrime;   // from M
        Weight w3 = lambda;                       // from N
        Weight w4 = muPrime - lambda;             // from N
        long twist = -lambda.dot(w2, datum);
        bool lambdaContributed = false;
        for (const Seq& s1 : w1.sequences())
            for (const Seq& s2 : w2.sequences()) {
                LaurentPoly mVal = chM.at(seqConcat(s1, s2));
                if (mVal.isZero()) continue;
                for (const Seq& s3 : w3.sequences())
                    for (const Seq& s4 : w4.sequences()) {
                        LaurentPoly nVal = chN.at(seqConcat(s3, s4));
                        if (nVal.isZero()) continue;
                        lambdaContributed = true;
                        LaurentPoly base = (mVal * nVal).shifted(twist);
                        // Ind_{w1,w3} into nu and Ind_{w2,w4} into nu'.
                        for (const Seq& a : nu.sequences()) {
                            std::vector<Shuffle> ua = shuffles(s1, s3, a, datum);
                            if (ua.empty()) continue;
                            LaurentPoly aSum;
                            for (const Shuffle& u : ua) aSum.addTerm(u.degree, Int(1));
                            for (const Seq& b : nuPrime.sequences()) {
                                LaurentPoly bSum;
                                for (const Shuffle& u : shuffles(s2, s4, b, datum))
                                    bSum.addTerm(u.degree, Int(1));
                                if (bSum.isZero()) continue;
                                LaurentPoly& slot = rhs[{a, b}];
                                slot += base * aSum * bSum;
                            }
                        }
                    }
            }
        if (twistUsed && twist != 0 && lambdaContributed) *twistUsed = true;
    }
    for (auto it = rhs.begin(); it != rhs.end();)
        it = it->second.isZero() ? rhs.erase(it) : std::next(it);
    return lhs == rhs;
}

} // namespace klr
