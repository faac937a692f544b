#include "klr/wordcomb.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace klr {

Weight Weight::ofSequence(const Seq& seq) {
    Weight w;
    for (int i : seq) w.add(i, 1);
    return w;
}

void Weight::add(int index, int count) {
    if (count == 0) return;
    int& slot = mult_[index];
    slot += count;
    ht_ += count;
    if (slot == 0) mult_.erase(index);
    if (slot < 0) throw WeightMismatch("negative multiplicity in weight");
}

int Weight::multiplicity(int index) const {
    auto it = mult_.find(index);
    return it == mult_.end() ? 0 : it->second;
}

Weight Weight::operator+(const Weight& o) const {
    Weight r = *this;
    for (auto [i, c] : o.mult_) r.add(i, c);
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    Weight r = *this;
    for (auto [i, c] : o.mult_) r.add(i, -c);
    return r;
}

bool Weight::contains(const Weight& o) const {
    for (auto [i, c] : o.mult_)
        if (multiplicity(i) < c) return false;
    return true;
}

long Weight::dot(const Weight& o, const BorcherdsCartanDatum& datum) const {
    long total = 0;
    for (auto [i, ci] : mult_)
        for (auto [j, cj] : o.mult_) total += static_cast<long>(ci) * cj * datum.bilinear(i, j);
    return total;
}

std::vector<Seq> Weight::sequences() const {
    Seq sorted;
    for (auto [i, c] : mult_)
        for (int t = 0; t < c; t++) sorted.push_back(i);
    std::vector<Seq> out;
    if (sorted.empty()) { out.push_back({}); return out; }
    do {
        out.push_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return out;
}

std::string Weight::str(const BorcherdsCartanDatum& datum) const {
    std::ostringstream out;
    bool first = true;
    for (auto [i, c] : mult_) {
        if (!first) out << ",";
        first = false;
        out << datum.label(i) << ":" << c;
    }
    return out.str();
}

Weight Weight::parse(const std::string& text, const BorcherdsCartanDatum& datum) {
    Weight w;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        auto colon = part.find(':');
        std::string label = part.substr(0, colon);
        int count = 1;
        if (colon != std::string::npos) count = std::stoi(part.substr(colon + 1));
        // trim whitespace
        label.erase(0, label.find_first_not_of(" \t"));
        label.erase(label.find_last_not_of(" \t") + 1);
        int pos = datum.positionOf(label);
        if (pos < 0) throw WeightMismatch("unknown index label: " + label);
        w.add(pos, count);
    }
    return w;
}

std::string seqStr(const Seq& seq, const BorcherdsCartanDatum& datum) {
    std::ostringstream out;
    for (size_t a = 0; a < seq.size(); a++) {
        if (a) out << " ";
        out << datum.label(seq[a]);
    }
    return out.str();
}

Seq seqParse(const std::string& text, const BorcherdsCartanDatum& datum) {
    Seq seq;
    std::stringstream ss(text);
    std::string tok;
    while (ss >> tok) {
        int pos = datum.positionOf(tok);
        if (pos < 0) throw WeightMismatch("unknown index label: " + tok);
        seq.push_back(pos);
    }
    return seq;
}

Seq seqConcat(const Seq& a, const Seq& b) {
    Seq r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Permutation::Permutation(std::vector<int> oneLine) : map_(std::move(oneLine)) {
    std::vector<bool> seen(map_.size(), false);
    for (int v : map_) {
        if (v < 0 || v >= static_cast<int>(map_.size()) || seen[v])
            throw std::invalid_argument("not a permutation");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 0);
    return Permutation(std::move(m));
}

Permutation Permutation::transposition(int n, int k) {
    if (k < 1 || k >= n) throw std::invalid_argument("generator index out of range");
    Permutation p = identity(n);
    std::swap(p.map_[k - 1], p.map_[k]);
    return p;
}

Permutation Permutation::longest(int n) {
    std::vector<int> m(n);
    for (int a = 0; a < n; a++) m[a] = n - 1 - a;
    return Permutation(std::move(m));
}

Permutation Permutation::operator*(const Permutation& o) const {
    std::vector<int> m(map_.size());
    for (size_t a = 0; a < map_.size(); a++) m[a] = map_[o.map_[a]];
    return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
    std::vector<int> m(map_.size());
    for (size_t a = 0; a < map_.size(); a++) m[map_[a]] = static_cast<int>(a);
    return Permutation(std::move(m));
}

bool Permutation::isIdentity() const {
    for (size_t a = 0; a < map_.size(); a++)
        if (map_[a] != static_cast<int>(a)) return false;
    return true;
}

int Permutation::length() const {
    int inv = 0;
    for (size_t p = 0; p < map_.size(); p++)
        for (size_t q = p + 1; q < map_.size(); q++)
            if (map_[p] > map_[q]) inv++;
    return inv;
}

Seq Permutation::apply(const Seq& seq) const {
    if (seq.size() != map_.size()) throw WeightMismatch("sequence length mismatch");
    Seq out(seq.size());
    for (size_t a = 0; a < seq.size(); a++) out[map_[a]] = seq[a];
    return out;
}

Permutation permOfWord(int n, const Word& word) {
    Permutation w = Permutation::identity(n);
    // Word letters act top-down; as a function the word multiplies left to
    // right: w = s_{k_1} * s_{k_2} * ... * s_{k_r}.
    for (int k : word) w = w * Permutation::transposition(n, k);
    return w;
}

Word lexminReducedWord(const Permutation& w) {
    // Greedy: the lex-min reduced word starts with the smallest left descent.
    Word word;
    Permutation cur = w;
    const int n = w.size();
    while (!cur.isIdentity()) {
        for (int k = 1; k < n; k++) {
            Permutation shorter = Permutation::transposition(n, k) * cur;
            if (shorter.length() < cur.length()) {
                word.push_back(k);
                cur = shorter;
                break;
            }
        }
    }
    return word;
}

namespace {

void collectReducedWords(const Permutation& w, Word& prefix, std::vector<Word>& out) {
    if (w.isIdentity()) {
        out.push_back(prefix);
        return;
    }
    const int n = w.size();
    for (int k = 1; k < n; k++) {
        Permutation shorter = Permutation::transposition(n, k) * w;
        if (shorter.length() < w.length()) {
            prefix.push_back(k);
            collectReducedWords(shorter, prefix, out);
            prefix.pop_back();
        }
    }
}

} // namespace

std::vector<Word> allReducedWords(const Permutation& w) {
    std::vector<Word> out;
    Word prefix;
    collectReducedWords(w, prefix, out);
    return out;
}

std::vector<Permutation> cosetRepsMin(int n, int m) {
    // Minimal reps are exactly the permutations increasing on {0..n-1} and
    // on {n..n+m-1}: choose the image set of the first block, iterating over
    // n-subsets via prev_permutation of an indicator vector.
    std::vector<Permutation> reps;
    const int total = n + m;
    std::vector<int> indicator(total, 0);
    for (int t = 0; t < n; t++) indicator[t] = 1;
    std::sort(indicator.begin(), indicator.end(), std::greater<int>());
    do {
        std::vector<int> firstSlots, secondSlots;
        for (int pos = 0; pos < total; pos++)
            (indicator[pos] ? firstSlots : secondSlots).push_back(pos);
        std::vector<int> oneLine(total);
        for (int t = 0; t < n; t++) oneLine[t] = firstSlots[t];
        for (int t = 0; t < m; t++) oneLine[n + t] = secondSlots[t];
        reps.emplace_back(std::move(oneLine));
    } while (std::prev_permutation(indicator.begin(), indicator.end()));
    std::sort(reps.begin(), reps.end());
    return reps;
}

std::vector<Permutation> transportSet(const Seq& src, const Seq& dst) {
    if (Weight::ofSequence(src) != Weight::ofSequence(dst))
        throw WeightMismatch("transportSet: weights differ");
    // Positions grouped per label; any per-label bijection src -> dst gives
    // a transporting permutation, and all of them arise this way.
    std::map<int, std::vector<int>> srcPos, dstPos;
    for (size_t a = 0; a < src.size(); a++) srcPos[src[a]].push_back(static_cast<int>(a));
    for (size_t a = 0; a < dst.size(); a++) dstPos[dst[a]].push_back(static_cast<int>(a));

    std::vector<Permutation> out;
    std::vector<int> oneLine(src.size(), -1);
    std::vector<std::pair<int, std::vector<int>>> groups; // (label, dst perm state)
    for (auto& [label, pos] : dstPos) groups.push_back({label, pos});

    // Iterate over the product of per-label permutations of dst slots.
    std::vector<std::vector<int>> state;
    for (auto& [label, pos] : groups) state.push_back(pos);
    for (auto& v : state) std::sort(v.begin(), v.end());

    std::function<void(size_t)> rec = [&](size_t g) {
        if (g == groups.size()) {
            out.emplace_back(oneLine);
            return;
        }
        std::vector<int>& perm = state[g];
        const std::vector<int>& sp = srcPos[groups[g].first];
        std::sort(perm.begin(), perm.end());
        do {
            for (size_t t = 0; t < sp.size(); t++) oneLine[sp[t]] = perm[t];
            rec(g + 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

long crossingDegree(const Permutation& w, const Seq& src, const BorcherdsCartanDatum& datum) {
    long deg = 0;
    const int n = w.size();
    for (int p = 0; p < n; p++)
        for (int q = p + 1; q < n; q++)
            if (w(p) > w(q)) deg -= datum.bilinear(src[p], src[q]);
    return deg;
}

std::vector<Shuffle> shuffles(const Seq& a, const Seq& b, const Seq& target,
                              const BorcherdsCartanDatum& datum) {
    if (Weight::ofSequence(a) + Weight::ofSequence(b) != Weight::ofSequence(target))
        throw WeightMismatch("shuffles: weights do not add up");
    const int n = static_cast<int>(a.size());
    const int m = static_cast<int>(b.size());
    const int total = n + m;
    std::vector<Shuffle> out;

    std::vector<int> indicator(total, 0);
    for (int t = 0; t < n; t++) indicator[t] = 1;
    std::sort(indicator.begin(), indicator.end(), std::greater<int>());
    do {
        // Slots marked 1 receive a's entries in order; the rest receive b's.
        bool match = true;
        std::vector<int> slotOfA(n), slotOfB(m);
        int ai = 0, bi = 0;
        for (int pos = 0; pos < total && match; pos++) {
            if (indicator[pos]) {
                if (target[pos] != a[ai]) match = false;
                else slotOfA[ai++] = pos;
            } else {
                if (target[pos] != b[bi]) match = false;
                else slotOfB[bi++] = pos;
            }
        }
        if (!match) continue;
        long degree = 0;
        for (int p = 0; p < n; p++)
            for (int q = 0; q < m; q++)
                if (slotOfA[p] > slotOfB[q]) degree -= datum.bilinear(a[p], b[q]);
        // u maps target positions to concat(a,b) positions: u(target) = ab.
        std::vector<int> oneLine(total);
        for (int p = 0; p < n; p++) oneLine[slotOfA[p]] = p;
        for (int q = 0; q < m; q++) oneLine[slotOfB[q]] = n + q;
        out.push_back({Permutation(std::move(oneLine)), degree});
    } while (std::prev_permutation(indicator.begin(), indicator.end()));
    return out;
}

DividedSequence::DividedSequence(std::vector<std::pair<int, int>> blocks,
                                 const BorcherdsCartanDatum& datum)
    : blocks_(std::move(blocks)) {
    for (auto [index, n] : blocks_) {
        if (n < 1) throw std::invalid_argument("divided-power block with n < 1");
        if (n > 1 && !datum.isReal(index))
            throw ImaginaryDividedPower("divided power on imaginary index " + datum.label(index));
        for (int t = 0; t < n; t++) hat_.push_back(index);
        angle_ += static_cast<long>(n) * (n - 1) / 2 * datum.r(index);
    }
}

LaurentPoly DividedSequence::factorial(const BorcherdsCartanDatum& datum) const {
    LaurentPoly p{Int(1)};
    for (auto [index, n] : blocks_) p *= quantum_factorial(n, datum.r(index));
    return p;
}

std::string DividedSequence::str(const BorcherdsCartanDatum& datum) const {
    std::ostringstream out;
    bool first = true;
    for (auto [index, n] : blocks_) {
        if (!first) out << " ";
        first = false;
        out << datum.label(index);
        if (n > 1) out << "^(" << n << ")";
    }
    return out.str();
}

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int t = 1; t <= k; t++) r = r * (n - k + t) / t;
    return r;
}

} // namespace klr
