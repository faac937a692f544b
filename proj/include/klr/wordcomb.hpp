#pragma once

// Weights in N[I], sequences, divided-power sequences, symmetric group
// combinatorics (reduced words, minimal coset representatives, shuffles)
// and diagram-degree bookkeeping.
//
// Permutation action convention, used everywhere: w moves position a to
// position w(a), so (w.seq)[w(a)] = seq[a] and the action on sequences is a
// left action under function composition (u*v)(a) = u(v(a)).

#include "klr/datum.hpp"
#include "klr/qarith.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace klr {

struct WeightMismatch : std::runtime_error {
    explicit WeightMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Divided powers exist only on real indices (n > 1 on I- is rejected).
struct ImaginaryDividedPower : std::runtime_error {
    explicit ImaginaryDividedPower(const std::string& what) : std::runtime_error(what) {}
};

struct RealIndexError : std::runtime_error {
    explicit RealIndexError(const std::string& what) : std::runtime_error(what) {}
};
struct GuardExceeded : std::runtime_error {
    explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Sequence of index positions (into the datum's index list).
using Seq = std::vector<int>;

// Weight nu in N[I]: multiplicities per index position, no stored zeros.
class Weight {
public:
    Weight() = default;
    static Weight ofSequence(const Seq& seq);

    void add(int index, int count);
    int multiplicity(int index) const;
    int ht() const { return ht_; }
    const std::map<int, int>& entries() const { return mult_; }

    bool operator==(const Weight& o) const { return mult_ == o.mult_; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    bool operator<(const Weight& o) const { return mult_ < o.mult_; }

    Weight operator+(const Weight& o) const;
    // Componentwise difference; throws if any multiplicity would go negative.
    Weight operator-(const Weight& o) const;
    bool contains(const Weight& o) const; // o <= this componentwise

    // Bilinear form extended from the datum: sum over pairs.
    long dot(const Weight& o, const BorcherdsCartanDatum& datum) const;

    std::vector<Seq> sequences() const; // all of Seq(nu), lexicographic

    std::string str(const BorcherdsCartanDatum& datum) const; // "i:2,j:1"
    static Weight parse(const std::string& text, const BorcherdsCartanDatum& datum);

private:
    std::map<int, int> mult_;
    int ht_ = 0;
};

std::string seqStr(const Seq& seq, const BorcherdsCartanDatum& datum); // "i j i"
Seq seqParse(const std::string& text, const BorcherdsCartanDatum& datum);
Seq seqConcat(const Seq& a, const Seq& b);

// Permutation of {0..n-1} in one-line notation: perm[a] = w(a).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> oneLine);
    static Permutation identity(int n);
    static Permutation transposition(int n, int k); // s_k swaps k-1, k (1-based k)
    static Permutation longest(int n);

    int size() const { return static_cast<int>(map_.size()); }
    int operator()(int a) const { return map_[a]; } // 0-based
    const std::vector<int>& oneLine() const { return map_; }

    Permutation operator*(const Permutation& o) const; // (u*v)(a) = u(v(a))
    Permutation inverse() const;
    bool isIdentity() const;
    int length() const; // inversion count

    Seq apply(const Seq& seq) const; // (w.seq)[w(a)] = seq[a]

    bool operator==(const Permutation& o) const { return map_ == o.map_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const { return map_ < o.map_; }

private:
    std::vector<int> map_;
};

// Generator word entries are 1-based: k in 1..n-1 denotes s_k.
using Word = std::vector<int>;

Permutation permOfWord(int n, const Word& word);

// Lexicographically smallest reduced word of w; deterministic.  This choice
// is part of the library's stable contract (the normal-form basis depends
// on it).
Word lexminReducedWord(const Permutation& w);

// All reduced words of w (test oracle; exponential, small n only).
std::vector<Word> allReducedWords(const Permutation& w);

// Minimal-length representatives of the left cosets w(S_n x S_m) inside
// S_{n+m}: increasing on both blocks; count = binomial(n+m, n).
std::vector<Permutation> cosetRepsMin(int n, int m);

// All w with w(src) = dst; empty unless the weights agree.
std::vector<Permutation> transportSet(const Seq& src, const Seq& dst);

// Sum over inversion pairs (p < q, w(p) > w(q)) of -(src_p . src_q);
// independent of the choice of reduced word.
long crossingDegree(const Permutation& w, const Seq& src, const BorcherdsCartanDatum& datum);

struct Shuffle {
    Permutation perm; // u with u(concat-src read from target slots) ... see below
    long degree;      // sum over crossed pairs (p from a, q from b) of -(a_p.b_q)
};

// All interleavings of a before b yielding target; perm maps positions of
// the target to positions of concat(a,b), so perm(target) = concat(a,b).
std::vector<Shuffle> shuffles(const Seq& a, const Seq& b, const Seq& target,
                              const BorcherdsCartanDatum& datum);

// Divided-power sequence: blocks (index, n) with n > 1 only on real indices.
class DividedSequence {
public:
    DividedSequence(std::vector<std::pair<int, int>> blocks, const BorcherdsCartanDatum& datum);

    const std::vector<std::pair<int, int>>& blocks() const { return blocks_; }
    const Seq& expansion() const { return hat_; } // the sequence i-hat
    long anglePairing() const { return angle_; }  // <i> = sum n_k(n_k-1)/2 r_{i_k}
    LaurentPoly factorial(const BorcherdsCartanDatum& datum) const; // i! = prod [n_k]!

    std::string str(const BorcherdsCartanDatum& datum) const;

private:
    std::vector<std::pair<int, int>> blocks_;
    Seq hat_;
    long angle_ = 0;
};

long binomial(int n, int k);

} // namespace klr
