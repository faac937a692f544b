#include "klr/wordcomb.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace klr;

namespace {

BorcherdsCartanDatum rank2(long aii, long ajj, long aij, long aji, std::vector<long> D) {
    RawDatum r;
    r.indices = {"i", "j"};
    r.A = {{aii, aij}, {aji, ajj}};
    r.D = D;
    return BorcherdsCartanDatum::validate(r);
}

Permutation fromOneLineOneBased(std::vector<int> v) {
    for (auto& x : v) x--;
    return Permutation(std::move(v));
}

} // namespace

TEST_CASE("lexmin reduced words") {
    CHECK(lexminReducedWord(Permutation::identity(3)).empty());
    CHECK(lexminReducedWord(Permutation::longest(3)) == Word{1, 2, 1});
    CHECK(lexminReducedWord(fromOneLineOneBased({2, 1, 4, 3})) == Word{1, 3});
}

TEST_CASE("lexmin matches the brute-force enumeration oracle") {
    std::vector<int> oneLine(4);
    std::iota(oneLine.begin(), oneLine.end(), 0);
    do {
        Permutation w{oneLine};
        std::vector<Word> all = allReducedWords(w);
        Word lexmin = lexminReducedWord(w);
        CHECK(std::find(all.begin(), all.end(), lexmin) != all.end());
        CHECK(*std::min_element(all.begin(), all.end()) == lexmin);
        for (const Word& word : all) CHECK(static_cast<int>(word.size()) == w.length());
    } while (std::next_permutation(oneLine.begin(), oneLine.end()));
}

TEST_CASE("minimal coset representatives") {
    auto reps11 = cosetRepsMin(1, 1);
    CHECK(reps11.size() == 2);
    auto reps21 = cosetRepsMin(2, 1);
    REQUIRE(reps21.size() == 3);
    // {e, s2, s1 s2}
    CHECK(std::find(reps21.begin(), reps21.end(), Permutation::identity(3)) != reps21.end());
    CHECK(std::find(reps21.begin(), reps21.end(), permOfWord(3, {2})) != reps21.end());
    CHECK(std::find(reps21.begin(), reps21.end(), permOfWord(3, {1, 2})) != reps21.end());
    CHECK(cosetRepsMin(0, 3) == std::vector<Permutation>{Permutation::identity(3)});
    for (int n = 0; n <= 4; n++)
        for (int m = 0; n + m <= 5; m++)
            CHECK(static_cast<long>(cosetRepsMin(n, m).size()) == binomial(n + m, n));
}

TEST_CASE("transport sets") {
    Seq ij{0, 1}, ji{1, 0}, ii{0, 0};
    auto flip = transportSet(ij, ji);
    REQUIRE(flip.size() == 1);
    CHECK(flip[0] == Permutation::transposition(2, 1));
    CHECK(transportSet(ii, ii).size() == 2);
    auto t = transportSet(Seq{0, 0, 1}, Seq{0, 1, 0});
    CHECK(t.size() == 2);
    for (const Permutation& w : t) CHECK(w.apply(Seq{0, 0, 1}) == Seq{0, 1, 0});
    CHECK_THROWS_AS(transportSet(ij, ii), WeightMismatch);
}

TEST_CASE("transport set sizes sum to n!") {
    Seq src{0, 0, 1, 2};
    Weight nu = Weight::ofSequence(src);
    long total = 0;
    for (const Seq& dst : nu.sequences()) total += static_cast<long>(transportSet(src, dst).size());
    CHECK(total == 24);
}

TEST_CASE("crossing degree") {
    auto datum = rank2(2, 2, -1, -1, {1, 1});
    Seq iji{0, 1, 0};
    CHECK(crossingDegree(Permutation::identity(3), iji, datum) == 0);
    // one crossing of equal real labels
    Seq ii{0, 0};
    CHECK(crossingDegree(Permutation::transposition(2, 1), ii, datum) == -2);
    // longest element on (i,j,i): inversions (i,j), (i,i), (j,i)
    CHECK(crossingDegree(Permutation::longest(3), iji, datum) == 0);
}

TEST_CASE("crossing degree is reduced-word independent") {
    auto datum = rank2(2, 0, -2, -2, {1, 1});
    std::mt19937_64 rng(7);
    std::vector<int> oneLine(4);
    std::iota(oneLine.begin(), oneLine.end(), 0);
    for (int t = 0; t < 50; t++) {
        std::shuffle(oneLine.begin(), oneLine.end(), rng);
        Permutation w{oneLine};
        Seq src{0, 1, 0, 1};
        std::vector<Word> words = allReducedWords(w);
        std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
        const Word& word = words[pick(rng)];
        // sum generator degrees along the wire diagram, bottom to top
        long total = 0;
        Seq cur = src;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            int k = *it;
            total -= datum.bilinear(cur[k - 1], cur[k]);
            std::swap(cur[k - 1], cur[k]);
        }
        CHECK(total == crossingDegree(w, src, datum));
    }
}

TEST_CASE("shuffles") {
    auto datum = rank2(2, 2, -1, -1, {1, 1});
    Seq i{0}, j{1};
    auto direct = shuffles(i, j, Seq{0, 1}, datum);
    REQUIRE(direct.size() == 1);
    CHECK(direct[0].degree == 0);
    CHECK(direct[0].perm.isIdentity());
    auto crossed = shuffles(i, j, Seq{1, 0}, datum);
    REQUIRE(crossed.size() == 1);
    CHECK(crossed[0].degree == 1); // -i.j = 1

    auto dImag = rank2(-2, 2, 0, 0, {1, 1});
    auto both = shuffles(Seq{0}, Seq{0}, Seq{0, 0}, dImag);
    REQUIRE(both.size() == 2);
    std::vector<long> degs{both[0].degree, both[1].degree};
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<long>{0, 2}); // -i.i = 2

    CHECK_THROWS_AS(shuffles(i, j, Seq{0, 0}, datum), WeightMismatch);
}

TEST_CASE("shuffle counts are binomial and match crossing degrees") {
    auto datum = rank2(2, 0, -1, -1, {1, 1});
    Seq a{0, 1}, b{0, 0};
    Weight total = Weight::ofSequence(a) + Weight::ofSequence(b);
    long count = 0;
    for (const Seq& target : total.sequences()) {
        for (const Shuffle& u : shuffles(a, b, target, datum)) {
            count++;
            CHECK(u.perm.apply(target) == seqConcat(a, b));
            CHECK(crossingDegree(u.perm, target, datum) == u.degree);
        }
    }
    CHECK(count == binomial(4, 2));
}

TEST_CASE("divided sequences") {
    auto datum = rank2(2, 0, -1, -2, {2, 1});
    DividedSequence shape({{0, 3}, {1, 1}}, datum);
    CHECK(shape.expansion() == Seq{0, 0, 0, 1});
    CHECK(shape.anglePairing() == 6); // 3*2/2 * r_i = 3 * 2
    CHECK(shape.factorial(datum) == quantum_factorial(3, 2));
    CHECK_THROWS_AS(DividedSequence({{1, 2}}, datum), ImaginaryDividedPower);
    DividedSequence plain({{1, 1}, {0, 1}}, datum);
    CHECK(plain.anglePairing() == 0);
    CHECK(plain.factorial(datum) == LaurentPoly(Int(1)));
}

TEST_CASE("weights parse and render") {
    auto datum = rank2(2, 0, -1, -1, {1, 1});
    Weight nu = Weight::parse("i:2,j:1", datum);
    CHECK(nu.ht() == 3);
    CHECK(nu.str(datum) == "i:2,j:1");
    CHECK(nu.sequences().size() == 3);
    Seq seq = seqParse("i j i", datum);
    CHECK(seq == Seq{0, 1, 0});
    CHECK(seqStr(seq, datum) == "i j i");
}
