#include "klr/qgroup.hpp"

#include "klr/fixtures.hpp"

#include <doctest.h>

#include <random>

using namespace klr;

TEST_CASE("coproduct expansion") {
    const auto& datum = fixtureByName("rank2-mix1"); // i.j = -1
    QGroup qg(datum);

    SUBCASE("single letter") {
        auto terms = qg.rhoExpand(Seq{0});
        REQUIRE(terms.size() == 2);
        for (const auto& t : terms) CHECK(t.coeff == LaurentPoly(Int(1)));
    }
    SUBCASE("two letters pick up the twist on the crossed split") {
        auto terms = qg.rhoExpand(Seq{0, 1});
        REQUIRE(terms.size() == 4);
        for (const auto& t : terms) {
            if (t.left == Seq{1} && t.right == Seq{0}) {
                CHECK(t.coeff == LaurentPoly::q(1)); // q^{-i.j}
            } else {
                CHECK(t.coeff == LaurentPoly(Int(1)));
            }
        }
    }
    SUBCASE("the all-right split always has coefficient 1") {
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<int> labelDist(0, datum.rank() - 1);
        for (int t = 0; t < 20; t++) {
            Seq w(4);
            for (auto& s : w) s = labelDist(rng);
            for (const auto& term : qg.rhoExpand(w))
                if (term.left.empty()) CHECK(term.coeff == LaurentPoly(Int(1)));
        }
    }
}

TEST_CASE("pairing base cases and small words") {
    const auto& datum = fixtureByName("rank2-real"); // r = (1,2), i.j = -2
    QGroup qg(datum);

    SUBCASE("{f_i, f_i} = (1 - q_i^2)^{-1}") {
        CHECK(qg.pairSeries({0}, {0}, 12).equalUpToCommonCap(geom_inverse(2, 12)));
        CHECK(qg.pairSeries({1}, {1}, 12).equalUpToCommonCap(geom_inverse(4, 12)));
    }
    SUBCASE("different weights pair to zero") {
        CHECK(qg.pairWords({0}, {1}).isZero());
        CHECK(qg.pairWords({0, 0}, {0}).isZero());
    }
    SUBCASE("{f_i f_j, f_i f_j} is the product of the single-letter values") {
        QSeries expected = geom_inverse(2, 12) * geom_inverse(4, 12);
        CHECK(qg.pairSeries({0, 1}, {0, 1}, 12).equalUpToCommonCap(expected));
        // and for an orthogonal pair as well
        const auto& orth = fixtureByName("rank3-orth");
        QGroup qo(orth);
        QSeries expOrth = geom_inverse(2, 12) * geom_inverse(2, 12);
        CHECK(qo.pairSeries({0, 2}, {0, 2}, 12).equalUpToCommonCap(expOrth));
    }
    SUBCASE("{f_i f_j, f_j f_i} carries q^{-i.j}") {
        QSeries expected = (geom_inverse(2, 12) * geom_inverse(4, 12)).shifted(2);
        CHECK(qg.pairSeries({0, 1}, {1, 0}, 12).equalUpToCommonCap(expected));
        PairingValue v = qg.pairWords({0, 1}, {1, 0});
        CHECK(v.num == LaurentPoly::q(2));
    }
}

TEST_CASE("pairing is symmetric and weight-diagonal") {
    std::mt19937_64 rng(7);
    for (const char* name : {"rank2-mix1", "rank2-mix2", "rank3-orth"}) {
        const auto& datum = fixtureByName(name);
        QGroup qg(datum);
        std::uniform_int_distribution<int> labelDist(0, datum.rank() - 1);
        for (int trial = 0; trial < 30; trial++) {
            Seq base(3);
            for (auto& s : base) s = labelDist(rng);
            Weight nu = Weight::ofSequence(base);
            auto seqs = nu.sequences();
            std::uniform_int_distribution<size_t> pick(0, seqs.size() - 1);
            Seq x = seqs[pick(rng)], y = seqs[pick(rng)];
            QSeries xy = qg.pairSeries(x, y, 14);
            QSeries yx = qg.pairSeries(y, x, 14);
            CHECK(xy.equalUpToCommonCap(yx).has_value());
        }
    }
}

TEST_CASE("closed forms expand consistently") {
    const auto& datum = fixtureByName("rank1-imag2");
    QGroup qg(datum);
    PairingValue v = qg.pairWords({0, 0}, {0, 0});
    // {f_i^2, f_i^2} = (1 + q^2) (1-q^2)^{-2} for i.i = -2
    QSeries viaClosed = v.expand(14);
    QSeries expected =
        (geom_inverse(2, 16) * geom_inverse(2, 16) * LaurentPoly::parse("1 + q^2"));
    CHECK(viaClosed.equalUpToCommonCap(expected).has_value());
    CHECK(!v.str().empty());
}

TEST_CASE("serre elements") {
    const auto& datum = fixtureByName("rank2-mix1"); // a_ij = -1, m = 2
    QGroup qg(datum);

    SUBCASE("term structure for a_ij = -1") {
        auto terms = qg.serreElement(0, 1);
        REQUIRE(terms.size() == 3);
        CHECK(terms[0].word == Seq{1, 0, 0}); // r = 0: f_j f_i^2
        CHECK(terms[0].sign == 1);
        CHECK(terms[0].denom == quantum_factorial(2, 1));
        CHECK(terms[1].word == Seq{0, 1, 0});
        CHECK(terms[1].sign == -1);
        CHECK(terms[1].denom == LaurentPoly(Int(1)));
        CHECK(terms[2].word == Seq{0, 0, 1});
        CHECK(terms[2].sign == 1);
    }
    SUBCASE("orthogonal case reduces to the commutator") {
        const auto& orth = fixtureByName("rank3-orth");
        QGroup qo(orth);
        auto terms = qo.serreElement(0, 2); // a_ik = 0, m = 1
        REQUIRE(terms.size() == 2);
        CHECK(terms[0].word == Seq{2, 0});
        CHECK(terms[1].word == Seq{0, 2});
        CHECK(terms[0].sign * terms[1].sign == -1);
    }
    SUBCASE("serre element is in the radical of the pairing") {
        auto serre = qg.serreElement(0, 1);
        Weight nu;
        nu.add(0, 2);
        nu.add(1, 1);
        for (const Seq& w : nu.sequences())
            CHECK(qg.pairSerreWithWord(serre, {}, {}, w, 16).isZero());
    }
    CHECK_THROWS_AS(qg.serreElement(1, 0), RealIndexError); // j is imaginary here
}

TEST_CASE("commutation check for orthogonal pairs") {
    const auto& orth = fixtureByName("rank3-orth");
    QGroup qg(orth);
    CHECK(qg.commutationCheck(0, 2, 16));
    CHECK_THROWS_AS(qg.commutationCheck(0, 1, 16), BadPair);
    // i = j is allowed exactly when i.i = 0
    const auto& imag0 = fixtureByName("rank1-imag0");
    QGroup q0(imag0);
    CHECK(q0.commutationCheck(0, 0, 16));
}

TEST_CASE("orthogonal imaginary pair commutes under the form") {
    RawDatum raw;
    raw.indices = {"u", "v"};
    raw.A = {{0, 0}, {0, -2}};
    raw.D = std::vector<long>{1, 1};
    BorcherdsCartanDatum datum = BorcherdsCartanDatum::validate(raw);
    QGroup qg(datum);
    CHECK(qg.commutationCheck(0, 1, 16));
}

TEST_CASE("dual oracle: pairing equals corner gdim on small sweeps") {
    for (const char* name : {"rank1-real", "rank1-imag0", "rank2-mix1", "rank2-real"}) {
        const auto& datum = fixtureByName(name);
        KlrAlgebra algebra(datum);
        QGroup qg(datum);
        std::vector<Weight> weights;
        {
            // all weights of height <= 3
            std::function<void(int, Weight)> rec = [&](int idx, Weight acc) {
                if (idx == datum.rank()) {
                    if (acc.ht() >= 1) weights.push_back(acc);
                    return;
                }
                for (int c = 0; acc.ht() + c <= 3; c++) {
                    Weight w = acc;
                    w.add(idx, c);
                    rec(idx + 1, w);
                }
            };
            rec(0, Weight());
        }
        for (const Weight& nu : weights)
            for (const Seq& x : nu.sequences())
                for (const Seq& y : nu.sequences())
                    CHECK(qg.matchPairingWithGdim(x, y, algebra, 16));
    }
}

TEST_CASE("free-algebra elements pair bilinearly") {
    const auto& orth = fixtureByName("rank3-orth");
    QGroup qg(orth);
    // the commutator of an orthogonal pair is in the radical
    FreeQElement commutator = FreeQElement::ofWord({0, 2}) - FreeQElement::ofWord({2, 0});
    for (const Seq& w : {Seq{0, 2}, Seq{2, 0}})
        CHECK(qg.pairElements(commutator, FreeQElement::ofWord(w), 16).isZero());
    // concatenation product and scalar coefficients
    FreeQElement padded = FreeQElement::ofWord({1}) * commutator;
    Weight nu = Weight::ofSequence({1, 0, 2});
    for (const Seq& w : nu.sequences())
        CHECK(qg.pairElements(padded, FreeQElement::ofWord(w), 16).isZero());
    FreeQElement scaled;
    scaled.add({0}, LaurentPoly::q(3));
    QSeries v = qg.pairElements(scaled, FreeQElement::ofWord({0}), 12);
    CHECK(v.equalUpToCommonCap(geom_inverse(2, 14).shifted(3)).has_value());
}

TEST_CASE("the Serre bound is 1 - a_ij, not 1 - i.j") {
    // On the unequal-symmetrizer fixture the two candidate bounds differ in
    // the j -> i direction (a_ji = -1, j.i = -2); only the Cartan-entry
    // bound yields an element in the radical of the pairing.
    const auto& datum = fixtureByName("rank2-real");
    QGroup qg(datum);
    auto radicalWithBound = [&](int i, int j, long m) {
        std::vector<QGroup::SerreTerm> terms;
        for (long r = 0; r <= m; r++) {
            long s = m - r;
            QGroup::SerreTerm t;
            for (long u = 0; u < r; u++) t.word.push_back(i);
            t.word.push_back(j);
            for (long u = 0; u < s; u++) t.word.push_back(i);
            t.sign = (r % 2 == 0) ? 1 : -1;
            t.denom = quantum_factorial(r, datum.r(i)) * quantum_factorial(s, datum.r(i));
            terms.push_back(t);
        }
        Weight nu;
        nu.add(i, static_cast<int>(m));
        nu.add(j, 1);
        for (const Seq& w : nu.sequences())
            if (!qg.pairSerreWithWord(terms, {}, {}, w, 20).isZero()) return false;
        return true;
    };
    REQUIRE(1 - datum.a(1, 0) == 2);
    REQUIRE(1 - datum.bilinear(1, 0) == 3);
    CHECK(radicalWithBound(1, 0, 2));
    CHECK(!radicalWithBound(1, 0, 3));
}

TEST_CASE("pairing unit: {1, 1} = 1") {
    const auto& datum = fixtureByName("rank1-real");
    QGroup qg(datum);
    PairingValue v = qg.pairWords({}, {});
    CHECK(v.num == LaurentPoly(Int(1)));
    CHECK(v.denom.empty());
}
