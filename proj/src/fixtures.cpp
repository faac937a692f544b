#include "klr/fixtures.hpp"

#include <stdexcept>

namespace klr {

namespace {

Fixture make(std::string name, std::vector<std::string> indices,
             std::vector<std::vector<long>> A, std::vector<long> D) {
    RawDatum raw;
    raw.indices = std::move(indices);
    raw.A = std::move(A);
    raw.D = std::move(D);
    return {std::move(name), BorcherdsCartanDatum::validate(raw)};
}

} // namespace

const std::vector<Fixture>& fixtureDatums() {
    static const std::vector<Fixture> fixtures = [] {
        std::vector<Fixture> v;
        v.push_back(make("rank1-real", {"i"}, {{2}}, {1}));
        v.push_back(make("rank1-imag0", {"i"}, {{0}}, {1}));
        v.push_back(make("rank1-imag2", {"i"}, {{-2}}, {1}));
        v.push_back(make("rank2-mix1", {"i", "j"}, {{2, -1}, {-1, 0}}, {1, 1}));
        v.push_back(make("rank2-mix2", {"i", "j"}, {{2, -2}, {-2, -2}}, {1, 1}));
        v.push_back(make("rank2-real", {"i", "j"}, {{2, -2}, {-1, 2}}, {1, 2}));
        v.push_back(make("rank3-orth", {"i", "j", "k"},
                         {{2, -1, 0}, {-1, 0, -1}, {0, -1, -2}}, {1, 1, 1}));
        return v;
    }();
    return fixtures;
}

const BorcherdsCartanDatum& fixtureByName(const std::string& name) {
    for (const Fixture& f : fixtureDatums())
        if (f.name == name) return f.datum;
    throw std::invalid_argument("unknown fixture datum: " + name);
}

} // namespace klr
