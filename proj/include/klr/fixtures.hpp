#pragma once

// The standard fixture set used by the verification suites: rank-1 real,
// rank-1 imaginary (a_ii = 0 and -2), rank-2 real/imaginary mixes with
// a_ij in {-1, -2}, a rank-2 real pair with unequal symmetrizer, and a
// rank-3 datum containing an orthogonal pair.

#include "klr/datum.hpp"

#include <vector>

namespace klr {

struct Fixture {
    std::string name;
    BorcherdsCartanDatum datum;
};

const std::vector<Fixture>& fixtureDatums();
const BorcherdsCartanDatum& fixtureByName(const std::string& name);

} // namespace klr
