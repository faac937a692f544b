#pragma once

// Exact arithmetic scalars. Everything in this library is computed over
// arbitrary-precision integers and rationals; no floating point anywhere.

#include <gmpxx.h>
#include <string>

namespace klr {

using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Int& n) { return n.get_str(); }

inline std::string to_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_str();
}

inline bool is_zero(const Int& n) { return sgn(n) == 0; }
inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

} // namespace klr
