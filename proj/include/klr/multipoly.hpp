#pragma once

// Sparse exact-rational multivariate polynomials in x_1..x_n, y_1..y_n.
// Variables are addressed by id: x_k has id k-1, y_k has id n+k-1.

#include "klr/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace klr {

struct InternalDivisionFailure : std::logic_error {
    explicit InternalDivisionFailure(const std::string& what) : std::logic_error(what) {}
};

// Exponent vector over 2n variables.
using Mono = std::vector<int>;

class MultiPoly {
public:
    MultiPoly() = default;
    static MultiPoly constant(int n, const Rat& c);
    static MultiPoly variable(int n, int varId, int power = 1);
    static MultiPoly ofMono(const Mono& m, const Rat& c);

    bool isZero() const { return terms_.empty(); }
    int numVars() const; // 2n; 0 when zero polynomial
    const std::map<Mono, Rat>& terms() const { return terms_; }
    Rat coeff(const Mono& m) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const Rat& c) const;
    MultiPoly& operator+=(const MultiPoly& o);

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Substitute variables: out-variable id = varMap[in-variable id].
    MultiPoly renameVars(const std::vector<int>& varMap) const;
    MultiPoly swapVars(int idA, int idB) const;

    // Exact division by (u - v) for variable ids u, v: synthetic division
    // with a mandatory zero-remainder assertion; a nonzero remainder throws
    // InternalDivisionFailure (an implementation bug, never legitimate input).
    MultiPoly divideByVarDiff(int u, int v) const;

    int totalDegree() const; // max over terms; -1 for zero

    std::string str(int n) const; // n strands: names x1..xn, y1..yn

    void addTerm(const Mono& m, const Rat& c);

private:
    std::map<Mono, Rat> terms_;
};

// All monomials in `vars` variables of total degree <= maxDegree.
std::vector<Mono> monomialsUpToDegree(int vars, int maxDegree);

} // namespace klr
