#pragma once

// Small exact-rational linear algebra kit: row reduction, rank, nullspace,
// and an incremental row-space basis.  Everything is dense; the modules in
// scope have dimension at most a few dozen.

#include "klr/rational.hpp"

#include <vector>

namespace klr {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>; // row-major

RatMat matMul(const RatMat& a, const RatMat& b);
RatMat matAdd(const RatMat& a, const RatMat& b);
RatMat matSub(const RatMat& a, const RatMat& b);
RatMat matScale(const RatMat& a, const Rat& c);
RatMat matIdentity(int n);
RatMat matZero(int rows, int cols);
RatVec matApply(const RatMat& a, const RatVec& v);
bool matIsZero(const RatMat& a);
Rat matTrace(const RatMat& a);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rowReduce(RatMat& m);

int rank(RatMat m);

// Basis of {x : m x = 0} (column nullspace).
std::vector<RatVec> nullspaceBasis(const RatMat& m);

// Incrementally maintained row space in reduced echelon form.
class Subspace {
public:
    explicit Subspace(int ambientDim) : dim_(ambientDim) {}

    // Returns true when v enlarged the span.
    bool insert(RatVec v);
    bool contains(RatVec v) const;
    bool containsSubspace(const Subspace& other) const;
    int dim() const { return static_cast<int>(rows_.size()); }
    int ambientDim() const { return dim_; }
    const std::vector<RatVec>& basis() const { return rows_; }

    bool operator==(const Subspace& o) const { return rows_ == o.rows_; }

private:
    int dim_;
    std::vector<RatVec> rows_; // reduced echelon, sorted by pivot
};

} // namespace klr
