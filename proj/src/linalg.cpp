#include "klr/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace klr {

RatMat matMul(const RatMat& a, const RatMat& b) {
    if (a.empty() || b.empty()) return {};
    const size_t n = a.size(), m = b[0].size(), inner = b.size();
    RatMat r(n, RatVec(m, Rat(0)));
    for (size_t i = 0; i < n; i++)
        for (size_t k = 0; k < inner; k++) {
            if (is_zero(a[i][k])) continue;
            for (size_t j = 0; j < m; j++) {
                if (is_zero(b[k][j])) continue;
                r[i][j] += a[i][k] * b[k][j];
                r[i][j].canonicalize();
            }
        }
    return r;
}

RatMat matAdd(const RatMat& a, const RatMat& b) {
    RatMat r = a;
    for (size_t i = 0; i < r.size(); i++)
        for (size_t j = 0; j < r[i].size(); j++) {
            r[i][j] += b[i][j];
            r[i][j].canonicalize();
        }
    return r;
}

RatMat matSub(const RatMat& a, const RatMat& b) { return matAdd(a, matScale(b, Rat(-1))); }

RatMat matScale(const RatMat& a, const Rat& c) {
    RatMat r = a;
    for (auto& row : r)
        for (auto& v : row) {
            v *= c;
            v.canonicalize();
        }
    return r;
}

RatMat matIdentity(int n) {
    RatMat r(n, RatVec(n, Rat(0)));
    for (int i = 0; i < n; i++) r[i][i] = Rat(1);
    return r;
}

RatMat matZero(int rows, int cols) { return RatMat(rows, RatVec(cols, Rat(0))); }

RatVec matApply(const RatMat& a, const RatVec& v) {
    RatVec r(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < v.size(); j++) {
            if (is_zero(a[i][j]) || is_zero(v[j])) continue;
            r[i] += a[i][j] * v[j];
            r[i].canonicalize();
        }
    return r;
}

bool matIsZero(const RatMat& a) {
    for (const auto& row : a)
        for (const auto& v : row)
            if (!is_zero(v)) return false;
    return true;
}

Rat matTrace(const RatMat& a) {
    Rat t(0);
    for (size_t i = 0; i < a.size(); i++) t += a[i][i];
    t.canonicalize();
    return t;
}

std::vector<int> rowReduce(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; c++) {
        size_t sel = r;
        while (sel < rows && is_zero(m[sel][c])) sel++;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Rat inv = 1 / m[r][c];
        for (size_t j = c; j < cols; j++) {
            m[r][j] *= inv;
            m[r][j].canonicalize();
        }
        for (size_t i = 0; i < rows; i++) {
            if (i == r || is_zero(m[i][c])) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; j++) {
                m[i][j] -= f * m[r][j];
                m[i][j].canonicalize();
            }
        }
        pivots.push_back(static_cast<int>(c));
        r++;
    }
    return pivots;
}

int rank(RatMat m) { return static_cast<int>(rowReduce(m).size()); }

std::vector<RatVec> nullspaceBasis(const RatMat& m) {
    if (m.empty()) return {};
    const size_t cols = m[0].size();
    RatMat red = m;
    std::vector<int> pivots = rowReduce(red);
    std::vector<bool> isPivot(cols, false);
    for (int p : pivots) isPivot[p] = true;
    std::vector<RatVec> basis;
    for (size_t freeCol = 0; freeCol < cols; freeCol++) {
        if (isPivot[freeCol]) continue;
        RatVec v(cols, Rat(0));
        v[freeCol] = Rat(1);
        for (size_t pi = 0; pi < pivots.size(); pi++) {
            // row pi: x_{pivot} + sum_{j>pivot} red[pi][j] x_j = 0
            v[pivots[pi]] = -red[pi][freeCol];
            v[pivots[pi]].canonicalize();
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool Subspace::insert(RatVec v) {
    if (static_cast<int>(v.size()) != dim_)
        throw std::invalid_argument("Subspace::insert dimension mismatch");
    for (const auto& row : rows_) {
        // eliminate at the row's pivot
        size_t p = 0;
        while (p < row.size() && is_zero(row[p])) p++;
        if (p == row.size()) continue;
        if (!is_zero(v[p])) {
            Rat f = v[p];
            for (size_t j = 0; j < v.size(); j++) {
                v[j] -= f * row[j];
                v[j].canonicalize();
            }
        }
    }
    size_t p = 0;
    while (p < v.size() && is_zero(v[p])) p++;
    if (p == v.size()) return false;
    Rat inv = 1 / v[p];
    for (auto& x : v) {
        x *= inv;
        x.canonicalize();
    }
    // back-eliminate this pivot from existing rows, keep rows sorted by pivot
    for (auto& row : rows_) {
        if (!is_zero(row[p])) {
            Rat f = row[p];
            for (size_t j = 0; j < row.size(); j++) {
                row[j] -= f * v[j];
                row[j].canonicalize();
            }
        }
    }
    rows_.push_back(std::move(v));
    std::sort(rows_.begin(), rows_.end(), [](const RatVec& a, const RatVec& b) {
        size_t pa = 0, pb = 0;
        while (pa < a.size() && is_zero(a[pa])) pa++;
        while (pb < b.size() && is_zero(b[pb])) pb++;
        return pa < pb;
    });
    return true;
}

bool Subspace::contains(RatVec v) const {
    for (const auto& row : rows_) {
        size_t p = 0;
        while (p < row.size() && is_zero(row[p])) p++;
        if (p == row.size()) continue;
        if (!is_zero(v[p])) {
            Rat f = v[p];
            for (size_t j = 0; j < v.size(); j++) {
                v[j] -= f * row[j];
                v[j].canonicalize();
            }
        }
    }
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

bool Subspace::containsSubspace(const Subspace& other) const {
    for (const auto& row : other.rows_)
        if (!contains(row)) return false;
    return true;
}

} // namespace klr
