#pragma once

// Exact arithmetic in the formal variable q: integer Laurent polynomials,
// truncated Laurent series, quantum integers/factorials and exact series
// division by unit-lowest-coefficient denominators.

#include "klr/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace klr {

struct QArithError : std::runtime_error {
    explicit QArithError(const std::string& what) : std::runtime_error(what) {}
};

// Integer Laurent polynomial, canonical form: no stored zero coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(Int constant);
    static LaurentPoly monomial(Int coeff, long exponent);
    static LaurentPoly q(long exponent = 1) { return monomial(Int(1), exponent); }

    bool isZero() const { return coeffs_.empty(); }
    long minExponent() const; // throws on zero polynomial
    long maxExponent() const;
    Int coeff(long exponent) const;
    const std::map<long, Int>& coeffs() const { return coeffs_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly shifted(long by) const; // multiply by q^by

    // Substitute q = 1 (sum of coefficients).
    Int evalAtOne() const;
    // Bar involution q -> q^{-1}.
    LaurentPoly bar() const;

    // Canonical text form "a_{-m}q^-m + ... + a_n q^n", ascending exponents.
    std::string str() const;
    static LaurentPoly parse(const std::string& text);

    void addTerm(long exponent, const Int& c);

private:
    std::map<long, Int> coeffs_;
};

// Truncated integer Laurent series.  Coefficients are tracked for exponents
// in [floor, cap]; nothing below floor exists, nothing above cap is known.
// Operations never claim knowledge beyond the deducible cap.
class QSeries {
public:
    QSeries() : floor_(0), cap_(-1) {}
    QSeries(long floor, long cap) : floor_(floor), cap_(cap) {}
    static QSeries fromPoly(const LaurentPoly& p, long cap);
    static QSeries zero(long cap) { return QSeries(0, cap); }
    static QSeries one(long cap);

    long floorExp() const { return floor_; }
    long cap() const { return cap_; }
    Int coeff(long exponent) const;
    const std::map<long, Int>& coeffs() const { return coeffs_; }
    bool isZero() const { return coeffs_.empty(); }

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries operator*(const LaurentPoly& p) const;
    QSeries scaled(const Int& c) const;
    QSeries shifted(long by) const;

    // Equality certified only up to the common cap; returns the cap at which
    // equality was certified, or nullopt if the series differ there.
    std::optional<long> equalUpToCommonCap(const QSeries& o) const;

    std::string str() const;

    void addTerm(long exponent, const Int& c); // silently drops beyond cap

private:
    long floor_;
    long cap_;
    std::map<long, Int> coeffs_;
};

// [n]_i = (q_i^n - q_i^{-n})/(q_i - q_i^{-1}) with q_i = q^r.
LaurentPoly quantum_int(long n, long r);
// [n]_i! = [n]_i [n-1]_i ... [1]_i; empty product for n = 0.
LaurentPoly quantum_factorial(long n, long r);

// (1 - q^c)^{-1} = 1 + q^c + q^{2c} + ... truncated at cap, floor 0.
QSeries geom_inverse(long c, long cap);

// Exact series division: s with s * den = num, requiring den's lowest
// coefficient to be +-1.  Result cap is num.cap - den.maxExponent (reported,
// never hidden).
QSeries series_div_exact(const QSeries& num, const LaurentPoly& den);

} // namespace klr
