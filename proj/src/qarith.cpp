#include "klr/qarith.hpp"

#include <cctype>
#include <sstream>

namespace klr {

LaurentPoly::LaurentPoly(Int constant) {
    if (!is_zero(constant)) coeffs_[0] = std::move(constant);
}

LaurentPoly LaurentPoly::monomial(Int coeff, long exponent) {
    LaurentPoly p;
    if (!is_zero(coeff)) p.coeffs_[exponent] = std::move(coeff);
    return p;
}

long LaurentPoly::minExponent() const {
    if (coeffs_.empty()) throw QArithError("minExponent of zero polynomial");
    return coeffs_.begin()->first;
}

long LaurentPoly::maxExponent() const {
    if (coeffs_.empty()) throw QArithError("maxExponent of zero polynomial");
    return coeffs_.rbegin()->first;
}

Int LaurentPoly::coeff(long exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Int(0) : it->second;
}

void LaurentPoly::addTerm(long exponent, const Int& c) {
    if (is_zero(c)) return;
    Int& slot = coeffs_[exponent];
    slot += c;
    if (is_zero(slot)) coeffs_.erase(exponent);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) r.addTerm(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) r.addTerm(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) r.addTerm(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::shifted(long by) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + by] = c;
    return r;
}

Int LaurentPoly::evalAtOne() const {
    Int s(0);
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
    return r;
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        Int a = c;
        if (first) {
            if (sgn(a) < 0) { out << "-"; a = -a; }
        } else {
            out << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << "q";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

namespace {

// Grammar accepted by parse(): terms joined by +/-, each term of the form
// "c", "q", "q^e", "c*q^e" or "c q^e", with e possibly negative.
struct PolyParser {
    const std::string& s;
    size_t pos = 0;
    explicit PolyParser(const std::string& text) : s(text) {}

    void skipWs() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
    }

    bool eat(char c) {
        skipWs();
        if (pos < s.size() && s[pos] == c) { pos++; return true; }
        return false;
    }

    long parseSignedLong() {
        skipWs();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = (s[pos++] == '-');
        skipWs();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw QArithError("expected integer at position " + std::to_string(pos));
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return neg ? -v : v;
    }

    LaurentPoly parse() {
        LaurentPoly p;
        skipWs();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        while (true) {
            parseTerm(p, neg);
            skipWs();
            if (pos >= s.size()) break;
            if (eat('+')) neg = false;
            else if (eat('-')) neg = true;
            else throw QArithError("unexpected character in polynomial: " + s.substr(pos));
        }
        return p;
    }

    void parseTerm(LaurentPoly& p, bool neg) {
        skipWs();
        Int c(1);
        bool sawCoeff = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::string digits;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                digits.push_back(s[pos++]);
            c = Int(digits);
            sawCoeff = true;
        }
        skipWs();
        if (pos < s.size() && s[pos] == '*') pos++;
        skipWs();
        long e = 0;
        if (pos < s.size() && s[pos] == 'q') {
            pos++;
            e = 1;
            if (eat('^')) e = parseSignedLong();
        } else if (!sawCoeff) {
            throw QArithError("empty term in polynomial");
        }
        if (neg) c = -c;
        p.addTerm(e, c);
    }
};

} // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    std::string trimmed = text;
    if (trimmed == "0") return LaurentPoly();
    PolyParser parser(text);
    return parser.parse();
}

QSeries QSeries::fromPoly(const LaurentPoly& p, long cap) {
    long floor = p.isZero() ? 0 : p.minExponent();
    QSeries s(floor, cap);
    for (const auto& [e, c] : p.coeffs())
        if (e <= cap) s.coeffs_[e] = c;
    return s;
}

QSeries QSeries::one(long cap) { return fromPoly(LaurentPoly(Int(1)), cap); }

Int QSeries::coeff(long exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Int(0) : it->second;
}

void QSeries::addTerm(long exponent, const Int& c) {
    if (exponent > cap_ || is_zero(c)) return;
    if (exponent < floor_) floor_ = exponent;
    Int& slot = coeffs_[exponent];
    slot += c;
    if (is_zero(slot)) coeffs_.erase(exponent);
}

QSeries QSeries::operator+(const QSeries& o) const {
    QSeries r(std::min(floor_, o.floor_), std::min(cap_, o.cap_));
    for (const auto& [e, c] : coeffs_) r.addTerm(e, c);
    for (const auto& [e, c] : o.coeffs_) r.addTerm(e, c);
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const {
    QSeries r(std::min(floor_, o.floor_), std::min(cap_, o.cap_));
    for (const auto& [e, c] : coeffs_) r.addTerm(e, c);
    for (const auto& [e, c] : o.coeffs_) r.addTerm(e, -c);
    return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
    // Coefficient at e is fully known iff every contributing pair is tracked:
    // e <= min(cap + o.floor, o.cap + floor).
    QSeries r(floor_ + o.floor_, std::min(cap_ + o.floor_, o.cap_ + floor_));
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_)
            r.addTerm(e1 + e2, c1 * c2);
    return r;
}

QSeries QSeries::operator*(const LaurentPoly& p) const {
    // Result coeff at e sums this->coeff(e - d) over p's exponents d; it is
    // fully known iff e - d <= cap for every d, i.e. e <= cap + minExponent.
    if (p.isZero()) return QSeries(0, cap_);
    QSeries r(floor_ + p.minExponent(), cap_ + p.minExponent());
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : p.coeffs())
            r.addTerm(e1 + e2, c1 * c2);
    return r;
}

QSeries QSeries::scaled(const Int& c) const {
    QSeries r(floor_, cap_);
    if (is_zero(c)) return r;
    for (const auto& [e, a] : coeffs_) r.coeffs_[e] = a * c;
    return r;
}

QSeries QSeries::shifted(long by) const {
    QSeries r(floor_ + by, cap_ + by);
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + by] = c;
    return r;
}

std::optional<long> QSeries::equalUpToCommonCap(const QSeries& o) const {
    long commonCap = std::min(cap_, o.cap_);
    for (const auto& [e, c] : coeffs_)
        if (e <= commonCap && c != o.coeff(e)) return std::nullopt;
    for (const auto& [e, c] : o.coeffs_)
        if (e <= commonCap && c != coeff(e)) return std::nullopt;
    return commonCap;
}

std::string QSeries::str() const {
    std::ostringstream out;
    LaurentPoly view;
    for (const auto& [e, c] : coeffs_) view.addTerm(e, c);
    out << view.str() << " + O(q^" << (cap_ + 1) << ")";
    return out.str();
}

LaurentPoly quantum_int(long n, long r) {
    if (n <= 0 || r <= 0) throw QArithError("quantum_int requires n >= 1, r >= 1");
    LaurentPoly p;
    for (long e = n - 1; e >= 1 - n; e -= 2) p.addTerm(r * e, Int(1));
    return p;
}

LaurentPoly quantum_factorial(long n, long r) {
    if (n < 0) throw QArithError("quantum_factorial requires n >= 0");
    LaurentPoly p{Int(1)};
    for (long k = 1; k <= n; k++) p *= quantum_int(k, r);
    return p;
}

QSeries geom_inverse(long c, long cap) {
    if (c <= 0) throw QArithError("geom_inverse requires c >= 1");
    QSeries s(0, cap);
    for (long e = 0; e <= cap; e += c) s.addTerm(e, Int(1));
    return s;
}

QSeries series_div_exact(const QSeries& num, const LaurentPoly& den) {
    if (den.isZero()) throw QArithError("series_div_exact: zero denominator");
    long m = den.minExponent();
    Int lead = den.coeff(m);
    if (lead != 1 && lead != -1)
        throw QArithError("NotInvertibleLeading: denominator lowest coefficient is " +
                          lead.get_str() + ", must be +-1");
    long resultCap = num.cap() - den.maxExponent();
    long resultFloor = num.floorExp() - m;
    QSeries s(resultFloor, resultCap);
    // Forward substitution from the lowest exponent: the coefficient of q^e in
    // s is determined by num at e+m and previously computed s-coefficients.
    for (long e = resultFloor; e <= resultCap; e++) {
        Int acc = num.coeff(e + m);
        for (const auto& [d, c] : den.coeffs()) {
            if (d == m) continue;
            long prior = e + m - d;
            if (prior >= resultFloor && prior < e) acc -= c * s.coeff(prior);
        }
        if (lead == -1) acc = -acc;
        s.addTerm(e, acc);
    }
    return s;
}

} // namespace klr
