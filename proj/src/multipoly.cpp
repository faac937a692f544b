#include "klr/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace klr {

MultiPoly MultiPoly::constant(int n, const Rat& c) {
    MultiPoly p;
    if (!is_zero(c)) p.terms_[Mono(2 * n, 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(int n, int varId, int power) {
    Mono m(2 * n, 0);
    m[varId] = power;
    return ofMono(m, Rat(1));
}

MultiPoly MultiPoly::ofMono(const Mono& m, const Rat& c) {
    MultiPoly p;
    if (!is_zero(c)) p.terms_[m] = c;
    return p;
}

int MultiPoly::numVars() const {
    return terms_.empty() ? 0 : static_cast<int>(terms_.begin()->first.size());
}

Rat MultiPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::addTerm(const Mono& m, const Rat& c) {
    if (is_zero(c)) return;
    Rat& slot = terms_[m];
    slot += c;
    slot.canonicalize();
    if (is_zero(slot)) terms_.erase(m);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.addTerm(m, c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, c);
    return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.addTerm(m, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

MultiPoly MultiPoly::scaled(const Rat& c) const {
    MultiPoly r;
    if (is_zero(c)) return r;
    for (const auto& [m, a] : terms_) {
        Rat v = a * c;
        v.canonicalize();
        r.terms_[m] = v;
    }
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Mono m = m1;
            for (size_t v = 0; v < m.size(); v++) m[v] += m2[v];
            r.addTerm(m, c1 * c2);
        }
    return r;
}

MultiPoly MultiPoly::renameVars(const std::vector<int>& varMap) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        Mono out(m.size(), 0);
        for (size_t v = 0; v < m.size(); v++) out[varMap[v]] += m[v];
        r.addTerm(out, c);
    }
    return r;
}

MultiPoly MultiPoly::swapVars(int idA, int idB) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        Mono out = m;
        std::swap(out[idA], out[idB]);
        r.addTerm(out, c);
    }
    return r;
}

MultiPoly MultiPoly::divideByVarDiff(int u, int v) const {
    // Repeatedly cancel terms of positive u-degree against (u - v); the sum
    // of u-exponents strictly decreases, so this terminates.  Whatever is
    // left must be zero, otherwise the dividend was not divisible.
    MultiPoly quotient;
    MultiPoly rem = *this;
    while (true) {
        auto it = std::find_if(rem.terms_.begin(), rem.terms_.end(),
                               [&](const auto& t) { return t.first[u] > 0; });
        if (it == rem.terms_.end()) break;
        Mono m = it->first;
        Rat c = it->second;
        m[u] -= 1;
        quotient.addTerm(m, c);
        // rem -= (u - v) * c * m
        Mono mu = m;
        mu[u] += 1;
        rem.addTerm(mu, -c);
        Mono mv = m;
        mv[v] += 1;
        rem.addTerm(mv, c);
    }
    if (!rem.isZero())
        throw InternalDivisionFailure("nonzero remainder in divided-difference division");
    return quotient;
}

int MultiPoly::totalDegree() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (int e : m) d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

std::string MultiPoly::str(int n) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (sgn(a) < 0) { out << "-"; a = -a; }
        } else {
            out << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        bool isConst = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
        if (a != 1 || isConst) out << to_string(a);
        for (size_t v = 0; v < m.size(); v++) {
            if (m[v] == 0) continue;
            out << (static_cast<int>(v) < n ? "x" : "y") << (static_cast<int>(v) % n) + 1;
            if (m[v] > 1) out << "^" << m[v];
        }
    }
    return out.str();
}

std::vector<Mono> monomialsUpToDegree(int vars, int maxDegree) {
    std::vector<Mono> out;
    Mono cur(vars, 0);
    std::function<void(int, int)> rec = [&](int v, int remaining) {
        if (v == vars) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; e++) {
            cur[v] = e;
            rec(v + 1, remaining - e);
        }
        cur[v] = 0;
    };
    rec(0, maxDegree);
    return out;
}

} // namespace klr
