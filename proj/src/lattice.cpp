#include "nsing/lattice.hpp"

#include <boost/multiprecision/integer.hpp>

namespace nsing {

const char* error_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::NonPrimitiveInput: return "NonPrimitiveInput";
        case ErrorKind::EqualVectors: return "EqualVectors";
        case ErrorKind::NonCoprime: return "NonCoprime";
        case ErrorKind::NotEmpty: return "NotEmpty";
        case ErrorKind::Degenerate: return "Degenerate";
        case ErrorKind::NotAVertex: return "NotAVertex";
        case ErrorKind::NotIsolated: return "NotIsolated";
        case ErrorKind::NoCompactFace: return "NoCompactFace";
        case ErrorKind::NotRationalHomologySphere: return "NotRationalHomologySphere";
        case ErrorKind::NotNegativeDefinite: return "NotNegativeDefinite";
        case ErrorKind::NegativeDefinitenessViolated: return "NegativeDefinitenessViolated";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::NotTree: return "NotTree";
        case ErrorKind::KindMismatch: return "KindMismatch";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::InternalCheckFailed: return "InternalCheckFailed";
    }
    return "Unknown";
}

Rational make_rat(const BigInt& n, const BigInt& d) {
    if (d == 0) throw std::domain_error("zero denominator");
    Rational r(n);
    r /= d;
    return r;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    BigInt r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }
BigInt floor(const Rational& r) { return floor_div(num(r), den(r)); }
BigInt ceil(const Rational& r) { return ceil_div(num(r), den(r)); }
bool is_integral(const Rational& r) { return den(r) == 1; }

std::string to_string(const Rational& r) { return num(r).str() + "/" + den(r).str(); }

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return make_rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

std::string IntVec3::str() const {
    return "(" + x[0].str() + "," + x[1].str() + "," + x[2].str() + ")";
}

IntVec3 unit(int i) {
    IntVec3 e(0, 0, 0);
    e[i] = 1;
    return e;
}

BigInt dot(const IntVec3& a, const IntVec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

IntVec3 cross(const IntVec3& a, const IntVec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

BigInt content(const IntVec3& v) {
    BigInt g = 0;
    for (int i = 0; i < 3; ++i) g = boost::multiprecision::gcd(g, abs(v[i]));
    return g;
}

bool is_primitive(const IntVec3& v) { return content(v) == 1; }

IntVec3 primitive_part(const IntVec3& v) {
    BigInt c = content(v);
    if (c == 0) return v;
    return {v[0] / c, v[1] / c, v[2] / c};
}

static void require_pair(const IntVec3& a, const IntVec3& b) {
    if (!is_primitive(a) || !is_primitive(b))
        throw Error(ErrorKind::NonPrimitiveInput, a.str() + ", " + b.str());
    if (a == b) throw Error(ErrorKind::EqualVectors, a.str());
}

BigInt determinant_alpha(const IntVec3& a, const IntVec3& b) {
    require_pair(a, b);
    BigInt c = content(cross(a, b));
    // a = -b is the only way two distinct primitive vectors are parallel
    if (c == 0) throw Error(ErrorKind::EqualVectors, "parallel vectors " + a.str() + ", " + b.str());
    return c;
}

BigInt denominator_beta(const IntVec3& a, const IntVec3& b, int unit_choice) {
    BigInt alpha = determinant_alpha(a, b);
    if (alpha == 1) return unit_choice;
    BigInt found = -1;
    for (BigInt beta = 0; beta < alpha; ++beta) {
        if (content(a * beta + b) % alpha == 0) {
            check(found < 0, "denominator not unique for " + a.str() + ", " + b.str());
            found = beta;
        }
    }
    check(found >= 0, "no denominator for " + a.str() + ", " + b.str());
    return found;
}

Rational CFExpansion::value() const {
    check(!terms.empty(), "empty continued fraction");
    Rational v(terms.back());
    for (size_t i = terms.size() - 1; i-- > 0;) v = Rational(terms[i]) - 1 / v;
    return v;
}

CFExpansion negative_cf(const BigInt& alpha, const BigInt& beta) {
    if (beta <= 0 || beta > alpha) throw Error(ErrorKind::PreconditionViolated, "need 0 < beta <= alpha");
    if (boost::multiprecision::gcd(alpha, beta) != 1)
        throw Error(ErrorKind::NonCoprime, alpha.str() + "/" + beta.str());
    CFExpansion cf;
    BigInt p = alpha, q = beta;
    while (q != 0) {
        BigInt b = ceil_div(p, q);
        cf.terms.push_back(b);
        BigInt r = b * q - p;
        p = q;
        q = r;
    }
    return cf;
}

BigInt continuant(const std::vector<BigInt>& b, size_t from) {
    BigInt cur = 1, next = 0;
    for (size_t i = b.size(); i-- > from;) {
        BigInt k = b[i] * cur - next;
        next = cur;
        cur = k;
    }
    return cur;
}

PrimitiveSequence canonical_primitive_sequence(const IntVec3& a, const IntVec3& b, int unit_choice) {
    PrimitiveSequence ps;
    ps.alpha = determinant_alpha(a, b);
    ps.beta = denominator_beta(a, b, unit_choice);
    if (ps.beta == 0) return ps;
    ps.cf = negative_cf(ps.alpha, ps.beta);
    IntVec3 a1 = a * ps.beta + b;
    check(content(a1) % ps.alpha == 0, "first vector not divisible by alpha");
    a1 = {a1[0] / ps.alpha, a1[1] / ps.alpha, a1[2] / ps.alpha};
    IntVec3 prev = a, cur = a1;
    for (size_t i = 0; i < ps.cf.terms.size(); ++i) {
        ps.vectors.push_back(cur);
        IntVec3 nxt = cur * ps.cf.terms[i] - prev;
        prev = cur;
        cur = nxt;
    }
    check(cur == b, "primitive sequence does not close at " + b.str());
    return ps;
}

}  // namespace nsing
