#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "nsing/errors.hpp"

namespace nsing {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational make_rat(const BigInt& num, const BigInt& den);
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);
BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);
bool is_integral(const Rational& r);
BigInt num(const Rational& r);
BigInt den(const Rational& r);
// Always "p/q" with q > 0, including integers ("3/1").
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

struct IntVec3 {
    std::array<BigInt, 3> x{};

    IntVec3() = default;
    IntVec3(BigInt a, BigInt b, BigInt c) : x{std::move(a), std::move(b), std::move(c)} {}

    const BigInt& operator[](int i) const { return x[static_cast<size_t>(i)]; }
    BigInt& operator[](int i) { return x[static_cast<size_t>(i)]; }

    IntVec3 operator+(const IntVec3& o) const { return {x[0] + o.x[0], x[1] + o.x[1], x[2] + o.x[2]}; }
    IntVec3 operator-(const IntVec3& o) const { return {x[0] - o.x[0], x[1] - o.x[1], x[2] - o.x[2]}; }
    IntVec3 operator*(const BigInt& k) const { return {x[0] * k, x[1] * k, x[2] * k}; }
    bool operator==(const IntVec3& o) const = default;
    bool operator<(const IntVec3& o) const { return x < o.x; }
    bool is_zero() const { return x[0] == 0 && x[1] == 0 && x[2] == 0; }
    std::string str() const;
};

IntVec3 unit(int i);
BigInt dot(const IntVec3& a, const IntVec3& b);
IntVec3 cross(const IntVec3& a, const IntVec3& b);
BigInt content(const IntVec3& v);
bool is_primitive(const IntVec3& v);
// Divides by the content; the zero vector is returned unchanged.
IntVec3 primitive_part(const IntVec3& v);

BigInt determinant_alpha(const IntVec3& a, const IntVec3& b);
BigInt denominator_beta(const IntVec3& a, const IntVec3& b, int unit_choice);

struct CFExpansion {
    std::vector<BigInt> terms;
    Rational value() const;
};

CFExpansion negative_cf(const BigInt& alpha, const BigInt& beta);
// K(b_1..b_s) with K() = 1; alpha/beta = K(b_1..b_s)/K(b_2..b_s).
BigInt continuant(const std::vector<BigInt>& b, size_t from = 0);

struct PrimitiveSequence {
    BigInt alpha;
    BigInt beta;
    CFExpansion cf;               // empty terms when the sequence is empty
    std::vector<IntVec3> vectors;  // a_1..a_s
};

PrimitiveSequence canonical_primitive_sequence(const IntVec3& a, const IntVec3& b, int unit_choice);

}  // namespace nsing
