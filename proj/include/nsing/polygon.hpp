#pragma once

#include <array>
#include <string>
#include <vector>

#include "nsing/lattice.hpp"

namespace nsing {

struct Vec2 {
    BigInt x, y;
    bool operator==(const Vec2&) const = default;
    bool operator<(const Vec2& o) const { return x < o.x || (x == o.x && y < o.y); }
    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

BigInt det2(const Vec2& a, const Vec2& b);
BigInt content2(const Vec2& v);

// Integral affine map p -> A p + t with det A = +-1.
struct AffineMap2 {
    std::array<std::array<BigInt, 2>, 2> A{{{1, 0}, {0, 1}}};
    Vec2 t{0, 0};
    Vec2 apply(const Vec2& p) const;
    BigInt det() const { return A[0][0] * A[1][1] - A[0][1] * A[1][0]; }
};

// Vertices in counterclockwise order, no three consecutive collinear.
struct LatticePolygon2 {
    std::vector<Vec2> vertices;

    static LatticePolygon2 hull(std::vector<Vec2> points);
    size_t size() const { return vertices.size(); }
    Vec2 edge_vector(size_t i) const { return vertices[(i + 1) % size()] - vertices[i]; }
    BigInt twice_area() const;
    BigInt boundary_points() const;
    BigInt interior_points() const;
};

enum class EmptyPolygonTag { BigTriangle, TTriangle, TTrapezoid, TSTrapezoid };

struct EmptyPolygonClass {
    EmptyPolygonTag tag;
    BigInt t = 0;
    BigInt s = 0;
    AffineMap2 normalizing_map;
    std::string str() const;
};

std::vector<Vec2> normal_form_vertices(EmptyPolygonTag tag, const BigInt& t, const BigInt& s);
EmptyPolygonClass classify_empty_polygon(const LatticePolygon2& F);
bool vertex_is_regular(const LatticePolygon2& F, const Vec2& p);

struct DilatedPolygonSpec {
    LatticePolygon2 base;
    Rational r;
    std::vector<int> eps;  // one entry per edge i = [v_i, v_{i+1}]
};

// l(x,y) = a x + b y + c, primitive (a,b); level is the constant value on r*S.
struct EdgeFunctional {
    BigInt a, b, c;
    Rational level;
    Rational eval(const Rational& x, const Rational& y) const { return Rational(a) * x + Rational(b) * y + Rational(c); }
    BigInt eval(const BigInt& x, const BigInt& y) const { return a * x + b * y + c; }
};

EdgeFunctional edge_support_function(const DilatedPolygonSpec& spec, size_t edge);
bool eps_admissible(const DilatedPolygonSpec& spec);
BigInt dilated_content(const DilatedPolygonSpec& spec);
// |r F^- cap Z^2| where F^- drops the dilated edges with eps = 1.
BigInt count_dilated_lattice_points(const LatticePolygon2& F, const Rational& r, const std::vector<int>& eps);
BigInt count_dilated_points(const DilatedPolygonSpec& spec);

}  // namespace nsing
