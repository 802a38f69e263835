#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nsing/lattice.hpp"

namespace nsing {

using Support = std::vector<IntVec3>;

struct FaceEdge {
    IntVec3 p, q;
    IntVec3 other;  // normal of the other 2-face containing [p, q]
    BigInt t;       // number of primitive segments of [p, q]
};

struct Face2D {
    IntVec3 normal;
    BigInt value;
    std::vector<IntVec3> vertices;  // cyclic for compact faces, sorted support points otherwise
    bool compact = false;
    std::vector<FaceEdge> edges;    // compact faces only, aligned with vertices
    BigInt interior_points = 0;     // compact faces only

    BigInt eval(const IntVec3& p) const { return dot(normal, p); }
};

struct NewtonPolyhedron {
    std::vector<Face2D> compact_faces;     // sorted by normal
    std::vector<Face2D> noncompact_faces;  // sorted by normal
    // t_{n,n'} keyed by (compact normal, neighbouring normal); both orders stored for compact pairs
    std::map<std::pair<IntVec3, IntVec3>, BigInt> adjacency;

    const Face2D* find(const IntVec3& normal) const;
    bool contains(const IntVec3& p) const;  // p in the Newton polyhedron
};

using SpectrumPart = std::vector<Rational>;       // sorted multiset
using PuiseuxPoly = std::map<Rational, BigInt>;   // exponent -> nonzero coefficient

void add_term(PuiseuxPoly& p, const Rational& e, const BigInt& c);

Support normalize_support(const Support& s);  // sorted, deduplicated, nonnegative checked
bool is_isolated(const Support& s);
NewtonPolyhedron newton_polyhedron(const Support& s);
bool is_convenient(const Support& s);
Support make_convenient(const Support& s);
bool is_rhs_link(const Support& s);
bool is_rhs_link(const NewtonPolyhedron& P);

Rational newton_weight(const NewtonPolyhedron& P, const IntVec3& p);
Rational newton_weight(const Support& s, const IntVec3& p);
SpectrumPart saito_spectrum(const Support& s);
PuiseuxPoly poincare_newton(const Support& s, const Rational& R);
PuiseuxPoly poincare_pol_part(const Support& s);

struct DiagramAnatomy {
    std::string kind;  // "central_triangle", "trapezoid", "central_edge" or "unclassified"
    std::optional<IntVec3> central_face;
    int central_edges = 0;
    std::array<std::vector<IntVec3>, 3> arms;  // compact faces of the arm along each axis
};

DiagramAnatomy classify_diagram(const Support& s);

// Calls f(p) for every p in Z^3_{>=0} whose Newton weight is at most R (and possibly a few more).
// The box is derived from the compact faces: l_f(p) <= R forces p_i <= R wt_n / n_i for some n.
std::array<BigInt, 3> weight_box(const NewtonPolyhedron& P, const Rational& R);

}  // namespace nsing
