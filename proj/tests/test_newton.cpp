#include <doctest.h>

#include <algorithm>
#include <map>

#include "corpus.hpp"
#include "nsing/newton.hpp"

using namespace nsing;
using nsing::testing::brieskorn;
using nsing::testing::front_page;

namespace {

Rational brieskorn_weight(int a, int b, int c, int i, int j, int k) {
    return make_rat(i, a) + make_rat(j, b) + make_rat(k, c);
}

SpectrumPart brieskorn_spectrum(int a, int b, int c) {
    SpectrumPart out;
    for (int i = 1; i < a; ++i)
        for (int j = 1; j < b; ++j)
            for (int k = 1; k < c; ++k) {
                Rational w = brieskorn_weight(a, b, c, i, j, k);
                if (w <= 1) out.push_back(w - 1);
            }
    std::sort(out.begin(), out.end());
    return out;
}

PuiseuxPoly brieskorn_poincare(int a, int b, int c, const Rational& R) {
    std::map<Rational, BigInt> hist;
    const int bound = static_cast<int>(ceil(R + 1)) + 1;
    for (int i = 0; i <= bound * a; ++i)
        for (int j = 0; j <= bound * b; ++j)
            for (int k = 0; k <= bound * c; ++k) {
                Rational w = brieskorn_weight(a, b, c, i, j, k);
                if (w <= R) hist[w] += 1;
            }
    PuiseuxPoly out;
    for (const auto& [w, n] : hist) {
        add_term(out, w, n);
        if (w + 1 <= R) add_term(out, w + 1, -n);
    }
    return out;
}

}  // namespace

TEST_CASE("front-page Newton polyhedron") {
    auto P = newton_polyhedron(front_page());
    std::map<IntVec3, BigInt> faces;
    for (const auto& f : P.compact_faces) faces[f.normal] = f.value;
    std::map<IntVec3, BigInt> expected{{IntVec3(11, 5, 7), 43}, {IntVec3(6, 3, 4), 24},
                                       {IntVec3(32, 12, 21), 120}, {IntVec3(15, 8, 6), 48}};
    CHECK(faces == expected);
    std::vector<IntVec3> nc;
    for (const auto& f : P.noncompact_faces) nc.push_back(f.normal);
    CHECK(nc == std::vector<IntVec3>{unit(2), unit(1), unit(0)});
    for (const auto& f : P.compact_faces) {
        BigInt lo = f.eval(front_page()[0]);
        for (const auto& p : front_page()) lo = std::min(lo, f.eval(p));
        CHECK(lo == f.value);
        for (const auto& v : f.vertices) CHECK(f.eval(v) == f.value);
    }
}

TEST_CASE("Brieskorn polyhedron has one compact face") {
    auto P = newton_polyhedron(brieskorn(2, 3, 7));
    REQUIRE(P.compact_faces.size() == 1);
    CHECK(P.compact_faces[0].normal == IntVec3(21, 14, 6));
    CHECK(P.compact_faces[0].value == 42);
}

TEST_CASE("isolatedness, convenience and the RHS criterion") {
    CHECK(is_isolated(front_page()));
    CHECK_FALSE(is_isolated({IntVec3(2, 0, 0)}));
    CHECK(is_isolated(brieskorn(2, 3, 7)));

    CHECK(is_convenient(front_page()));
    Support no_z = front_page();
    no_z.erase(std::find(no_z.begin(), no_z.end(), IntVec3(0, 0, 8)));
    CHECK_FALSE(is_convenient(no_z));
    CHECK(is_convenient(brieskorn(2, 3, 7)));

    CHECK(is_rhs_link(brieskorn(2, 3, 7)));
    CHECK_FALSE(is_rhs_link(brieskorn(3, 3, 3)));
    CHECK(is_rhs_link(front_page()));
}

TEST_CASE("RHS criterion agrees with a lattice scan of the diagram for Brieskorn triples") {
    for (int a = 2; a <= 9; ++a)
        for (int b = a; b <= 9; ++b)
            for (int c = b; c <= 9; ++c) {
                bool on_face = false;
                for (int i = 1; i < a && !on_face; ++i)
                    for (int j = 1; j < b && !on_face; ++j)
                        for (int k = 1; k < c && !on_face; ++k)
                            on_face = brieskorn_weight(a, b, c, i, j, k) == 1;
                CHECK(is_rhs_link(brieskorn(a, b, c)) == !on_face);
            }
}

TEST_CASE("make_convenient keeps the old compact faces") {
    Support s{IntVec3(2, 0, 0), IntVec3(0, 3, 0), IntVec3(0, 1, 5)};
    CHECK_FALSE(is_convenient(s));
    Support c = make_convenient(s);
    CHECK(is_convenient(c));
    auto old_faces = newton_polyhedron(s).compact_faces;
    auto new_faces = newton_polyhedron(c).compact_faces;
    for (const auto& f : old_faces) {
        auto it = std::find_if(new_faces.begin(), new_faces.end(), [&](const Face2D& g) { return g.normal == f.normal; });
        REQUIRE(it != new_faces.end());
        CHECK(it->value == f.value);
    }

    auto fp_old = newton_polyhedron(front_page()).compact_faces;
    auto fp_new = newton_polyhedron(make_convenient(front_page())).compact_faces;
    for (const auto& f : fp_old)
        CHECK(std::any_of(fp_new.begin(), fp_new.end(), [&](const Face2D& g) { return g.normal == f.normal; }));
}

TEST_CASE("Newton weights") {
    CHECK(newton_weight(brieskorn(2, 3, 7), IntVec3(1, 1, 1)) == make_rat(41, 42));
    // the four faces give 23/43, 13/24, 65/120 and 29/48 at (1,1,1); the smallest is 23/43
    CHECK(newton_weight(front_page(), IntVec3(1, 1, 1)) == make_rat(23, 43));
    for (const auto& f : newton_polyhedron(front_page()).compact_faces)
        for (const auto& v : f.vertices) CHECK(newton_weight(front_page(), v) == 1);
    // minimum over the compact faces, recomputed by hand
    auto P = newton_polyhedron(front_page());
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            for (int k = 0; k < 5; ++k) {
                IntVec3 p(i, j, k);
                Rational best = -1;
                for (const auto& f : P.compact_faces) {
                    Rational w = make_rat(f.eval(p), f.value);
                    if (best < 0 || w < best) best = w;
                }
                CHECK(newton_weight(P, p) == best);
            }
}

TEST_CASE("Saito spectrum against the Brieskorn lattice count") {
    CHECK(saito_spectrum(brieskorn(2, 3, 5)).empty());
    CHECK(saito_spectrum(brieskorn(2, 3, 7)) == SpectrumPart{make_rat(-1, 42)});
    for (auto [a, b, c] : std::vector<std::array<int, 3>>{{2, 3, 7}, {3, 4, 5}, {2, 9, 11}, {5, 7, 11}, {4, 5, 9}})
        CHECK(saito_spectrum(brieskorn(a, b, c)) == brieskorn_spectrum(a, b, c));
}

TEST_CASE("multiplicity of 0 counts positive points on the diagram") {
    // x^3 + y^3 + z^3 has (1,1,1) on its diagram
    auto sp = saito_spectrum(brieskorn(3, 3, 3));
    CHECK(std::count(sp.begin(), sp.end(), Rational(0)) == 1);
    auto sp2 = saito_spectrum(brieskorn(4, 4, 4));
    size_t on = 0;
    for (int i = 1; i < 4; ++i)
        for (int j = 1; j < 4; ++j)
            for (int k = 1; k < 4; ++k) on += (i + j + k == 4);
    CHECK(static_cast<size_t>(std::count(sp2.begin(), sp2.end(), Rational(0))) == on);
}

TEST_CASE("Poincare series of the Newton filtration") {
    for (auto [a, b, c] : std::vector<std::array<int, 3>>{{2, 3, 5}, {2, 3, 7}, {3, 4, 5}, {3, 5, 7}}) {
        for (Rational R : {Rational(1), make_rat(5, 2), Rational(3)}) {
            auto P = poincare_newton(brieskorn(a, b, c), R);
            CHECK(P == brieskorn_poincare(a, b, c, R));
            CHECK(P.at(Rational(0)) == 1);
        }
    }
    auto P = poincare_newton(brieskorn(2, 3, 7), 1);
    CHECK(P.at(make_rat(41, 42)) == 1);
    CHECK(poincare_newton(front_page(), 3).at(Rational(0)) == 1);
}

TEST_CASE("polynomial part and the spectrum") {
    CHECK(poincare_pol_part(brieskorn(2, 3, 5)).empty());
    CHECK(poincare_pol_part(brieskorn(2, 3, 7)) == PuiseuxPoly{{make_rat(1, 42), 1}});
    for (const auto& s : {front_page(), brieskorn(3, 4, 5), brieskorn(5, 7, 11)}) {
        SpectrumPart from_pol;
        for (const auto& [e, c] : poincare_pol_part(s))
            for (BigInt k = 0; k < c; ++k) from_pol.push_back(-e);
        std::sort(from_pol.begin(), from_pol.end());
        CHECK(from_pol == saito_spectrum(s));
    }
}

TEST_CASE("diagram anatomy") {
    auto a = classify_diagram(brieskorn(2, 3, 7));
    CHECK(a.kind == "central_triangle");
    REQUIRE(a.central_face.has_value());
    CHECK(*a.central_face == IntVec3(21, 14, 6));
    for (const auto& arm : a.arms) CHECK(arm.empty());

    // four faces: a central triangle with one face on each arm
    auto fp = classify_diagram(front_page());
    CHECK(fp.kind == "central_triangle");
    REQUIRE(fp.central_face.has_value());
    CHECK(*fp.central_face == IntVec3(11, 5, 7));
    CHECK(fp.arms[0] == std::vector<IntVec3>{IntVec3(6, 3, 4)});
    CHECK(fp.arms[1] == std::vector<IntVec3>{IntVec3(32, 12, 21)});
    CHECK(fp.arms[2] == std::vector<IntVec3>{IntVec3(15, 8, 6)});

    // [(4,0,0),(0,1,3)] is shared by the two compact faces and meets all three coordinate planes
    auto edge = classify_diagram({IntVec3(4, 0, 0), IntVec3(0, 1, 3), IntVec3(0, 5, 0), IntVec3(0, 0, 6)});
    CHECK(edge.kind == "central_edge");
    CHECK(edge.central_edges == 1);
    CHECK_FALSE(edge.central_face.has_value());
}

TEST_CASE("error cases") {
    CHECK_THROWS_AS(newton_polyhedron({IntVec3(-1, 0, 0)}), Error);
    try {
        poincare_newton({IntVec3(1, 1, 0), IntVec3(0, 0, 2)}, 1);
        FAIL("expected NoCompactFace");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoCompactFace);
    }
}
