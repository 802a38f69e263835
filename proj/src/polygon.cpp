#include "nsing/polygon.hpp"

#include <algorithm>
#include <boost/multiprecision/integer.hpp>

namespace nsing {

BigInt det2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

BigInt content2(const Vec2& v) { return boost::multiprecision::gcd(abs(v.x), abs(v.y)); }

static Vec2 primitive2(const Vec2& v) {
    BigInt c = content2(v);
    return {v.x / c, v.y / c};
}

Vec2 AffineMap2::apply(const Vec2& p) const {
    return {A[0][0] * p.x + A[0][1] * p.y + t.x, A[1][0] * p.x + A[1][1] * p.y + t.y};
}

LatticePolygon2 LatticePolygon2::hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    LatticePolygon2 P;
    if (pts.size() < 3) {
        P.vertices = pts;
        return P;
    }
    std::vector<Vec2> h(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && det2(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
        while (k >= lo && det2(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    P.vertices = h;
    return P;
}

BigInt LatticePolygon2::twice_area() const {
    BigInt a = 0;
    for (size_t i = 0; i < size(); ++i) a += det2(vertices[i], vertices[(i + 1) % size()]);
    return abs(a);
}

BigInt LatticePolygon2::boundary_points() const {
    BigInt b = 0;
    for (size_t i = 0; i < size(); ++i) b += content2(edge_vector(i));
    return b;
}

BigInt LatticePolygon2::interior_points() const {
    if (size() < 3) return 0;
    return (twice_area() - boundary_points() + 2) / 2;
}

std::string EmptyPolygonClass::str() const {
    switch (tag) {
        case EmptyPolygonTag::BigTriangle: return "BigTriangle";
        case EmptyPolygonTag::TTriangle: return "TTriangle(" + t.str() + ")";
        case EmptyPolygonTag::TTrapezoid: return "TTrapezoid(" + t.str() + ")";
        case EmptyPolygonTag::TSTrapezoid: return "TSTrapezoid(" + t.str() + "," + s.str() + ")";
    }
    return "?";
}

std::vector<Vec2> normal_form_vertices(EmptyPolygonTag tag, const BigInt& t, const BigInt& s) {
    switch (tag) {
        case EmptyPolygonTag::BigTriangle: return {{0, 0}, {2, 0}, {0, 2}};
        case EmptyPolygonTag::TTriangle: return {{0, 0}, {t, 0}, {0, 1}};
        case EmptyPolygonTag::TTrapezoid: return {{0, 0}, {t, 0}, {1, 1}, {0, 1}};
        case EmptyPolygonTag::TSTrapezoid: return {{0, 0}, {t, 0}, {s, 1}, {0, 1}};
    }
    return {};
}

// Map sending origin -> o, (1,0) -> o + u, (0,1) -> o + w, inverted.
static AffineMap2 frame_inverse(const Vec2& o, const Vec2& u, const Vec2& w) {
    check(det2(u, w) == 1, "frame is not unimodular");
    AffineMap2 m;
    m.A = {{{w.y, -w.x}, {-u.y, u.x}}};
    Vec2 img = m.apply(o);
    m.t = {-img.x, -img.y};
    return m;
}

EmptyPolygonClass classify_empty_polygon(const LatticePolygon2& input) {
    LatticePolygon2 F = LatticePolygon2::hull(input.vertices);
    if (F.size() < 3) throw Error(ErrorKind::Degenerate, "affine hull is not 2-dimensional");
    if (F.interior_points() != 0) throw Error(ErrorKind::NotEmpty, "polygon has interior lattice points");
    const auto& v = F.vertices;
    const size_t n = F.size();
    EmptyPolygonClass out{};
    if (n == 3) {
        std::vector<BigInt> len;
        for (size_t i = 0; i < 3; ++i) len.push_back(content2(F.edge_vector(i)));
        if (len[0] == 2 && len[1] == 2 && len[2] == 2) {
            out.tag = EmptyPolygonTag::BigTriangle;
            Vec2 u = F.edge_vector(0), w = v[2] - v[0];
            out.normalizing_map = frame_inverse(v[0], {u.x / 2, u.y / 2}, {w.x / 2, w.y / 2});
        } else {
            size_t i = static_cast<size_t>(std::max_element(len.begin(), len.end()) - len.begin());
            out.tag = EmptyPolygonTag::TTriangle;
            out.t = len[i];
            Vec2 u = primitive2(F.edge_vector(i));
            out.normalizing_map = frame_inverse(v[i], u, v[(i + 2) % 3] - v[i]);
        }
    } else {
        check(n == 4, "empty polygon with more than four vertices");
        bool found = false;
        for (size_t i = 0; i < 2 && !found; ++i) {
            if (det2(F.edge_vector(i), F.edge_vector(i + 2)) != 0) continue;
            BigInt li = content2(F.edge_vector(i)), lj = content2(F.edge_vector(i + 2));
            size_t j = li >= lj ? i : i + 2;
            const Vec2 a = v[j], d = v[(j + 3) % 4];
            Vec2 u = primitive2(F.edge_vector(j));
            if (det2(u, d - a) != 1) continue;
            if (content2(F.edge_vector((j + 1) % 4)) != 1 || content2(F.edge_vector((j + 3) % 4)) != 1) continue;
            out.t = std::max(li, lj);
            out.s = std::min(li, lj);
            out.tag = out.s == 1 ? EmptyPolygonTag::TTrapezoid : EmptyPolygonTag::TSTrapezoid;
            if (out.tag == EmptyPolygonTag::TTrapezoid) out.s = 0;
            out.normalizing_map = frame_inverse(a, u, d - a);
            found = true;
        }
        check(found, "quadrilateral matches no trapezoid normal form");
    }
    std::vector<Vec2> img;
    for (const auto& p : v) img.push_back(out.normalizing_map.apply(p));
    auto nf = normal_form_vertices(out.tag, out.t, out.s);
    std::sort(img.begin(), img.end());
    std::sort(nf.begin(), nf.end());
    check(img == nf, "normalizing map does not reach the normal form");
    return out;
}

bool vertex_is_regular(const LatticePolygon2& input, const Vec2& p) {
    LatticePolygon2 F = LatticePolygon2::hull(input.vertices);
    auto it = std::find(F.vertices.begin(), F.vertices.end(), p);
    if (it == F.vertices.end()) throw Error(ErrorKind::NotAVertex, p.str());
    size_t i = static_cast<size_t>(it - F.vertices.begin());
    const size_t n = F.size();
    Vec2 d1 = primitive2(F.vertices[(i + 1) % n] - p);
    Vec2 d2 = primitive2(F.vertices[(i + n - 1) % n] - p);
    return abs(det2(d1, d2)) == 1;
}

EdgeFunctional edge_support_function(const DilatedPolygonSpec& spec, size_t edge) {
    const auto& F = spec.base;
    Vec2 e = F.edge_vector(edge);
    Vec2 nrm = primitive2({-e.y, e.x});  // inward for counterclockwise order
    BigInt k = nrm.x * F.vertices[edge].x + nrm.y * F.vertices[edge].y;
    Rational rk = spec.r * k;
    BigInt shift = ceil(rk);
    return {nrm.x, nrm.y, -shift, rk - Rational(shift)};
}

bool eps_admissible(const DilatedPolygonSpec& spec) {
    if (spec.eps.size() != spec.base.size()) return false;
    for (size_t i = 0; i < spec.eps.size(); ++i) {
        if (spec.eps[i] != 0 && spec.eps[i] != 1) return false;
        if (spec.eps[i] == 1 && edge_support_function(spec, i).level != 0) return false;
    }
    return true;
}

static void require_empty(const LatticePolygon2& F) {
    if (F.size() < 3) throw Error(ErrorKind::Degenerate, "affine hull is not 2-dimensional");
    if (F.interior_points() != 0) throw Error(ErrorKind::NotEmpty, "polygon has interior lattice points");
    BigInt signed_area = 0;
    for (size_t i = 0; i < F.size(); ++i) signed_area += det2(F.vertices[i], F.vertices[(i + 1) % F.size()]);
    if (signed_area <= 0) throw Error(ErrorKind::PreconditionViolated, "vertices must be counterclockwise");
}

BigInt dilated_content(const DilatedPolygonSpec& spec) {
    require_empty(spec.base);
    if (!eps_admissible(spec)) throw Error(ErrorKind::PreconditionViolated, "inadmissible eps");
    const std::array<Vec2, 3> frame{{{0, 0}, {1, 0}, {0, 1}}};
    std::array<BigInt, 3> vals{};
    for (size_t i = 0; i < spec.base.size(); ++i) {
        EdgeFunctional l = edge_support_function(spec, i);
        BigInt c = content2(spec.base.edge_vector(i));
        for (size_t j = 0; j < 3; ++j) vals[j] += c * (l.eval(frame[j].x, frame[j].y) - spec.eps[i]);
    }
    check(vals[0] == vals[1] && vals[0] == vals[2], "content functional is not constant");
    return vals[0];
}

BigInt count_dilated_lattice_points(const LatticePolygon2& F, const Rational& r, const std::vector<int>& eps) {
    const size_t n = F.size();
    std::vector<Vec2> nrm(n);
    std::vector<Rational> lvl(n);
    for (size_t i = 0; i < n; ++i) {
        Vec2 e = F.edge_vector(i);
        nrm[i] = primitive2({-e.y, e.x});
        lvl[i] = r * Rational(nrm[i].x * F.vertices[i].x + nrm[i].y * F.vertices[i].y);
    }
    BigInt x0 = F.vertices[0].x, x1 = x0, y0 = F.vertices[0].y, y1 = y0;
    for (const auto& p : F.vertices) {
        x0 = std::min(x0, p.x), x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
    }
    BigInt count = 0;
    for (BigInt x = ceil(r * x0); x <= floor(r * x1); ++x) {
        for (BigInt y = ceil(r * y0); y <= floor(r * y1); ++y) {
            bool in = true, excluded = false;
            for (size_t i = 0; i < n && in; ++i) {
                Rational val(nrm[i].x * x + nrm[i].y * y);
                if (val < lvl[i]) in = false;
                else if (val == lvl[i] && i < eps.size() && eps[i] == 1) excluded = true;
            }
            if (in && !excluded) ++count;
        }
    }
    return count;
}

BigInt count_dilated_points(const DilatedPolygonSpec& spec) {
    require_empty(spec.base);
    if (spec.r < 1) return count_dilated_lattice_points(spec.base, spec.r, spec.eps);
    return count_dilated_lattice_points(spec.base, spec.r, spec.eps) -
           count_dilated_lattice_points(spec.base, spec.r - 1, spec.eps);
}

}  // namespace nsing
