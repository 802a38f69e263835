#include "nsing/newton.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nsing/polygon.hpp"

namespace nsing {

void add_term(PuiseuxPoly& p, const Rational& e, const BigInt& c) {
    if (c == 0) return;
    BigInt& slot = p[e];
    slot += c;
    if (slot == 0) p.erase(e);
}

Support normalize_support(const Support& s) {
    Support out = s;
    for (const auto& p : out)
        for (int i = 0; i < 3; ++i)
            if (p[i] < 0) throw Error(ErrorKind::PreconditionViolated, "negative exponent in " + p.str());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) throw Error(ErrorKind::PreconditionViolated, "empty support");
    return out;
}

static bool leq(const IntVec3& a, const IntVec3& b) { return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2]; }

static Support minimal_points(const Support& s) {
    Support out;
    for (size_t i = 0; i < s.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < s.size() && !dominated; ++j)
            if (i != j && leq(s[j], s[i]) && !(s[j] == s[i])) dominated = true;
        if (!dominated) out.push_back(s[i]);
    }
    return out;
}

bool is_isolated(const Support& input) {
    Support s = normalize_support(input);
    for (int mask = 0; mask < 8; ++mask) {
        int need = __builtin_popcount(static_cast<unsigned>(mask));
        int have = 0;
        for (int i = 0; i < 3; ++i) {
            bool hit = false;
            for (const auto& p : s) {
                if (p[i] < 1) continue;
                bool ok = true;
                for (int j = 0; j < 3 && ok; ++j) {
                    if (mask & (1 << j)) continue;
                    BigInt c = p[j] - (i == j ? 1 : 0);
                    if (c != 0) ok = false;
                }
                if (ok) {
                    hit = true;
                    break;
                }
            }
            if (hit) ++have;
        }
        if (have < need) return false;
    }
    return true;
}

const Face2D* NewtonPolyhedron::find(const IntVec3& normal) const {
    for (const auto& f : compact_faces)
        if (f.normal == normal) return &f;
    for (const auto& f : noncompact_faces)
        if (f.normal == normal) return &f;
    return nullptr;
}

bool NewtonPolyhedron::contains(const IntVec3& p) const {
    for (const auto& f : compact_faces)
        if (f.eval(p) < f.value) return false;
    for (const auto& f : noncompact_faces)
        if (f.eval(p) < f.value) return false;
    return true;
}

static bool independent_pair(const std::vector<IntVec3>& dirs) {
    for (size_t i = 0; i < dirs.size(); ++i)
        for (size_t j = i + 1; j < dirs.size(); ++j)
            if (!cross(dirs[i], dirs[j]).is_zero()) return true;
    return false;
}

static std::vector<IntVec3> ordered_face_vertices(const IntVec3& c, const BigInt& w, const Support& pts) {
    std::vector<Vec2> proj;
    for (const auto& p : pts) proj.push_back({p[0], p[1]});
    LatticePolygon2 h = LatticePolygon2::hull(proj);
    std::vector<IntVec3> out;
    for (const auto& q : h.vertices) {
        BigInt z = w - c[0] * q.x - c[1] * q.y;
        check(z % c[2] == 0, "face vertex does not lift");
        out.push_back({q.x, q.y, z / c[2]});
    }
    return out;
}

NewtonPolyhedron newton_polyhedron(const Support& input) {
    Support s = normalize_support(input);
    if (!is_isolated(s)) throw Error(ErrorKind::NotIsolated, "support does not define an isolated singularity");
    Support m = minimal_points(s);

    std::set<IntVec3> candidates;
    auto consider = [&](const IntVec3& v) {
        if (v.is_zero()) return;
        IntVec3 c = primitive_part(v);
        if (c[0] <= 0 && c[1] <= 0 && c[2] <= 0) c = c * BigInt(-1);
        if (c[0] >= 0 && c[1] >= 0 && c[2] >= 0) candidates.insert(c);
    };
    std::vector<IntVec3> diffs;
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = i + 1; j < m.size(); ++j) diffs.push_back(m[j] - m[i]);
    for (int i = 0; i < 3; ++i) {
        consider(unit(i));
        for (const auto& d : diffs) consider(cross(d, unit(i)));
    }
    for (size_t i = 0; i < diffs.size(); ++i)
        for (size_t j = i + 1; j < diffs.size(); ++j) consider(cross(diffs[i], diffs[j]));

    NewtonPolyhedron P;
    for (const auto& c : candidates) {
        BigInt w = dot(c, m[0]);
        for (const auto& p : m) w = std::min(w, dot(c, p));
        Support on;
        for (const auto& p : m)
            if (dot(c, p) == w) on.push_back(p);
        std::vector<IntVec3> dirs;
        for (const auto& p : on) dirs.push_back(p - on[0]);
        for (int i = 0; i < 3; ++i)
            if (c[i] == 0) dirs.push_back(unit(i));
        if (!independent_pair(dirs)) continue;
        Face2D f;
        f.normal = c;
        f.value = w;
        f.compact = c[0] > 0 && c[1] > 0 && c[2] > 0;
        if (f.compact) {
            f.vertices = ordered_face_vertices(c, w, on);
            P.compact_faces.push_back(f);
        } else {
            f.vertices = on;
            P.noncompact_faces.push_back(f);
        }
    }
    if (P.compact_faces.empty()) return P;

    for (auto& f : P.compact_faces) {
        const size_t n = f.vertices.size();
        for (size_t i = 0; i < n; ++i) {
            const IntVec3& p = f.vertices[i];
            const IntVec3& q = f.vertices[(i + 1) % n];
            std::vector<IntVec3> others;
            for (const auto* list : {&P.compact_faces, &P.noncompact_faces})
                for (const auto& g : *list)
                    if (!(g.normal == f.normal) && g.eval(p) == g.value && g.eval(q) == g.value)
                        others.push_back(g.normal);
            check(others.size() == 1, "edge " + p.str() + "-" + q.str() + " is not on exactly two faces");
            FaceEdge e{p, q, others[0], content(q - p)};
            f.edges.push_back(e);
            P.adjacency[{f.normal, e.other}] += e.t;
        }
    }
    // relative interior points: on the plane, inside the polyhedron, and on no other face
    for (auto& f : P.compact_faces) {
        BigInt hi[3] = {0, 0, 0};
        for (const auto& v : f.vertices)
            for (int i = 0; i < 3; ++i) hi[i] = std::max(hi[i], v[i]);
        BigInt cnt = 0;
        for (BigInt x = 0; x <= hi[0]; ++x)
            for (BigInt y = 0; y <= hi[1]; ++y) {
                BigInt rest = f.value - f.normal[0] * x - f.normal[1] * y;
                if (rest < 0 || rest % f.normal[2] != 0) continue;
                IntVec3 p(x, y, rest / f.normal[2]);
                if (!P.contains(p)) continue;
                bool boundary = false;
                for (const auto* list : {&P.compact_faces, &P.noncompact_faces})
                    for (const auto& g : *list)
                        if (!(g.normal == f.normal) && g.eval(p) == g.value) boundary = true;
                if (!boundary) ++cnt;
            }
        f.interior_points = cnt;
    }
    return P;
}

bool is_convenient(const Support& input) {
    Support s = normalize_support(input);
    for (int c = 0; c < 3; ++c) {
        bool hit = false;
        for (const auto& p : s) {
            int nz = 0;
            for (int i = 0; i < 3; ++i)
                if (p[i] != 0) ++nz;
            if (nz == 1 && p[c] != 0) hit = true;
        }
        if (!hit) return false;
    }
    return true;
}

Support make_convenient(const Support& input) {
    Support s = normalize_support(input);
    NewtonPolyhedron P = newton_polyhedron(s);
    if (P.compact_faces.empty()) throw Error(ErrorKind::NoCompactFace, "no compact two dimensional face");
    for (int c = 0; c < 3; ++c) {
        bool hit = false;
        for (const auto& p : s)
            if (p[c] != 0 && p[(c + 1) % 3] == 0 && p[(c + 2) % 3] == 0) hit = true;
        if (hit) continue;
        // strictly above every compact face plane, so the old compact faces keep their vertex sets
        BigInt d = 1;
        for (const auto& f : P.compact_faces) d = std::max(d, floor_div(f.value, f.normal[c]) + 1);
        s.push_back(unit(c) * d);
    }
    return normalize_support(s);
}

static bool positive_point_on_diagram(const NewtonPolyhedron& P) {
    for (const auto& f : P.compact_faces) {
        BigInt hi[3] = {0, 0, 0};
        for (const auto& v : f.vertices)
            for (int i = 0; i < 3; ++i) hi[i] = std::max(hi[i], v[i]);
        for (BigInt x = 1; x <= hi[0]; ++x)
            for (BigInt y = 1; y <= hi[1]; ++y) {
                BigInt rest = f.value - f.normal[0] * x - f.normal[1] * y;
                if (rest <= 0 || rest % f.normal[2] != 0) continue;
                if (P.contains(IntVec3(x, y, rest / f.normal[2]))) return true;
            }
    }
    return false;
}

bool is_rhs_link(const NewtonPolyhedron& P) { return !positive_point_on_diagram(P); }

bool is_rhs_link(const Support& s) { return is_rhs_link(newton_polyhedron(s)); }

static void require_compact(const NewtonPolyhedron& P) {
    if (P.compact_faces.empty()) throw Error(ErrorKind::NoCompactFace, "no compact two dimensional face");
}

Rational newton_weight(const NewtonPolyhedron& P, const IntVec3& p) {
    require_compact(P);
    Rational best = make_rat(P.compact_faces[0].eval(p), P.compact_faces[0].value);
    for (const auto& f : P.compact_faces) best = std::min(best, make_rat(f.eval(p), f.value));
    return best;
}

Rational newton_weight(const Support& s, const IntVec3& p) { return newton_weight(newton_polyhedron(s), p); }

std::array<BigInt, 3> weight_box(const NewtonPolyhedron& P, const Rational& R) {
    require_compact(P);
    std::array<BigInt, 3> box{0, 0, 0};
    for (const auto& f : P.compact_faces)
        for (int i = 0; i < 3; ++i) box[static_cast<size_t>(i)] = std::max(box[static_cast<size_t>(i)], floor(R * f.value / f.normal[i]));
    return box;
}

namespace {

// Histogram of l_f over the lattice points p >= lo (componentwise) with l_f(p) <= R.
// Works in machine integers after checking that no product can overflow.
std::map<Rational, BigInt> weight_histogram(const NewtonPolyhedron& P, const Rational& R, long long lo) {
    auto box = weight_box(P, R);
    const BigInt limit = BigInt(1) << 20;
    bool fast = true;
    for (const auto& b : box) fast = fast && b < limit;
    for (const auto& f : P.compact_faces) {
        fast = fast && f.value < limit;
        for (int i = 0; i < 3; ++i) fast = fast && f.normal[i] < limit;
    }
    std::map<Rational, BigInt> hist;
    if (!fast) {
        for (BigInt x = lo; x <= box[0]; ++x)
            for (BigInt y = lo; y <= box[1]; ++y)
                for (BigInt z = lo; z <= box[2]; ++z) {
                    Rational w = newton_weight(P, IntVec3(x, y, z));
                    if (w <= R) hist[w] += 1;
                }
        return hist;
    }
    struct F {
        long long n[3];
        long long w;
    };
    std::vector<F> fs;
    for (const auto& f : P.compact_faces)
        fs.push_back({{f.normal[0].convert_to<long long>(), f.normal[1].convert_to<long long>(),
                       f.normal[2].convert_to<long long>()},
                      f.value.convert_to<long long>()});
    const long long rn = num(R).convert_to<long long>(), rd = den(R).convert_to<long long>();
    std::map<std::pair<long long, long long>, long long> raw;
    const long long bx = box[0].convert_to<long long>(), by = box[1].convert_to<long long>(),
                    bz = box[2].convert_to<long long>();
    for (long long x = lo; x <= bx; ++x)
        for (long long y = lo; y <= by; ++y)
            for (long long z = lo; z <= bz; ++z) {
                long long bn = -1, bd = 1;
                for (const auto& f : fs) {
                    long long v = f.n[0] * x + f.n[1] * y + f.n[2] * z;
                    if (bn < 0 || static_cast<__int128>(v) * bd < static_cast<__int128>(bn) * f.w) bn = v, bd = f.w;
                }
                if (static_cast<__int128>(bn) * rd > static_cast<__int128>(rn) * bd) continue;
                long long g = std::gcd(bn, bd);
                ++raw[{bn / g, bd / g}];
            }
    for (const auto& [k, c] : raw) hist[make_rat(k.first, k.second)] += c;
    return hist;
}

}  // namespace

SpectrumPart saito_spectrum(const Support& s) {
    NewtonPolyhedron P = newton_polyhedron(s);
    SpectrumPart out;
    for (const auto& [w, c] : weight_histogram(P, Rational(1), 1))
        for (BigInt i = 0; i < c; ++i) out.push_back(w - 1);
    return out;
}

PuiseuxPoly poincare_newton(const Support& s, const Rational& R) {
    if (R <= 0) throw Error(ErrorKind::PreconditionViolated, "R must be positive");
    NewtonPolyhedron P = newton_polyhedron(s);
    PuiseuxPoly out;
    for (const auto& [w, c] : weight_histogram(P, R, 0)) {
        add_term(out, w, c);
        if (w + 1 <= R) add_term(out, w + 1, -c);
    }
    return out;
}

PuiseuxPoly poincare_pol_part(const Support& s) {
    NewtonPolyhedron P = newton_polyhedron(s);
    PuiseuxPoly out;
    for (const auto& [w, c] : weight_histogram(P, Rational(1), 1)) add_term(out, 1 - w, c);
    return out;
}

DiagramAnatomy classify_diagram(const Support& s) {
    NewtonPolyhedron P = newton_polyhedron(s);
    require_compact(P);
    if (!is_rhs_link(P)) throw Error(ErrorKind::NotRationalHomologySphere, "positive lattice point on the diagram");
    DiagramAnatomy a;
    auto zero_set = [](const IntVec3& p) {
        int m = 0;
        for (int i = 0; i < 3; ++i)
            if (p[i] == 0) m |= 1 << i;
        return m;
    };
    std::vector<const Face2D*> central;
    for (const auto& f : P.compact_faces) {
        int hyper = 0, axes = 0, on_axis = 0;
        for (const auto& v : f.vertices) {
            int z = zero_set(v);
            hyper |= z;
            if (__builtin_popcount(static_cast<unsigned>(z)) >= 2) ++on_axis, axes |= 7 & ~z;
        }
        if (hyper != 7) continue;
        // a triangle spanned by points on the three axes is the whole diagram; its arms are its edges
        const bool axis_triangle = on_axis == 3 && axes == 7;
        if (f.vertices.size() == 3 && (on_axis == 0 || axis_triangle)) {
            central.push_back(&f);
            a.kind = "central_triangle";
        } else if (f.vertices.size() == 4) {
            // trapezoid: two vertices at a common height on two hyperplanes, two on the third
            for (int c = 0; c < 3; ++c) {
                std::vector<IntVec3> low, high;
                for (const auto& v : f.vertices) (v[c] == 0 ? low : high).push_back(v);
                if (low.size() != 2 || high.size() != 2 || high[0][c] != high[1][c]) continue;
                int i = (c + 1) % 3, j = (c + 2) % 3;
                IntVec3 hp = high[0][i] == 0 ? high[0] : high[1];
                IntVec3 hq = high[0][i] == 0 ? high[1] : high[0];
                if (hp[i] != 0 || hq[j] != 0) continue;
                IntVec3 d = low[1] - low[0];
                IntVec3 dir(0, 0, 0);
                dir[i] = -hq[i];
                dir[j] = hp[j];
                if (!cross(d, dir).is_zero()) continue;
                central.push_back(&f);
                a.kind = "trapezoid";
                break;
            }
        }
    }
    std::set<std::pair<IntVec3, IntVec3>> edges;
    if (central.empty()) {
        for (const auto& f : P.compact_faces)
            for (const auto& e : f.edges) {
                // only edges between two compact faces; the others bound a single arm face
                const Face2D* other = P.find(e.other);
                if (!other || !other->compact || (zero_set(e.p) | zero_set(e.q)) != 7) continue;
                edges.insert(e.p < e.q ? std::make_pair(e.p, e.q) : std::make_pair(e.q, e.p));
            }
    }
    a.central_edges = static_cast<int>(edges.size());
    if (central.size() == 1) {
        a.central_face = central[0]->normal;
    } else {
        a.kind = a.central_edges > 0 ? "central_edge" : "unclassified";
    }
    for (const auto& f : P.compact_faces) {
        if (a.central_face && f.normal == *a.central_face) continue;
        for (int axis = 0; axis < 3; ++axis) {
            int i = (axis + 1) % 3, j = (axis + 2) % 3;
            bool all = true;
            for (const auto& v : f.vertices)
                if (v[i] != 0 && v[j] != 0) all = false;
            if (all) a.arms[static_cast<size_t>(axis)].push_back(f.normal);
        }
    }
    return a;
}

}  // namespace nsing
