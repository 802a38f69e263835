#include "nsing/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace nsing {

size_t PlumbingGraph::index_of(int id) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), id,
                               [](const Vertex& v, int x) { return v.id < x; });
    check(it != vertices.end() && it->id == id, "unknown vertex id " + std::to_string(id));
    return static_cast<size_t>(it - vertices.begin());
}

std::vector<std::vector<size_t>> PlumbingGraph::neighbours() const {
    std::vector<std::vector<size_t>> nb(size());
    for (const auto& [a, b] : edges) {
        size_t i = index_of(a), j = index_of(b);
        nb[i].push_back(j);
        nb[j].push_back(i);
    }
    return nb;
}

std::vector<size_t> PlumbingGraph::degrees() const {
    std::vector<size_t> d(size(), 0);
    for (const auto& [a, b] : edges) {
        ++d[index_of(a)];
        ++d[index_of(b)];
    }
    return d;
}

std::vector<size_t> PlumbingGraph::nodes() const {
    std::vector<size_t> out;
    auto d = degrees();
    for (size_t i = 0; i < size(); ++i)
        if (d[i] >= 3) out.push_back(i);
    return out;
}

bool PlumbingGraph::is_connected() const {
    if (vertices.empty()) return true;
    auto nb = neighbours();
    std::vector<bool> seen(size(), false);
    std::vector<size_t> stack{0};
    seen[0] = true;
    size_t count = 1;
    while (!stack.empty()) {
        size_t v = stack.back();
        stack.pop_back();
        for (size_t w : nb[v])
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == size();
}

bool PlumbingGraph::is_tree() const { return is_connected() && edges.size() + 1 == std::max<size_t>(size(), 1); }

void PlumbingGraph::normalize() {
    std::sort(vertices.begin(), vertices.end(), [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    for (auto& e : edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
}

GraphView::GraphView(const PlumbingGraph& g) : nbr(g.neighbours()) {
    for (const auto& v : g.vertices) b.push_back(v.b);
}

BigInt GraphView::pair_with(const Cycle& Z, size_t v) const {
    BigInt s = -b[v] * Z[v];
    for (size_t w : nbr[v]) s += Z[w];
    return s;
}

Rational GraphView::pair_with(const RatCycle& Z, size_t v) const {
    Rational s = -Rational(b[v]) * Z[v];
    for (size_t w : nbr[v]) s += Z[w];
    return s;
}

IntMatrix intersection_matrix(const PlumbingGraph& g) {
    const size_t n = g.size();
    IntMatrix I(n, std::vector<BigInt>(n, 0));
    for (size_t i = 0; i < n; ++i) I[i][i] = -g.vertices[i].b;
    for (const auto& [a, b] : g.edges) {
        size_t i = g.index_of(a), j = g.index_of(b);
        if (i == j) {
            I[i][i] += 2;
        } else {
            I[i][j] += 1;
            I[j][i] += 1;
        }
    }
    return I;
}

BigInt form(const IntMatrix& I, const Cycle& a, const Cycle& b) {
    BigInt s = 0;
    for (size_t i = 0; i < I.size(); ++i)
        for (size_t j = 0; j < I.size(); ++j) s += a[i] * I[i][j] * b[j];
    return s;
}

Rational form(const IntMatrix& I, const RatCycle& a, const RatCycle& b) {
    Rational s = 0;
    for (size_t i = 0; i < I.size(); ++i)
        for (size_t j = 0; j < I.size(); ++j)
            if (I[i][j] != 0) s += a[i] * Rational(I[i][j]) * b[j];
    return s;
}

// Gauss-Jordan on -I without row exchanges: every pivot is positive exactly when -I is
// positive definite (the pivots are ratios of consecutive leading principal minors).
static bool invert_negated(const IntMatrix& I, RatMatrix& inv, Rational& pivot_product) {
    const size_t n = I.size();
    RatMatrix a(n, std::vector<Rational>(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = Rational(-I[i][j]);
        a[i][n + i] = 1;
    }
    pivot_product = 1;
    for (size_t c = 0; c < n; ++c) {
        if (a[c][c] <= 0) return false;
        Rational p = a[c][c];
        pivot_product *= p;
        for (size_t j = c; j < 2 * n; ++j) a[c][j] /= p;
        for (size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (size_t j = c; j < 2 * n; ++j)
                if (a[c][j] != 0) a[r][j] -= f * a[c][j];
        }
    }
    inv.assign(n, std::vector<Rational>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = -a[i][n + j];
    return true;
}

bool is_negative_definite(const IntMatrix& I) {
    RatMatrix inv;
    Rational p;
    return invert_negated(I, inv, p);
}

IntersectionData intersection_data(const PlumbingGraph& g) {
    if (!g.is_connected()) throw Error(ErrorKind::Disconnected, "plumbing graph is not connected");
    IntersectionData d;
    d.I = intersection_matrix(g);
    Rational pivots;
    if (!invert_negated(d.I, d.inverse, pivots))
        throw Error(ErrorKind::NotNegativeDefinite, "intersection form is not negative definite");
    check(is_integral(pivots), "determinant is not integral");
    d.group_order = num(pivots);
    d.determinant = (g.size() % 2 == 0) ? d.group_order : BigInt(-d.group_order);
    const size_t n = g.size();
    d.dual.assign(n, RatCycle(n));
    for (size_t v = 0; v < n; ++v)
        for (size_t w = 0; w < n; ++w) d.dual[v][w] = -d.inverse[v][w];
    return d;
}

static IntVec3 neighbour_sum(const OkaGraph& og, const std::vector<std::vector<size_t>>& nb, size_t i) {
    IntVec3 s(0, 0, 0);
    const auto& g = og.graph;
    for (size_t w : nb[i]) s = s + *g.vertices[w].ell;
    auto it = og.star_neighbours.find(g.vertices[i].id);
    if (it != og.star_neighbours.end())
        for (const auto& f : it->second) s = s + f;
    return s;
}

OkaGraph oka_graph(const NewtonPolyhedron& P) {
    if (P.compact_faces.empty()) throw Error(ErrorKind::NoCompactFace, "no compact two dimensional face");
    OkaGraph og;
    std::map<IntVec3, int> node_id;
    for (const auto& f : P.compact_faces) {
        int id = static_cast<int>(og.graph.vertices.size());
        node_id[f.normal] = id;
        og.graph.vertices.push_back({id, 0, f.interior_points, f.normal});
    }
    og.node_count = static_cast<int>(P.compact_faces.size());
    for (const auto& f : P.noncompact_faces) og.star_faces.push_back(f.normal);

    int next_id = og.node_count;
    for (const auto& [key, t] : P.adjacency) {
        const auto& [n, m] = key;
        auto mit = node_id.find(m);
        bool to_node = mit != node_id.end();
        if (to_node && !(n < m)) continue;  // each node pair once
        int nid = node_id.at(n);
        PrimitiveSequence ps = canonical_primitive_sequence(n, m, to_node ? 0 : 1);
        for (BigInt copy = 0; copy < t; ++copy) {
            Bamboo bb{n, m, to_node, ps.alpha, ps.beta, {}};
            if (ps.vectors.empty()) {
                og.graph.edges.push_back({nid, mit->second});
                og.u_map.emplace(std::make_pair(n, m), mit->second);
                og.u_map.emplace(std::make_pair(m, n), nid);
            } else {
                int prev = nid;
                for (size_t i = 0; i < ps.vectors.size(); ++i) {
                    int id = next_id++;
                    og.graph.vertices.push_back({id, ps.cf.terms[i], 0, ps.vectors[i]});
                    og.graph.edges.push_back({prev, id});
                    bb.vertex_ids.push_back(id);
                    prev = id;
                }
                if (to_node) {
                    og.graph.edges.push_back({prev, mit->second});
                    og.u_map.emplace(std::make_pair(m, n), prev);
                } else {
                    og.star_neighbours[prev].push_back(m);
                }
                og.u_map.emplace(std::make_pair(n, m), bb.vertex_ids.front());
            }
            og.bamboos.push_back(bb);
        }
    }
    og.graph.normalize();

    auto nb = og.graph.neighbours();
    for (int id = 0; id < og.node_count; ++id) {
        size_t i = og.graph.index_of(id);
        IntVec3 s = neighbour_sum(og, nb, i);
        const IntVec3& l = *og.graph.vertices[i].ell;
        check(s[0] % l[0] == 0, "node selfintersection is not integral");
        og.graph.vertices[i].b = s[0] / l[0];
    }
    for (size_t i = 0; i < og.graph.size(); ++i) {
        const auto& v = og.graph.vertices[i];
        check(neighbour_sum(og, nb, i) == *v.ell * v.b, "neighbour sum identity fails at v" + std::to_string(v.id));
    }
    try {
        (void)intersection_data(og.graph);
    } catch (const Error& e) {
        throw Error(ErrorKind::NegativeDefinitenessViolated, e.what());
    }
    return og;
}

OkaGraph oka_graph(const Support& s) { return oka_graph(newton_polyhedron(s)); }

RatCycle canonical_cycle(const PlumbingGraph& g, const IntersectionData& data) {
    const size_t n = g.size();
    RatCycle rhs(n), z(n, 0);
    for (size_t v = 0; v < n; ++v) rhs[v] = Rational(-g.vertices[v].b - 2 * g.vertices[v].g + 2);
    for (size_t v = 0; v < n; ++v)
        for (size_t w = 0; w < n; ++w) z[v] += data.inverse[v][w] * rhs[w];
    return z;
}

RatCycle canonical_cycle(const PlumbingGraph& g) { return canonical_cycle(g, intersection_data(g)); }

bool is_integral(const RatCycle& z) {
    return std::all_of(z.begin(), z.end(), [](const Rational& r) { return nsing::is_integral(r); });
}

Cycle to_cycle(const RatCycle& z) {
    Cycle c;
    for (const auto& r : z) {
        check(nsing::is_integral(r), "cycle is not integral");
        c.push_back(num(r));
    }
    return c;
}

RatCycle to_rat(const Cycle& z) {
    RatCycle r;
    for (const auto& c : z) r.push_back(Rational(c));
    return r;
}

Cycle wt_cycle(const PlumbingGraph& g, const Support& monomials) {
    check(!monomials.empty(), "no monomials");
    Cycle out;
    for (const auto& v : g.vertices) {
        check(v.ell.has_value(), "vertex without functional");
        BigInt m = dot(*v.ell, monomials[0]);
        for (const auto& p : monomials) m = std::min(m, dot(*v.ell, p));
        out.push_back(m);
    }
    return out;
}

Cycle merle_teissier_ZK(const OkaGraph& og, const Support& s) {
    if (!is_rhs_link(newton_polyhedron(s)))
        throw Error(ErrorKind::NotRationalHomologySphere, "positive lattice point on the diagram");
    Cycle wf = wt_cycle(og.graph, s);
    Cycle wx = wt_cycle(og.graph, {IntVec3(1, 1, 1)});
    Cycle z(og.graph.size());
    for (size_t i = 0; i < z.size(); ++i) z[i] = 1 + wf[i] - wx[i];
    return z;
}

PlumbingGraph minimal_model(const PlumbingGraph& g) {
    std::map<int, Vertex> verts;
    std::map<int, std::map<int, int>> adj;
    for (const auto& v : g.vertices) {
        verts[v.id] = v;
        adj[v.id];
    }
    for (const auto& [a, b] : g.edges) {
        ++adj[a][b];
        if (a != b) ++adj[b][a];
    }
    for (;;) {
        int victim = -1;
        for (const auto& [id, v] : verts) {
            if (v.g != 0 || v.b != 1) continue;
            int deg = 0;
            bool loop_or_double = false;
            for (const auto& [w, mult] : adj[id]) {
                deg += (w == id) ? 2 * mult : mult;
                if (w == id || mult > 1) loop_or_double = true;
            }
            if (deg <= 2 && !loop_or_double) {
                victim = id;
                break;
            }
        }
        if (victim < 0) break;
        std::vector<int> nb;
        for (const auto& [w, mult] : adj[victim]) nb.push_back(w);
        for (int w : nb) {
            verts[w].b -= 1;
            adj[w].erase(victim);
        }
        if (nb.size() == 2) {
            ++adj[nb[0]][nb[1]];
            ++adj[nb[1]][nb[0]];
        }
        adj.erase(victim);
        verts.erase(victim);
    }
    PlumbingGraph out;
    for (const auto& [id, v] : verts) out.vertices.push_back(v);
    for (const auto& [a, m] : adj)
        for (const auto& [b, mult] : m)
            if (a <= b)
                for (int k = 0; k < mult; ++k) out.edges.push_back({a, b});
    out.normalize();
    return out;
}

Cycle minimal_cycle(const PlumbingGraph& g) {
    if (!is_negative_definite(intersection_matrix(g)))
        throw Error(ErrorKind::NotNegativeDefinite, "intersection form is not negative definite");
    const size_t n = g.size();
    if (n == 0) return {};
    GraphView view(g);
    Cycle z = unit_cycle(n, 0);
    for (;;) {
        size_t pick = n;
        for (size_t v = 0; v < n && pick == n; ++v)
            if (view.pair_with(z, v) > 0) pick = v;
        if (pick == n) return z;
        z[pick] += 1;
    }
}

Cycle unit_cycle(size_t n, size_t v) {
    Cycle z(n, 0);
    z[v] = 1;
    return z;
}

Cycle all_ones(size_t n) { return Cycle(n, 1); }

Cycle add(const Cycle& a, const Cycle& b) {
    Cycle c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

Cycle sub(const Cycle& a, const Cycle& b) {
    Cycle c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

bool leq(const Cycle& a, const Cycle& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::string to_string(const Cycle& z) {
    std::string s = "[";
    for (size_t i = 0; i < z.size(); ++i) s += (i ? "," : "") + z[i].str();
    return s + "]";
}

}  // namespace nsing
