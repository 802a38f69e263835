#include "nsing/series_oracle.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "nsing/errors.hpp"

namespace nsing {

namespace {

int64_t to_i64(const BigInt& v) {
    check(v <= BigInt(std::numeric_limits<int64_t>::max() / 4) && v >= -BigInt(std::numeric_limits<int64_t>::max() / 4),
          "value does not fit the enumeration range");
    return static_cast<int64_t>(v);
}

void require_genus0_tree(const PlumbingGraph& g) {
    if (!g.is_tree()) throw Error(ErrorKind::NotTree, "zeta function needs a tree");
    for (const auto& v : g.vertices)
        if (v.g != 0) throw Error(ErrorKind::PreconditionViolated, "zeta function needs genus zero vertices");
}

// Coefficient of x^a in (1 - x)^(delta - 2).
BigInt factor_coefficient(int delta, int64_t a) {
    if (delta == 1) return 1;
    if (delta == 0) return BigInt(a + 1);
    int n = delta - 2;
    if (a > n) return 0;
    BigInt c = 1;
    for (int64_t i = 0; i < a; ++i) c = c * (n - i) / (i + 1);
    return (a % 2) ? BigInt(-c) : c;
}

std::vector<int64_t> scaled(const RatCycle& z, int64_t D) {
    std::vector<int64_t> out(z.size());
    for (size_t i = 0; i < z.size(); ++i) {
        Rational s = z[i] * D;
        if (!is_integral(s)) throw Error(ErrorKind::PreconditionViolated, "cycle is not in the dual lattice");
        out[i] = to_i64(num(s));
    }
    return out;
}

}  // namespace

ScaledDuals scaled_duals(const IntersectionData& data, const PlumbingGraph& g) {
    require_genus0_tree(g);
    ScaledDuals sd;
    sd.D = to_i64(data.group_order);
    const size_t n = g.size();
    sd.S.assign(n, std::vector<int64_t>(n));
    for (size_t v = 0; v < n; ++v)
        for (size_t w = 0; w < n; ++w) {
            Rational s = data.dual[v][w] * sd.D;
            check(is_integral(s), "scaled dual cycle is not integral");
            check(s > 0, "dual cycle entry is not positive");
            sd.S[v][w] = to_i64(num(s));
        }
    auto deg = g.degrees();
    for (size_t d : deg) sd.delta.push_back(static_cast<int>(d));
    return sd;
}

BigInt zeta_coefficient(const IntersectionData& data, const PlumbingGraph& g, const RatCycle& lp) {
    ScaledDuals sd = scaled_duals(data, g);
    const size_t n = g.size();
    std::vector<int64_t> T = scaled(lp, sd.D);
    std::vector<size_t> order;
    for (size_t v = 0; v < n; ++v)
        if (sd.delta[v] != 2) order.push_back(v);

    BigInt total = 0;
    std::vector<int64_t> S(n, 0);
    auto rec = [&](auto&& self, size_t idx, const BigInt& coef) -> void {
        if (idx == order.size()) {
            if (S == T) total += coef;
            return;
        }
        const size_t v = order[idx];
        const auto& Sv = sd.S[v];
        int64_t a = 0;
        for (;;) {
            BigInt c = factor_coefficient(sd.delta[v], a);
            if (c != 0) self(self, idx + 1, coef * c);
            if (sd.delta[v] >= 3 && a >= sd.delta[v] - 2) break;
            bool fits = true;
            for (size_t w = 0; w < n; ++w) fits = fits && S[w] + Sv[w] <= T[w];
            if (!fits) break;
            for (size_t w = 0; w < n; ++w) S[w] += Sv[w];
            ++a;
        }
        for (size_t w = 0; w < n; ++w) S[w] -= a * Sv[w];
    };
    for (size_t w = 0; w < n; ++w)
        if (T[w] < 0) return 0;
    rec(rec, 0, BigInt(1));
    return total;
}

std::map<std::vector<int64_t>, BigInt> zeta_by_products(const IntersectionData& data, const PlumbingGraph& g,
                                                        const RatCycle& box) {
    ScaledDuals sd = scaled_duals(data, g);
    const size_t n = g.size();
    std::vector<int64_t> T = scaled(box, sd.D);
    auto below = [&](const std::vector<int64_t>& x) {
        for (size_t w = 0; w < n; ++w)
            if (x[w] > T[w]) return false;
        return true;
    };
    std::map<std::vector<int64_t>, BigInt> poly;
    if (!below(std::vector<int64_t>(n, 0))) return poly;
    poly[std::vector<int64_t>(n, 0)] = 1;
    for (size_t v = 0; v < n; ++v) {
        if (sd.delta[v] == 2) continue;
        // truncated factor: exponent a * S_v with its coefficient
        std::vector<std::pair<std::vector<int64_t>, BigInt>> factor;
        std::vector<int64_t> e(n, 0);
        for (int64_t a = 0; below(e); ++a) {
            BigInt c = factor_coefficient(sd.delta[v], a);
            if (sd.delta[v] >= 3 && a > sd.delta[v] - 2) break;
            if (c != 0) factor.emplace_back(e, c);
            for (size_t w = 0; w < n; ++w) e[w] += sd.S[v][w];
        }
        std::map<std::vector<int64_t>, BigInt> next;
        for (const auto& [x, c] : poly)
            for (const auto& [y, d] : factor) {
                std::vector<int64_t> z(n);
                for (size_t w = 0; w < n; ++w) z[w] = x[w] + y[w];
                if (!below(z)) continue;
                next[z] += c * d;
            }
        poly.clear();
        for (auto& [k, c] : next)
            if (c != 0) poly.emplace(k, c);
    }
    return poly;
}

BigInt zeta_coefficient_by_products(const IntersectionData& data, const PlumbingGraph& g, const RatCycle& lp) {
    auto poly = zeta_by_products(data, g, lp);
    ScaledDuals sd = scaled_duals(data, g);
    auto it = poly.find(scaled(lp, sd.D));
    return it == poly.end() ? BigInt(0) : it->second;
}

BigInt counting_q_by_assignments(const IntersectionData& data, const PlumbingGraph& g, const Cycle& lp, int extra_bound) {
    ScaledDuals sd = scaled_duals(data, g);
    const size_t n = g.size();
    const int64_t D = sd.D;
    std::vector<int64_t> T(n);
    for (size_t w = 0; w < n; ++w) T[w] = to_i64(lp[w]) * D;
    std::vector<size_t> order;
    for (size_t v = 0; v < n; ++v)
        if (sd.delta[v] != 2) order.push_back(v);

    // A counted cycle has a coordinate w with sum_v a_v m_w(E_v^*) < m_w(lp); every entry of every E_v^* is
    // at least min_entry, so sum_v a_v < max_w m_w(lp) / min_entry.
    int64_t min_entry = std::numeric_limits<int64_t>::max(), max_t = 0;
    for (size_t v = 0; v < n; ++v)
        for (size_t w = 0; w < n; ++w) min_entry = std::min(min_entry, sd.S[v][w]);
    for (int64_t t : T) max_t = std::max(max_t, t);
    const int64_t cap = (max_t + min_entry - 1) / min_entry + 1 + extra_bound;

    // An end vertex placed last is summed in closed form: its factor is 1/(1 - t^{E^*}), and the admissible
    // exponents form a residue class modulo the order of E^* in L'/L.
    std::optional<size_t> last;
    std::map<std::vector<int64_t>, int64_t> first_exponent;
    int64_t period = 0;
    for (size_t i = 0; i < order.size(); ++i)
        if (sd.delta[order[i]] == 1) {
            std::swap(order[i], order.back());
            last = order.back();
            order.pop_back();
            std::vector<int64_t> r(n, 0);
            do {
                first_exponent.emplace(r, period);
                ++period;
                for (size_t w = 0; w < n; ++w) r[w] = (r[w] + sd.S[*last][w]) % D;
            } while (std::any_of(r.begin(), r.end(), [](int64_t x) { return x != 0; }));
            break;
        }

    BigInt total = 0;
    std::vector<int64_t> S(n, 0);
    auto all_geq = [&]() {
        for (size_t w = 0; w < n; ++w)
            if (S[w] < T[w]) return false;
        return true;
    };
    auto leaf = [&](int64_t used, const BigInt& coef) {
        if (!last) {
            for (size_t w = 0; w < n; ++w)
                if (S[w] % D != 0) return;
            if (!all_geq()) total += coef;
            return;
        }
        std::vector<int64_t> need(n);
        for (size_t w = 0; w < n; ++w) need[w] = ((-S[w]) % D + D) % D;
        auto it = first_exponent.find(need);
        if (it == first_exponent.end()) return;
        // exponents a with S + a E^* not >= lp
        const auto& Sv = sd.S[*last];
        int64_t below = 0;
        for (size_t w = 0; w < n; ++w)
            if (T[w] > S[w]) below = std::max(below, (T[w] - S[w] + Sv[w] - 1) / Sv[w]);
        below = std::min(below, cap - used + 1);
        if (it->second < below) total += coef * ((below - 1 - it->second) / period + 1);
    };
    auto rec = [&](auto&& self, size_t idx, int64_t used, const BigInt& coef) -> void {
        if (idx == order.size()) {
            leaf(used, coef);
            return;
        }
        const size_t v = order[idx];
        const auto& Sv = sd.S[v];
        int64_t a = 0;
        for (;;) {
            if (all_geq()) break;  // every extension stays >= lp
            BigInt c = factor_coefficient(sd.delta[v], a);
            if (c != 0) self(self, idx + 1, used + a, coef * c);
            if (sd.delta[v] >= 3 && a >= sd.delta[v] - 2) break;
            if (used + a + 1 > cap) break;
            for (size_t w = 0; w < n; ++w) S[w] += Sv[w];
            ++a;
        }
        for (size_t w = 0; w < n; ++w) S[w] -= a * Sv[w];
    };
    rec(rec, 0, 0, BigInt(1));
    return total;
}

BigInt counting_q(const IntersectionData& data, const PlumbingGraph& g, const Cycle& lp, int extra_bound) {
    ScaledDuals sd = scaled_duals(data, g);
    const size_t n = g.size();
    GraphView view(g);
    std::vector<int64_t> b(n), t(n);
    for (size_t v = 0; v < n; ++v) b[v] = to_i64(view.b[v]), t[v] = to_i64(lp[v]);

    BigInt total = 0;
    // Split by the first coordinate w with l_w < t_w. For l = sum a_v E_v^* with a >= 0,
    // l_u <= l_w * max_v m_u(E_v^*) / m_w(E_v^*) bounds every coordinate. Rooted at w, the remaining
    // conditions (a_u = -(l, E_u) in the support of the factor at u, l_u >= t_u for u < w) are local,
    // so the sum factors over the tree.
    for (size_t w = 0; w < n; ++w) {
        if (t[w] <= 0) continue;
        std::vector<size_t> bfs{w}, parent(n, n);
        std::vector<std::vector<size_t>> children(n);
        std::vector<bool> seen(n, false);
        seen[w] = true;
        for (size_t i = 0; i < bfs.size(); ++i)
            for (size_t u : view.nbr[bfs[i]])
                if (!seen[u]) {
                    seen[u] = true;
                    parent[u] = bfs[i];
                    children[bfs[i]].push_back(u);
                    bfs.push_back(u);
                }
        std::vector<int64_t> B(n, 0);
        for (size_t u = 0; u < n; ++u) {
            int64_t m = 0;
            for (size_t v = 0; v < n; ++v) m = std::max(m, (t[w] - 1) * sd.S[v][u] / sd.S[v][w]);
            B[u] = m + extra_bound;
        }

        // conv[u][x][s]: sum over the subtrees below u, with l_u = x and the children summing to s
        std::vector<std::map<int64_t, std::vector<BigInt>>> conv(n);
        auto sum_a = [&](size_t u, const std::vector<BigInt>& cv, int64_t rhs) {
            // sum over a of coef(a) * cv[rhs - a]
            BigInt r = 0;
            const int delta = sd.delta[u];
            const int64_t a_max = delta == 2 ? 0 : delta >= 3 ? delta - 2 : rhs;
            for (int64_t a = 0; a <= a_max && a <= rhs; ++a) {
                int64_t idx = rhs - a;
                if (idx >= static_cast<int64_t>(cv.size()) || cv[idx] == 0) continue;
                r += factor_coefficient(delta, a) * cv[idx];
            }
            return r;
        };
        auto get_conv = [&](auto&& self, size_t u, int64_t x) -> const std::vector<BigInt>& {
            auto it = conv[u].find(x);
            if (it != conv[u].end()) return it->second;
            const int64_t smax = b[u] * x;
            std::vector<BigInt> acc{1};
            for (size_t c : children[u]) {
                // b_c l_c >= l_u follows from a_c >= 0
                const int64_t lo = std::max((x + b[c] - 1) / b[c], c < w ? t[c] : int64_t(0));
                const int64_t hi = std::min(B[c], smax);
                std::vector<BigInt> f;
                for (int64_t y = lo; y <= hi; ++y) {
                    BigInt h = sum_a(c, self(self, c, y), b[c] * y - x);
                    if (h != 0) {
                        if (f.size() <= static_cast<size_t>(y)) f.resize(y + 1);
                        f[y] = h;
                    }
                }
                const int64_t top = std::min<int64_t>(smax, static_cast<int64_t>(acc.size() + f.size()) - 2);
                std::vector<BigInt> next(std::max<int64_t>(top + 1, 0));
                for (size_t i = 0; i < acc.size(); ++i) {
                    if (acc[i] == 0) continue;
                    for (size_t j = 0; j < f.size() && static_cast<int64_t>(i + j) <= top; ++j)
                        if (f[j] != 0) next[i + j] += acc[i] * f[j];
                }
                acc = std::move(next);
                if (acc.empty()) break;
            }
            return conv[u].emplace(x, std::move(acc)).first->second;
        };
        for (int64_t x = 0; x < t[w]; ++x) total += sum_a(w, get_conv(get_conv, w, x), b[w] * x);
    }
    return total;
}

namespace {

struct Functionals {
    std::vector<std::array<int64_t, 3>> ell;
};

Functionals functionals(const PlumbingGraph& g) {
    Functionals f;
    for (const auto& v : g.vertices) {
        if (!v.ell) throw Error(ErrorKind::KindMismatch, "vertex without a functional");
        std::array<int64_t, 3> e{};
        for (int i = 0; i < 3; ++i) {
            e[i] = to_i64((*v.ell)[i]);
            if (e[i] <= 0) throw Error(ErrorKind::PreconditionViolated, "functional with a nonpositive entry");
        }
        f.ell.push_back(e);
    }
    return f;
}

// Calls f on every p >= 0 with l_v(p) < m_v for some v; all other points lie in Gamma_+ of every cycle
// whose coefficients are bounded by m.
template <class F>
void for_region(const Functionals& Fn, const std::vector<int64_t>& m, F&& f) {
    const size_t n = m.size();
    auto room = [&](int64_t x, int64_t y, int axis) {
        // largest count of values c >= 0 of the given axis with l_v(x, y, c) < m_v for some v
        int64_t best = 0;
        for (size_t v = 0; v < n; ++v) {
            const auto& e = Fn.ell[v];
            int64_t rest = m[v] - (axis >= 1 ? e[0] * x : 0) - (axis >= 2 ? e[1] * y : 0);
            if (rest > 0) best = std::max(best, (rest + e[axis] - 1) / e[axis]);
        }
        return best;
    };
    for (int64_t x = 0, nx = room(0, 0, 0); x < nx; ++x)
        for (int64_t y = 0, ny = room(x, 0, 1); y < ny; ++y)
            for (int64_t z = 0, nz = room(x, y, 2); z < nz; ++z) f(std::array<int64_t, 3>{x, y, z});
}

std::vector<int64_t> upper(const std::vector<std::vector<int64_t>>& cycles) {
    std::vector<int64_t> m = cycles.front();
    for (const auto& z : cycles)
        for (size_t v = 0; v < m.size(); ++v) m[v] = std::max(m[v], z[v]);
    return m;
}

bool in_gamma(const Functionals& F, const std::vector<int64_t>& m, const std::array<int64_t, 3>& p) {
    for (size_t v = 0; v < m.size(); ++v) {
        const auto& e = F.ell[v];
        if (e[0] * p[0] + e[1] * p[1] + e[2] * p[2] < m[v]) return false;
    }
    return true;
}

std::vector<int64_t> small(const Cycle& z) {
    std::vector<int64_t> out;
    for (const auto& c : z) out.push_back(to_i64(c));
    return out;
}

}  // namespace

BigInt count_outside(const PlumbingGraph& g, const Cycle& Z) {
    Functionals F = functionals(g);
    auto m = small(Z);
    BigInt count = 0;
    for_region(F, m, [&](const std::array<int64_t, 3>& p) {
        if (!in_gamma(F, m, p)) count += 1;
    });
    return count;
}

BigInt count_positive_points_under(const Support& s) {
    NewtonPolyhedron P = newton_polyhedron(make_convenient(s));
    // a point under the diagram has weight < 1, so it lies in the weight box of R = 1
    auto box = weight_box(P, Rational(1));
    BigInt count = 0;
    for (BigInt x = 1; x <= box[0]; ++x)
        for (BigInt y = 1; y <= box[1]; ++y)
            for (BigInt z = 1; z <= box[2]; ++z)
                if (!P.contains(IntVec3(x, y, z))) count += 1;
    return count;
}

PointPartition enumerate_P(const PlumbingGraph& g, const SequenceResult& seq, const Cycle& region, size_t count) {
    if (seq.target.size() != g.size() || region.size() != g.size())
        throw Error(ErrorKind::KindMismatch, "sequence was computed on another graph");
    if (count > seq.steps.size()) throw Error(ErrorKind::PreconditionViolated, "not enough steps");
    Functionals F = functionals(g);
    const size_t n = g.size();

    // cycles Z_0 .. Z_count
    std::vector<std::vector<int64_t>> Zs;
    for (size_t i = 0; i <= count; ++i) Zs.push_back(small(i < seq.steps.size() ? seq.steps[i].Z : seq.target));
    if (count == 0) Zs.assign(1, std::vector<int64_t>(n, 0));
    const auto reg = small(region);

    PointPartition out;
    out.sets.resize(count);
    for (size_t i = 0; i < count; ++i) out.a.push_back(seq.steps[i].a);

    // Z_0 <= Z_1 <= ... makes the Gamma_+(Z_i) nested, so each point leaves them at most once.
    bool monotone = true;
    for (size_t i = 0; i < count; ++i)
        for (size_t v = 0; v < n; ++v) monotone = monotone && Zs[i][v] <= Zs[i + 1][v];
    std::vector<std::vector<int64_t>> column(n);
    for (size_t v = 0; v < n; ++v)
        for (size_t i = 0; i <= count; ++i) column[v].push_back(Zs[i][v]);

    out.disjoint = out.covers = true;
    std::vector<std::vector<int64_t>> all = Zs;
    all.push_back(reg);
    for_region(F, upper(all), [&](const std::array<int64_t, 3>& p) {
        size_t hits = 0, where = 0;
        if (monotone) {
            // last i with p in Gamma_+(Z_i)
            size_t last = count + 1;
            for (size_t v = 0; v < n; ++v) {
                const auto& e = F.ell[v];
                int64_t val = e[0] * p[0] + e[1] * p[1] + e[2] * p[2];
                size_t cnt = std::upper_bound(column[v].begin(), column[v].end(), val) - column[v].begin();
                last = std::min(last, cnt);
            }
            if (last >= 1 && last <= count) hits = 1, where = last - 1;
        } else {
            for (size_t i = 0; i < count; ++i)
                if (in_gamma(F, Zs[i], p) && !in_gamma(F, Zs[i + 1], p)) ++hits, where = i;
        }
        if (hits > 1) out.disjoint = false;
        bool outside = !in_gamma(F, reg, p);
        if (outside) out.complement_size += 1;
        if ((hits > 0) != outside) out.covers = false;
        if (hits > 0) out.sets[where].push_back(IntVec3(p[0], p[1], p[2]));
    });
    out.sizes_match = true;
    for (size_t i = 0; i < count; ++i)
        if (BigInt(out.sets[i].size()) != out.a[i]) out.sizes_match = false;
    return out;
}

PointPartition enumerate_P(const OkaGraph& og, const SequenceResult& seq) {
    const auto& g = og.graph;
    if (seq.kind == RatioTestKind::II) {
        size_t k = static_cast<size_t>(seq.k);
        if (seq.steps.size() < k) throw Error(ErrorKind::PreconditionViolated, "kind II sequence shorter than k");
        return enumerate_P(g, seq, seq.target, k);
    }
    RatCycle zk = canonical_cycle(g);
    if (!is_integral(zk)) throw Error(ErrorKind::PreconditionViolated, "canonical cycle is not integral");
    Cycle region = sub(to_cycle(zk), all_ones(g.size()));
    return enumerate_P(g, seq, region, seq.steps.size());
}

}  // namespace nsing
