#include "nsing/sequences.hpp"

#include <algorithm>
#include <deque>

namespace nsing {

namespace {

// Solves A X = B exactly; A is a principal block of a negative definite form, hence invertible.
RatMatrix solve(RatMatrix A, RatMatrix B) {
    const size_t n = A.size();
    const size_t m = n ? B[0].size() : 0;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && A[piv][c] == 0) ++piv;
        check(piv < n, "singular block in harmonic extension");
        std::swap(A[piv], A[c]);
        std::swap(B[piv], B[c]);
        Rational p = A[c][c];
        for (size_t j = c; j < n; ++j) A[c][j] /= p;
        for (size_t j = 0; j < m; ++j) B[c][j] /= p;
        for (size_t r = 0; r < n; ++r) {
            if (r == c || A[r][c] == 0) continue;
            Rational f = A[r][c];
            for (size_t j = c; j < n; ++j)
                if (A[c][j] != 0) A[r][j] -= f * A[c][j];
            for (size_t j = 0; j < m; ++j)
                if (B[c][j] != 0) B[r][j] -= f * B[c][j];
        }
    }
    return B;
}

}  // namespace

LauferContext::LauferContext(PlumbingGraph g) : g_(std::move(g)), view_(g_) {
    const size_t n = g_.size();
    nodes_ = g_.nodes();
    is_node_.assign(n, false);
    for (size_t v : nodes_) is_node_[v] = true;
    for (size_t v = 0; v < n; ++v)
        if (!is_node_[v]) others_.push_back(v);
    IntMatrix I = intersection_matrix(g_);
    RatMatrix A(others_.size(), std::vector<Rational>(others_.size(), 0));
    RatMatrix B(others_.size(), std::vector<Rational>(nodes_.size(), 0));
    for (size_t i = 0; i < others_.size(); ++i) {
        for (size_t j = 0; j < others_.size(); ++j) A[i][j] = Rational(I[others_[i]][others_[j]]);
        for (size_t j = 0; j < nodes_.size(); ++j) B[i][j] = Rational(-I[others_[i]][nodes_[j]]);
    }
    harmonic_ = others_.empty() ? RatMatrix{} : solve(A, B);

    auto deg = g_.degrees();
    for (size_t nd : nodes_) {
        for (size_t w : view_.nbr[nd]) {
            if (is_node_[w]) continue;
            Chain c{nd, {w}, std::nullopt, 0, 0};
            size_t prev = nd, cur = w;
            while (deg[cur] == 2) {
                const auto& nb = view_.nbr[cur];
                size_t next = (nb[0] == prev) ? nb[1] : nb[0];
                if (is_node_[next]) {
                    c.far_node = next;
                    break;
                }
                c.verts.push_back(next);
                prev = cur;
                cur = next;
            }
            std::vector<BigInt> bs;
            for (size_t v : c.verts) bs.push_back(view_.b[v]);
            c.alpha = continuant(bs, 0);
            c.beta = continuant(bs, 1);
            chains_.push_back(c);
        }
    }
}

Cycle LauferContext::legs_cycle() const {
    Cycle z(g_.size(), 0);
    for (const auto& c : chains_)
        if (!c.far_node)
            for (size_t v : c.verts) z[v] = 1;
    return z;
}

BigInt LauferContext::interpolate(const Chain& c, const Cycle& Z) const {
    BigInt far = c.far_node ? Z[*c.far_node] : BigInt(0);
    return ceil_div(c.beta * Z[c.node] + far, c.alpha);
}

Cycle LauferContext::x(const Cycle& Z) const {
    const size_t n = g_.size();
    check(Z.size() == n, "cycle size mismatch");
    Cycle W(n, 0);
    for (size_t v : nodes_) W[v] = Z[v];
    // start below x(Z): the rational solution of (W, E_v) = 0 off the nodes is a lower bound,
    // because the inverse of minus a negative definite block with nonnegative off-diagonal is >= 0
    for (size_t i = 0; i < others_.size(); ++i) {
        Rational s = 0;
        for (size_t j = 0; j < nodes_.size(); ++j)
            if (harmonic_[i][j] != 0) s += harmonic_[i][j] * Rational(Z[nodes_[j]]);
        W[others_[i]] = floor(s);
    }
    std::deque<size_t> work(others_.begin(), others_.end());
    std::vector<bool> queued(n, false);
    for (size_t v : others_) queued[v] = true;
    while (!work.empty()) {
        size_t v = work.front();
        work.pop_front();
        queued[v] = false;
        if (view_.pair_with(W, v) <= 0) continue;
        W[v] += 1;
        if (!queued[v]) queued[v] = true, work.push_back(v);
        for (size_t w : view_.nbr[v])
            if (!is_node_[w] && !queued[w]) queued[w] = true, work.push_back(w);
    }
    for (const auto& c : chains_)
        check(interpolate(c, W) == W[c.verts.front()], "bamboo interpolation disagrees with the Laufer sequence");
    return W;
}

Cycle laufer_x(const LauferContext& ctx, const Cycle& Z) { return ctx.x(Z); }

const char* kind_name(RatioTestKind k) {
    switch (k) {
        case RatioTestKind::I: return "I";
        case RatioTestKind::II: return "II";
        case RatioTestKind::III: return "III";
    }
    return "?";
}

BigInt SequenceResult::a_sum() const {
    BigInt s = 0;
    for (const auto& st : steps) s += st.a;
    return s;
}

SequenceContext SequenceContext::for_graph(const PlumbingGraph& g) {
    RatCycle zk = canonical_cycle(g);
    if (!is_integral(zk)) throw Error(ErrorKind::PreconditionViolated, "canonical cycle is not integral");
    return SequenceContext{LauferContext(g), to_cycle(zk), std::nullopt, std::nullopt};
}

SequenceContext SequenceContext::for_newton(const OkaGraph& og, const Support& s) {
    if (!is_convenient(s)) throw Error(ErrorKind::PreconditionViolated, "support is not convenient");
    SequenceContext ctx = for_graph(og.graph);
    ctx.wt_f = wt_cycle(og.graph, s);
    ctx.wt_xyz = wt_cycle(og.graph, {IntVec3(1, 1, 1)});
    return ctx;
}

Cycle sequence_target(const SequenceContext& ctx, RatioTestKind kind) {
    const size_t n = ctx.ZK.size();
    switch (kind) {
        case RatioTestKind::I: return ctx.ZK;
        case RatioTestKind::II:
            if (!ctx.wt_f) throw Error(ErrorKind::KindMismatch, "kind II needs Newton data");
            return *ctx.wt_f;
        case RatioTestKind::III: {
            if (!ctx.wt_f) throw Error(ErrorKind::KindMismatch, "kind III needs Newton data");
            // Z_K - E can be -1 at a node of a non-minimal graph; that halfspace holds on the whole octant,
            // and so does the one for 0
            Cycle w = sub(ctx.ZK, all_ones(n));
            for (size_t v : ctx.laufer.nodes()) w[v] = std::max(w[v], BigInt(0));
            return ctx.laufer.x(w);
        }
    }
    return {};
}

SequenceResult run_sequence(const SequenceContext& ctx, RatioTestKind kind, const SequenceOptions& opt) {
    const auto& L = ctx.laufer;
    const size_t n = L.graph().size();
    SequenceResult res{kind, {}, sequence_target(ctx, kind), 0};
    const Cycle& target = res.target;
    if (!(L.x(target) == target)) throw Error(ErrorKind::PreconditionViolated, "target is not fixed by x");
    for (size_t v : L.nodes()) res.k += target[v];
    const bool finite = kind != RatioTestKind::II;
    if (finite && !leq(Cycle(n, 0), target)) {
        // rational singularities: Z_K - E is negative on every node and nothing is counted
        bool all_nonpositive = true;
        for (size_t v : L.nodes()) all_nonpositive = all_nonpositive && target[v] <= 0;
        if (!all_nonpositive) throw Error(ErrorKind::PreconditionViolated, "target has negative coefficients");
        res.k = 0;
        return res;
    }

    auto fraction = [&](const Cycle& Z, size_t v) -> Rational {
        switch (kind) {
            case RatioTestKind::I: {
                BigInt d = ctx.ZK[v] - 1;
                if (d < 0) throw Error(ErrorKind::PreconditionViolated, "Z_K - E negative at a node");
                // m_v(Z_K - E) = 0: the node only moves in the final round, together with the ratio 1 nodes
                if (d == 0) return Rational(1);
                return make_rat(Z[v], d);
            }
            case RatioTestKind::II: return make_rat(Z[v], (*ctx.wt_f)[v]);
            case RatioTestKind::III: return make_rat(Z[v] + (*ctx.wt_xyz)[v], (*ctx.wt_f)[v]);
        }
        return 0;
    };

    Cycle Z(n, 0);
    for (;;) {
        if (finite && Z == target) break;
        bool have = false;
        size_t best = 0;
        Rational best_r;
        BigInt best_pair;
        for (size_t v : L.nodes()) {
            if (finite && Z[v] >= target[v]) continue;
            Rational r = fraction(Z, v);
            BigInt p = L.view().pair_with(Z, v);
            bool better = !have || r < best_r || (r == best_r && p > best_pair) ||
                          (r == best_r && p == best_pair && (opt.reverse_tiebreak ? v > best : v < best));
            if (better) have = true, best = v, best_r = r, best_pair = p;
        }
        check(have, "no node left before reaching the target");
        if (!finite && best_r > opt.max_ratio) break;
        BigInt a = std::max(BigInt(0), BigInt(1 - best_pair));
        res.steps.push_back({Z, best, a, best_r});
        Cycle next = Z;
        next[best] += 1;
        Z = L.x(next);
        if (finite) {
            check(leq(Z, target), "sequence overshoots its target");
            check(BigInt(res.steps.size()) <= res.k, "sequence longer than expected");
        }
    }
    if (finite) check(BigInt(res.steps.size()) == res.k, "sequence length differs from the node sum of the target");
    return res;
}

Rational chi(const PlumbingGraph& g, const RatCycle& ZK, const Cycle& l) {
    RatCycle lr = to_rat(l), d(l.size());
    for (size_t i = 0; i < l.size(); ++i) d[i] = lr[i] - ZK[i];
    return -form(intersection_matrix(g), lr, d) / 2;
}

Analysis analyze(const Support& s) {
    Analysis an;
    an.support = normalize_support(s);
    an.polyhedron = newton_polyhedron(an.support);
    if (an.polyhedron.compact_faces.empty()) throw Error(ErrorKind::NoCompactFace, "no compact two dimensional face");
    if (!is_rhs_link(an.polyhedron))
        throw Error(ErrorKind::NotRationalHomologySphere, "positive lattice point on the diagram");
    an.convenient = make_convenient(an.support);
    if (!is_rhs_link(an.convenient))
        throw Error(ErrorKind::NotRationalHomologySphere, "convenient modification has a positive lattice point");
    an.oka = oka_graph(an.polyhedron);
    an.oka_convenient = oka_graph(an.convenient);
    an.minimal = minimal_model(an.oka.graph);
    return an;
}

GenusResult geometric_genus(const Analysis& an, const SequenceOptions& opt) {
    GenusResult r;
    r.via_I = run_sequence(SequenceContext::for_graph(an.minimal), RatioTestKind::I, opt).a_sum();
    r.via_III = run_sequence(SequenceContext::for_newton(an.oka_convenient, an.convenient), RatioTestKind::III, opt).a_sum();
    return r;
}

SpectrumPart spectrum_leq0(const Analysis& an, const SequenceOptions& opt) {
    auto seq = run_sequence(SequenceContext::for_newton(an.oka_convenient, an.convenient), RatioTestKind::III, opt);
    SpectrumPart out;
    for (const auto& st : seq.steps)
        for (BigInt i = 0; i < st.a; ++i) out.push_back(st.r - 1);
    std::sort(out.begin(), out.end());
    return out;
}

PuiseuxPoly poincare_via_sequence(const Analysis& an, const Rational& R, const SequenceOptions& opt) {
    if (R <= 0) throw Error(ErrorKind::PreconditionViolated, "R must be positive");
    SequenceOptions o = opt;
    o.max_ratio = R;
    auto seq = run_sequence(SequenceContext::for_newton(an.oka_convenient, an.convenient), RatioTestKind::II, o);
    PuiseuxPoly out;
    for (const auto& st : seq.steps) add_term(out, st.r, st.a);
    return out;
}

SWResult sw_invariant(const Analysis& an, const SequenceOptions& opt) {
    auto ctx = SequenceContext::for_graph(an.minimal);
    auto seq = run_sequence(ctx, RatioTestKind::I, opt);
    Rational zk2 = Rational(form(intersection_matrix(an.minimal), ctx.ZK, ctx.ZK));
    return {seq.a_sum(), zk2, an.minimal.size()};
}

GenusResult geometric_genus(const Support& s) { return geometric_genus(analyze(s)); }
SpectrumPart spectrum_leq0(const Support& s) { return spectrum_leq0(analyze(s)); }
PuiseuxPoly poincare_via_sequence(const Support& s, const Rational& R) { return poincare_via_sequence(analyze(s), R); }
SWResult sw_invariant(const Support& s) { return sw_invariant(analyze(s)); }

}  // namespace nsing
