#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "nsing/series_oracle.hpp"

using namespace nsing;
using nsing::testing::brieskorn;
using nsing::testing::front_page;

namespace {

PlumbingGraph single_vertex(int b) {
    PlumbingGraph g;
    g.vertices.push_back({0, b, 0, std::nullopt});
    return g;
}

BigInt brieskorn_pg(int a, int b, int c) {
    BigInt n = 0;
    for (int i = 1; i < a; ++i)
        for (int j = 1; j < b; ++j)
            for (int k = 1; k < c; ++k)
                if (make_rat(i, a) + make_rat(j, b) + make_rat(k, c) <= 1) ++n;
    return n;
}

}  // namespace

TEST_CASE("zeta coefficients of a single vertex") {
    for (int b : {1, 2, 5}) {
        auto g = single_vertex(b);
        auto d = intersection_data(g);
        CHECK(zeta_coefficient(d, g, RatCycle{0}) == 1);
        for (int k = 0; k <= 6; ++k) {
            // E^* = E / b, and (1 - t^{E^*})^{-2} has coefficient k + 1 at t^{k E^*}
            CHECK(zeta_coefficient(d, g, RatCycle{make_rat(k, b)}) == k + 1);
            CHECK(zeta_coefficient_by_products(d, g, RatCycle{make_rat(k, b)}) == k + 1);
        }
        CHECK_THROWS_AS(zeta_coefficient(d, g, RatCycle{make_rat(1, 2 * b)}), Error);
    }
}

TEST_CASE("zeta function is supported on the Lipman cone") {
    auto an = analyze(brieskorn(2, 3, 7));
    const auto& g = an.minimal;
    auto d = intersection_data(g);
    auto box = to_rat(to_cycle(canonical_cycle(g)));
    for (auto& x : box) x *= 2;
    auto poly = zeta_by_products(d, g, box);
    const auto D = scaled_duals(d, g).D;
    GraphView view(g);
    for (const auto& [key, c] : poly) {
        if (c == 0) continue;
        RatCycle l;
        for (auto k : key) l.push_back(make_rat(k, D));
        for (size_t v = 0; v < g.size(); ++v) CHECK(view.pair_with(l, v) <= 0);
        CHECK(zeta_coefficient(d, g, l) == c);
    }
}

TEST_CASE("two paths to the zeta coefficients agree") {
    for (const auto& s : {brieskorn(2, 3, 5), brieskorn(2, 3, 7), brieskorn(3, 4, 5), front_page()}) {
        auto an = analyze(s);
        const auto& g = an.minimal;
        auto d = intersection_data(g);
        auto box = to_rat(minimal_cycle(g));
        for (auto& x : box) x *= 2;
        auto poly = zeta_by_products(d, g, box);
        const auto D = scaled_duals(d, g).D;
        for (const auto& [key, c] : poly) {
            RatCycle l;
            for (auto k : key) l.push_back(make_rat(k, D));
            CHECK(zeta_coefficient(d, g, l) == c);
        }
    }
}

TEST_CASE("counting function basics") {
    for (const auto& s : {brieskorn(2, 3, 5), brieskorn(2, 3, 7), front_page()}) {
        auto an = analyze(s);
        auto d = intersection_data(an.minimal);
        CHECK(counting_q(d, an.minimal, Cycle(an.minimal.size(), 0)) == 0);
    }
}

TEST_CASE("q at the canonical cycle equals the geometric genus") {
    for (auto [a, b, c] : std::vector<std::array<int, 3>>{{2, 3, 5}, {2, 3, 7}, {3, 4, 5}, {2, 5, 9}, {3, 5, 7}, {2, 9, 11}}) {
        auto an = analyze(brieskorn(a, b, c));
        auto d = intersection_data(an.minimal);
        Cycle zk = to_cycle(canonical_cycle(an.minimal));
        CHECK(counting_q(d, an.minimal, zk) == brieskorn_pg(a, b, c));
    }
    auto an = analyze(front_page());
    auto d = intersection_data(an.minimal);
    CHECK(counting_q(d, an.minimal, to_cycle(canonical_cycle(an.minimal))) == 14);
}

TEST_CASE("tree recursion matches the assignment enumeration and ignores looser bounds") {
    std::mt19937 rng(17);
    for (const auto& s : {brieskorn(2, 3, 7), brieskorn(3, 4, 5), brieskorn(2, 5, 7), front_page()}) {
        auto an = analyze(s);
        const auto& g = an.minimal;
        auto d = intersection_data(g);
        Cycle zk = to_cycle(canonical_cycle(g));
        for (int it = 0; it < 6; ++it) {
            Cycle l(g.size());
            for (size_t v = 0; v < g.size(); ++v) l[v] = static_cast<int>(rng() % (static_cast<unsigned>(zk[v]) + 2));
            BigInt q = counting_q(d, g, l);
            CHECK(q == counting_q_by_assignments(d, g, l));
            CHECK(q == counting_q(d, g, l, 3));
        }
    }
}

TEST_CASE("q grows by a_i along sequence I") {
    for (const auto& s : {brieskorn(3, 4, 5), brieskorn(2, 3, 11), front_page()}) {
        auto an = analyze(s);
        auto d = intersection_data(an.minimal);
        auto seq = run_sequence(SequenceContext::for_graph(an.minimal), RatioTestKind::I);
        BigInt prev = 0;
        for (size_t i = 0; i < seq.steps.size(); ++i) {
            const Cycle& next = i + 1 < seq.steps.size() ? seq.steps[i + 1].Z : seq.target;
            BigInt q = counting_q(d, an.minimal, next);
            CHECK(q - prev == seq.steps[i].a);
            prev = q;
        }
    }
}

TEST_CASE("lattice point counts") {
    CHECK(count_positive_points_under(brieskorn(2, 3, 5)) == 0);
    CHECK(count_positive_points_under(brieskorn(2, 3, 7)) == 1);
    CHECK(count_positive_points_under(brieskorn(5, 7, 11)) == brieskorn_pg(5, 7, 11));
    CHECK(count_positive_points_under(front_page()) == 14);
    auto an = analyze(front_page());
    const auto& g = an.oka_convenient.graph;
    Cycle region = sub(to_cycle(canonical_cycle(g)), all_ones(g.size()));
    CHECK(count_outside(g, region) == 14);
}

TEST_CASE("point partitions") {
    for (const auto& s : {brieskorn(2, 3, 7), brieskorn(3, 4, 5), front_page()}) {
        auto an = analyze(s);
        auto ctx = SequenceContext::for_newton(an.oka_convenient, an.convenient);
        auto III = run_sequence(ctx, RatioTestKind::III);
        auto P3 = enumerate_P(an.oka_convenient, III);
        CHECK(P3.disjoint);
        CHECK(P3.covers);
        CHECK(P3.sizes_match);
        for (size_t i = 0; i < P3.sets.size(); ++i) CHECK((P3.a[i] == 0) == P3.sets[i].empty());
        auto II = run_sequence(ctx, RatioTestKind::II);
        CHECK(enumerate_P(an.oka_convenient, II).ok());
    }
    auto an = analyze(brieskorn(2, 3, 7));
    auto ctx = SequenceContext::for_newton(an.oka_convenient, an.convenient);
    auto P = enumerate_P(an.oka_convenient, run_sequence(ctx, RatioTestKind::III));
    size_t total = 0;
    for (const auto& set : P.sets) total += set.size();
    CHECK(total == 1);
    CHECK(P.complement_size == 1);
}

TEST_CASE("kind I partition on the Oka graph of a convenient input") {
    auto og = oka_graph(brieskorn(3, 4, 5));
    auto seq = run_sequence(SequenceContext::for_graph(og.graph), RatioTestKind::I);
    auto P = enumerate_P(og, seq);
    CHECK(P.disjoint);
    CHECK(P.covers);
    BigInt total = 0;
    for (const auto& set : P.sets) total += set.size();
    CHECK(total == seq.a_sum());
}

TEST_CASE("graphs with cycles or genus are rejected") {
    PlumbingGraph g = single_vertex(2);
    g.vertices[0].g = 1;
    auto d = intersection_data(g);
    CHECK_THROWS_AS(scaled_duals(d, g), Error);
}
