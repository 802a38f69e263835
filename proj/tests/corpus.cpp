#include "corpus.hpp"

#include <random>

#include "nsing/errors.hpp"
#include "nsing/graph.hpp"

namespace nsing::testing {

Support brieskorn(int a, int b, int c) { return {IntVec3(a, 0, 0), IntVec3(0, b, 0), IntVec3(0, 0, c)}; }

Support front_page() {
    return {IntVec3(4, 0, 0), IntVec3(3, 2, 0), IntVec3(0, 10, 0),
            IntVec3(2, 0, 3), IntVec3(0, 3, 4), IntVec3(0, 0, 8)};
}

std::vector<CorpusEntry> random_convenient(unsigned seed, size_t count) {
    std::mt19937 rng(seed);
    // raw draws reduced by hand so the corpus does not depend on the standard library's distributions
    auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
    std::vector<CorpusEntry> out;
    while (out.size() < count) {
        Support s;
        for (int i = 0; i < 3; ++i) {
            IntVec3 p(0, 0, 0);
            p[i] = draw(2, 9);
            s.push_back(p);
        }
        int extra = draw(1, 4);
        for (int j = 0; j < extra; ++j) s.push_back(IntVec3(draw(0, 5), draw(0, 5), draw(0, 5)));
        try {
            if (!is_isolated(s) || !is_rhs_link(s)) continue;
            if (newton_polyhedron(s).compact_faces.size() < 2) continue;
        } catch (const Error&) {
            continue;
        }
        std::string name = "random-" + std::to_string(out.size());
        out.push_back({name, normalize_support(s)});
    }
    return out;
}

std::vector<CorpusEntry> acceptance_corpus(int max_exponent, size_t random_count) {
    std::vector<CorpusEntry> out;
    for (int a = 2; a <= max_exponent; ++a)
        for (int b = a; b <= max_exponent; ++b)
            for (int c = b; c <= max_exponent; ++c) {
                Support s = brieskorn(a, b, c);
                if (!is_rhs_link(s)) continue;
                out.push_back({"brieskorn(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")", s});
            }
    out.push_back({"front-page", front_page()});
    for (auto& e : random_convenient(20261016u, random_count)) out.push_back(std::move(e));
    return out;
}

}  // namespace nsing::testing
