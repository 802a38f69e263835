#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "nsing/graph.hpp"
#include "nsing/newton.hpp"
#include "nsing/sequences.hpp"

namespace nsing {

// Dual cycles scaled by the group order so that all arithmetic stays integral.
struct ScaledDuals {
    int64_t D = 1;
    std::vector<std::vector<int64_t>> S;  // S[v] = D * E_v^*
    std::vector<int> delta;               // valencies
};

ScaledDuals scaled_duals(const IntersectionData& data, const PlumbingGraph& g);

// z_{l'} of the zeta function, by enumerating exponent assignments.
BigInt zeta_coefficient(const IntersectionData& data, const PlumbingGraph& g, const RatCycle& lp);

// All zeta coefficients below `box`, by multiplying truncated factor series. Keys are D * l.
std::map<std::vector<int64_t>, BigInt> zeta_by_products(const IntersectionData& data, const PlumbingGraph& g,
                                                        const RatCycle& box);
BigInt zeta_coefficient_by_products(const IntersectionData& data, const PlumbingGraph& g, const RatCycle& lp);

// q_{l'} for l' in L: sum of z_l over l in l' + L with l not >= l'.
// Sums over the integral cycles l = sum a_v E_v^*, reading a_v = -(l, E_v) off the tree.
// `extra_bound` loosens the enumeration bounds; the value must not depend on it.
BigInt counting_q(const IntersectionData& data, const PlumbingGraph& g, const Cycle& lp, int extra_bound = 0);
// The same sum over exponent assignments, keeping those whose cycle is integral. Slow when |H| is large.
BigInt counting_q_by_assignments(const IntersectionData& data, const PlumbingGraph& g, const Cycle& lp,
                                 int extra_bound = 0);

// #(Z^3_{>=0} \ Gamma_+(Z)) for a graph whose vertices carry functionals.
BigInt count_outside(const PlumbingGraph& g, const Cycle& Z);

// #{p >= (1,1,1) : p not in the Newton polyhedron}, computed on the convenient modification.
BigInt count_positive_points_under(const Support& s);

struct PointPartition {
    std::vector<std::vector<IntVec3>> sets;  // P_i for the checked steps
    std::vector<BigInt> a;                   // a_i of the same steps
    BigInt complement_size = 0;              // #(Z^3_{>=0} \ Gamma_+(region))
    bool disjoint = false;
    bool covers = false;                     // union equals the complement
    bool sizes_match = false;                // |P_i| = a_i for each checked step
    bool ok() const { return disjoint && covers && sizes_match; }
};

// Point sets Gamma_+(Z_i) \ Gamma_+(Z_{i+1}) of the first `count` steps, compared with the complement of
// Gamma_+(region). The sequence must have been run on `g` itself.
PointPartition enumerate_P(const PlumbingGraph& g, const SequenceResult& seq, const Cycle& region, size_t count);
// Region Z_K - E and all steps for kinds I and III, region wt(f) and the first k steps for kind II.
PointPartition enumerate_P(const OkaGraph& og, const SequenceResult& seq);

}  // namespace nsing
