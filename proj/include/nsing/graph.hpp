#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsing/lattice.hpp"
#include "nsing/newton.hpp"

namespace nsing {

struct Vertex {
    int id = 0;
    BigInt b;  // selfintersection is -b
    BigInt g;
    std::optional<IntVec3> ell;
    bool operator==(const Vertex&) const = default;
};

// Cycles are coefficient vectors aligned with PlumbingGraph::vertices.
using Cycle = std::vector<BigInt>;
using RatCycle = std::vector<Rational>;
using IntMatrix = std::vector<std::vector<BigInt>>;
using RatMatrix = std::vector<std::vector<Rational>>;

struct PlumbingGraph {
    std::vector<Vertex> vertices;               // sorted by id
    std::vector<std::pair<int, int>> edges;     // each pair sorted, list sorted; repeats are parallel edges

    size_t size() const { return vertices.size(); }
    size_t index_of(int id) const;
    std::vector<std::vector<size_t>> neighbours() const;  // by index, with multiplicity
    std::vector<size_t> degrees() const;
    std::vector<size_t> nodes() const;                    // indices of vertices of degree >= 3
    bool is_connected() const;
    bool is_tree() const;
    void normalize();                                     // sort vertices and edges
    bool operator==(const PlumbingGraph&) const = default;
};

// Cached adjacency used by the cycle arithmetic below.
struct GraphView {
    std::vector<std::vector<size_t>> nbr;
    std::vector<BigInt> b;
    explicit GraphView(const PlumbingGraph& g);
    size_t size() const { return b.size(); }
    // (Z, E_v)
    BigInt pair_with(const Cycle& Z, size_t v) const;
    Rational pair_with(const RatCycle& Z, size_t v) const;
};

IntMatrix intersection_matrix(const PlumbingGraph& g);
BigInt form(const IntMatrix& I, const Cycle& a, const Cycle& b);
Rational form(const IntMatrix& I, const RatCycle& a, const RatCycle& b);

struct IntersectionData {
    IntMatrix I;
    RatMatrix inverse;
    BigInt determinant;
    BigInt group_order;
    std::vector<RatCycle> dual;  // dual[v][w] = m_w(E_v^*) = -inverse[v][w]
};

IntersectionData intersection_data(const PlumbingGraph& g);
bool is_negative_definite(const IntMatrix& I);

struct Bamboo {
    IntVec3 from, to;  // node normal, neighbouring face normal
    bool to_node = false;
    BigInt alpha, beta;
    std::vector<int> vertex_ids;
};

struct OkaGraph {
    PlumbingGraph graph;
    std::vector<IntVec3> star_faces;                       // noncompact face normals
    std::map<int, std::vector<IntVec3>> star_neighbours;   // vertex id -> adjacent noncompact faces
    std::map<std::pair<IntVec3, IntVec3>, int> u_map;      // (node normal, face normal) -> u_{n,n'}
    std::vector<Bamboo> bamboos;
    int node_count = 0;                                    // node ids are 0..node_count-1
};

OkaGraph oka_graph(const Support& s);
OkaGraph oka_graph(const NewtonPolyhedron& P);

RatCycle canonical_cycle(const PlumbingGraph& g);
RatCycle canonical_cycle(const PlumbingGraph& g, const IntersectionData& data);
bool is_integral(const RatCycle& z);
Cycle to_cycle(const RatCycle& z);
RatCycle to_rat(const Cycle& z);

Cycle wt_cycle(const PlumbingGraph& g, const Support& monomials);
Cycle merle_teissier_ZK(const OkaGraph& og, const Support& s);

PlumbingGraph minimal_model(const PlumbingGraph& g);
Cycle minimal_cycle(const PlumbingGraph& g);

Cycle unit_cycle(size_t n, size_t v);
Cycle all_ones(size_t n);
Cycle add(const Cycle& a, const Cycle& b);
Cycle sub(const Cycle& a, const Cycle& b);
bool leq(const Cycle& a, const Cycle& b);
std::string to_string(const Cycle& z);

}  // namespace nsing
