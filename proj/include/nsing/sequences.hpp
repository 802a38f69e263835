#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsing/graph.hpp"
#include "nsing/newton.hpp"

namespace nsing {

// Chain of degree <= 2 vertices leaving a node; ends at another node or at a degree one vertex.
struct Chain {
    size_t node;
    std::vector<size_t> verts;
    std::optional<size_t> far_node;
    BigInt alpha, beta;
};

class LauferContext {
public:
    explicit LauferContext(PlumbingGraph g);

    const PlumbingGraph& graph() const { return g_; }
    const GraphView& view() const { return view_; }
    const std::vector<size_t>& nodes() const { return nodes_; }
    bool is_node(size_t v) const { return is_node_[v]; }
    const std::vector<Chain>& chains() const { return chains_; }
    // sum of E_v over vertices on legs (chains ending at a degree one vertex)
    Cycle legs_cycle() const;

    // Minimal cycle agreeing with Z on the nodes with (x, E_v) <= 0 for every other vertex.
    Cycle x(const Cycle& Z) const;
    // Value predicted for the first chain vertex from the node values alone.
    BigInt interpolate(const Chain& c, const Cycle& Z) const;

private:
    PlumbingGraph g_;
    GraphView view_;
    std::vector<size_t> nodes_;
    std::vector<bool> is_node_;
    std::vector<size_t> others_;
    RatMatrix harmonic_;  // others_ x nodes_
    std::vector<Chain> chains_;
};

Cycle laufer_x(const LauferContext& ctx, const Cycle& Z);

enum class RatioTestKind { I, II, III };
const char* kind_name(RatioTestKind k);

struct SeqStep {
    Cycle Z;   // the cycle before the step
    size_t v;  // index of the chosen node
    BigInt a;
    Rational r;
};

struct SequenceResult {
    RatioTestKind kind;
    std::vector<SeqStep> steps;
    Cycle target;
    BigInt k;  // sum of the target (or wt(f)) over the nodes
    BigInt a_sum() const;
};

struct SequenceContext {
    LauferContext laufer;
    Cycle ZK;
    std::optional<Cycle> wt_f, wt_xyz;

    // Kind I data: any plumbing graph with integral canonical cycle.
    static SequenceContext for_graph(const PlumbingGraph& g);
    // Kinds II and III data: Oka graph of a convenient support.
    static SequenceContext for_newton(const OkaGraph& og, const Support& s);
};

struct SequenceOptions {
    bool reverse_tiebreak = false;  // final tie-break by largest node id instead of smallest
    Rational max_ratio = 1;         // kind II only: keep steps with r <= max_ratio
};

Cycle sequence_target(const SequenceContext& ctx, RatioTestKind kind);
SequenceResult run_sequence(const SequenceContext& ctx, RatioTestKind kind, const SequenceOptions& opt = {});

Rational chi(const PlumbingGraph& g, const RatCycle& ZK, const Cycle& l);

// Everything the headline invariants need for one support.
struct Analysis {
    Support support;
    Support convenient;
    NewtonPolyhedron polyhedron;
    OkaGraph oka;             // of the support as given
    OkaGraph oka_convenient;  // of make_convenient(support)
    PlumbingGraph minimal;    // minimal_model(oka.graph)
};

Analysis analyze(const Support& s);

struct GenusResult {
    BigInt via_I;
    BigInt via_III;
    bool agree() const { return via_I == via_III; }
};

GenusResult geometric_genus(const Analysis& an, const SequenceOptions& opt = {});
SpectrumPart spectrum_leq0(const Analysis& an, const SequenceOptions& opt = {});
PuiseuxPoly poincare_via_sequence(const Analysis& an, const Rational& R, const SequenceOptions& opt = {});

struct SWResult {
    BigInt value;
    Rational ZK_sq;
    size_t vertex_count;
};

SWResult sw_invariant(const Analysis& an, const SequenceOptions& opt = {});

GenusResult geometric_genus(const Support& s);
SpectrumPart spectrum_leq0(const Support& s);
PuiseuxPoly poincare_via_sequence(const Support& s, const Rational& R);
SWResult sw_invariant(const Support& s);

}  // namespace nsing
