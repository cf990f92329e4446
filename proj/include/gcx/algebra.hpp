#pragma once

#include <map>
#include <vector>

#include "gcx/canonical.hpp"
#include "gcx/graph.hpp"

namespace gcx {

// Raw (pre-reduction) weighted graph produced by insertion/bracket.
struct Term {
    Rational coeff;
    Graph graph;
};

// Reduced linear combination: canonical nonzero graphs -> nonzero rationals.
class GraphSum {
public:
    GraphSum() = default;

    const std::map<Graph, Rational, GraphLess>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    // Coefficient of `raw` read in raw's own edge order (sign-transported);
    // zero if absent or if `raw` is a zero graph.
    Rational coefficient_of(const Graph& raw) const;

private:
    friend GraphSum reduce(const std::vector<Term>&);
    friend GraphSum add(const GraphSum&, const GraphSum&);
    friend GraphSum scale(const Rational&, const GraphSum&);
    std::map<Graph, Rational, GraphLess> terms_;
};

// All insertions of g1 into the vertices of g2: one term of coefficient +1
// per vertex v of g2 and per map of v's incident edges into g1's vertices.
// Edge order of every term is E(g1) followed by E(g2); vertex labels run over
// g2 up to v, then the g1 block, then the rest of g2. Inputs must be connected.
std::vector<Term> insert(const Graph& g1, const Graph& g2);

// insert(g1,g2) together with insert(g2,g1) scaled by -(-1)^(#E1 * #E2).
std::vector<Term> bracket(const Graph& g1, const Graph& g2);

// Canonicalize every term, drop zero graphs, collect like terms.
GraphSum reduce(const std::vector<Term>& terms);

GraphSum add(const GraphSum& s1, const GraphSum& s2);
GraphSum scale(const Rational& c, const GraphSum& s);

// d(s) = [edge, s] extended by linearity, reduced. Homogeneous (n, E) input
// yields homogeneous (n+1, E+1) output.
GraphSum differential(const GraphSum& s, int threads = 1);

// Bilinear extension of the bracket to reduced sums.
GraphSum bracket_sum(const GraphSum& s1, const GraphSum& s2, int threads = 1);

// The single-edge graph; d = [edge_graph(), .].
const Graph& edge_graph();
// The one-vertex graph.
const Graph& dot_graph();

GraphSum sum_from_raw(const std::vector<std::pair<Rational, Graph>>& raw);
std::string serialize_sum(const GraphSum& s);

}  // namespace gcx
