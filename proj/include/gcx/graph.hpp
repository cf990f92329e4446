#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gcx/rational.hpp"

namespace gcx {

// Undirected edge. Endpoints are kept in the order they were written so that
// serialization round-trips the source text; all structural operations treat
// the pair as unordered.
struct Edge {
    int a = 0;
    int b = 0;
    int lo() const { return a < b ? a : b; }
    int hi() const { return a < b ? b : a; }
};

inline bool same_edge(Edge x, Edge y) { return x.lo() == y.lo() && x.hi() == y.hi(); }

// Graph on vertices 1..n with an ordered edge sequence; the position of an
// edge in the sequence is its wedge index. No tadpoles, no multiple edges.
// Immutable after construction.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    int valency(int v) const;  // throws std::out_of_range unless 1 <= v <= n
    int min_valency() const;
    bool connected() const;

private:
    int n_;
    std::vector<Edge> edges_;
};

// Slotwise equality of unordered pairs (endpoint writing order is ignored).
bool operator==(const Graph& x, const Graph& y);
inline bool operator!=(const Graph& x, const Graph& y) { return !(x == y); }

// Total order on (n, #edges, normalized edge sequence); used for map keys.
struct GraphLess {
    bool operator()(const Graph& x, const Graph& y) const;
};

// Rim cycle 1..k followed by spokes to the axis vertex k+1; requires k >= 3.
Graph wheel(int k);

// One term line of the graph-sum format: `<coeff> ; <edges>`.
std::pair<Rational, Graph> parse_term(const std::string& line);
std::string serialize_term(const Rational& coeff, const Graph& g);

// Just the edge field: compact `ij` for labels <= 9, `i-j` otherwise, plus a
// trailing `v<n>` when edges alone do not determine the vertex count.
std::string serialize_edge_field(const Graph& g);

// Whole file/text: `#` comments and blank lines skipped, one term per line.
std::vector<std::pair<Rational, Graph>> parse_sum_text(const std::string& text);

}  // namespace gcx
