#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minell {

/// One exceptional curve: self-intersection `weight`, geometric genus, and the
/// number of self-nodes. Self-nodes raise the arithmetic genus but do not enter
/// the intersection matrix, so a length-1 cycle of rational curves is a single
/// vertex with nodes=1.
struct Vertex {
    std::string name;
    long long weight = -2;  // <= -1
    long long genus = 0;
    long long nodes = 0;
};

struct EdgeSpec {
    std::size_t a = 0;
    std::size_t b = 0;
    long long mult = 1;
};

/// Weighted dual graph of a resolution. Vertex order is significant and is
/// preserved through every operation; parallel edges are stored as one edge
/// with a multiplicity. Construction validates: weights <= -1, genus/nodes
/// >= 0, unique names, no self-edges, connected.
class DualGraph {
public:
    DualGraph(std::vector<Vertex> vertices, std::vector<EdgeSpec> edges);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<EdgeSpec>& edges() const { return edges_; }
    std::size_t size() const { return vertices_.size(); }

    /// Edge multiplicity between two distinct vertices; 0 on the diagonal.
    long long adjacency(std::size_t i, std::size_t j) const { return adj_[i * vertices_.size() + j]; }

    /// Number of edges counted with multiplicity.
    long long edge_count() const;

private:
    std::vector<Vertex> vertices_;
    std::vector<EdgeSpec> edges_;
    std::vector<long long> adj_;  // dense n*n, row-major
};

/// Effective divisor supported on the exceptional set, one coefficient per
/// vertex in graph order.
struct Cycle {
    std::vector<long long> coeff;

    bool is_zero() const;
    bool operator==(const Cycle&) const = default;
};

using IntMatrix = std::vector<std::vector<long long>>;

/// Weights on the diagonal, edge multiplicities off it.
IntMatrix intersection_matrix(const DualGraph& g);

/// Exact test via signs of leading principal minors (fraction-free Bareiss
/// elimination over arbitrary-precision integers). Rejects non-symmetric
/// input.
bool is_negative_definite(const IntMatrix& m);
bool is_negative_definite(const DualGraph& g);

/// K.E_i per vertex, by adjunction with arithmetic genus = genus + nodes.
std::vector<long long> canonical_pairing(const DualGraph& g);

/// chi(D) = -(D.D + D.K)/2. Rejects the zero cycle.
long long chi(const DualGraph& g, const Cycle& d);

/// Fundamental cycle by Laufer's iteration: start at the reduced cycle, add
/// the lowest-index vertex with Z.E_i > 0 until none remains. Requires a
/// negative definite graph.
Cycle fundamental_cycle(const DualGraph& g);

long long self_intersection(const DualGraph& g, const Cycle& d);

/// Laufer's criterion by exhaustive search, phrased through the numerical
/// canonical cycle Z_K (exact solution of M x = -K): true iff Z_K is integral
/// with every entry >= 1 and chi(D) > 0 for all cycles 0 < D < Z_K. On a
/// minimal resolution Z_K is the fundamental cycle, recovering the usual
/// chi(Z) = 0 test; the Z_K form stays correct on minimal good resolutions
/// carrying a -1 curve. Graphs whose subcycle count exceeds 10^7 are
/// rejected.
bool is_minimally_elliptic(const DualGraph& g);

/// Singular points of the reduced exceptional curve: edges (with multiplicity)
/// plus self-nodes.
long long singular_point_count(const DualGraph& g);

/// Line-based text format:
///   vertex <name> weight=<int> [genus=<int>] [nodes=<int>]
///   edge <name> <name> [mult=<int>]
/// '#' starts a comment; parse errors carry line numbers. Repeated edge lines
/// accumulate multiplicity.
DualGraph parse_graph(std::istream& in);
DualGraph parse_graph(const std::string& text);
std::string to_graph_text(const DualGraph& g);

/// Stable 64-bit fingerprint of the serialized graph, as 16 hex digits.
std::string graph_fingerprint(const DualGraph& g);

}  // namespace minell
