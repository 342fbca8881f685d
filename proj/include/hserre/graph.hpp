#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "hserre/complex.hpp"
#include "hserre/face.hpp"

namespace hserre {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 1..n (n <= 64).
class Graph {
public:
    /// Throws VertexOutOfRange for labels outside 1..n and InvalidEdge for
    /// loops. Repeated edges collapse.
    Graph(int n, const std::vector<Edge>& edges);

    int n() const { return n_; }
    bool has_edge(int u, int v) const { return neighbors_[u - 1].contains(v); }
    Face neighbors(int v) const { return neighbors_[v - 1]; }
    /// Edges (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;
    int edge_count() const;
    /// Vertex sets of the connected components, ordered by smallest vertex.
    std::vector<Face> components() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_;
    std::vector<Face> neighbors_;
};

Graph complement(const Graph& g);

/// Inclusion-minimal vertex covers (the generators of the cover ideal
/// J(G)), sorted by face_less. Found as complements of the maximal
/// independent sets.
std::vector<Face> minimal_vertex_covers(const Graph& g);

/// For Δ whose facets all have n - 2 vertices: the graph whose edges are the
/// complements of the facets. Throws NotCodimensionTwo otherwise.
Graph cofacet_graph(const SimplicialComplex& complex);

using FourCycle = std::array<int, 4>;

/// Some (a, b, c, d) with edges ab, bc, cd, da and no chords ac, bd, found
/// by scanning 4-subsets in lexicographic order.
std::optional<FourCycle> has_induced_c4(const Graph& g);

struct ObstructionVerdict {
    enum class Status { NotS2, Inconclusive };
    Status status = Status::Inconclusive;
    // (u, z, v, t) with {u, v} and {z, t} edges of G in different components;
    // an induced 4-cycle of the complement. Present iff status == NotS2.
    std::optional<FourCycle> witness;
};

/// Sound but incomplete screen for (S_2) on codimension-two complexes: if
/// the cofacet graph has edges in two different components, their four
/// endpoints form an induced 4-cycle in the complement, which no (S_2)
/// cover ideal allows. Throws NotCodimensionTwo.
ObstructionVerdict s2_graph_obstruction(const SimplicialComplex& complex);

} // namespace hserre
