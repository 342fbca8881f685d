#include "hserre/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace hserre {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw Error(ErrorCode::VertexOutOfRange, "graph size " + std::to_string(n) + " unsupported");
    neighbors_.assign(n, Face{});
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw Error(ErrorCode::VertexOutOfRange,
                        "edge {" + std::to_string(u) + "," + std::to_string(v) + "} outside 1.." +
                            std::to_string(n));
        if (u == v)
            throw Error(ErrorCode::InvalidEdge, "loop at vertex " + std::to_string(u));
        neighbors_[u - 1] = neighbors_[u - 1].with(v);
        neighbors_[v - 1] = neighbors_[v - 1].with(u);
    }
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 1; u <= n_; ++u)
        for (int v : neighbors_[u - 1].vertices())
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

int Graph::edge_count() const {
    int twice = 0;
    for (Face nb : neighbors_)
        twice += nb.size();
    return twice / 2;
}

std::vector<Face> Graph::components() const {
    std::vector<Face> out;
    Face seen;
    for (int v = 1; v <= n_; ++v) {
        if (seen.contains(v))
            continue;
        Face component = Face::single(v);
        Face frontier = component;
        while (!frontier.empty()) {
            Face next;
            for (int u : frontier.vertices())
                next = next | neighbors_[u - 1];
            frontier = next.without(component);
            component = component | frontier;
        }
        seen = seen | component;
        out.push_back(component);
    }
    return out;
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (int u = 1; u <= g.n(); ++u)
        for (int v = u + 1; v <= g.n(); ++v)
            if (!g.has_edge(u, v))
                edges.emplace_back(u, v);
    return Graph(g.n(), edges);
}

namespace {

// Bron-Kerbosch with pivoting over the adjacency masks of `adj`; reports
// every maximal clique.
template <typename Report>
void maximal_cliques(const std::vector<Face>& adj, Face clique, Face candidates, Face excluded,
                     Report& report) {
    if (candidates.empty() && excluded.empty()) {
        report(clique);
        return;
    }
    const Face pool = candidates | excluded;
    int pivot = pool.min_vertex();
    int best = -1;
    for (int u : pool.vertices()) {
        const int reach = (candidates & adj[u - 1]).size();
        if (reach > best) {
            best = reach;
            pivot = u;
        }
    }
    for (int v : candidates.without(adj[pivot - 1]).vertices()) {
        maximal_cliques(adj, clique.with(v), candidates & adj[v - 1], excluded & adj[v - 1], report);
        candidates = candidates.without(Face::single(v));
        excluded = excluded.with(v);
    }
}

} // namespace

std::vector<Face> minimal_vertex_covers(const Graph& g) {
    // Maximal independent sets of g are the maximal cliques of its complement.
    const Face all = Face::full(g.n());
    std::vector<Face> non_adjacent(g.n());
    for (int v = 1; v <= g.n(); ++v)
        non_adjacent[v - 1] = all.without(g.neighbors(v)).without(Face::single(v));
    std::vector<Face> covers;
    auto report = [&](Face independent) { covers.push_back(all.without(independent)); };
    maximal_cliques(non_adjacent, Face{}, all, Face{}, report);
    std::sort(covers.begin(), covers.end(), FaceLess{});
    return covers;
}

Graph cofacet_graph(const SimplicialComplex& complex) {
    const int n = complex.n();
    std::vector<Edge> edges;
    for (Face f : complex.facets()) {
        if (f.size() != n - 2)
            throw Error(ErrorCode::NotCodimensionTwo,
                        "facet " + f.to_string() + " does not have n - 2 = " + std::to_string(n - 2) +
                            " vertices");
        const auto pair = Face::full(n).without(f).vertices();
        edges.emplace_back(pair[0], pair[1]);
    }
    return Graph(n, edges);
}

std::optional<FourCycle> has_induced_c4(const Graph& g) {
    const int n = g.n();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    // The three ways to arrange four vertices on a cycle.
                    const FourCycle cycles[3] = {{a, b, c, d}, {a, b, d, c}, {a, c, b, d}};
                    for (const auto& q : cycles) {
                        if (g.has_edge(q[0], q[1]) && g.has_edge(q[1], q[2]) && g.has_edge(q[2], q[3]) &&
                            g.has_edge(q[3], q[0]) && !g.has_edge(q[0], q[2]) && !g.has_edge(q[1], q[3]))
                            return q;
                    }
                }
    return std::nullopt;
}

ObstructionVerdict s2_graph_obstruction(const SimplicialComplex& complex) {
    const Graph g = cofacet_graph(complex);
    const auto components = g.components();
    auto component_of = [&](int v) {
        return std::find_if(components.begin(), components.end(), [v](Face c) { return c.contains(v); });
    };
    ObstructionVerdict verdict;
    const auto edges = g.edges();
    if (edges.empty())
        return verdict;
    const auto [u, v] = edges.front();
    const auto first = component_of(u);
    for (auto [z, t] : edges) {
        if (component_of(z) != first) {
            verdict.status = ObstructionVerdict::Status::NotS2;
            verdict.witness = FourCycle{u, z, v, t};
            break;
        }
    }
    return verdict;
}

} // namespace hserre
