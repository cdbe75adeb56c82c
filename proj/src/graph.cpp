#include "simplex_spectra/graph.hpp"

#include <algorithm>
#include <deque>
#include <numbers>

#include <Eigen/Dense>

namespace simplex_spectra {

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edge_list)
{
    if (n < 0) throw Error(ErrorCode::InvalidInput, "negative vertex count");
    Graph g;
    g.n = n;
    g.edges.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(ErrorCode::UnknownVertex,
                        "edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
        g.edges.push_back(Edge{u, v}.canonical());
    }
    std::sort(g.edges.begin(), g.edges.end());
    if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end())
        throw Error(ErrorCode::InvalidInput, "duplicate edge in graph");
    return g;
}

Graph Graph::complete(int n)
{
    Graph g;
    g.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.edges.push_back({i, j});
    return g;
}

Graph Graph::cycle(int n)
{
    if (n < 3) throw Error(ErrorCode::InvalidInput, "cycle needs at least 3 vertices");
    Graph g;
    g.n = n;
    for (int i = 0; i < n; ++i) g.edges.push_back(Edge{i, (i + 1) % n}.canonical());
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

Graph Graph::path(int n)
{
    if (n < 1) throw Error(ErrorCode::InvalidInput, "path needs at least 1 vertex");
    Graph g;
    g.n = n;
    for (int i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1});
    return g;
}

std::vector<std::vector<int>> Graph::adjacency() const
{
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : edges) {
        adj[e.tail].push_back(e.head);
        adj[e.head].push_back(e.tail);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

bool Graph::connected() const
{
    if (n <= 1) return true;
    auto adj = adjacency();
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                queue.push_back(y);
            }
    }
    return reached == n;
}

bool Graph::has_edge(int u, int v) const
{
    Edge e = Edge{u, v}.canonical();
    return std::binary_search(edges.begin(), edges.end(), e);
}

Eigen::MatrixXd graph_laplacian(const Graph& g)
{
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(g.n, g.n);
    for (const Edge& e : g.edges) {
        L(e.tail, e.tail) += 1.0;
        L(e.head, e.head) += 1.0;
        L(e.tail, e.head) -= 1.0;
        L(e.head, e.tail) -= 1.0;
    }
    return L;
}

double lambda1(const Graph& g)
{
    if (g.n < 2)
        throw Error(ErrorCode::InvalidInput, "lambda1 needs at least two vertices");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(graph_laplacian(g), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw Error(ErrorCode::EigensolveFailure, "graph Laplacian eigensolve did not converge");
    return es.eigenvalues()(1);
}

} // namespace simplex_spectra
