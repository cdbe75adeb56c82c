#pragma once

#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "simplex_spectra/error.hpp"

namespace simplex_spectra {

/// An oriented edge. Canonical representatives satisfy tail < head; the
/// opposite orientation is synthesized on demand.
struct Edge {
    int tail = 0;
    int head = 0;

    Edge reversed() const { return {head, tail}; }
    Edge canonical() const { return tail <= head ? *this : reversed(); }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Plain undirected homogeneous graph on dense vertex ids 0..n-1.
/// Used for link graphs and the graph-level Cheeger/eigenvalue routines.
struct Graph {
    int n = 0;
    std::vector<Edge> edges; // canonical, lexicographically sorted, unique

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edge_list);
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);

    std::vector<std::vector<int>> adjacency() const;
    bool connected() const;
    bool has_edge(int u, int v) const;
};

/// Combinatorial (unit-weight) graph Laplacian, n x n dense.
Eigen::MatrixXd graph_laplacian(const Graph& g);

/// Second-smallest eigenvalue of the combinatorial Laplacian.
/// Zero exactly when the graph is disconnected. Requires n >= 2.
double lambda1(const Graph& g);

} // namespace simplex_spectra
