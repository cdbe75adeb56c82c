#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "simplex_spectra/error.hpp"
#include "simplex_spectra/graph.hpp"

namespace simplex_spectra {

/// An oriented triangular face. The cyclic order (a,b,c) defines the
/// orientation; the canonical representative is the rotation with the
/// smallest vertex first. (b,a,c) is the opposite orientation and is a
/// distinct 2-form argument but the same geometric triangle.
struct Face {
    int a = 0;
    int b = 0;
    int c = 0;

    friend bool operator==(const Face&, const Face&) = default;
    friend auto operator<=>(const Face&, const Face&) = default;
};

/// Rotate so the smallest vertex comes first, preserving cyclic order.
Face canonical_face(int a, int b, int c);

struct EdgeSpec {
    int u = 0;
    int v = 0;
    double weight = 1.0;
};

struct FaceSpec {
    int a = 0;
    int b = 0;
    int c = 0;
    double weight = 1.0;
};

struct Counts {
    int vertices = 0;
    int edges = 0; // geometric
    int faces = 0; // geometric
};

/// One face incident to a given canonical edge: the face index, the third
/// vertex, and the orientation of the face's boundary along the edge
/// (+1 when the boundary runs tail->head of the canonical edge).
struct FaceAtEdge {
    int face = 0;
    int third = 0;
    int sign = 0;
};

/// The graph K(x) on the neighbors of x whose edges are those e with
/// x in F_e. May be empty or disconnected.
struct LinkGraph {
    int center = 0;
    std::vector<int> vertices; // sorted vertex ids of the ambient complex
    std::vector<Edge> edges;   // canonical, sorted

    /// Reindex onto dense ids 0..|vertices|-1 (sorted order).
    Graph to_graph() const;
};

/// A finite weighted triangulation: a connected loop-free graph together
/// with a set of oriented triangular faces and positive weights on
/// vertices, geometric edges and geometric faces. Immutable after build;
/// safe to share across threads for read-only use.
class Triangulation {
public:
    int num_vertices() const { return n_vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Face>& faces() const { return faces_; }
    const Eigen::VectorXd& vertex_weights() const { return vertex_w_; }
    const Eigen::VectorXd& edge_weights() const { return edge_w_; }
    const Eigen::VectorXd& face_weights() const { return face_w_; }

    /// Sorted neighbor lists of the underlying graph.
    const std::vector<int>& neighbors(int x) const;

    /// Index of the geometric edge {u,v} among canonical representatives.
    /// Throws UnknownEdge / UnknownVertex.
    int edge_index(int u, int v) const;
    std::optional<int> find_edge(int u, int v) const;

    /// Index of the geometric face {p,q,r} together with the orientation
    /// sign of (p,q,r) relative to the stored representative (+1 for a
    /// rotation, -1 for a reversal). Throws UnknownVertex on bad ids.
    std::optional<std::pair<int, int>> find_face(int p, int q, int r) const;

    /// Faces incident to the canonical edge with the given index.
    const std::vector<FaceAtEdge>& faces_at_edge(int edge_idx) const;

    /// The three boundary edges of a face as (edge index, sign) in the
    /// cyclic order (a,b), (b,c), (c,a).
    const std::array<std::pair<int, int>, 3>& boundary_edges(int face_idx) const;

    /// F_e: vertices x such that (e,x) spans a face. Orientation-insensitive.
    std::vector<int> face_neighbors(int u, int v) const;

    /// deg_E(e) = (1/r(e)) * sum_{x in F_e} s(e,x); equals |F_e| when
    /// the weights are homogeneous.
    double edge_face_degree(int u, int v) const;

    LinkGraph link_graph(int x) const;

    bool is_complete_graph() const;
    /// True when every 3-clique of the underlying graph carries a face.
    bool is_complete_triangulation() const;
    bool is_homogeneous() const;
    Counts counts() const;

    friend Triangulation build(int n_vertices, std::span<const EdgeSpec> edges,
                               std::span<const FaceSpec> faces,
                               std::span<const double> vertex_weights);

private:
    Triangulation() = default;

    void check_vertex(int x) const;

    int n_vertices_ = 0;
    std::vector<Edge> edges_;
    std::vector<Face> faces_;
    Eigen::VectorXd vertex_w_;
    Eigen::VectorXd edge_w_;
    Eigen::VectorXd face_w_;
    std::vector<std::vector<int>> neighbors_;
    std::unordered_map<std::int64_t, int> edge_idx_;
    std::unordered_map<std::int64_t, int> face_idx_; // keyed by sorted triple
    std::vector<std::vector<FaceAtEdge>> faces_at_edge_;
    std::vector<std::array<std::pair<int, int>, 3>> boundary_;
};

/// Validate and canonicalize a complex. Vertex ids must be dense 0..n-1.
/// Empty vertex_weights means homogeneous vertex weight 1.
Triangulation build(int n_vertices, std::span<const EdgeSpec> edges,
                    std::span<const FaceSpec> faces,
                    std::span<const double> vertex_weights = {});

/// K_n with all C(n,3) faces oriented (i,j,k), i<j<k, homogeneous weights.
Triangulation complete_triangulation(int n);

} // namespace simplex_spectra
