#include "simplex_spectra/complex.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace simplex_spectra {

namespace {

std::string edge_str(int u, int v)
{
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::string face_str(int a, int b, int c)
{
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

} // namespace

Face canonical_face(int a, int b, int c)
{
    if (b <= a && b <= c) return {b, c, a};
    if (c <= a && c <= b) return {c, a, b};
    return {a, b, c};
}

Graph LinkGraph::to_graph() const
{
    Graph g;
    g.n = static_cast<int>(vertices.size());
    g.edges.reserve(edges.size());
    for (const Edge& e : edges) {
        int u = static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), e.tail) -
                                 vertices.begin());
        int v = static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), e.head) -
                                 vertices.begin());
        g.edges.push_back(Edge{u, v}.canonical());
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

void Triangulation::check_vertex(int x) const
{
    if (x < 0 || x >= n_vertices_)
        throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(x) + " out of range");
}

const std::vector<int>& Triangulation::neighbors(int x) const
{
    check_vertex(x);
    return neighbors_[x];
}

std::optional<int> Triangulation::find_edge(int u, int v) const
{
    check_vertex(u);
    check_vertex(v);
    if (u == v) return std::nullopt;
    Edge e = Edge{u, v}.canonical();
    auto it = edge_idx_.find(static_cast<std::int64_t>(e.tail) * n_vertices_ + e.head);
    if (it == edge_idx_.end()) return std::nullopt;
    return it->second;
}

int Triangulation::edge_index(int u, int v) const
{
    auto idx = find_edge(u, v);
    if (!idx) throw Error(ErrorCode::UnknownEdge, "no edge " + edge_str(u, v));
    return *idx;
}

std::optional<std::pair<int, int>> Triangulation::find_face(int p, int q, int r) const
{
    check_vertex(p);
    check_vertex(q);
    check_vertex(r);
    if (p == q || q == r || p == r) return std::nullopt;
    int lo = std::min({p, q, r});
    int hi = std::max({p, q, r});
    int mid = p + q + r - lo - hi;
    std::int64_t key = (static_cast<std::int64_t>(lo) * n_vertices_ + mid) * n_vertices_ + hi;
    auto it = face_idx_.find(key);
    if (it == face_idx_.end()) return std::nullopt;
    const Face& f = faces_[it->second];
    // +1 when (p,q,r) is a rotation of the stored orientation.
    bool rotation = (f.a == p && f.b == q && f.c == r) || (f.a == q && f.b == r && f.c == p) ||
                    (f.a == r && f.b == p && f.c == q);
    return std::make_pair(it->second, rotation ? 1 : -1);
}

const std::vector<FaceAtEdge>& Triangulation::faces_at_edge(int edge_idx) const
{
    return faces_at_edge_.at(edge_idx);
}

const std::array<std::pair<int, int>, 3>& Triangulation::boundary_edges(int face_idx) const
{
    return boundary_.at(face_idx);
}

std::vector<int> Triangulation::face_neighbors(int u, int v) const
{
    int e = edge_index(u, v);
    std::vector<int> out;
    out.reserve(faces_at_edge_[e].size());
    for (const FaceAtEdge& fe : faces_at_edge_[e]) out.push_back(fe.third);
    std::sort(out.begin(), out.end());
    return out;
}

double Triangulation::edge_face_degree(int u, int v) const
{
    int e = edge_index(u, v);
    double acc = 0.0;
    for (const FaceAtEdge& fe : faces_at_edge_[e]) acc += face_w_(fe.face);
    return acc / edge_w_(e);
}

LinkGraph Triangulation::link_graph(int x) const
{
    check_vertex(x);
    LinkGraph lg;
    lg.center = x;
    std::set<Edge> es;
    for (const Face& f : faces_) {
        if (f.a != x && f.b != x && f.c != x) continue;
        int p, q;
        if (f.a == x) { p = f.b; q = f.c; }
        else if (f.b == x) { p = f.c; q = f.a; }
        else { p = f.a; q = f.b; }
        es.insert(Edge{p, q}.canonical());
    }
    std::set<int> vs;
    for (const Edge& e : es) {
        vs.insert(e.tail);
        vs.insert(e.head);
    }
    lg.edges.assign(es.begin(), es.end());
    lg.vertices.assign(vs.begin(), vs.end());
    return lg;
}

bool Triangulation::is_complete_graph() const
{
    return static_cast<std::int64_t>(edges_.size()) * 2 ==
           static_cast<std::int64_t>(n_vertices_) * (n_vertices_ - 1);
}

bool Triangulation::is_complete_triangulation() const
{
    for (int i = 0; i < n_vertices_; ++i)
        for (int j : neighbors_[i]) {
            if (j <= i) continue;
            for (int k : neighbors_[j]) {
                if (k <= j) continue;
                if (!find_edge(i, k)) continue;
                if (!find_face(i, j, k)) return false;
            }
        }
    return true;
}

bool Triangulation::is_homogeneous() const
{
    auto all_one = [](const Eigen::VectorXd& w) {
        for (Eigen::Index i = 0; i < w.size(); ++i)
            if (w(i) != 1.0) return false;
        return true;
    };
    return all_one(vertex_w_) && all_one(edge_w_) && all_one(face_w_);
}

Counts Triangulation::counts() const
{
    return {n_vertices_, static_cast<int>(edges_.size()), static_cast<int>(faces_.size())};
}

Triangulation build(int n_vertices, std::span<const EdgeSpec> edges,
                    std::span<const FaceSpec> faces, std::span<const double> vertex_weights)
{
    if (n_vertices <= 0)
        throw Error(ErrorCode::InvalidInput, "vertex count must be positive");

    Triangulation t;
    t.n_vertices_ = n_vertices;

    if (vertex_weights.empty()) {
        t.vertex_w_ = Eigen::VectorXd::Ones(n_vertices);
    } else {
        if (static_cast<int>(vertex_weights.size()) != n_vertices)
            throw Error(ErrorCode::DimensionMismatch, "vertex weight list does not match vertex count");
        t.vertex_w_ = Eigen::Map<const Eigen::VectorXd>(vertex_weights.data(), n_vertices);
        for (int i = 0; i < n_vertices; ++i)
            if (!(t.vertex_w_(i) > 0.0))
                throw Error(ErrorCode::NonpositiveWeight, "vertex " + std::to_string(i));
    }

    // Canonicalize and index edges.
    struct EdgeRow {
        Edge e;
        double w;
    };
    std::vector<EdgeRow> erows;
    erows.reserve(edges.size());
    for (const EdgeSpec& es : edges) {
        if (es.u < 0 || es.u >= n_vertices || es.v < 0 || es.v >= n_vertices)
            throw Error(ErrorCode::UnknownVertex, "edge endpoint out of range " + edge_str(es.u, es.v));
        if (es.u == es.v)
            throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(es.u));
        if (!(es.weight > 0.0))
            throw Error(ErrorCode::NonpositiveWeight, "edge " + edge_str(es.u, es.v));
        erows.push_back({Edge{es.u, es.v}.canonical(), es.weight});
    }
    std::sort(erows.begin(), erows.end(), [](const EdgeRow& a, const EdgeRow& b) { return a.e < b.e; });
    for (std::size_t i = 1; i < erows.size(); ++i)
        if (erows[i].e == erows[i - 1].e)
            throw Error(ErrorCode::InvalidInput,
                        "duplicate edge " + edge_str(erows[i].e.tail, erows[i].e.head));
    t.edges_.reserve(erows.size());
    t.edge_w_.resize(static_cast<Eigen::Index>(erows.size()));
    for (std::size_t i = 0; i < erows.size(); ++i) {
        t.edges_.push_back(erows[i].e);
        t.edge_w_(static_cast<Eigen::Index>(i)) = erows[i].w;
        t.edge_idx_[static_cast<std::int64_t>(erows[i].e.tail) * n_vertices + erows[i].e.head] =
            static_cast<int>(i);
    }

    // Canonicalize and index faces; one stored face per geometric triangle.
    struct FaceRow {
        Face f;
        double w;
    };
    std::vector<FaceRow> frows;
    frows.reserve(faces.size());
    for (const FaceSpec& fs : faces) {
        if (fs.a < 0 || fs.a >= n_vertices || fs.b < 0 || fs.b >= n_vertices || fs.c < 0 ||
            fs.c >= n_vertices)
            throw Error(ErrorCode::UnknownVertex, "face vertex out of range " + face_str(fs.a, fs.b, fs.c));
        if (fs.a == fs.b || fs.b == fs.c || fs.a == fs.c)
            throw Error(ErrorCode::InvalidInput, "degenerate face " + face_str(fs.a, fs.b, fs.c));
        if (!(fs.weight > 0.0))
            throw Error(ErrorCode::NonpositiveWeight, "face " + face_str(fs.a, fs.b, fs.c));
        frows.push_back({canonical_face(fs.a, fs.b, fs.c), fs.weight});
    }
    std::sort(frows.begin(), frows.end(), [](const FaceRow& a, const FaceRow& b) { return a.f < b.f; });
    t.faces_.reserve(frows.size());
    t.face_w_.resize(static_cast<Eigen::Index>(frows.size()));
    for (std::size_t i = 0; i < frows.size(); ++i) {
        const Face& f = frows[i].f;
        int lo = std::min({f.a, f.b, f.c});
        int hi = std::max({f.a, f.b, f.c});
        int mid = f.a + f.b + f.c - lo - hi;
        std::int64_t key = (static_cast<std::int64_t>(lo) * n_vertices + mid) * n_vertices + hi;
        if (t.face_idx_.count(key))
            throw Error(ErrorCode::DuplicateFace,
                        "triangle " + face_str(f.a, f.b, f.c) + " listed more than once (up to orientation)");
        t.face_idx_[key] = static_cast<int>(i);
        t.faces_.push_back(f);
        t.face_w_(static_cast<Eigen::Index>(i)) = frows[i].w;
    }

    // Boundary edges must exist.
    t.faces_at_edge_.resize(t.edges_.size());
    t.boundary_.resize(t.faces_.size());
    for (std::size_t fi = 0; fi < t.faces_.size(); ++fi) {
        const Face& f = t.faces_[fi];
        const std::array<std::pair<int, int>, 3> dir = {{{f.a, f.b}, {f.b, f.c}, {f.c, f.a}}};
        for (int k = 0; k < 3; ++k) {
            auto [p, q] = dir[static_cast<std::size_t>(k)];
            auto idx = t.find_edge(p, q);
            if (!idx)
                throw Error(ErrorCode::MissingBoundaryEdge,
                            "face " + face_str(f.a, f.b, f.c) + " needs edge " + edge_str(p, q));
            int sign = p < q ? 1 : -1;
            int third = f.a + f.b + f.c - p - q;
            t.faces_at_edge_[*idx].push_back({static_cast<int>(fi), third, sign});
            t.boundary_[fi][static_cast<std::size_t>(k)] = {*idx, sign};
        }
    }

    // Adjacency and connectivity.
    t.neighbors_.resize(n_vertices);
    for (const Edge& e : t.edges_) {
        t.neighbors_[e.tail].push_back(e.head);
        t.neighbors_[e.head].push_back(e.tail);
    }
    for (auto& a : t.neighbors_) std::sort(a.begin(), a.end());

    if (n_vertices > 1) {
        std::vector<char> seen(n_vertices, 0);
        std::deque<int> queue{0};
        seen[0] = 1;
        int reached = 1;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y : t.neighbors_[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    queue.push_back(y);
                }
        }
        if (reached != n_vertices)
            throw Error(ErrorCode::Disconnected, "underlying graph is not connected");
    }

    return t;
}

Triangulation complete_triangulation(int n)
{
    if (n < 3)
        throw Error(ErrorCode::InvalidInput, "complete triangulation needs n >= 3");
    std::vector<EdgeSpec> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
    std::vector<FaceSpec> faces;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) faces.push_back({i, j, k, 1.0});
    return build(n, edges, faces);
}

} // namespace simplex_spectra
