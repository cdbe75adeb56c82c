#include "simplex_spectra/cheeger.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include <omp.h>

#include "simplex_spectra/spectral.hpp"

namespace simplex_spectra {

namespace {

constexpr double kBoundTol = 1e-9;

/// Candidate minimum of an exact nonnegative rational num/den with a
/// deterministic tie-break on the enumeration state. den == 0 marks the
/// empty candidate.
struct RationalBest {
    long long num = 0;
    long long den = 0;
    std::int64_t state = 0;

    bool better_than(const RationalBest& other) const
    {
        if (den == 0) return false;
        if (other.den == 0) return true;
        long long lhs = num * other.den;
        long long rhs = other.num * den;
        if (lhs != rhs) return lhs < rhs;
        return state < other.state;
    }
};

void fold_best(RationalBest& into, const RationalBest& candidate)
{
    if (candidate.better_than(into)) into = candidate;
}

std::int64_t pow3(int k)
{
    std::int64_t p = 1;
    while (k-- > 0) p *= 3;
    return p;
}

/// Decode the labels of vertices 1..n-1 from the state (vertex 1 is the
/// most significant digit, so ascending states are lexicographically
/// ascending label vectors); vertex 0 is pinned to label 0.
void decode_labels(std::int64_t state, int n, int* labels)
{
    labels[0] = 0;
    for (int v = n - 1; v >= 1; --v) {
        labels[v] = static_cast<int>(state % 3);
        state /= 3;
    }
}

struct FlatFaces {
    std::vector<int> a, b, c;
};

FlatFaces flatten_faces(const Triangulation& t)
{
    FlatFaces ff;
    ff.a.reserve(t.faces().size());
    ff.b.reserve(t.faces().size());
    ff.c.reserve(t.faces().size());
    for (const Face& f : t.faces()) {
        ff.a.push_back(f.a);
        ff.b.push_back(f.b);
        ff.c.push_back(f.c);
    }
    return ff;
}

/// Ratio statistics of one labeling; den == 0 when a block is empty or
/// the labeling is not the canonical representative of its partition.
RationalBest evaluate_state(std::int64_t state, int n, const FlatFaces& faces, const int* labels)
{
    int sizes[3] = {0, 0, 0};
    int first_nonzero = -1;
    for (int v = 0; v < n; ++v) {
        ++sizes[labels[v]];
        if (first_nonzero < 0 && labels[v] != 0) first_nonzero = labels[v];
    }
    if (first_nonzero != 1 || sizes[0] == 0 || sizes[1] == 0 || sizes[2] == 0) return {};

    long long fc = 0;
    const std::size_t nf = faces.a.size();
    for (std::size_t i = 0; i < nf; ++i) {
        int mask = (1 << labels[faces.a[i]]) | (1 << labels[faces.b[i]]) | (1 << labels[faces.c[i]]);
        fc += (mask == 7);
    }
    RationalBest r;
    r.num = static_cast<long long>(n) * fc;
    r.den = static_cast<long long>(sizes[0]) * sizes[1] * sizes[2];
    r.state = state;
    return r;
}

CheegerResult result_from_state(const Triangulation& t, const RationalBest& best)
{
    if (best.den == 0)
        throw Error(ErrorCode::InvalidInput, "no tripartition found (n < 3?)");
    const int n = t.num_vertices();
    std::vector<int> labels(static_cast<std::size_t>(n));
    decode_labels(best.state, n, labels.data());

    CheegerResult res;
    for (int v = 0; v < n; ++v) res.argmin.parts[static_cast<std::size_t>(labels[v])].push_back(v);
    res.argmin.face_count = best.num / n;
    res.argmin.ratio = static_cast<double>(best.num) / static_cast<double>(best.den);
    res.h = res.argmin.ratio;
    return res;
}

void check_tripartite_pre(const Triangulation& t, int cap)
{
    if (!t.is_complete_graph())
        throw Error(ErrorCode::NotCompleteGraph, "tripartite Cheeger constant needs a complete graph");
    if (t.num_vertices() > cap)
        throw Error(ErrorCode::TooLarge,
                    "n = " + std::to_string(t.num_vertices()) + " exceeds the enumeration cap " +
                        std::to_string(cap) + "; use the sampling mode for an upper estimate");
}

int resolve_threads(int threads)
{
    return threads > 0 ? threads : omp_get_max_threads();
}

/// Labels of a partition; throws InvalidPartition unless the parts are
/// nonempty, disjoint, and cover the vertex set.
std::vector<int> partition_labels(const Triangulation& t, const Tripartition& p)
{
    const int n = t.num_vertices();
    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < 3; ++i) {
        if (p.parts[static_cast<std::size_t>(i)].empty())
            throw Error(ErrorCode::InvalidPartition, "block " + std::to_string(i) + " is empty");
        for (int v : p.parts[static_cast<std::size_t>(i)]) {
            if (v < 0 || v >= n)
                throw Error(ErrorCode::InvalidPartition, "vertex " + std::to_string(v) + " out of range");
            if (labels[static_cast<std::size_t>(v)] != -1)
                throw Error(ErrorCode::InvalidPartition,
                            "vertex " + std::to_string(v) + " appears in two blocks");
            labels[static_cast<std::size_t>(v)] = i;
        }
    }
    for (int v = 0; v < n; ++v)
        if (labels[static_cast<std::size_t>(v)] == -1)
            throw Error(ErrorCode::InvalidPartition, "vertex " + std::to_string(v) + " is unassigned");
    return labels;
}

struct SubsetBest {
    long long cut = -1; // -1 marks the empty candidate
    long long size = 1;
    std::uint64_t mask = 0;

    bool better_than(const SubsetBest& other) const
    {
        if (cut < 0) return false;
        if (other.cut < 0) return true;
        long long lhs = cut * other.size;
        long long rhs = other.cut * size;
        if (lhs != rhs) return lhs < rhs;
        return mask < other.mask;
    }
};

SubsetBest evaluate_subset(std::uint64_t mask, const std::vector<std::uint64_t>& adj, int k)
{
    int size = std::popcount(mask);
    if (2 * size > k) return {};
    long long cut = 0;
    std::uint64_t rest = mask;
    while (rest) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        cut += std::popcount(adj[static_cast<std::size_t>(i)] & ~mask);
    }
    return {cut, size, mask};
}

struct LinkStats {
    double lambda1 = 0.0;
    double cheeger = 0.0;
    int max_degree = 0;
};

} // namespace

const char* bound_kind_name(BoundKind kind)
{
    switch (kind) {
        case BoundKind::EdgeL1: return "edge_L1";
        case BoundKind::L2Bound: return "L2_bound";
        case BoundKind::CheegerUpper: return "cheeger_upper";
        case BoundKind::LinkLower: return "link_lower";
        case BoundKind::CheegerLinkLower: return "cheeger_link_lower";
        case BoundKind::FaceCountZero: return "face_count_zero";
    }
    return "?";
}

CheegerResult cheeger_tripartite_serial(const Triangulation& t, int cap)
{
    check_tripartite_pre(t, cap);
    const int n = t.num_vertices();
    const FlatFaces faces = flatten_faces(t);
    const std::int64_t total = pow3(n - 1);

    RationalBest best;
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (std::int64_t s = 0; s < total; ++s) {
        decode_labels(s, n, labels.data());
        fold_best(best, evaluate_state(s, n, faces, labels.data()));
    }
    return result_from_state(t, best);
}

CheegerResult cheeger_tripartite(const Triangulation& t, int cap, int threads)
{
    check_tripartite_pre(t, cap);
    const int n = t.num_vertices();
    const FlatFaces faces = flatten_faces(t);
    const std::int64_t total = pow3(n - 1);

    RationalBest best;
#pragma omp parallel num_threads(resolve_threads(threads))
    {
        RationalBest local;
        std::vector<int> labels(static_cast<std::size_t>(n));
#pragma omp for schedule(static)
        for (std::int64_t s = 0; s < total; ++s) {
            decode_labels(s, n, labels.data());
            fold_best(local, evaluate_state(s, n, faces, labels.data()));
        }
#pragma omp critical
        fold_best(best, local);
    }
    return result_from_state(t, best);
}

CheegerResult cheeger_tripartite_sampled(const Triangulation& t, std::uint64_t samples,
                                         std::uint64_t seed)
{
    if (!t.is_complete_graph())
        throw Error(ErrorCode::NotCompleteGraph, "tripartite Cheeger constant needs a complete graph");
    const int n = t.num_vertices();
    if (n < 3) throw Error(ErrorCode::InvalidInput, "sampling needs n >= 3");
    const FlatFaces faces = flatten_faces(t);

    std::mt19937_64 rng(seed);
    RationalBest best;
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (std::uint64_t it = 0; it < samples; ++it) {
        int sizes[3] = {0, 0, 0};
        for (int v = 0; v < n; ++v) {
            labels[static_cast<std::size_t>(v)] = static_cast<int>(rng() % 3);
            ++sizes[labels[static_cast<std::size_t>(v)]];
        }
        if (sizes[0] == 0 || sizes[1] == 0 || sizes[2] == 0) continue;
        long long fc = 0;
        for (std::size_t i = 0; i < faces.a.size(); ++i) {
            int mask = (1 << labels[static_cast<std::size_t>(faces.a[i])]) |
                       (1 << labels[static_cast<std::size_t>(faces.b[i])]) |
                       (1 << labels[static_cast<std::size_t>(faces.c[i])]);
            fc += (mask == 7);
        }
        RationalBest cand{static_cast<long long>(n) * fc,
                          static_cast<long long>(sizes[0]) * sizes[1] * sizes[2],
                          static_cast<std::int64_t>(it)};
        fold_best(best, cand);
    }
    if (best.den == 0)
        throw Error(ErrorCode::InvalidInput, "no valid tripartition sampled; increase samples");

    // Rebuild the winning labels by replaying the generator.
    std::mt19937_64 replay(seed);
    CheegerResult res;
    for (std::uint64_t it = 0; it <= static_cast<std::uint64_t>(best.state); ++it) {
        for (int v = 0; v < n; ++v) labels[static_cast<std::size_t>(v)] = static_cast<int>(replay() % 3);
    }
    for (int v = 0; v < n; ++v)
        res.argmin.parts[static_cast<std::size_t>(labels[static_cast<std::size_t>(v)])].push_back(v);
    res.argmin.face_count = best.num / n;
    res.argmin.ratio = static_cast<double>(best.num) / static_cast<double>(best.den);
    res.h = res.argmin.ratio;
    return res;
}

Cochain1 cheeger_test_form(const Triangulation& t, const Tripartition& p)
{
    std::vector<int> labels = partition_labels(t, p);
    double sizes[3];
    for (int i = 0; i < 3; ++i)
        sizes[i] = static_cast<double>(p.parts[static_cast<std::size_t>(i)].size());

    Cochain1 psi = zero_cochain1(t);
    for (std::size_t e = 0; e < t.edges().size(); ++e) {
        int lu = labels[static_cast<std::size_t>(t.edges()[e].tail)];
        int lv = labels[static_cast<std::size_t>(t.edges()[e].head)];
        if (lu == lv) continue;
        for (int i = 0; i < 3; ++i) {
            int from = (i + 1) % 3;
            int to = (i + 2) % 3;
            if (lu == from && lv == to) psi.values(static_cast<Eigen::Index>(e)) = sizes[i];
            if (lu == to && lv == from) psi.values(static_cast<Eigen::Index>(e)) = -sizes[i];
        }
    }
    return psi;
}

BoundCertificate upper_bound_edge_l1(const Triangulation& t)
{
    if (t.edges().empty())
        throw Error(ErrorCode::InvalidInput, "edge bound needs at least one edge");

    BoundCertificate cert;
    cert.kind = BoundKind::EdgeL1;
    cert.value = std::numeric_limits<double>::infinity();
    for (std::size_t e = 0; e < t.edges().size(); ++e) {
        const Edge& edge = t.edges()[e];
        double r = t.edge_weights()(static_cast<Eigen::Index>(e));
        double term = (1.0 / t.vertex_weights()(edge.tail) + 1.0 / t.vertex_weights()(edge.head)) * r +
                      t.edge_face_degree(edge.tail, edge.head);
        BoundEdgeTerm row;
        row.edge = edge;
        row.term = term;
        row.face_neighbors = static_cast<long long>(t.faces_at_edge(static_cast<int>(e)).size());
        cert.per_edge.push_back(row);
        if (term < cert.value) {
            cert.value = term;
            cert.witness_edge = edge;
        }
    }

    double min_sigma = eigen_spectrum(t, LaplacianKind::L1).eigenvalues.front();
    cert.compared_name = "min_sigma_L1";
    cert.compared_value = min_sigma;
    cert.asserted = true;
    cert.margin = cert.value - min_sigma;
    cert.satisfied = min_sigma <= cert.value + kBoundTol;
    return cert;
}

BoundCertificate upper_bound_l2(const Triangulation& t)
{
    if (!t.is_homogeneous())
        throw Error(ErrorCode::NotHomogeneous, "the L2 bound is stated for homogeneous weights");
    if (t.edges().empty())
        throw Error(ErrorCode::InvalidInput, "L2 bound needs at least one edge");

    BoundCertificate cert;
    cert.kind = BoundKind::L2Bound;
    long long min_fe = std::numeric_limits<long long>::max();
    for (std::size_t e = 0; e < t.edges().size(); ++e) {
        long long fe = static_cast<long long>(t.faces_at_edge(static_cast<int>(e)).size());
        BoundEdgeTerm row;
        row.edge = t.edges()[e];
        row.face_neighbors = fe;
        row.term = 8.0 + 2.0 * static_cast<double>(fe);
        cert.per_edge.push_back(row);
        if (fe < min_fe) {
            min_fe = fe;
            cert.witness_edge = t.edges()[e];
        }
    }
    cert.value = 8.0 + 2.0 * static_cast<double>(min_fe);
    cert.details.emplace_back("min_face_neighbors", static_cast<double>(min_fe));

    if (!t.faces().empty()) {
        double min_sigma = eigen_spectrum(t, LaplacianKind::L2).eigenvalues.front();
        cert.compared_name = "min_sigma_L2";
        cert.compared_value = min_sigma;
        cert.asserted = true;
        cert.margin = cert.value - min_sigma;
        cert.satisfied = min_sigma <= cert.value + kBoundTol;
    }
    return cert;
}

namespace {

std::vector<LinkStats> link_statistics(const Triangulation& t, bool need_cheeger,
                                       bool ambient_degree, int subset_cap, int threads)
{
    std::vector<LinkStats> stats(static_cast<std::size_t>(t.num_vertices()));
    for (int x = 0; x < t.num_vertices(); ++x) {
        LinkGraph lg = t.link_graph(x);
        if (lg.vertices.empty())
            throw Error(ErrorCode::EmptyFaceNeighbor,
                        "the link of vertex " + std::to_string(x) +
                            " is empty; its second Laplacian eigenvalue is undefined");
        Graph g = lg.to_graph();
        LinkStats& st = stats[static_cast<std::size_t>(x)];
        st.lambda1 = lambda1(g);
        if (need_cheeger) {
            st.cheeger = graph_cheeger(g, subset_cap, threads);
            if (ambient_degree) {
                for (int y : lg.vertices)
                    st.max_degree = std::max(st.max_degree, static_cast<int>(t.neighbors(y).size()));
            } else {
                auto adj = g.adjacency();
                for (const auto& row : adj)
                    st.max_degree = std::max(st.max_degree, static_cast<int>(row.size()));
            }
        }
    }
    return stats;
}

BoundCertificate lower_bound_common(const Triangulation& t, BoundKind kind, bool ambient_degree,
                                    int subset_cap, int threads)
{
    if (!t.is_complete_graph())
        throw Error(ErrorCode::NotCompleteGraph, "the link lower bounds need a complete graph");
    if (!t.is_homogeneous())
        throw Error(ErrorCode::NotHomogeneous, "the link lower bounds need homogeneous weights");

    const bool cheeger_kind = kind == BoundKind::CheegerLinkLower;
    std::vector<LinkStats> stats = link_statistics(t, cheeger_kind, ambient_degree, subset_cap, threads);

    BoundCertificate cert;
    cert.kind = kind;
    cert.value = std::numeric_limits<double>::infinity();
    bool all_nonempty = true;
    for (std::size_t e = 0; e < t.edges().size(); ++e) {
        long long fe = static_cast<long long>(t.faces_at_edge(static_cast<int>(e)).size());
        if (fe == 0) all_nonempty = false;
        const Edge& edge = t.edges()[e];
        for (int tail : {edge.tail, edge.head}) {
            const LinkStats& st = stats[static_cast<std::size_t>(tail)];
            BoundEdgeTerm row;
            row.edge = {tail, edge.tail + edge.head - tail};
            row.face_neighbors = fe;
            row.lambda1 = st.lambda1;
            if (cheeger_kind) {
                row.link_cheeger = st.cheeger;
                row.max_link_degree = st.max_degree;
                row.term = st.cheeger * st.cheeger / static_cast<double>(st.max_degree) -
                           static_cast<double>(fe);
            } else {
                row.term = 2.0 * st.lambda1 - static_cast<double>(fe);
            }
            cert.per_edge.push_back(row);
            if (row.term < cert.value) {
                cert.value = row.term;
                cert.witness_edge = row.edge;
            }
        }
    }

    double gap = spectral_gap(t).value;
    cert.compared_name = "spectral_gap";
    cert.compared_value = gap;
    cert.hypothesis_checks.emplace_back("complete_graph", true);
    cert.hypothesis_checks.emplace_back("homogeneous", true);
    cert.hypothesis_checks.emplace_back("all_face_neighbors_nonempty", all_nonempty);
    cert.asserted = all_nonempty;
    cert.margin = gap - cert.value;
    cert.satisfied = !cert.asserted || gap >= cert.value - kBoundTol;
    return cert;
}

} // namespace

BoundCertificate lower_bound_link(const Triangulation& t)
{
    return lower_bound_common(t, BoundKind::LinkLower, false, 24, 0);
}

BoundCertificate lower_bound_cheeger_link(const Triangulation& t, bool ambient_degree,
                                          int subset_cap, int threads)
{
    return lower_bound_common(t, BoundKind::CheegerLinkLower, ambient_degree, subset_cap, threads);
}

BoundCertificate cheeger_upper_certificate(const Triangulation& t, int cap, int threads)
{
    CheegerResult res = cheeger_tripartite(t, cap, threads);
    double gap = spectral_gap(t).value;
    bool homogeneous = t.is_homogeneous();

    BoundCertificate cert;
    cert.kind = BoundKind::CheegerUpper;
    cert.value = res.h;
    cert.witness_partition = res.argmin;
    cert.compared_name = "spectral_gap";
    cert.compared_value = gap;
    cert.hypothesis_checks.emplace_back("complete_graph", true);
    cert.hypothesis_checks.emplace_back("homogeneous", homogeneous);
    cert.hypothesis_checks.emplace_back("cheeger_positive", res.h > 0.0);
    cert.asserted = homogeneous && res.h > 0.0;
    cert.margin = res.h - gap;
    cert.satisfied = !cert.asserted || gap <= res.h + kBoundTol;
    return cert;
}

BoundCertificate zero_gap_certificate(const Triangulation& t)
{
    Counts c = t.counts();
    bool holds = zero_gap_criterion(t);

    BoundCertificate cert;
    cert.kind = BoundKind::FaceCountZero;
    cert.value = 0.0;
    cert.details.emplace_back("faces", static_cast<double>(c.faces));
    cert.details.emplace_back("cycle_space_dim", static_cast<double>(c.edges - c.vertices + 1));
    if (t.is_complete_graph())
        cert.details.emplace_back("complete_graph_threshold",
                                  static_cast<double>(c.vertices - 1) * (c.vertices - 2) / 2.0);
    cert.hypothesis_checks.emplace_back("criterion_holds", holds);

    if (c.edges >= c.vertices) {
        SpectralGap gap = spectral_gap(t);
        cert.compared_name = "spectral_gap";
        cert.compared_value = gap.value;
        if (holds) {
            cert.asserted = true;
            cert.margin = gap.zero_tol - gap.value;
            cert.satisfied = gap.value < gap.zero_tol;
        }
    }
    return cert;
}

double graph_cheeger_serial(const Graph& g, int cap)
{
    if (g.n < 2) throw Error(ErrorCode::InvalidInput, "graph Cheeger constant needs n >= 2");
    if (g.n > cap)
        throw Error(ErrorCode::TooLarge, "n = " + std::to_string(g.n) +
                                             " exceeds the subset enumeration cap " +
                                             std::to_string(cap));
    const int k = g.n;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(k), 0);
    for (const Edge& e : g.edges) {
        adj[static_cast<std::size_t>(e.tail)] |= std::uint64_t{1} << e.head;
        adj[static_cast<std::size_t>(e.head)] |= std::uint64_t{1} << e.tail;
    }

    SubsetBest best;
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        SubsetBest cand = evaluate_subset(mask, adj, k);
        if (cand.better_than(best)) best = cand;
    }
    return static_cast<double>(best.cut) / static_cast<double>(best.size);
}

double graph_cheeger(const Graph& g, int cap, int threads)
{
    if (g.n < 2) throw Error(ErrorCode::InvalidInput, "graph Cheeger constant needs n >= 2");
    if (g.n > cap)
        throw Error(ErrorCode::TooLarge, "n = " + std::to_string(g.n) +
                                             " exceeds the subset enumeration cap " +
                                             std::to_string(cap));
    const int k = g.n;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(k), 0);
    for (const Edge& e : g.edges) {
        adj[static_cast<std::size_t>(e.tail)] |= std::uint64_t{1} << e.head;
        adj[static_cast<std::size_t>(e.head)] |= std::uint64_t{1} << e.tail;
    }

    SubsetBest best;
    const std::int64_t total = std::int64_t{1} << k;
#pragma omp parallel num_threads(resolve_threads(threads))
    {
        SubsetBest local;
#pragma omp for schedule(static)
        for (std::int64_t mask = 1; mask < total; ++mask) {
            SubsetBest cand = evaluate_subset(static_cast<std::uint64_t>(mask), adj, k);
            if (cand.better_than(local)) local = cand;
        }
#pragma omp critical
        {
            if (local.better_than(best)) best = local;
        }
    }
    return static_cast<double>(best.cut) / static_cast<double>(best.size);
}

std::optional<int> nonzero_cheeger_witness(const Triangulation& t)
{
    for (int x = 0; x < t.num_vertices(); ++x) {
        bool ok = true;
        for (std::size_t e = 0; e < t.edges().size() && ok; ++e) {
            const Edge& edge = t.edges()[e];
            if (edge.tail == x || edge.head == x) continue;
            bool contains = false;
            for (const FaceAtEdge& fe : t.faces_at_edge(static_cast<int>(e)))
                if (fe.third == x) {
                    contains = true;
                    break;
                }
            ok = contains;
        }
        if (ok) return x;
    }
    return std::nullopt;
}

bool edge_monotonicity_check(const Graph& g, const Graph& g_plus_edge)
{
    if (g.n != g_plus_edge.n)
        throw Error(ErrorCode::NotOneEdgeExtension, "vertex sets differ");
    if (g_plus_edge.edges.size() != g.edges.size() + 1 ||
        !std::includes(g_plus_edge.edges.begin(), g_plus_edge.edges.end(), g.edges.begin(),
                       g.edges.end()))
        throw Error(ErrorCode::NotOneEdgeExtension,
                    "second graph must be the first plus exactly one new edge");
    if (!g.connected())
        throw Error(ErrorCode::Disconnected, "base graph must be connected");
    return lambda1(g) <= lambda1(g_plus_edge) + 1e-10;
}

} // namespace simplex_spectra
