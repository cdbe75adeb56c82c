#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "simplex_spectra/cochain.hpp"
#include "simplex_spectra/complex.hpp"
#include "simplex_spectra/graph.hpp"

namespace simplex_spectra {

/// An unordered partition of the vertex set into three nonempty blocks,
/// with the number of geometric faces meeting all three blocks and the
/// ratio n * face_count / (|A0| |A1| |A2|).
struct Tripartition {
    std::array<std::vector<int>, 3> parts;
    long long face_count = 0;
    double ratio = 0.0;
};

enum class BoundKind { EdgeL1, L2Bound, CheegerUpper, LinkLower, CheegerLinkLower, FaceCountZero };

const char* bound_kind_name(BoundKind kind); // "edge_L1", "L2_bound", ...

struct BoundEdgeTerm {
    Edge edge;                 // oriented: the tail selects the link graph
    double term = 0.0;
    double lambda1 = 0.0;      // second Laplacian eigenvalue of the link of the tail
    long long face_neighbors = 0;
    double link_cheeger = 0.0; // h(K(tail)), cheeger-link bound only
    int max_link_degree = 0;   // d_tail, cheeger-link bound only
};

/// A bound value together with the witness that attains it, the per-item
/// table it was minimized over, and the verdict of the inequality it
/// certifies (checked only when its hypotheses hold).
struct BoundCertificate {
    BoundKind kind = BoundKind::EdgeL1;
    double value = 0.0;
    std::optional<Edge> witness_edge;
    std::optional<int> witness_vertex;
    std::optional<Tripartition> witness_partition;
    std::vector<BoundEdgeTerm> per_edge;
    std::vector<std::pair<std::string, bool>> hypothesis_checks;
    std::vector<std::pair<std::string, double>> details;
    std::string compared_name;            // e.g. "spectral_gap", "min_sigma_L1"
    std::optional<double> compared_value; // the spectrum-side quantity
    bool asserted = false;                // inequality checked?
    bool satisfied = true;                // verdict when asserted
    double margin = 0.0;                  // slack of the inequality (>= ~0 when satisfied)
};

struct CheegerResult {
    double h = 0.0;
    Tripartition argmin;
};

/// Exact tripartite Cheeger constant by enumeration over unordered
/// partitions into three nonempty blocks; faces counted geometrically.
/// Requires a complete underlying graph and n <= cap. The minimum and its
/// witness are deterministic: exact rational comparisons, ties broken by
/// the lexicographically smallest label vector.
CheegerResult cheeger_tripartite(const Triangulation& t, int cap = 14, int threads = 0);

/// Serial reference implementation with identical results; kept for
/// testing the parallel kernel against.
CheegerResult cheeger_tripartite_serial(const Triangulation& t, int cap = 14);

/// Randomized upper estimate of h for complexes beyond the enumeration
/// cap; not exact, deterministic for a fixed seed.
CheegerResult cheeger_tripartite_sampled(const Triangulation& t, std::uint64_t samples,
                                         std::uint64_t seed);

/// The 1-form psi~ attached to a tripartition: |A_i| on edges from
/// A_{i+1} to A_{i+2} (indices mod 3), antisymmetric, zero inside blocks.
/// Lies in ker(delta0) on a complete graph and its upper-Laplacian
/// Rayleigh quotient equals the partition ratio.
Cochain1 cheeger_test_form(const Triangulation& t, const Tripartition& p);

/// min over edges of (1/c(e-) + 1/c(e+)) r(e) + deg_E(e), an upper bound
/// for min sigma(L1) on any finite weighted complex.
BoundCertificate upper_bound_edge_l1(const Triangulation& t);

/// 8 + 2 min_e |F_e|, an upper bound for min sigma(L2); homogeneous only.
BoundCertificate upper_bound_l2(const Triangulation& t);

/// min over oriented edges of 2 lambda1(K(e-)) - |F_e|, a lower bound for
/// the spectral gap of a homogeneous complete-graph triangulation when
/// every F_e is nonempty. The bound value is computed regardless; the
/// inequality is asserted only when the hypothesis holds.
BoundCertificate lower_bound_link(const Triangulation& t);

/// min over oriented edges of h^2(K(e-))/d_{e-} - |F_e| where d_x is the
/// maximal degree over K(x) (or over the ambient graph when
/// ambient_degree is set).
BoundCertificate lower_bound_cheeger_link(const Triangulation& t, bool ambient_degree = false,
                                          int subset_cap = 24, int threads = 0);

/// h as an upper bound for the spectral gap; asserted when h > 0 and the
/// complex is homogeneous.
BoundCertificate cheeger_upper_certificate(const Triangulation& t, int cap = 14, int threads = 0);

/// |F| < |E| - |V| + 1 forces a zero gap; certificate records the counts
/// and, when the criterion holds, checks the gap against its zero
/// threshold.
BoundCertificate zero_gap_certificate(const Triangulation& t);

/// Exact graph Cheeger constant h(G) = min over nonempty S, |S| <= |V|/2,
/// of |boundary(S)| / |S|. Zero exactly for disconnected graphs.
double graph_cheeger(const Graph& g, int cap = 24, int threads = 0);
double graph_cheeger_serial(const Graph& g, int cap = 24);

/// A vertex contained in F_e for every edge e not incident to it, if one
/// exists; a sufficient condition for h > 0.
std::optional<int> nonzero_cheeger_witness(const Triangulation& t);

/// True when lambda1 does not decrease after adding one edge.
bool edge_monotonicity_check(const Graph& g, const Graph& g_plus_edge);

} // namespace simplex_spectra
