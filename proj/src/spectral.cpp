#include "simplex_spectra/spectral.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace simplex_spectra {

namespace {

constexpr double kZeroTolScale = 1e-9;
constexpr double kRouteAgreementTol = 1e-8;

Eigen::VectorXd sym_eigenvalues(const Eigen::MatrixXd& s)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw Error(ErrorCode::EigensolveFailure, "symmetric eigensolve did not converge");
    return es.eigenvalues();
}

double auto_zero_tol(const std::vector<double>& evals, double requested)
{
    if (requested > 0.0) return requested;
    double lambda_max = evals.empty() ? 0.0 : evals.back();
    return kZeroTolScale * std::max(1.0, lambda_max);
}

std::vector<std::pair<double, int>> cluster_multiplicities(const std::vector<double>& evals)
{
    // Two neighbors belong to one cluster iff |a-b| <= 1e-9 * max(1,|a|,|b|).
    std::vector<std::pair<double, int>> out;
    std::size_t i = 0;
    while (i < evals.size()) {
        std::size_t j = i + 1;
        double sum = evals[i];
        while (j < evals.size() &&
               std::abs(evals[j] - evals[j - 1]) <=
                   1e-9 * std::max({1.0, std::abs(evals[j]), std::abs(evals[j - 1])})) {
            sum += evals[j];
            ++j;
        }
        out.emplace_back(sum / static_cast<double>(j - i), static_cast<int>(j - i));
        i = j;
    }
    return out;
}

int rank_by_svd(const Eigen::MatrixXd& m)
{
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) return 0;
    double thresh = s(0) * 1e-12 * static_cast<double>(std::max(m.rows(), m.cols()));
    int rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > thresh) ++rank;
    return rank;
}

struct EdgeSpaceFactors {
    Eigen::VectorXd sqrt_w;
    Eigen::VectorXd inv_sqrt_w;
};

EdgeSpaceFactors edge_factors(const Triangulation& t)
{
    Eigen::VectorXd sq = t.edge_weights().array().sqrt();
    return {sq, sq.cwiseInverse()};
}

bool multiset_match(const std::vector<double>& lhs, const std::vector<double>& rhs, double tol,
                    double& max_diff)
{
    max_diff = 0.0;
    if (lhs.size() != rhs.size()) return false;
    bool ok = true;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        double diff = std::abs(lhs[i] - rhs[i]);
        max_diff = std::max(max_diff, diff);
        if (diff > tol * std::max({1.0, std::abs(lhs[i]), std::abs(rhs[i])})) ok = false;
    }
    return ok;
}

SpectrumRelationReport relation_report(const Triangulation& t, LaplacianKind lhs_kind,
                                       LaplacianKind rhs_kind, double tol)
{
    SpectrumReport lhs = eigen_spectrum(t, lhs_kind);
    SpectrumReport rhs = eigen_spectrum(t, rhs_kind);
    // A shared zero threshold keeps borderline zeros on one side from
    // being counted as nonzero on the other.
    double ztol = std::max(lhs.zero_tol, rhs.zero_tol);

    SpectrumRelationReport rep;
    rep.tol = tol;
    rep.homogeneous = t.is_homogeneous();
    for (double v : lhs.eigenvalues)
        if (v > ztol) rep.lhs_nonzero.push_back(v);
    for (double v : rhs.eigenvalues)
        if (v > ztol) rep.rhs_nonzero.push_back(v);
    rep.match = multiset_match(rep.lhs_nonzero, rep.rhs_nonzero, tol, rep.max_diff);
    return rep;
}

} // namespace

int SpectrumReport::zero_count() const
{
    int n = 0;
    for (double v : eigenvalues)
        if (v <= zero_tol) ++n;
    return n;
}

std::vector<double> SpectrumReport::nonzero() const
{
    std::vector<double> out;
    for (double v : eigenvalues)
        if (v > zero_tol) out.push_back(v);
    return out;
}

SpectrumReport eigen_spectrum(const Triangulation& t, LaplacianKind which, double zero_tol)
{
    SpectrumReport rep;
    rep.which = which;

    OperatorMatrix op = laplacian(t, which);
    if (op.rows() == 0) {
        rep.zero_tol = zero_tol > 0.0 ? zero_tol : kZeroTolScale;
        return rep;
    }
    Eigen::VectorXd evals = sym_eigenvalues(symmetrized(op));
    rep.eigenvalues.assign(evals.begin(), evals.end());
    rep.zero_tol = auto_zero_tol(rep.eigenvalues, zero_tol);
    rep.multiplicities = cluster_multiplicities(rep.eigenvalues);
    return rep;
}

SpectralGap spectral_gap(const Triangulation& t)
{
    const int nv = t.num_vertices();
    const int ne = static_cast<int>(t.edges().size());
    if (ne < nv)
        throw Error(ErrorCode::InvalidInput,
                    "spectral gap undefined: ker(delta0) is trivial (|E| < |V|)");

    SpectrumReport rep = eigen_spectrum(t, LaplacianKind::L1Plus);
    SpectralGap gap;
    gap.index = nv - 1;
    gap.value = rep.eigenvalues[static_cast<std::size_t>(gap.index)];
    gap.zero_tol = rep.zero_tol;

    // Independent route: restrict the symmetrized upper Laplacian to an
    // orthonormal basis of ker(delta0) and take the smallest eigenvalue.
    // In symmetrized coordinates ker(delta0) is the orthogonal complement
    // of the range of W^{1/2} d0.
    auto wf = edge_factors(t);
    Eigen::MatrixXd d0_dense = coboundary(t, CoboundaryKind::D0).dense();
    Eigen::MatrixXd gen = wf.sqrt_w.asDiagonal() * d0_dense;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(gen, Eigen::ComputeFullU);
    const auto& sv = svd.singularValues();
    double thresh = (sv.size() > 0 && sv(0) > 0.0)
                        ? sv(0) * 1e-12 * static_cast<double>(std::max(gen.rows(), gen.cols()))
                        : 0.0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > thresh) ++rank;
    if (rank != nv - 1)
        throw Error(ErrorCode::EigensolveFailure,
                    "rank of d0 is not |V|-1; connectivity or conditioning problem");
    Eigen::MatrixXd basis = svd.matrixU().rightCols(ne - rank);
    Eigen::MatrixXd restricted =
        basis.transpose() * symmetrized(laplacian(t, LaplacianKind::L1Plus)) * basis;
    restricted = 0.5 * (restricted + restricted.transpose());
    gap.rayleigh_min = sym_eigenvalues(restricted)(0);

    if (std::abs(gap.value - gap.rayleigh_min) >
        kRouteAgreementTol * std::max({1.0, std::abs(gap.value), std::abs(gap.rayleigh_min)}))
        throw Error(ErrorCode::EigensolveFailure,
                    "spectral gap routes disagree: index route " + std::to_string(gap.value) +
                        " vs Rayleigh route " + std::to_string(gap.rayleigh_min));
    return gap;
}

HodgeDecomposition hodge(const Triangulation& t)
{
    const int nv = t.num_vertices();
    const Eigen::Index ne = static_cast<Eigen::Index>(t.edges().size());

    auto wf = edge_factors(t);
    HodgeDecomposition h;

    // Exact forms: the range of W^{1/2} d0 in symmetrized coordinates.
    Eigen::MatrixXd gen_exact =
        wf.sqrt_w.asDiagonal() * coboundary(t, CoboundaryKind::D0).dense();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd_exact(gen_exact, Eigen::ComputeFullU);
    h.exact_dim = rank_by_svd(gen_exact);
    if (h.exact_dim != nv - 1)
        throw Error(ErrorCode::EigensolveFailure, "rank of d0 is not |V|-1");
    Eigen::MatrixXd exact_sym = svd_exact.matrixU().leftCols(h.exact_dim);

    // Coexact forms: the range of W^{-1/2} d1^T (same range as delta1 in
    // symmetrized coordinates; the positive diagonal face weights do not
    // change the range).
    Eigen::MatrixXd coexact_sym(ne, 0);
    if (!t.faces().empty()) {
        Eigen::MatrixXd gen_coex =
            wf.inv_sqrt_w.asDiagonal() * coboundary(t, CoboundaryKind::D1).dense().transpose();
        Eigen::JacobiSVD<Eigen::MatrixXd> svd_coex(gen_coex, Eigen::ComputeFullU);
        h.coexact_dim = rank_by_svd(gen_coex);
        coexact_sym = svd_coex.matrixU().leftCols(h.coexact_dim);
    }

    h.harmonic_dim = static_cast<int>(ne) - h.exact_dim - h.coexact_dim;
    if (h.harmonic_dim < 0)
        throw Error(ErrorCode::EigensolveFailure, "negative harmonic dimension");

    // Harmonic forms: eigenvectors of the symmetrized full Laplacian for
    // its kernel eigenvalues.
    Eigen::MatrixXd harmonic_sym(ne, 0);
    if (h.harmonic_dim > 0) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
            symmetrized(laplacian(t, LaplacianKind::L1)));
        if (es.info() != Eigen::Success)
            throw Error(ErrorCode::EigensolveFailure, "full Laplacian eigensolve did not converge");
        harmonic_sym = es.eigenvectors().leftCols(h.harmonic_dim);
    }

    h.exact_basis = wf.inv_sqrt_w.asDiagonal() * exact_sym;
    h.coexact_basis = wf.inv_sqrt_w.asDiagonal() * coexact_sym;
    h.harmonic_basis = wf.inv_sqrt_w.asDiagonal() * harmonic_sym;
    return h;
}

bool zero_gap_criterion(const Triangulation& t)
{
    Counts c = t.counts();
    return c.faces < c.edges - c.vertices + 1;
}

SpectrumRelationReport spectrum_relation_check(const Triangulation& t, double tol)
{
    return relation_report(t, LaplacianKind::L1Plus, LaplacianKind::L2, tol);
}

SpectrumRelationReport normalized_check_L0_L1minus(const Triangulation& t, double tol)
{
    for (int x = 0; x < t.num_vertices(); ++x) {
        double c_tilde = 0.0;
        for (int y : t.neighbors(x)) c_tilde += t.edge_weights()(t.edge_index(x, y));
        double c = t.vertex_weights()(x);
        if (std::abs(c - c_tilde) > tol * std::max(1.0, std::abs(c_tilde)))
            throw Error(ErrorCode::NotNormalized,
                        "vertex " + std::to_string(x) + ": c(x) = " + std::to_string(c) +
                            " but incident edge weights sum to " + std::to_string(c_tilde));
    }
    return relation_report(t, LaplacianKind::L0, LaplacianKind::L1Minus, tol);
}

} // namespace simplex_spectra
