#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "simplex_spectra/complex.hpp"
#include "simplex_spectra/operators.hpp"

namespace simplex_spectra {

struct SpectrumReport {
    LaplacianKind which = LaplacianKind::L0;
    std::vector<double> eigenvalues; // ascending
    double zero_tol = 0.0;
    std::vector<std::pair<double, int>> multiplicities; // (value, count) after clustering

    int dimension() const { return static_cast<int>(eigenvalues.size()); }
    /// Number of eigenvalues at most zero_tol.
    int zero_count() const;
    /// Eigenvalues strictly above zero_tol, ascending.
    std::vector<double> nonzero() const;
};

/// Eigenvalues of the weighted Laplacian, computed from the diagonal
/// similarity W^{1/2} A W^{-1/2} (symmetric, identical spectrum).
/// zero_tol <= 0 selects the default 1e-9 * max(1, lambda_max).
SpectrumReport eigen_spectrum(const Triangulation& t, LaplacianKind which, double zero_tol = 0.0);

struct SpectralGap {
    double value = 0.0;    // eigenvalue at index |V|-1 of L1plus
    int index = 0;         // |V|-1
    double rayleigh_min = 0.0; // independent route: min over ker(delta0)
    double zero_tol = 0.0;
};

/// The (|V|-1)-th ascending eigenvalue of the upper Laplacian, checked
/// against the constrained Rayleigh minimum over ker(delta0); the two
/// routes must agree to 1e-8 relative.
SpectralGap spectral_gap(const Triangulation& t);

struct HodgeDecomposition {
    int exact_dim = 0;    // dim Im(d0)
    int coexact_dim = 0;  // dim Im(delta1)
    int harmonic_dim = 0; // dim ker(L1)
    // Columns are ip_E-orthonormal bases in canonical-edge coordinates.
    Eigen::MatrixXd exact_basis;
    Eigen::MatrixXd coexact_basis;
    Eigen::MatrixXd harmonic_basis;
};

/// l2(E) = ker(L1) + Im(d0) + Im(delta1), pairwise ip_E-orthogonal.
HodgeDecomposition hodge(const Triangulation& t);

/// |F| < |E| - |V| + 1 forces a zero spectral gap (implication only).
bool zero_gap_criterion(const Triangulation& t);

struct SpectrumRelationReport {
    bool match = false;
    std::vector<double> lhs_nonzero;
    std::vector<double> rhs_nonzero;
    double max_diff = 0.0; // max matched |a-b| when the lengths agree
    double tol = 0.0;
    bool homogeneous = false;
};

/// Multiset equality of the nonzero spectra of L1plus and L2.
SpectrumRelationReport spectrum_relation_check(const Triangulation& t, double tol = 1e-8);

/// Multiset equality of the nonzero spectra of L0 and L1minus; requires a
/// normalized complex (c(x) = sum of incident r within tol), else throws
/// NotNormalized.
SpectrumRelationReport normalized_check_L0_L1minus(const Triangulation& t, double tol = 1e-8);

} // namespace simplex_spectra
