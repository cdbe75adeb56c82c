#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "simplex_spectra/complex.hpp"

namespace simplex_spectra {

enum class SpaceTag { Vertices, Edges, Faces, DirectSum };
enum class CoboundaryKind { D0, Delta0, D1, Delta1 };
enum class LaplacianKind { L0, L1Minus, L1Plus, L1, L2 };

const char* laplacian_name(LaplacianKind kind); // "L0", "L1minus", ...
LaplacianKind laplacian_from_name(const std::string& name);

/// A linear map between cochain spaces on the canonical-representative
/// bases, together with the diagonal weights of the weighted inner
/// products on its domain and codomain. Assembled sparse; densify on
/// demand for desk-scale eigensolves.
struct OperatorMatrix {
    SpaceTag domain = SpaceTag::Edges;
    SpaceTag codomain = SpaceTag::Edges;
    Eigen::SparseMatrix<double> matrix;
    Eigen::VectorXd domain_weights;
    Eigen::VectorXd codomain_weights;

    Eigen::Index rows() const { return matrix.rows(); }
    Eigen::Index cols() const { return matrix.cols(); }
    Eigen::MatrixXd dense() const { return Eigen::MatrixXd(matrix); }
    Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
};

OperatorMatrix coboundary(const Triangulation& t, CoboundaryKind kind);
OperatorMatrix laplacian(const Triangulation& t, LaplacianKind kind);

/// The Dirac-type operator T = d + delta on l2(V) + l2(E) + l2(F),
/// block tridiagonal [[0, delta0, 0], [d0, 0, delta1], [0, d1, 0]].
/// T^2 is the block diagonal of the three Laplacians.
OperatorMatrix gauss_bonnet(const Triangulation& t);

/// Unweighted incidence matrices with integer entries; products of these
/// verify the chain identity d1*d0 = 0 exactly.
Eigen::SparseMatrix<std::int64_t> incidence_d0(const Triangulation& t);
Eigen::SparseMatrix<std::int64_t> incidence_d1(const Triangulation& t);

/// W^{1/2} A W^{-1/2} for a square operator A with domain weights W:
/// symmetric with the same spectrum. Residual asymmetry is averaged out.
Eigen::MatrixXd symmetrized(const OperatorMatrix& op);

void write_matrix_market(std::ostream& os, const Eigen::SparseMatrix<double>& m);

/// Write every operator of the complex as MatrixMarket coordinate text
/// plus a manifest.json describing the basis orderings.
void dump_operators(const Triangulation& t, const std::string& directory);

} // namespace simplex_spectra
