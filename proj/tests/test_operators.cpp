#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <Eigen/Dense>
#include <json.hpp>

#include "simplex_spectra/cochain.hpp"
#include "simplex_spectra/operators.hpp"
#include "test_support.hpp"

using namespace simplex_spectra;
using test_support::random_vector;
using test_support::single_triangle;

namespace {

double weighted_ip(const Eigen::VectorXd& w, const Eigen::VectorXd& a, const Eigen::VectorXd& b)
{
    return (w.array() * a.array() * b.array()).sum();
}

int kernel_dim(const Eigen::MatrixXd& m)
{
    if (m.cols() == 0) return 0;
    if (m.rows() == 0) return static_cast<int>(m.cols());
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    double thresh = s.size() && s(0) > 0.0
                        ? s(0) * 1e-10 * static_cast<double>(std::max(m.rows(), m.cols()))
                        : 0.0;
    int rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > thresh) ++rank;
    return static_cast<int>(m.cols()) - rank;
}

} // namespace

TEST_CASE("matrix assembly matches direct application")
{
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 12; ++iter) {
        Triangulation t = test_support::random_weighted(rng, 4 + int(rng() % 4), 0.6);
        Eigen::Index ne = static_cast<Eigen::Index>(t.edges().size());
        Eigen::Index nf = static_cast<Eigen::Index>(t.faces().size());

        Cochain0 f{random_vector(rng, t.num_vertices())};
        Cochain1 phi{random_vector(rng, ne)};
        Cochain2 theta{random_vector(rng, nf)};

        CHECK((coboundary(t, CoboundaryKind::D0).apply(f.values) - d0(t, f).values).norm() <= 1e-14);
        CHECK((coboundary(t, CoboundaryKind::Delta0).apply(phi.values) - delta0(t, phi).values)
                  .norm() <= 1e-13);
        CHECK((coboundary(t, CoboundaryKind::D1).apply(phi.values) - d1(t, phi).values).norm() <=
              1e-14);
        CHECK((coboundary(t, CoboundaryKind::Delta1).apply(theta.values) - delta1(t, theta).values)
                  .norm() <= 1e-13);

        // Laplacians agree with composed direct applications.
        Eigen::VectorXd l1_direct =
            delta1(t, d1(t, phi)).values + d0(t, delta0(t, phi)).values;
        CHECK((laplacian(t, LaplacianKind::L1).apply(phi.values) - l1_direct).norm() <=
              1e-12 * (1.0 + l1_direct.norm()));
    }
}

TEST_CASE("chain identity is exact in integer arithmetic")
{
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 10; ++iter) {
        Triangulation t = test_support::random_face_subset(rng, 4 + int(rng() % 5), 0.7);
        Eigen::SparseMatrix<std::int64_t> product = (incidence_d1(t) * incidence_d0(t)).pruned();
        CHECK(product.nonZeros() == 0);
    }
}

TEST_CASE("L0 of the homogeneous complete graph")
{
    Triangulation k4 = complete_triangulation(4);
    Eigen::MatrixXd l0 = laplacian(k4, LaplacianKind::L0).dense();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(l0(i, j) == (i == j ? 3.0 : -1.0));
}

TEST_CASE("L2 of the single triangle is the scalar 3")
{
    Eigen::MatrixXd l2 = laplacian(single_triangle(), LaplacianKind::L2).dense();
    REQUIRE(l2.rows() == 1);
    CHECK(l2(0, 0) == doctest::Approx(3.0));
}

TEST_CASE("complete triangulations act as n I on the relevant subspaces")
{
    std::mt19937_64 rng(9);
    for (int n : {4, 5, 6}) {
        Triangulation t = complete_triangulation(n);
        Eigen::Index ne = static_cast<Eigen::Index>(t.edges().size());

        // L1minus is n I on Im(d0).
        Cochain0 f{random_vector(rng, n)};
        Eigen::VectorXd psi = d0(t, f).values;
        Eigen::VectorXd lm = laplacian(t, LaplacianKind::L1Minus).apply(psi);
        CHECK((lm - double(n) * psi).norm() <= 1e-10 * (1.0 + psi.norm()));

        // L1plus is n I on ker(delta0): project out the exact part.
        Eigen::VectorXd phi = random_vector(rng, ne);
        Eigen::MatrixXd d0m = coboundary(t, CoboundaryKind::D0).dense();
        Eigen::VectorXd w = t.edge_weights();
        Eigen::MatrixXd gen = w.array().sqrt().matrix().asDiagonal() * d0m;
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(gen, Eigen::ComputeFullU);
        Eigen::MatrixXd basis_sym = svd.matrixU().leftCols(n - 1);
        Eigen::VectorXd phi_sym = w.array().sqrt().matrix().asDiagonal() * phi;
        Eigen::VectorXd ker_sym = phi_sym - basis_sym * (basis_sym.transpose() * phi_sym);
        Eigen::VectorXd ker = w.array().rsqrt().matrix().asDiagonal() * ker_sym;
        Eigen::VectorXd lp = laplacian(t, LaplacianKind::L1Plus).apply(ker);
        CHECK((lp - double(n) * ker).norm() <= 1e-9 * (1.0 + ker.norm()));
    }
}

TEST_CASE("self-adjointness and positive semidefiniteness")
{
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 8; ++iter) {
        Triangulation t = test_support::random_weighted(rng, 4 + int(rng() % 4), 0.6);
        for (LaplacianKind kind : {LaplacianKind::L0, LaplacianKind::L1Minus, LaplacianKind::L1Plus,
                                   LaplacianKind::L1, LaplacianKind::L2}) {
            OperatorMatrix op = laplacian(t, kind);
            if (op.rows() == 0) continue;
            Eigen::VectorXd u = random_vector(rng, op.rows());
            Eigen::VectorXd v = random_vector(rng, op.rows());
            double lhs = weighted_ip(op.domain_weights, op.apply(u), v);
            double rhs = weighted_ip(op.domain_weights, u, op.apply(v));
            CHECK(std::abs(lhs - rhs) <= 1e-11 * (1.0 + std::abs(lhs)));

            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(symmetrized(op),
                                                              Eigen::EigenvaluesOnly);
            double min_eig = es.eigenvalues()(0);
            double max_eig = es.eigenvalues()(es.eigenvalues().size() - 1);
            CHECK(min_eig >= -1e-9 * std::max(1.0, max_eig));
        }
    }
}

TEST_CASE("full Laplacian splits as lower plus upper")
{
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 6; ++iter) {
        Triangulation t = test_support::random_weighted(rng, 4 + int(rng() % 4), 0.6);
        Eigen::MatrixXd l1 = laplacian(t, LaplacianKind::L1).dense();
        Eigen::MatrixXd sum = laplacian(t, LaplacianKind::L1Minus).dense() +
                              laplacian(t, LaplacianKind::L1Plus).dense();
        CHECK((l1 - sum).cwiseAbs().maxCoeff() == 0.0); // identical assembly arithmetic
    }
}

TEST_CASE("kernel dimensions follow the coboundaries")
{
    std::mt19937_64 rng(19);
    for (int iter = 0; iter < 8; ++iter) {
        Triangulation t = iter == 0 ? t5_lower()
                                    : test_support::random_weighted(rng, 4 + int(rng() % 3), 0.6);
        CHECK(kernel_dim(laplacian(t, LaplacianKind::L1Minus).dense()) ==
              kernel_dim(coboundary(t, CoboundaryKind::Delta0).dense()));
        CHECK(kernel_dim(laplacian(t, LaplacianKind::L1Plus).dense()) ==
              kernel_dim(coboundary(t, CoboundaryKind::D1).dense()));
        CHECK(kernel_dim(laplacian(t, LaplacianKind::L2).dense()) ==
              kernel_dim(coboundary(t, CoboundaryKind::Delta1).dense()));
    }
}

TEST_CASE("gauss-bonnet operator")
{
    std::mt19937_64 rng(29);
    for (int iter = 0; iter < 6; ++iter) {
        Triangulation t = iter == 0 ? t5_upper()
                                    : test_support::random_weighted(rng, 4 + int(rng() % 3), 0.6);
        const Eigen::Index nv = t.num_vertices();
        const Eigen::Index ne = static_cast<Eigen::Index>(t.edges().size());
        const Eigen::Index nf = static_cast<Eigen::Index>(t.faces().size());

        OperatorMatrix gb = gauss_bonnet(t);
        Eigen::MatrixXd t2 = gb.dense() * gb.dense();

        Eigen::MatrixXd block = Eigen::MatrixXd::Zero(nv + ne + nf, nv + ne + nf);
        block.topLeftCorner(nv, nv) = laplacian(t, LaplacianKind::L0).dense();
        block.block(nv, nv, ne, ne) = laplacian(t, LaplacianKind::L1).dense();
        block.bottomRightCorner(nf, nf) = laplacian(t, LaplacianKind::L2).dense();
        CHECK((t2 - block).cwiseAbs().maxCoeff() < 1e-12);

        // Self-adjoint for the direct-sum inner product.
        Eigen::VectorXd u = random_vector(rng, nv + ne + nf);
        Eigen::VectorXd v = random_vector(rng, nv + ne + nf);
        double lhs = weighted_ip(gb.domain_weights, gb.apply(u), v);
        double rhs = weighted_ip(gb.domain_weights, u, gb.apply(v));
        CHECK(std::abs(lhs - rhs) <= 1e-11 * (1.0 + std::abs(lhs)));
    }

    // Dirac-type supersymmetry: the spectrum is symmetric about zero.
    OperatorMatrix gb = gauss_bonnet(single_triangle());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(symmetrized(gb), Eigen::EigenvaluesOnly);
    Eigen::VectorXd ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        CHECK(std::abs(ev(i) + ev(ev.size() - 1 - i)) < 1e-9);
}

TEST_CASE("operator dump")
{
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "simplex_spectra_ops_test";
    fs::remove_all(dir);
    dump_operators(t4_three_faces(), dir.string());

    for (const char* name : {"d0", "delta0", "d1", "delta1", "L0", "L1minus", "L1plus", "L1", "L2",
                             "gauss_bonnet"})
        CHECK(fs::exists(dir / (std::string(name) + ".mtx")));

    std::ifstream mm(dir / "d0.mtx");
    std::string header;
    std::getline(mm, header);
    CHECK(header == "%%MatrixMarket matrix coordinate real general");
    int rows = 0, cols = 0, nnz = 0;
    mm >> rows >> cols >> nnz;
    CHECK(rows == 6);
    CHECK(cols == 4);
    CHECK(nnz == 12);

    std::ifstream mf(dir / "manifest.json");
    nlohmann::json manifest = nlohmann::json::parse(mf);
    CHECK(manifest["vertices"] == 4);
    CHECK(manifest["edge_basis"].size() == 6);
    CHECK(manifest["face_basis"].size() == 3);
    fs::remove_all(dir);
}
