#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "simplex_spectra/cochain.hpp"
#include "test_support.hpp"

using namespace simplex_spectra;
using test_support::make;
using test_support::random_vector;
using test_support::single_triangle;
using test_support::throws_code;

TEST_CASE("inner products")
{
    Triangulation tri = single_triangle();
    Cochain1 phi = zero_cochain1(tri);
    phi.values(tri.edge_index(0, 1)) = 1.0;
    CHECK(ip_E(tri, phi, phi) == doctest::Approx(1.0));

    // chi^e / sqrt(r(e)) has norm one for any edge weight.
    std::vector<EdgeSpec> es = {{0, 1, 2.0}, {1, 2, 0.5}, {0, 2, 3.0}};
    Triangulation w = build(3, es, {});
    for (const Edge& e : w.edges()) {
        Cochain1 chi = edge_indicator(w, e.tail, e.head);
        double r = w.edge_weights()(w.edge_index(e.tail, e.head));
        chi.values /= std::sqrt(r);
        CHECK(norm_E(w, chi) == doctest::Approx(1.0).epsilon(1e-14));
    }

    for (int n : {3, 4, 6}) {
        Triangulation kn = complete_triangulation(n);
        Cochain0 ones{Eigen::VectorXd::Ones(n)};
        CHECK(ip_V(kn, ones, ones) == doctest::Approx(double(n)));
    }

    Cochain0 bad{Eigen::VectorXd::Zero(5)};
    CHECK(throws_code(ErrorCode::DimensionMismatch, [&] { ip_V(tri, bad, bad); }));
}

TEST_CASE("d0 on worked examples")
{
    Triangulation tri = single_triangle();
    Cochain0 f = zero_cochain0(tri);
    f.values(0) = 1.0;
    Cochain1 df = d0(tri, f);
    CHECK(df.values(tri.edge_index(0, 1)) == -1.0);
    CHECK(df.values(tri.edge_index(0, 2)) == -1.0);
    CHECK(df.values(tri.edge_index(1, 2)) == 0.0);
    CHECK(value_at(tri, df, 2, 0) == 1.0); // reversed orientation negates

    Cochain0 constant{Eigen::VectorXd::Constant(3, 4.2)};
    CHECK(d0(tri, constant).values.norm() == 0.0);

    Triangulation k4 = complete_triangulation(4);
    Cochain0 ramp{Eigen::VectorXd::LinSpaced(4, 0.0, 3.0)};
    Cochain1 dramp = d0(k4, ramp);
    for (const Edge& e : k4.edges())
        CHECK(value_at(k4, dramp, e.tail, e.head) == doctest::Approx(double(e.head - e.tail)));
}

TEST_CASE("delta0 on worked examples")
{
    Triangulation tri = single_triangle();
    Cochain0 f = zero_cochain0(tri);
    f.values(0) = 1.0;
    Cochain0 l0f = delta0(tri, d0(tri, f));
    CHECK(l0f.values(0) == doctest::Approx(2.0));
    CHECK(l0f.values(1) == doctest::Approx(-1.0));
    CHECK(l0f.values(2) == doctest::Approx(-1.0));

    // delta0 chi^e = (r(e)/c(x)) (1_{x=head} - 1_{x=tail}).
    std::vector<EdgeSpec> es = {{0, 1, 2.0}, {1, 2, 1.0}, {0, 2, 1.0}};
    std::vector<double> vw = {3.0, 5.0, 7.0};
    Triangulation w = build(3, es, {}, vw);
    Cochain0 dchi = delta0(w, edge_indicator(w, 0, 1));
    CHECK(dchi.values(0) == doctest::Approx(-2.0 / 3.0));
    CHECK(dchi.values(1) == doctest::Approx(2.0 / 5.0));
    CHECK(dchi.values(2) == doctest::Approx(0.0));

    CHECK(delta0(tri, zero_cochain1(tri)).values.norm() == 0.0);
}

TEST_CASE("d1 on worked examples")
{
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 10; ++iter) {
        Triangulation t = test_support::random_weighted(rng, 5 + int(rng() % 3), 0.7);
        Cochain0 f{random_vector(rng, t.num_vertices())};
        Cochain2 dd = d1(t, d0(t, f));
        CHECK(dd.values.norm() == 0.0); // telescoping sum cancels exactly
    }

    Triangulation tri = single_triangle();
    Cochain1 phi = zero_cochain1(tri);
    phi.values(tri.edge_index(0, 1)) = 1.0;
    CHECK(d1(tri, phi).values(0) == doctest::Approx(1.0));

    // ||d1 chi^e||^2 counts the faces at e.
    Triangulation t4 = t4_three_faces();
    for (const Edge& e : t4.edges()) {
        Cochain2 dchi = d1(t4, edge_indicator(t4, e.tail, e.head));
        double expected = double(t4.face_neighbors(e.tail, e.head).size());
        CHECK(ip_F(t4, dchi, dchi) == doctest::Approx(expected));
    }
}

TEST_CASE("delta1 on worked examples")
{
    Triangulation tri = single_triangle();
    Cochain2 phi = zero_cochain2(tri);
    phi.values(0) = 1.0;
    Cochain1 dphi = delta1(tri, phi);
    CHECK(value_at(tri, dphi, 0, 1) == doctest::Approx(1.0));
    CHECK(value_at(tri, dphi, 1, 2) == doctest::Approx(1.0));
    CHECK(value_at(tri, dphi, 2, 0) == doctest::Approx(1.0));

    CHECK(delta1(tri, zero_cochain2(tri)).values.norm() == 0.0);
}

TEST_CASE("adjointness of both operator pairs")
{
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 20; ++iter) {
        Triangulation t = iter % 2 == 0 ? t5_upper()
                                        : test_support::random_weighted(rng, 4 + int(rng() % 4), 0.6);
        Eigen::Index ne = static_cast<Eigen::Index>(t.edges().size());
        Eigen::Index nf = static_cast<Eigen::Index>(t.faces().size());

        Cochain0 f{random_vector(rng, t.num_vertices())};
        Cochain1 phi{random_vector(rng, ne)};
        double lhs0 = ip_E(t, d0(t, f), phi);
        double rhs0 = ip_V(t, f, delta0(t, phi));
        CHECK(std::abs(lhs0 - rhs0) <=
              1e-12 * (1.0 + norm_V(t, f) * norm_E(t, phi)));

        Cochain2 theta{random_vector(rng, nf)};
        double lhs1 = ip_F(t, d1(t, phi), theta);
        double rhs1 = ip_E(t, phi, delta1(t, theta));
        CHECK(std::abs(lhs1 - rhs1) <=
              1e-12 * (1.0 + norm_E(t, phi) * norm_F(t, theta)));
    }
}
