#pragma once

#include <Eigen/Core>

#include "simplex_spectra/complex.hpp"

namespace simplex_spectra {

/// A function on vertices. values is indexed by vertex id.
struct Cochain0 {
    Eigen::VectorXd values;
};

/// A 1-form on oriented edges, stored on the canonical representatives;
/// evaluation at a reversed edge negates.
struct Cochain1 {
    Eigen::VectorXd values;
};

/// A 2-form on oriented faces, stored on the canonical representatives;
/// evaluation at the opposite orientation negates.
struct Cochain2 {
    Eigen::VectorXd values;
};

Cochain0 zero_cochain0(const Triangulation& t);
Cochain1 zero_cochain1(const Triangulation& t);
Cochain2 zero_cochain2(const Triangulation& t);

/// chi^e = 1_{e} - 1_{-e} for the oriented edge (u,v).
Cochain1 edge_indicator(const Triangulation& t, int u, int v);

/// Signed evaluation at an oriented edge / oriented face.
double value_at(const Triangulation& t, const Cochain1& phi, int u, int v);
double value_at(const Triangulation& t, const Cochain2& phi, int p, int q, int r);

// Weighted inner products. Sums run over canonical representatives with
// full weight, which matches the oriented-pair sums with their 1/2 factor.
double ip_V(const Triangulation& t, const Cochain0& f, const Cochain0& g);
double ip_E(const Triangulation& t, const Cochain1& phi, const Cochain1& psi);
double ip_F(const Triangulation& t, const Cochain2& phi, const Cochain2& theta);

double norm_V(const Triangulation& t, const Cochain0& f);
double norm_E(const Triangulation& t, const Cochain1& phi);
double norm_F(const Triangulation& t, const Cochain2& phi);

/// d0(f)(e) = f(head) - f(tail).
Cochain1 d0(const Triangulation& t, const Cochain0& f);

/// delta0(phi)(x) = (1/c(x)) * sum over edges ending at x of r(e) phi(e).
Cochain0 delta0(const Triangulation& t, const Cochain1& phi);

/// d1(phi)(a,b,c) = phi(a,b) + phi(b,c) + phi(c,a).
Cochain2 d1(const Triangulation& t, const Cochain1& phi);

/// delta1(phi)(e) = (1/r(e)) * sum over x in F_e of s(e,x) phi(e,x).
Cochain1 delta1(const Triangulation& t, const Cochain2& phi);

} // namespace simplex_spectra
