#include "simplex_spectra/cochain.hpp"

namespace simplex_spectra {

namespace {

void check_dim(Eigen::Index got, Eigen::Index want, const char* what)
{
    if (got != want)
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(what) + ": got " + std::to_string(got) + ", expected " +
                        std::to_string(want));
}

} // namespace

Cochain0 zero_cochain0(const Triangulation& t)
{
    return {Eigen::VectorXd::Zero(t.num_vertices())};
}

Cochain1 zero_cochain1(const Triangulation& t)
{
    return {Eigen::VectorXd::Zero(static_cast<Eigen::Index>(t.edges().size()))};
}

Cochain2 zero_cochain2(const Triangulation& t)
{
    return {Eigen::VectorXd::Zero(static_cast<Eigen::Index>(t.faces().size()))};
}

Cochain1 edge_indicator(const Triangulation& t, int u, int v)
{
    Cochain1 chi = zero_cochain1(t);
    chi.values(t.edge_index(u, v)) = (u < v) ? 1.0 : -1.0;
    return chi;
}

double value_at(const Triangulation& t, const Cochain1& phi, int u, int v)
{
    int e = t.edge_index(u, v);
    return (u < v ? 1.0 : -1.0) * phi.values(e);
}

double value_at(const Triangulation& t, const Cochain2& phi, int p, int q, int r)
{
    auto hit = t.find_face(p, q, r);
    if (!hit)
        throw Error(ErrorCode::InvalidInput, "no face on vertices (" + std::to_string(p) + "," +
                                                 std::to_string(q) + "," + std::to_string(r) + ")");
    return hit->second * phi.values(hit->first);
}

double ip_V(const Triangulation& t, const Cochain0& f, const Cochain0& g)
{
    check_dim(f.values.size(), t.num_vertices(), "ip_V lhs");
    check_dim(g.values.size(), t.num_vertices(), "ip_V rhs");
    return (t.vertex_weights().array() * f.values.array() * g.values.array()).sum();
}

double ip_E(const Triangulation& t, const Cochain1& phi, const Cochain1& psi)
{
    Eigen::Index m = static_cast<Eigen::Index>(t.edges().size());
    check_dim(phi.values.size(), m, "ip_E lhs");
    check_dim(psi.values.size(), m, "ip_E rhs");
    return (t.edge_weights().array() * phi.values.array() * psi.values.array()).sum();
}

double ip_F(const Triangulation& t, const Cochain2& phi, const Cochain2& theta)
{
    Eigen::Index m = static_cast<Eigen::Index>(t.faces().size());
    check_dim(phi.values.size(), m, "ip_F lhs");
    check_dim(theta.values.size(), m, "ip_F rhs");
    return (t.face_weights().array() * phi.values.array() * theta.values.array()).sum();
}

double norm_V(const Triangulation& t, const Cochain0& f) { return std::sqrt(ip_V(t, f, f)); }
double norm_E(const Triangulation& t, const Cochain1& phi) { return std::sqrt(ip_E(t, phi, phi)); }
double norm_F(const Triangulation& t, const Cochain2& phi) { return std::sqrt(ip_F(t, phi, phi)); }

Cochain1 d0(const Triangulation& t, const Cochain0& f)
{
    check_dim(f.values.size(), t.num_vertices(), "d0 input");
    Cochain1 out = zero_cochain1(t);
    const auto& edges = t.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        out.values(static_cast<Eigen::Index>(i)) = f.values(edges[i].head) - f.values(edges[i].tail);
    return out;
}

Cochain0 delta0(const Triangulation& t, const Cochain1& phi)
{
    check_dim(phi.values.size(), static_cast<Eigen::Index>(t.edges().size()), "delta0 input");
    Cochain0 out = zero_cochain0(t);
    for (int x = 0; x < t.num_vertices(); ++x) {
        double acc = 0.0;
        for (int y : t.neighbors(x)) {
            // The oriented edge (y,x) ends at x.
            int e = t.edge_index(y, x);
            double sign = (y < x) ? 1.0 : -1.0;
            acc += t.edge_weights()(e) * sign * phi.values(e);
        }
        out.values(x) = acc / t.vertex_weights()(x);
    }
    return out;
}

Cochain2 d1(const Triangulation& t, const Cochain1& phi)
{
    check_dim(phi.values.size(), static_cast<Eigen::Index>(t.edges().size()), "d1 input");
    Cochain2 out = zero_cochain2(t);
    for (std::size_t fi = 0; fi < t.faces().size(); ++fi) {
        double acc = 0.0;
        for (const auto& [e, sign] : t.boundary_edges(static_cast<int>(fi)))
            acc += sign * phi.values(e);
        out.values(static_cast<Eigen::Index>(fi)) = acc;
    }
    return out;
}

Cochain1 delta1(const Triangulation& t, const Cochain2& phi)
{
    check_dim(phi.values.size(), static_cast<Eigen::Index>(t.faces().size()), "delta1 input");
    Cochain1 out = zero_cochain1(t);
    for (std::size_t e = 0; e < t.edges().size(); ++e) {
        double acc = 0.0;
        for (const FaceAtEdge& fe : t.faces_at_edge(static_cast<int>(e)))
            acc += t.face_weights()(fe.face) * fe.sign * phi.values(fe.face);
        out.values(static_cast<Eigen::Index>(e)) = acc / t.edge_weights()(static_cast<Eigen::Index>(e));
    }
    return out;
}

} // namespace simplex_spectra
