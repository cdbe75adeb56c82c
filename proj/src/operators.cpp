#include "simplex_spectra/operators.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <vector>

#include <json.hpp>

namespace simplex_spectra {

namespace {

Eigen::VectorXd space_weights(const Triangulation& t, SpaceTag space)
{
    switch (space) {
        case SpaceTag::Vertices: return t.vertex_weights();
        case SpaceTag::Edges: return t.edge_weights();
        case SpaceTag::Faces: return t.face_weights();
        case SpaceTag::DirectSum: {
            Eigen::VectorXd w(t.num_vertices() + static_cast<Eigen::Index>(t.edges().size()) +
                              static_cast<Eigen::Index>(t.faces().size()));
            w << t.vertex_weights(), t.edge_weights(), t.face_weights();
            return w;
        }
    }
    throw Error(ErrorCode::InvalidInput, "bad space tag");
}

using Triplet = Eigen::Triplet<double>;

std::vector<Triplet> d0_triplets(const Triangulation& t)
{
    std::vector<Triplet> out;
    out.reserve(t.edges().size() * 2);
    for (std::size_t i = 0; i < t.edges().size(); ++i) {
        const Edge& e = t.edges()[i];
        out.emplace_back(static_cast<int>(i), e.tail, -1.0);
        out.emplace_back(static_cast<int>(i), e.head, 1.0);
    }
    return out;
}

std::vector<Triplet> delta0_triplets(const Triangulation& t)
{
    std::vector<Triplet> out;
    out.reserve(t.edges().size() * 2);
    for (std::size_t i = 0; i < t.edges().size(); ++i) {
        const Edge& e = t.edges()[i];
        double r = t.edge_weights()(static_cast<Eigen::Index>(i));
        out.emplace_back(e.tail, static_cast<int>(i), -r / t.vertex_weights()(e.tail));
        out.emplace_back(e.head, static_cast<int>(i), r / t.vertex_weights()(e.head));
    }
    return out;
}

std::vector<Triplet> d1_triplets(const Triangulation& t)
{
    std::vector<Triplet> out;
    out.reserve(t.faces().size() * 3);
    for (std::size_t fi = 0; fi < t.faces().size(); ++fi)
        for (const auto& [e, sign] : t.boundary_edges(static_cast<int>(fi)))
            out.emplace_back(static_cast<int>(fi), e, static_cast<double>(sign));
    return out;
}

std::vector<Triplet> delta1_triplets(const Triangulation& t)
{
    std::vector<Triplet> out;
    out.reserve(t.faces().size() * 3);
    for (std::size_t e = 0; e < t.edges().size(); ++e) {
        double r = t.edge_weights()(static_cast<Eigen::Index>(e));
        for (const FaceAtEdge& fe : t.faces_at_edge(static_cast<int>(e)))
            out.emplace_back(static_cast<int>(e), fe.face, fe.sign * t.face_weights()(fe.face) / r);
    }
    return out;
}

OperatorMatrix make_op(const Triangulation& t, SpaceTag domain, SpaceTag codomain,
                       Eigen::Index rows, Eigen::Index cols, const std::vector<Triplet>& trips)
{
    OperatorMatrix op;
    op.domain = domain;
    op.codomain = codomain;
    op.matrix.resize(rows, cols);
    op.matrix.setFromTriplets(trips.begin(), trips.end());
    op.matrix.makeCompressed();
    op.domain_weights = space_weights(t, domain);
    op.codomain_weights = space_weights(t, codomain);
    return op;
}

} // namespace

const char* laplacian_name(LaplacianKind kind)
{
    switch (kind) {
        case LaplacianKind::L0: return "L0";
        case LaplacianKind::L1Minus: return "L1minus";
        case LaplacianKind::L1Plus: return "L1plus";
        case LaplacianKind::L1: return "L1";
        case LaplacianKind::L2: return "L2";
    }
    return "?";
}

LaplacianKind laplacian_from_name(const std::string& name)
{
    if (name == "L0") return LaplacianKind::L0;
    if (name == "L1minus") return LaplacianKind::L1Minus;
    if (name == "L1plus") return LaplacianKind::L1Plus;
    if (name == "L1") return LaplacianKind::L1;
    if (name == "L2") return LaplacianKind::L2;
    throw Error(ErrorCode::InvalidInput, "unknown operator name: " + name);
}

Eigen::VectorXd OperatorMatrix::apply(const Eigen::VectorXd& x) const
{
    if (x.size() != matrix.cols())
        throw Error(ErrorCode::DimensionMismatch, "operator apply: argument has wrong length");
    return matrix * x;
}

OperatorMatrix coboundary(const Triangulation& t, CoboundaryKind kind)
{
    const Eigen::Index nv = t.num_vertices();
    const Eigen::Index ne = static_cast<Eigen::Index>(t.edges().size());
    const Eigen::Index nf = static_cast<Eigen::Index>(t.faces().size());
    switch (kind) {
        case CoboundaryKind::D0:
            return make_op(t, SpaceTag::Vertices, SpaceTag::Edges, ne, nv, d0_triplets(t));
        case CoboundaryKind::Delta0:
            return make_op(t, SpaceTag::Edges, SpaceTag::Vertices, nv, ne, delta0_triplets(t));
        case CoboundaryKind::D1:
            return make_op(t, SpaceTag::Edges, SpaceTag::Faces, nf, ne, d1_triplets(t));
        case CoboundaryKind::Delta1:
            return make_op(t, SpaceTag::Faces, SpaceTag::Edges, ne, nf, delta1_triplets(t));
    }
    throw Error(ErrorCode::InvalidInput, "bad coboundary kind");
}

OperatorMatrix laplacian(const Triangulation& t, LaplacianKind kind)
{
    OperatorMatrix op;
    switch (kind) {
        case LaplacianKind::L0: {
            op = coboundary(t, CoboundaryKind::Delta0);
            op.matrix = (op.matrix * coboundary(t, CoboundaryKind::D0).matrix).eval();
            op.domain = op.codomain = SpaceTag::Vertices;
            break;
        }
        case LaplacianKind::L1Minus: {
            op = coboundary(t, CoboundaryKind::D0);
            op.matrix = (op.matrix * coboundary(t, CoboundaryKind::Delta0).matrix).eval();
            op.domain = op.codomain = SpaceTag::Edges;
            break;
        }
        case LaplacianKind::L1Plus: {
            op = coboundary(t, CoboundaryKind::Delta1);
            op.matrix = (op.matrix * coboundary(t, CoboundaryKind::D1).matrix).eval();
            op.domain = op.codomain = SpaceTag::Edges;
            break;
        }
        case LaplacianKind::L1: {
            op = laplacian(t, LaplacianKind::L1Minus);
            op.matrix = (op.matrix + laplacian(t, LaplacianKind::L1Plus).matrix).eval();
            break;
        }
        case LaplacianKind::L2: {
            op = coboundary(t, CoboundaryKind::D1);
            op.matrix = (op.matrix * coboundary(t, CoboundaryKind::Delta1).matrix).eval();
            op.domain = op.codomain = SpaceTag::Faces;
            break;
        }
    }
    op.domain_weights = space_weights(t, op.domain);
    op.codomain_weights = op.domain_weights;
    op.matrix.makeCompressed();
    return op;
}

OperatorMatrix gauss_bonnet(const Triangulation& t)
{
    const Eigen::Index nv = t.num_vertices();
    const Eigen::Index ne = static_cast<Eigen::Index>(t.edges().size());
    const Eigen::Index nf = static_cast<Eigen::Index>(t.faces().size());
    const Eigen::Index dim = nv + ne + nf;

    std::vector<Triplet> trips;
    auto add_block = [&trips](Eigen::Index row0, Eigen::Index col0, const std::vector<Triplet>& src) {
        for (const Triplet& tr : src)
            trips.emplace_back(static_cast<int>(row0 + tr.row()), static_cast<int>(col0 + tr.col()),
                               tr.value());
    };
    add_block(nv, 0, d0_triplets(t));       // d0: V -> E
    add_block(0, nv, delta0_triplets(t));   // delta0: E -> V
    add_block(nv + ne, nv, d1_triplets(t)); // d1: E -> F
    add_block(nv, nv + ne, delta1_triplets(t)); // delta1: F -> E

    OperatorMatrix op;
    op.domain = op.codomain = SpaceTag::DirectSum;
    op.matrix.resize(dim, dim);
    op.matrix.setFromTriplets(trips.begin(), trips.end());
    op.matrix.makeCompressed();
    op.domain_weights = space_weights(t, SpaceTag::DirectSum);
    op.codomain_weights = op.domain_weights;
    return op;
}

Eigen::SparseMatrix<std::int64_t> incidence_d0(const Triangulation& t)
{
    std::vector<Eigen::Triplet<std::int64_t>> trips;
    trips.reserve(t.edges().size() * 2);
    for (std::size_t i = 0; i < t.edges().size(); ++i) {
        trips.emplace_back(static_cast<int>(i), t.edges()[i].tail, -1);
        trips.emplace_back(static_cast<int>(i), t.edges()[i].head, 1);
    }
    Eigen::SparseMatrix<std::int64_t> m(static_cast<Eigen::Index>(t.edges().size()),
                                        t.num_vertices());
    m.setFromTriplets(trips.begin(), trips.end());
    return m;
}

Eigen::SparseMatrix<std::int64_t> incidence_d1(const Triangulation& t)
{
    std::vector<Eigen::Triplet<std::int64_t>> trips;
    trips.reserve(t.faces().size() * 3);
    for (std::size_t fi = 0; fi < t.faces().size(); ++fi)
        for (const auto& [e, sign] : t.boundary_edges(static_cast<int>(fi)))
            trips.emplace_back(static_cast<int>(fi), e, sign);
    Eigen::SparseMatrix<std::int64_t> m(static_cast<Eigen::Index>(t.faces().size()),
                                        static_cast<Eigen::Index>(t.edges().size()));
    m.setFromTriplets(trips.begin(), trips.end());
    return m;
}

Eigen::MatrixXd symmetrized(const OperatorMatrix& op)
{
    if (op.rows() != op.cols())
        throw Error(ErrorCode::DimensionMismatch, "symmetrized needs a square operator");
    Eigen::VectorXd sqrt_w = op.domain_weights.array().sqrt();
    Eigen::MatrixXd dense = op.dense();
    Eigen::MatrixXd s =
        sqrt_w.asDiagonal() * dense * sqrt_w.cwiseInverse().asDiagonal();
    return 0.5 * (s + s.transpose());
}

void write_matrix_market(std::ostream& os, const Eigen::SparseMatrix<double>& m)
{
    os << "%%MatrixMarket matrix coordinate real general\n";
    os << m.rows() << " " << m.cols() << " " << m.nonZeros() << "\n";
    char buf[64];
    for (int k = 0; k < m.outerSize(); ++k)
        for (Eigen::SparseMatrix<double>::InnerIterator it(m, k); it; ++it) {
            std::snprintf(buf, sizeof(buf), "%.17g", it.value());
            os << (it.row() + 1) << " " << (it.col() + 1) << " " << buf << "\n";
        }
}

void dump_operators(const Triangulation& t, const std::string& directory)
{
    namespace fs = std::filesystem;
    fs::create_directories(directory);

    auto write = [&directory](const std::string& name, const Eigen::SparseMatrix<double>& m) {
        std::ofstream os(fs::path(directory) / (name + ".mtx"));
        if (!os) throw Error(ErrorCode::InvalidInput, "cannot write operator file for " + name);
        write_matrix_market(os, m);
    };

    write("d0", coboundary(t, CoboundaryKind::D0).matrix);
    write("delta0", coboundary(t, CoboundaryKind::Delta0).matrix);
    write("d1", coboundary(t, CoboundaryKind::D1).matrix);
    write("delta1", coboundary(t, CoboundaryKind::Delta1).matrix);
    for (LaplacianKind kind : {LaplacianKind::L0, LaplacianKind::L1Minus, LaplacianKind::L1Plus,
                               LaplacianKind::L1, LaplacianKind::L2})
        write(laplacian_name(kind), laplacian(t, kind).matrix);
    write("gauss_bonnet", gauss_bonnet(t).matrix);

    nlohmann::ordered_json manifest;
    manifest["vertices"] = t.num_vertices();
    auto& eb = manifest["edge_basis"] = nlohmann::ordered_json::array();
    for (const Edge& e : t.edges()) eb.push_back({e.tail, e.head});
    auto& fb = manifest["face_basis"] = nlohmann::ordered_json::array();
    for (const Face& f : t.faces()) fb.push_back({f.a, f.b, f.c});
    manifest["weights"]["vertex"] =
        std::vector<double>(t.vertex_weights().begin(), t.vertex_weights().end());
    manifest["weights"]["edge"] =
        std::vector<double>(t.edge_weights().begin(), t.edge_weights().end());
    manifest["weights"]["face"] =
        std::vector<double>(t.face_weights().begin(), t.face_weights().end());
    manifest["direct_sum_order"] = {"vertices", "edges", "faces"};

    std::ofstream os(fs::path(directory) / "manifest.json");
    if (!os) throw Error(ErrorCode::InvalidInput, "cannot write manifest.json");
    os << manifest.dump(2) << "\n";
}

} // namespace simplex_spectra
