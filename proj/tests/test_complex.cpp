#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "simplex_spectra/graph.hpp"
#include "simplex_spectra/json_io.hpp"
#include "test_support.hpp"

using namespace simplex_spectra;
using test_support::make;
using test_support::throws_code;

TEST_CASE("build canonicalizes edges and faces")
{
    Triangulation t = t4_three_faces();
    Counts c = t.counts();
    CHECK(c.vertices == 4);
    CHECK(c.edges == 6);
    CHECK(c.faces == 3);
    CHECK(t.is_complete_graph());
    CHECK_FALSE(t.is_complete_triangulation());
    CHECK(std::is_sorted(t.edges().begin(), t.edges().end()));
    for (const Edge& e : t.edges()) CHECK(e.tail < e.head);
    for (const Face& f : t.faces()) {
        CHECK(f.a < f.b);
        CHECK(f.a < f.c);
    }

    // Reversed input orientation is preserved through canonical rotation.
    Triangulation s = make(3, {{0, 1}, {1, 2}, {0, 2}}, {{{2, 1, 0}}});
    CHECK(s.faces()[0] == Face{0, 2, 1});
}

TEST_CASE("complete triangulations")
{
    Triangulation t3 = complete_triangulation(3);
    CHECK(t3.counts().edges == 3);
    CHECK(t3.counts().faces == 1);
    CHECK(t3.is_complete_triangulation());
    CHECK(t3.is_complete_graph());

    Triangulation t4 = complete_triangulation(4);
    CHECK(t4.counts().edges == 6);
    CHECK(t4.counts().faces == 4);
    CHECK(t4.is_complete_triangulation());

    Triangulation t5 = complete_triangulation(5);
    CHECK(t5.counts().edges == 10);
    CHECK(t5.counts().faces == 10);

    CHECK(throws_code(ErrorCode::InvalidInput, [] { complete_triangulation(2); }));
}

TEST_CASE("build rejects malformed complexes")
{
    CHECK(throws_code(ErrorCode::LoopEdge, [] { make(3, {{0, 0}, {1, 2}, {0, 2}}, {}); }));
    CHECK(throws_code(ErrorCode::DuplicateFace, [] {
        make(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}, {{{0, 1, 2}, {1, 0, 2}}});
    }));
    CHECK(throws_code(ErrorCode::DuplicateFace, [] {
        make(3, {{0, 1}, {1, 2}, {0, 2}}, {{{0, 1, 2}, {1, 2, 0}}});
    }));
    CHECK(throws_code(ErrorCode::MissingBoundaryEdge,
                      [] { make(3, {{0, 1}, {1, 2}}, {{{0, 1, 2}}}); }));
    CHECK(throws_code(ErrorCode::Disconnected, [] { make(4, {{0, 1}, {2, 3}}, {}); }));
    CHECK(throws_code(ErrorCode::UnknownVertex, [] { make(3, {{0, 1}, {1, 5}}, {}); }));
    CHECK(throws_code(ErrorCode::InvalidInput, [] { make(3, {{0, 1}, {1, 2}, {0, 2}, {1, 0}}, {}); }));
    CHECK(throws_code(ErrorCode::InvalidInput, [] {
        make(3, {{0, 1}, {1, 2}, {0, 2}}, {{{0, 1, 1}}});
    }));

    CHECK(throws_code(ErrorCode::NonpositiveWeight, [] {
        std::vector<EdgeSpec> es = {{0, 1, -1.0}, {1, 2, 1.0}, {0, 2, 1.0}};
        build(3, es, {});
    }));
    CHECK(throws_code(ErrorCode::NonpositiveWeight, [] {
        std::vector<EdgeSpec> es = {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}};
        std::vector<FaceSpec> fs = {{0, 1, 2, 0.0}};
        build(3, es, fs);
    }));
    CHECK(throws_code(ErrorCode::NonpositiveWeight, [] {
        std::vector<EdgeSpec> es = {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}};
        std::vector<double> vw = {1.0, -2.0, 1.0};
        build(3, es, {}, vw);
    }));
}

TEST_CASE("face neighbors")
{
    Triangulation t = t4_three_faces(); // faces (0,1,2),(0,1,3),(0,2,3)
    CHECK(t.face_neighbors(1, 2) == std::vector<int>{0});
    CHECK(t.face_neighbors(0, 1) == std::vector<int>{2, 3});
    CHECK(t.face_neighbors(2, 1) == t.face_neighbors(1, 2)); // orientation-insensitive

    Triangulation k5 = complete_triangulation(5);
    for (const Edge& e : k5.edges())
        CHECK(k5.face_neighbors(e.tail, e.head).size() == 3);

    CHECK(throws_code(ErrorCode::UnknownEdge, [&] { t4_three_faces().face_neighbors(0, 0); }));
}

TEST_CASE("edge face degree")
{
    CHECK(t4_three_faces().edge_face_degree(0, 1) == doctest::Approx(2.0));
    CHECK(test_support::single_triangle().edge_face_degree(0, 1) == doctest::Approx(1.0));

    // r(e) = 2, s = 6 on a single triangle: degree 6/2 = 3.
    std::vector<EdgeSpec> es = {{0, 1, 2.0}, {1, 2, 2.0}, {0, 2, 2.0}};
    std::vector<FaceSpec> fs = {{0, 1, 2, 6.0}};
    Triangulation w = build(3, es, fs);
    CHECK(w.edge_face_degree(0, 1) == doctest::Approx(3.0));
}

TEST_CASE("link graphs")
{
    // t5_lower: the link of vertex 0 is the 4-cycle 1-2-3-4.
    Triangulation t5l = t5_lower();
    LinkGraph lg = t5l.link_graph(0);
    CHECK(lg.vertices == std::vector<int>{1, 2, 3, 4});
    std::set<Edge> expect = {{1, 2}, {2, 3}, {3, 4}, {1, 4}};
    CHECK(std::set<Edge>(lg.edges.begin(), lg.edges.end()) == expect);
    Graph g = lg.to_graph();
    CHECK(g.connected());
    CHECK(lambda1(g) == doctest::Approx(2.0).epsilon(1e-12));

    // t6: every link is a 5-cycle.
    Triangulation t6 = t6_ten_faces();
    for (int x = 0; x < 6; ++x) {
        Graph link = t6.link_graph(x).to_graph();
        CHECK(link.n == 5);
        CHECK(link.edges.size() == 5);
        CHECK(link.connected());
        auto adj = link.adjacency();
        for (const auto& row : adj) CHECK(row.size() == 2);
    }

    LinkGraph tri = test_support::single_triangle().link_graph(0);
    CHECK(tri.vertices == std::vector<int>{1, 2});
    CHECK(tri.edges == std::vector<Edge>{{1, 2}});

    CHECK(throws_code(ErrorCode::UnknownVertex, [] { t5_lower().link_graph(9); }));
}

TEST_CASE("structural invariants over a random corpus")
{
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 4 + static_cast<int>(rng() % 4);
        Triangulation t = iter % 2 == 0 ? test_support::random_face_subset(rng, n, 0.6)
                                        : test_support::random_weighted(rng, n, 0.6);

        // Rebuilding from the complex's own representation is the identity.
        std::vector<EdgeSpec> es;
        for (std::size_t i = 0; i < t.edges().size(); ++i)
            es.push_back({t.edges()[i].tail, t.edges()[i].head,
                          t.edge_weights()(static_cast<Eigen::Index>(i))});
        std::vector<FaceSpec> fs;
        for (std::size_t i = 0; i < t.faces().size(); ++i)
            fs.push_back({t.faces()[i].a, t.faces()[i].b, t.faces()[i].c,
                          t.face_weights()(static_cast<Eigen::Index>(i))});
        std::vector<double> vw(t.vertex_weights().begin(), t.vertex_weights().end());
        Triangulation r = build(t.num_vertices(), es, fs, vw);
        CHECK(r.edges() == t.edges());
        CHECK(r.faces() == t.faces());
        CHECK((r.vertex_weights() - t.vertex_weights()).norm() == 0.0);
        CHECK((r.edge_weights() - t.edge_weights()).norm() == 0.0);
        CHECK((r.face_weights() - t.face_weights()).norm() == 0.0);

        // Every face shows up in the face-neighbor sets of its edges.
        for (const Face& f : t.faces()) {
            auto fn_ab = t.face_neighbors(f.a, f.b);
            CHECK(std::count(fn_ab.begin(), fn_ab.end(), f.c) == 1);
            auto fn_bc = t.face_neighbors(f.b, f.c);
            CHECK(std::count(fn_bc.begin(), fn_bc.end(), f.a) == 1);
            auto fn_ca = t.face_neighbors(f.c, f.a);
            CHECK(std::count(fn_ca.begin(), fn_ca.end(), f.b) == 1);
        }

        // Total face-edge incidence.
        std::size_t incidences = 0;
        for (std::size_t e = 0; e < t.edges().size(); ++e)
            incidences += t.faces_at_edge(static_cast<int>(e)).size();
        CHECK(incidences == 3 * t.faces().size());

        // Link edge count equals the number of faces containing the vertex.
        for (int x = 0; x < t.num_vertices(); ++x) {
            std::size_t containing = 0;
            for (const Face& f : t.faces())
                if (f.a == x || f.b == x || f.c == x) ++containing;
            CHECK(t.link_graph(x).edges.size() == containing);
        }
    }

    // Complete triangulation: the link of every vertex covers all others.
    Triangulation k6 = complete_triangulation(6);
    for (int x = 0; x < 6; ++x) {
        LinkGraph lg = k6.link_graph(x);
        CHECK(lg.vertices.size() == 5);
        CHECK(std::find(lg.vertices.begin(), lg.vertices.end(), x) == lg.vertices.end());
    }
}

TEST_CASE("json load and round trip")
{
    nlohmann::json compact = {
        {"vertices", 4},
        {"edges", {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
        {"faces", {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}},
    };
    Triangulation t = load_complex(compact);
    CHECK(t.counts().faces == 3);
    CHECK(t.is_homogeneous());

    nlohmann::json one_indexed = {
        {"vertices", 4},
        {"complete_graph", true},
        {"faces", {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}},
        {"indexing", "one"},
    };
    Triangulation u = load_complex(one_indexed);
    CHECK(u.edges() == t.edges());
    CHECK(u.faces() == t.faces());

    nlohmann::json weighted = {
        {"vertices", {{{"id", 0}, {"weight", 2.0}}, {{"id", 1}}, {{"id", 2}, {"weight", 0.5}}}},
        {"edges",
         {{{"u", 0}, {"v", 1}, {"weight", 3.0}}, {{"u", 1}, {"v", 2}}, {{"u", 0}, {"v", 2}}}},
        {"faces", {{{"v", {0, 1, 2}}, {"weight", 7.0}}}},
    };
    Triangulation w = load_complex(weighted);
    CHECK(w.vertex_weights()(0) == 2.0);
    CHECK(w.vertex_weights()(1) == 1.0);
    CHECK(w.edge_weights()(w.edge_index(0, 1)) == 3.0);
    CHECK(w.face_weights()(0) == 7.0);
    CHECK_FALSE(w.is_homogeneous());

    for (const Triangulation& original : {t, w, t6_ten_faces()}) {
        Triangulation back = load_complex(complex_to_json(original));
        CHECK(back.edges() == original.edges());
        CHECK(back.faces() == original.faces());
        CHECK(back.vertex_weights() == original.vertex_weights());
        CHECK(back.edge_weights() == original.edge_weights());
        CHECK(back.face_weights() == original.face_weights());
    }
}

TEST_CASE("json errors")
{
    CHECK(throws_code(ErrorCode::InvalidInput, [] { load_complex(nlohmann::json::array()); }));
    CHECK(throws_code(ErrorCode::InvalidInput, [] {
        load_complex({{"vertices", 3}, {"edges", {{0, 1}}}, {"indexing", "two"}});
    }));
    CHECK(throws_code(ErrorCode::InvalidInput, [] { load_complex({{"vertices", 3}}); }));
    CHECK(throws_code(ErrorCode::InvalidInput, [] {
        load_complex({{"vertices", 3}, {"complete_graph", true}, {"edges", {{0, 1}}}});
    }));
    CHECK(throws_code(ErrorCode::NonpositiveWeight, [] {
        load_complex({{"vertices", 3},
                      {"edges", {{{"u", 0}, {"v", 1}, {"weight", -2.0}}, {{"u", 1}, {"v", 2}},
                                 {{"u", 0}, {"v", 2}}}}});
    }));
}

TEST_CASE("graph utilities")
{
    Graph c4 = Graph::cycle(4);
    CHECK(lambda1(c4) == doctest::Approx(2.0).epsilon(1e-12));
    Graph p3 = Graph::path(3);
    CHECK(lambda1(p3) == doctest::Approx(1.0).epsilon(1e-12));
    Graph k4 = Graph::complete(4);
    CHECK(lambda1(k4) == doctest::Approx(4.0).epsilon(1e-12));

    Graph two = Graph::from_edges(2, {});
    CHECK_FALSE(two.connected());
    CHECK(lambda1(two) == doctest::Approx(0.0));

    CHECK(throws_code(ErrorCode::InvalidInput, [] { lambda1(Graph::from_edges(1, {})); }));
    CHECK(throws_code(ErrorCode::LoopEdge, [] {
        std::vector<std::pair<int, int>> es = {{0, 0}};
        Graph::from_edges(2, es);
    }));
}
