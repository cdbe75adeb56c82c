#include "simplex_spectra/json_io.hpp"

#include <fstream>
#include <istream>
#include <vector>

namespace simplex_spectra {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what)
{
    throw Error(ErrorCode::InvalidInput, "complex JSON: " + what);
}

int as_int(const json& j, const char* where)
{
    if (!j.is_number_integer()) bad(std::string(where) + " must be an integer");
    return j.get<int>();
}

} // namespace

Triangulation load_complex(const json& doc)
{
    if (!doc.is_object()) bad("top level must be an object");

    int shift = 0;
    if (doc.contains("indexing")) {
        std::string idx = doc.at("indexing").get<std::string>();
        if (idx == "one")
            shift = -1;
        else if (idx != "zero")
            bad("indexing must be \"zero\" or \"one\"");
    }

    int n = 0;
    std::vector<double> vertex_weights;
    const json& jv = doc.contains("vertices") ? doc.at("vertices") : json();
    if (jv.is_number_integer()) {
        n = jv.get<int>();
    } else if (jv.is_array()) {
        n = static_cast<int>(jv.size());
        vertex_weights.assign(static_cast<std::size_t>(n), 1.0);
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (const json& item : jv) {
            if (!item.is_object() || !item.contains("id")) bad("vertex entries need an \"id\"");
            int id = as_int(item.at("id"), "vertex id") + shift;
            if (id < 0 || id >= n) bad("vertex ids must be dense in range");
            if (seen[static_cast<std::size_t>(id)]) bad("vertex id repeated");
            seen[static_cast<std::size_t>(id)] = 1;
            if (item.contains("weight"))
                vertex_weights[static_cast<std::size_t>(id)] = item.at("weight").get<double>();
        }
    } else {
        bad("\"vertices\" must be a count or a list of {id, weight}");
    }

    bool complete = doc.contains("complete_graph") && doc.at("complete_graph").get<bool>();
    std::vector<EdgeSpec> edges;
    if (complete) {
        if (doc.contains("edges") && !doc.at("edges").empty())
            bad("\"edges\" must be omitted when \"complete_graph\" is set");
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
    } else {
        if (!doc.contains("edges")) bad("missing \"edges\" (or set \"complete_graph\": true)");
        for (const json& item : doc.at("edges")) {
            EdgeSpec e;
            if (item.is_array()) {
                if (item.size() != 2) bad("edge arrays must be [u, v]");
                e.u = as_int(item[0], "edge endpoint") + shift;
                e.v = as_int(item[1], "edge endpoint") + shift;
            } else if (item.is_object()) {
                e.u = as_int(item.at("u"), "edge endpoint") + shift;
                e.v = as_int(item.at("v"), "edge endpoint") + shift;
                if (item.contains("weight")) e.weight = item.at("weight").get<double>();
            } else {
                bad("edge entries must be [u,v] or {u,v,weight}");
            }
            edges.push_back(e);
        }
    }

    std::vector<FaceSpec> faces;
    if (doc.contains("faces")) {
        for (const json& item : doc.at("faces")) {
            FaceSpec f;
            const json* verts = nullptr;
            if (item.is_array()) {
                verts = &item;
            } else if (item.is_object() && item.contains("v")) {
                verts = &item.at("v");
                if (item.contains("weight")) f.weight = item.at("weight").get<double>();
            } else {
                bad("face entries must be [a,b,c] or {v:[a,b,c], weight}");
            }
            if (!verts->is_array() || verts->size() != 3) bad("faces must have three vertices");
            f.a = as_int((*verts)[0], "face vertex") + shift;
            f.b = as_int((*verts)[1], "face vertex") + shift;
            f.c = as_int((*verts)[2], "face vertex") + shift;
            faces.push_back(f);
        }
    }

    return build(n, edges, faces, vertex_weights);
}

Triangulation load_complex_stream(std::istream& is)
{
    json doc;
    try {
        doc = json::parse(is);
    } catch (const json::parse_error& err) {
        bad(err.what());
    }
    return load_complex(doc);
}

Triangulation load_complex_file(const std::string& path)
{
    std::ifstream is(path);
    if (!is) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
    return load_complex_stream(is);
}

nlohmann::ordered_json complex_to_json(const Triangulation& t)
{
    nlohmann::ordered_json doc;
    bool homogeneous_vertices = true;
    for (int i = 0; i < t.num_vertices(); ++i)
        if (t.vertex_weights()(i) != 1.0) homogeneous_vertices = false;
    bool homogeneous_edges = true;
    for (Eigen::Index i = 0; i < t.edge_weights().size(); ++i)
        if (t.edge_weights()(i) != 1.0) homogeneous_edges = false;
    bool homogeneous_faces = true;
    for (Eigen::Index i = 0; i < t.face_weights().size(); ++i)
        if (t.face_weights()(i) != 1.0) homogeneous_faces = false;

    if (homogeneous_vertices) {
        doc["vertices"] = t.num_vertices();
    } else {
        auto& arr = doc["vertices"] = nlohmann::ordered_json::array();
        for (int i = 0; i < t.num_vertices(); ++i)
            arr.push_back({{"id", i}, {"weight", t.vertex_weights()(i)}});
    }

    if (t.is_complete_graph() && homogeneous_edges) {
        doc["complete_graph"] = true;
    } else {
        auto& arr = doc["edges"] = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < t.edges().size(); ++i) {
            const Edge& e = t.edges()[i];
            if (homogeneous_edges)
                arr.push_back({e.tail, e.head});
            else
                arr.push_back({{"u", e.tail},
                               {"v", e.head},
                               {"weight", t.edge_weights()(static_cast<Eigen::Index>(i))}});
        }
    }

    auto& farr = doc["faces"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < t.faces().size(); ++i) {
        const Face& f = t.faces()[i];
        if (homogeneous_faces)
            farr.push_back({f.a, f.b, f.c});
        else
            farr.push_back({{"v", {f.a, f.b, f.c}},
                            {"weight", t.face_weights()(static_cast<Eigen::Index>(i))}});
    }
    doc["indexing"] = "zero";
    return doc;
}

} // namespace simplex_spectra
