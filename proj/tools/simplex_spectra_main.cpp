// Command-line front end: generate or load complexes, run the spectral and
// Cheeger analyses, emit JSON/CSV/text reports, and reproduce the built-in
// worked examples. Exit codes: 0 success, 1 an asserted inequality failed
// beyond tolerance, 2 input or usage error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "simplex_spectra/builtin.hpp"
#include "simplex_spectra/cheeger.hpp"
#include "simplex_spectra/cochain.hpp"
#include "simplex_spectra/complex.hpp"
#include "simplex_spectra/json_io.hpp"
#include "simplex_spectra/operators.hpp"
#include "simplex_spectra/spectral.hpp"

namespace ss = simplex_spectra;
using nlohmann::ordered_json;

namespace {

struct CommonOpts {
    std::string input = "-";
    std::string format = "json";
    std::string output;
    std::string dump_ops;
    double zero_tol = 0.0;
    double match_tol = 1e-8;
    int cheeger_cap = 14;
    int subset_cap = 24;
    int threads = 0;
    std::uint64_t seed = 0;
};

void add_common_options(CLI::App* cmd, CommonOpts& opts, bool with_input = true)
{
    if (with_input)
        cmd->add_option("--input,-i", opts.input, "complex JSON file, or - for stdin");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--output,-o", opts.output, "write the report to a file instead of stdout");
    cmd->add_option("--zero-tol", opts.zero_tol, "threshold for treating an eigenvalue as zero");
    cmd->add_option("--match-tol", opts.match_tol, "tolerance for spectrum multiset comparison");
    cmd->add_option("--cheeger-cap", opts.cheeger_cap, "largest n for tripartition enumeration");
    cmd->add_option("--subset-cap", opts.subset_cap, "largest |V| for subset enumeration");
    cmd->add_option("--threads", opts.threads,
                    "worker threads for enumeration (0 = all; SIMPLEX_SPECTRA_THREADS overrides)");
    cmd->add_option("--seed", opts.seed, "seed for the sampling mode");
    cmd->add_option("--dump-ops", opts.dump_ops,
                    "write every operator matrix (MatrixMarket) plus a basis manifest to this directory");
}

void apply_thread_env(CommonOpts& opts)
{
    if (const char* env = std::getenv("SIMPLEX_SPECTRA_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) opts.threads = n;
    }
}

ss::Triangulation load_input(const CommonOpts& opts)
{
    ss::Triangulation t =
        opts.input == "-" ? ss::load_complex_stream(std::cin) : ss::load_complex_file(opts.input);
    if (!opts.dump_ops.empty()) ss::dump_operators(t, opts.dump_ops);
    return t;
}

void flatten(const ordered_json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out)
{
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (j.is_array()) {
        bool scalar = true;
        for (const auto& v : j)
            if (v.is_object() || v.is_array()) scalar = false;
        if (scalar) {
            out.emplace_back(prefix, j.dump());
        } else {
            int i = 0;
            for (const auto& v : j) flatten(v, prefix + "[" + std::to_string(i++) + "]", out);
        }
    } else if (j.is_string()) {
        out.emplace_back(prefix, j.get<std::string>());
    } else {
        out.emplace_back(prefix, j.dump());
    }
}

void emit(const ordered_json& doc, const CommonOpts& opts)
{
    std::ostringstream buf;
    if (opts.format == "json") {
        buf << doc.dump(2) << "\n";
    } else {
        std::vector<std::pair<std::string, std::string>> rows;
        flatten(doc, "", rows);
        for (const auto& [key, value] : rows) {
            if (opts.format == "csv")
                buf << "\"" << key << "\",\"" << value << "\"\n";
            else
                buf << key << " = " << value << "\n";
        }
    }
    if (opts.output.empty()) {
        std::cout << buf.str();
    } else {
        std::ofstream os(opts.output);
        if (!os) throw ss::Error(ss::ErrorCode::InvalidInput, "cannot write " + opts.output);
        os << buf.str();
    }
}

ordered_json partition_json(const ss::Tripartition& p)
{
    ordered_json j;
    j["parts"] = {p.parts[0], p.parts[1], p.parts[2]};
    j["face_count"] = p.face_count;
    j["ratio"] = p.ratio;
    return j;
}

ordered_json certificate_json(const ss::BoundCertificate& cert)
{
    ordered_json j;
    j["kind"] = ss::bound_kind_name(cert.kind);
    j["value"] = cert.value;
    if (cert.witness_edge)
        j["witness"] = {cert.witness_edge->tail, cert.witness_edge->head};
    else if (cert.witness_vertex)
        j["witness"] = *cert.witness_vertex;
    else if (cert.witness_partition)
        j["witness"] = partition_json(*cert.witness_partition);

    auto& table = j["per_item_table"] = ordered_json::array();
    for (const ss::BoundEdgeTerm& row : cert.per_edge) {
        ordered_json r;
        r["edge"] = {row.edge.tail, row.edge.head};
        r["term"] = row.term;
        r["face_neighbors"] = row.face_neighbors;
        if (cert.kind == ss::BoundKind::LinkLower || cert.kind == ss::BoundKind::CheegerLinkLower)
            r["lambda1"] = row.lambda1;
        if (cert.kind == ss::BoundKind::CheegerLinkLower) {
            r["link_cheeger"] = row.link_cheeger;
            r["max_link_degree"] = row.max_link_degree;
        }
        table.push_back(r);
    }

    auto& hyp = j["hypothesis_checks"] = ordered_json::object();
    for (const auto& [name, ok] : cert.hypothesis_checks) hyp[name] = ok;
    for (const auto& [name, value] : cert.details) j["details"][name] = value;
    if (cert.compared_value) j["compared"] = {{"name", cert.compared_name}, {"value", *cert.compared_value}};
    j["asserted"] = cert.asserted;
    j["satisfied"] = cert.satisfied;
    if (cert.asserted) j["margin"] = cert.margin;
    return j;
}

int run_gen_complete(int n, const CommonOpts& opts)
{
    emit(ss::complex_to_json(ss::complete_triangulation(n)), opts);
    return 0;
}

std::vector<std::array<int, 3>> parse_face_list(const std::string& text)
{
    std::vector<std::array<int, 3>> faces;
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        if (group.find_first_not_of(" \t") == std::string::npos) continue;
        std::array<int, 3> f{};
        std::stringstream parts(group);
        std::string item;
        int k = 0;
        while (std::getline(parts, item, ',')) {
            if (k >= 3)
                throw ss::Error(ss::ErrorCode::InvalidInput, "face has more than three vertices: " + group);
            try {
                f[static_cast<std::size_t>(k++)] = std::stoi(item);
            } catch (const std::exception&) {
                throw ss::Error(ss::ErrorCode::InvalidInput, "bad vertex id in face list: " + item);
            }
        }
        if (k != 3)
            throw ss::Error(ss::ErrorCode::InvalidInput, "face needs three vertices: " + group);
        faces.push_back(f);
    }
    return faces;
}

int run_gen_from_faces(int n, const std::string& face_text, const std::string& indexing,
                       const CommonOpts& opts)
{
    if (n < 3) throw ss::Error(ss::ErrorCode::InvalidInput, "complete graph generator needs n >= 3");
    auto faces = parse_face_list(face_text);
    ss::Triangulation t =
        ss::complete_graph_with_faces(n, faces, indexing == "one" ? 1 : 0);
    emit(ss::complex_to_json(t), opts);
    return 0;
}

int run_spectra(const CommonOpts& opts, const std::string& operator_name)
{
    ss::Triangulation t = load_input(opts);
    ss::LaplacianKind kind = ss::laplacian_from_name(operator_name);
    ss::SpectrumReport rep = ss::eigen_spectrum(t, kind, opts.zero_tol);

    if (opts.format == "csv" && opts.output.empty()) {
        std::cout << "index,eigenvalue\n";
        char buf[64];
        for (std::size_t i = 0; i < rep.eigenvalues.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.17g", rep.eigenvalues[i]);
            std::cout << i << "," << buf << "\n";
        }
        return 0;
    }

    ordered_json doc;
    doc["operator"] = ss::laplacian_name(kind);
    doc["eigenvalues"] = rep.eigenvalues;
    doc["zero_tol"] = rep.zero_tol;
    auto& mult = doc["multiplicities"] = ordered_json::array();
    for (const auto& [value, count] : rep.multiplicities) mult.push_back({value, count});
    if (kind == ss::LaplacianKind::L1Plus && static_cast<int>(t.edges().size()) >= t.num_vertices()) {
        ss::SpectralGap gap = ss::spectral_gap(t);
        doc["gap"] = {{"value", gap.value}, {"index", gap.index}};
    }
    emit(doc, opts);
    return 0;
}

int run_gap(const CommonOpts& opts)
{
    ss::Triangulation t = load_input(opts);
    ss::SpectralGap gap = ss::spectral_gap(t);
    ordered_json doc;
    doc["gap"] = gap.value;
    doc["index"] = gap.index;
    doc["rayleigh_min"] = gap.rayleigh_min;
    doc["zero_tol"] = gap.zero_tol;
    doc["zero_gap_criterion"] = ss::zero_gap_criterion(t);
    emit(doc, opts);
    return 0;
}

int run_hodge(const CommonOpts& opts)
{
    ss::Triangulation t = load_input(opts);
    ss::HodgeDecomposition h = ss::hodge(t);
    ordered_json doc;
    doc["edge_dim"] = static_cast<int>(t.edges().size());
    doc["exact_dim"] = h.exact_dim;
    doc["coexact_dim"] = h.coexact_dim;
    doc["harmonic_dim"] = h.harmonic_dim;
    emit(doc, opts);
    return 0;
}

int run_cheeger(const CommonOpts& opts, std::uint64_t samples)
{
    ss::Triangulation t = load_input(opts);

    if (samples > 0) {
        ss::CheegerResult res = ss::cheeger_tripartite_sampled(t, samples, opts.seed);
        ordered_json doc;
        doc["h_estimate"] = res.h;
        doc["exact"] = false;
        doc["samples"] = samples;
        doc["seed"] = opts.seed;
        doc["argmin"] = partition_json(res.argmin);
        emit(doc, opts);
        return 0;
    }

    ss::BoundCertificate cert = ss::cheeger_upper_certificate(t, opts.cheeger_cap, opts.threads);
    ordered_json doc;
    doc["h"] = cert.value;
    doc["argmin"] = partition_json(*cert.witness_partition);
    if (auto witness = ss::nonzero_cheeger_witness(t))
        doc["nonzero_witness_vertex"] = *witness;
    doc["spectral_gap"] = *cert.compared_value;
    auto& hyp = doc["hypothesis_checks"] = ordered_json::object();
    for (const auto& [name, ok] : cert.hypothesis_checks) hyp[name] = ok;
    doc["asserted"] = cert.asserted;
    doc["satisfied"] = cert.satisfied;
    emit(doc, opts);
    return cert.asserted && !cert.satisfied ? 1 : 0;
}

int run_bounds(const CommonOpts& opts, const std::string& kind, bool ambient_degree)
{
    ss::Triangulation t = load_input(opts);

    std::vector<ss::BoundCertificate> certs;
    if (kind == "all") {
        // Every bound whose computation applies to this complex; a bound
        // requested by name instead reports its own precondition failure.
        if (!t.edges().empty()) certs.push_back(ss::upper_bound_edge_l1(t));
        if (t.is_homogeneous() && !t.edges().empty()) certs.push_back(ss::upper_bound_l2(t));
        if (t.is_complete_graph() && t.num_vertices() <= opts.cheeger_cap)
            certs.push_back(ss::cheeger_upper_certificate(t, opts.cheeger_cap, opts.threads));
        if (t.is_complete_graph() && t.is_homogeneous()) {
            try {
                certs.push_back(ss::lower_bound_link(t));
                certs.push_back(
                    ss::lower_bound_cheeger_link(t, ambient_degree, opts.subset_cap, opts.threads));
            } catch (const ss::Error& err) {
                if (err.code() != ss::ErrorCode::EmptyFaceNeighbor) throw;
            }
        }
        certs.push_back(ss::zero_gap_certificate(t));
    } else if (kind == "edge-l1") {
        certs.push_back(ss::upper_bound_edge_l1(t));
    } else if (kind == "l2") {
        certs.push_back(ss::upper_bound_l2(t));
    } else if (kind == "cheeger-upper") {
        certs.push_back(ss::cheeger_upper_certificate(t, opts.cheeger_cap, opts.threads));
    } else if (kind == "link-lower") {
        certs.push_back(ss::lower_bound_link(t));
    } else if (kind == "cheeger-link-lower") {
        certs.push_back(ss::lower_bound_cheeger_link(t, ambient_degree, opts.subset_cap, opts.threads));
    } else if (kind == "zero-gap") {
        certs.push_back(ss::zero_gap_certificate(t));
    } else {
        throw ss::Error(ss::ErrorCode::InvalidInput, "unknown bound kind: " + kind);
    }

    ordered_json doc;
    if (kind == "all") {
        auto& arr = doc["bounds"] = ordered_json::array();
        for (const auto& cert : certs) arr.push_back(certificate_json(cert));
    } else {
        doc = certificate_json(certs.front());
    }
    emit(doc, opts);

    for (const auto& cert : certs)
        if (cert.asserted && !cert.satisfied) return 1;
    return 0;
}

// ---------------------------------------------------------------------------
// Built-in worked-example suite.

struct SuiteRow {
    std::string complex_name;
    std::string quantity;
    double expected = 0.0;
    double computed = 0.0;
    double tol = 0.0;

    bool pass() const { return std::abs(expected - computed) <= tol; }
};

void suite_rows_for(const std::string& name, const ss::Triangulation& t,
                    std::vector<SuiteRow>& rows)
{
    ss::SpectralGap gap = ss::spectral_gap(t);
    ss::CheegerResult ch = ss::cheeger_tripartite(t);
    ss::SpectrumRelationReport rel = ss::spectrum_relation_check(t, 1e-8);
    ss::BoundCertificate edge_bound = ss::upper_bound_edge_l1(t);

    rows.push_back({name, "upper_spectrum_relation", 1.0, rel.match ? 1.0 : 0.0, 0.0});
    rows.push_back({name, "edge_L1_bound_satisfied", 1.0, edge_bound.satisfied ? 1.0 : 0.0, 0.0});
    if (ch.h > 0.0)
        rows.push_back({name, "gap_le_cheeger", 1.0, gap.value <= ch.h + 1e-9 ? 1.0 : 0.0, 0.0});
}

int run_suite(const CommonOpts& opts, bool json_output, bool mutate)
{
    const double phi = 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi / 5.0); // lambda1 of a 5-cycle

    std::vector<SuiteRow> rows;

    // T4 with three faces: h = 2, gap = 1 (pinned), edge bound = 3.
    {
        ss::Triangulation t = ss::t4_three_faces();
        if (mutate) {
            static const std::array<std::array<int, 3>, 3> wrong = {{{1, 2, 3}, {1, 2, 4}, {2, 3, 4}}};
            t = ss::complete_graph_with_faces(4, wrong);
        }
        ss::CheegerResult ch = ss::cheeger_tripartite(t);
        ss::SpectralGap gap = ss::spectral_gap(t);
        rows.push_back({"T4", "cheeger_h", 2.0, ch.h, 1e-6});
        rows.push_back({"T4", "spectral_gap", 1.0, gap.value, 1e-6});
        rows.push_back({"T4", "edge_L1_bound", 3.0, ss::upper_bound_edge_l1(t).value, 1e-9});
        auto witness = ss::nonzero_cheeger_witness(t);
        rows.push_back({"T4", "nonzero_witness_vertex", 0.0, witness ? double(*witness) : -1.0, 0.0});
        suite_rows_for("T4", t, rows);
    }

    // T5 with six faces through vertex 1: h = 5/3, gap = 1 (pinned).
    {
        ss::Triangulation t = ss::t5_upper();
        ss::CheegerResult ch = ss::cheeger_tripartite(t);
        rows.push_back({"T5_upper", "cheeger_h", 5.0 / 3.0, ch.h, 1e-6});
        rows.push_back({"T5_upper", "spectral_gap", 1.0, ss::spectral_gap(t).value, 1e-6});
        auto witness = ss::nonzero_cheeger_witness(t);
        rows.push_back(
            {"T5_upper", "nonzero_witness_vertex", 0.0, witness ? double(*witness) : -1.0, 0.0});
        suite_rows_for("T5_upper", t, rows);
    }

    // T5 with six faces tiling a sphere: link bound value 2, but one edge
    // has no incident face, so the bound is reported unasserted; the true
    // gap is 0 (a harmonic 1-form exists).
    {
        ss::Triangulation t = ss::t5_lower();
        ss::BoundCertificate link = ss::lower_bound_link(t);
        rows.push_back({"T5_lower", "link_lower_bound", 2.0, link.value, 1e-6});
        rows.push_back({"T5_lower", "link_hypothesis_nonempty", 0.0,
                        link.asserted ? 1.0 : 0.0, 0.0});
        rows.push_back({"T5_lower", "spectral_gap", 0.0, ss::spectral_gap(t).value, 1e-9});
        rows.push_back({"T5_lower", "link_lambda1_of_vertex_1", 2.0,
                        ss::lambda1(t.link_graph(0).to_graph()), 1e-10});
        suite_rows_for("T5_lower", t, rows);
    }

    // T6 with ten faces: every link a 5-cycle; bound 2*lambda1(C5) - 2 is
    // attained by the gap.
    {
        ss::Triangulation t = ss::t6_ten_faces();
        ss::BoundCertificate link = ss::lower_bound_link(t);
        double bound = 2.0 * phi - 2.0;
        rows.push_back({"T6", "link_lower_bound", bound, link.value, 1e-6});
        rows.push_back({"T6", "link_lower_bound_rounded", 0.7639, link.value, 1e-4});
        rows.push_back({"T6", "gap_ge_link_bound", 1.0, link.satisfied ? 1.0 : 0.0, 0.0});
        rows.push_back({"T6", "spectral_gap", bound, ss::spectral_gap(t).value, 1e-9});
        rows.push_back({"T6", "link_lambda1_of_vertex_1", phi,
                        ss::lambda1(t.link_graph(0).to_graph()), 1e-10});
        suite_rows_for("T6", t, rows);
    }

    // T5' with eight faces: bound 1, gap = 2 (pinned).
    {
        ss::Triangulation t = ss::t5_prime();
        ss::BoundCertificate link = ss::lower_bound_link(t);
        rows.push_back({"T5_prime", "link_lower_bound", 1.0, link.value, 1e-6});
        rows.push_back({"T5_prime", "gap_ge_link_bound", 1.0, link.satisfied ? 1.0 : 0.0, 0.0});
        rows.push_back({"T5_prime", "spectral_gap", 2.0, ss::spectral_gap(t).value, 1e-6});
        suite_rows_for("T5_prime", t, rows);
    }

    // Complete triangulations: sigma(L1) = {n}, gap = h = n, edge bound n.
    for (int n = 3; n <= 6; ++n) {
        std::string name = "complete_T" + std::to_string(n);
        ss::Triangulation t = ss::complete_triangulation(n);
        ss::SpectrumReport l1 = ss::eigen_spectrum(t, ss::LaplacianKind::L1);
        double spread = 0.0;
        for (double v : l1.eigenvalues) spread = std::max(spread, std::abs(v - n));
        rows.push_back({name, "sigma_L1_max_deviation_from_n", 0.0, spread, 1e-8 * n});
        rows.push_back({name, "spectral_gap", double(n), ss::spectral_gap(t).value, 1e-8 * n});
        rows.push_back({name, "cheeger_h", double(n), ss::cheeger_tripartite(t).h, 1e-9});
        rows.push_back({name, "edge_L1_bound", double(n), ss::upper_bound_edge_l1(t).value, 1e-9});
        suite_rows_for(name, t, rows);
    }

    // K4 carrying one face: the face-count criterion forces a zero gap.
    {
        ss::Triangulation t = ss::k4_one_face();
        ss::BoundCertificate zero = ss::zero_gap_certificate(t);
        rows.push_back({"K4_one_face", "zero_gap_criterion", 1.0,
                        ss::zero_gap_criterion(t) ? 1.0 : 0.0, 0.0});
        rows.push_back({"K4_one_face", "spectral_gap", 0.0, ss::spectral_gap(t).value, 1e-9});
        rows.push_back({"K4_one_face", "zero_gap_satisfied", 1.0, zero.satisfied ? 1.0 : 0.0, 0.0});
    }

    bool all_pass = true;
    for (const SuiteRow& row : rows) all_pass = all_pass && row.pass();

    if (json_output || opts.format == "json") {
        ordered_json doc;
        auto& arr = doc["rows"] = ordered_json::array();
        for (const SuiteRow& row : rows)
            arr.push_back({{"case", row.complex_name},
                           {"quantity", row.quantity},
                           {"expected", row.expected},
                           {"computed", row.computed},
                           {"tol", row.tol},
                           {"pass", row.pass()}});
        doc["all_pass"] = all_pass;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::printf("%-14s %-34s %18s %18s %7s\n", "case", "quantity", "expected", "computed",
                    "result");
        for (const SuiteRow& row : rows)
            std::printf("%-14s %-34s %18.10g %18.10g %7s\n", row.complex_name.c_str(),
                        row.quantity.c_str(), row.expected, row.computed,
                        row.pass() ? "PASS" : "FAIL");
        std::printf("%s\n", all_pass ? "all rows PASS" : "FAILURES present");
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"discrete Hodge Laplacians, spectral gaps and Cheeger-type bounds on weighted "
                 "triangulations"};
    app.require_subcommand(1);

    CommonOpts opts;

    // gen
    CLI::App* gen = app.add_subcommand("gen", "generate a complex as JSON");
    gen->require_subcommand(1);
    int gen_n = 0;
    CLI::App* gen_complete = gen->add_subcommand("complete", "complete triangulation of K_n");
    gen_complete->add_option("--n", gen_n, "number of vertices")->required();
    gen_complete->add_option("--output,-o", opts.output, "write to a file instead of stdout");

    std::string gen_faces;
    std::string gen_indexing = "zero";
    CLI::App* gen_from_faces =
        gen->add_subcommand("from-faces", "complete graph K_n with an explicit face list");
    gen_from_faces->add_option("--n", gen_n, "number of vertices")->required();
    gen_from_faces->add_option("--faces", gen_faces, "face list, e.g. \"1,2,3;1,2,5\"")->required();
    gen_from_faces->add_option("--indexing", gen_indexing, "vertex indexing of the face list")
        ->check(CLI::IsMember({"zero", "one"}));
    gen_from_faces->add_option("--output,-o", opts.output, "write to a file instead of stdout");

    // spectra
    std::string operator_name = "L1plus";
    CLI::App* spectra = app.add_subcommand("spectra", "eigenvalues of a weighted Laplacian");
    add_common_options(spectra, opts);
    spectra->add_option("--operator", operator_name, "which Laplacian")
        ->check(CLI::IsMember({"L0", "L1minus", "L1plus", "L1", "L2"}));

    // gap
    CLI::App* gap = app.add_subcommand("gap", "spectral gap (eigenvalue |V|-1 of L1plus)");
    add_common_options(gap, opts);

    // hodge
    CLI::App* hodge_cmd = app.add_subcommand("hodge", "discrete Hodge decomposition dimensions");
    add_common_options(hodge_cmd, opts);

    // cheeger
    std::uint64_t samples = 0;
    CLI::App* cheeger = app.add_subcommand("cheeger", "tripartite Cheeger constant");
    add_common_options(cheeger, opts);
    cheeger->add_option("--sample", samples,
                        "randomized upper estimate with this many samples (beyond the cap)");

    // bounds
    std::string bound_kind = "all";
    bool ambient_degree = false;
    CLI::App* bounds = app.add_subcommand("bounds", "spectral-gap bound certificates");
    add_common_options(bounds, opts);
    bounds->add_option("--kind", bound_kind, "which bound")
        ->check(CLI::IsMember(
            {"all", "edge-l1", "l2", "cheeger-upper", "link-lower", "cheeger-link-lower", "zero-gap"}));
    bounds->add_flag("--ambient-degree", ambient_degree,
                     "use ambient-graph degrees for d_x in the cheeger-link bound");

    // suite
    bool suite_json = false;
    bool suite_mutate = false;
    CLI::App* suite = app.add_subcommand("suite", "run the built-in worked-example regression table");
    suite->add_option("--format", opts.format, "output format")->check(CLI::IsMember({"json", "text"}));
    suite->add_flag("--json", suite_json, "machine-readable output");
    suite->add_flag("--mutate", suite_mutate,
                    "perturb one built-in face list (self-test of the failure path)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    // The suite prints a table by default; reports default to JSON.
    if (suite->parsed() && suite->count("--format") == 0 && !suite_json) opts.format = "text";
    apply_thread_env(opts);

    try {
        if (gen_complete->parsed()) return run_gen_complete(gen_n, opts);
        if (gen_from_faces->parsed()) return run_gen_from_faces(gen_n, gen_faces, gen_indexing, opts);
        if (spectra->parsed()) return run_spectra(opts, operator_name);
        if (gap->parsed()) return run_gap(opts);
        if (hodge_cmd->parsed()) return run_hodge(opts);
        if (cheeger->parsed()) return run_cheeger(opts, samples);
        if (bounds->parsed()) return run_bounds(opts, bound_kind, ambient_degree);
        if (suite->parsed()) return run_suite(opts, suite_json, suite_mutate);
    } catch (const ss::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
