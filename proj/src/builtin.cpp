#include "simplex_spectra/builtin.hpp"

#include <vector>

namespace simplex_spectra {

Triangulation complete_graph_with_faces(int n, std::span<const std::array<int, 3>> faces,
                                        int index_base)
{
    std::vector<EdgeSpec> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
    std::vector<FaceSpec> fs;
    fs.reserve(faces.size());
    for (const auto& f : faces)
        fs.push_back({f[0] - index_base, f[1] - index_base, f[2] - index_base, 1.0});
    return build(n, edges, fs);
}

Triangulation t4_three_faces()
{
    static const std::array<std::array<int, 3>, 3> faces = {{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}};
    return complete_graph_with_faces(4, faces);
}

Triangulation t5_upper()
{
    static const std::array<std::array<int, 3>, 6> faces = {
        {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {1, 2, 5}, {1, 3, 5}, {1, 4, 5}}};
    return complete_graph_with_faces(5, faces);
}

Triangulation t5_lower()
{
    static const std::array<std::array<int, 3>, 6> faces = {
        {{1, 2, 3}, {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 4, 5}}};
    return complete_graph_with_faces(5, faces);
}

Triangulation t6_ten_faces()
{
    static const std::array<std::array<int, 3>, 10> faces = {{{1, 2, 3},
                                                              {1, 2, 6},
                                                              {1, 3, 4},
                                                              {1, 4, 5},
                                                              {1, 5, 6},
                                                              {2, 3, 5},
                                                              {2, 4, 5},
                                                              {2, 4, 6},
                                                              {3, 4, 6},
                                                              {3, 5, 6}}};
    return complete_graph_with_faces(6, faces);
}

Triangulation t5_prime()
{
    static const std::array<std::array<int, 3>, 8> faces = {
        {{1, 2, 3}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {1, 4, 5}, {2, 3, 4}, {2, 4, 5}, {3, 4, 5}}};
    return complete_graph_with_faces(5, faces);
}

Triangulation k4_one_face()
{
    static const std::array<std::array<int, 3>, 1> faces = {{{1, 2, 3}}};
    return complete_graph_with_faces(4, faces);
}

} // namespace simplex_spectra
