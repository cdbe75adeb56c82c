#pragma once

#include <array>
#include <span>

#include "simplex_spectra/complex.hpp"

namespace simplex_spectra {

/// Complete graph K_n carrying the given faces. index_base 1 accepts the
/// 1-indexed vertex labels the worked examples are written in.
Triangulation complete_graph_with_faces(int n, std::span<const std::array<int, 3>> faces,
                                        int index_base = 1);

// The worked-example complexes of the built-in regression suite.
Triangulation t4_three_faces(); // K4, faces (1,2,3),(1,2,4),(1,3,4)
Triangulation t5_upper();       // K5, six faces through vertex 1
Triangulation t5_lower();       // K5, six faces tiling a sphere on nine edges
Triangulation t6_ten_faces();   // K6, ten faces, every link a 5-cycle
Triangulation t5_prime();       // K5, eight faces
Triangulation k4_one_face();    // K4 graph with the single face (1,2,3)

} // namespace simplex_spectra
