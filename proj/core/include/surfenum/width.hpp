#pragma once

#include <optional>
#include <vector>

#include "surfenum/dart_map.hpp"

namespace surfenum {

// The radial (vertex-face incidence) map of m on the same surface: one node
// per vertex and per face of m, one edge per corner. Corner (d, sigma(d))
// contributes radial darts 2d (at the vertex node of d) and 2d+1 (at the
// face node of the corner), with
//   sigma_R(2d) = 2 sigma(d),  sigma_R(2d+1) = 2 alpha(sigma^{-1}(d)) + 1.
// The radial map is a quadrangulation of the same surface (checked by tests
// via genus preservation and face valencies).
DartMap radial_map(const DartMap& m);

// True iff the given simple cycle (consecutive darts, end(d_i) =
// start(d_{i+1}), distinct vertices and edges) is noncontractible: it does
// not bound a disc. Decided combinatorially: the cycle separates iff the
// faces fall into two groups when glued across non-cycle edges; it bounds a
// disc iff it separates and one side has Euler characteristic 2 after
// capping (V_in - E_in + F_side + 1 = 2).
bool is_noncontractible(const DartMap& m, const std::vector<int>& cycle_darts);

// Length (in edges) of a shortest noncontractible simple cycle; nullopt when
// none exists (g = 0).
std::optional<int> edgewidth(const DartMap& m);

// Half the length of a shortest noncontractible cycle of the radial map;
// nullopt (infinity) when g = 0.
std::optional<int> facewidth(const DartMap& m);

}  // namespace surfenum
