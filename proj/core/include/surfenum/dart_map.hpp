#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "surfenum/errors.hpp"

namespace surfenum {

// A rooted combinatorial map on an orientable surface, encoded on darts
// (half-edges). sigma is the counterclockwise successor around each vertex,
// alpha the fixed-point-free edge involution. Faces are the orbits of
// phi = sigma∘alpha (phi(d) = sigma[alpha[d]]); this composition convention
// is fixed here once and used everywhere.
struct DartMap {
    std::vector<int> sigma;
    std::vector<int> alpha;
    int root = 0;

    int dart_count() const { return static_cast<int>(sigma.size()); }
    int edge_count() const { return dart_count() / 2; }
    int phi(int d) const { return sigma[alpha[d]]; }

    bool operator==(const DartMap& o) const = default;
};

// Throws DomainError unless alpha is a fixed-point-free involution, sigma a
// permutation, the root in range, and the map connected.
void validate(const DartMap& m);

// Orbits of sigma (vertices) and of phi (faces), each orbit listed from its
// smallest dart, orbits sorted by smallest dart.
std::vector<std::vector<int>> vertex_orbits(const DartMap& m);
std::vector<std::vector<int>> trace_faces(const DartMap& m);

// orbit_index[d] = index of the orbit containing d (for sigma or phi).
std::vector<int> orbit_index(const std::vector<int>& perm);

// Euler genus: g = (2 - |V| + |E| - |F|)/2. Throws DomainError if the map is
// disconnected.
int genus(const DartMap& m);

// Dual map: sigma* = phi, alpha* = alpha, same darts and root.
// dual(dual(m)) == m exactly.
DartMap dual(const DartMap& m);

// Relabel darts: new dart perm[d] plays the role of old dart d.
DartMap relabel(const DartMap& m, const std::vector<int>& perm);

// Canonical labeling by the rooted breadth-first traversal: the root dart
// gets label 0, its alpha-partner 1; darts are processed in increasing label
// order, and the sigma-cycle of each newly reached vertex is walked from its
// first-discovered dart, labeling fresh darts in pairs (2c, 2c+1). Rooted
// maps are rigid, so the relabeled map is a canonical form: two DartMaps are
// root-isomorphic iff their canonical forms are equal.
std::vector<int> canonical_labels(const DartMap& m);
DartMap canonicalize(const DartMap& m);

// The canonical code: sigma of the canonical form (alpha is then always
// (0 1)(2 3)... and the root 0, so sigma determines the map).
std::vector<int> canonical_code(const DartMap& m);
DartMap map_from_code(const std::vector<int>& code);

// True iff every face has valency 3 / every vertex has valency 3.
bool is_triangulation(const DartMap& m);
bool is_cubic(const DartMap& m);

}  // namespace surfenum
