#pragma once

#include <vector>

#include "surfenum/dart_map.hpp"
#include "surfenum/rational.hpp"

namespace surfenum {

// A vertex-labelled multigraph: symmetric multiplicity matrix for distinct
// endpoints plus per-vertex loop counts (a loop adds 2 to its vertex degree).
struct LabelledMultigraph {
    int n = 0;
    std::vector<std::vector<int>> mult;  // n x n, diagonal unused (0)
    std::vector<int> loops;              // per-vertex loop count

    static LabelledMultigraph empty(int n);
    void add_edge(int u, int v, int k = 1);  // u == v adds loops
    int degree(int v) const;
    int edge_total() const;  // loops count once as edges
    bool is_cubic() const;
    bool operator==(const LabelledMultigraph&) const = default;
    bool operator<(const LabelledMultigraph& o) const;
};

// The underlying multigraph of a map (vertices = sigma-orbits).
LabelledMultigraph underlying_multigraph(const DartMap& m);

// Connected components as vertex lists; induced subgraph on a vertex subset
// (vertices re-indexed in the given order).
std::vector<std::vector<int>> components(const LabelledMultigraph& g);
LabelledMultigraph induced(const LabelledMultigraph& g, const std::vector<int>& verts);

// The triple edge Phi: two vertices joined by three parallel edges.
bool is_phi(const LabelledMultigraph& g);

// The pairing-model weight: product over components of 1/6 for Phi and
// 2^{-(k+l)} otherwise, where k counts double edges (a multiplicity-nu bundle
// contributes C(nu,2)) and l counts loops. Throws DomainError on non-cubic
// input.
Rational compensation_factor(const LabelledMultigraph& g);

struct ConnectivityProfile {
    bool connected = false;
    bool two_connected = false;
    bool three_connected = false;
    bool three_edge_connected = false;
    bool has_bridge = false;
};

ConnectivityProfile connectivity_profile(const LabelledMultigraph& g);

// Convenience for the cubic-map census: 3-connectivity of the underlying
// multigraph.
bool cubic_map_underlying_three_connected(const DartMap& m);

// Minimum genus over all rotation systems (sum over components when g is
// disconnected). Budget: at most 12 vertices of degree 3.
int min_genus(const LabelledMultigraph& g);

// All 2-cell embeddings (rotation systems) of a connected multigraph as
// DartMaps, for width computations at tiny sizes.
std::vector<DartMap> all_embeddings(const LabelledMultigraph& g);

// Canonical form: lexicographically smallest (loops, mult) encoding over all
// vertex relabelings. Exponential fallback guarded by degree refinement;
// intended for n <= 10.
LabelledMultigraph canonical_form(const LabelledMultigraph& g);

}  // namespace surfenum
