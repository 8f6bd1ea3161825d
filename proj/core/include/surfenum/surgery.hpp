#pragma once

#include <optional>
#include <vector>

#include "surfenum/dart_map.hpp"

namespace surfenum {

// A double edge {e1, e2} given by one dart of each edge, both pointing out of
// the same endpoint (dart a of e1 and dart b of e2 start at the same vertex,
// alpha(a) and alpha(b) at the other).
struct DoubleEdge {
    int a;  // dart of e1
    int b;  // dart of e2, same start vertex as a
};

// Result of zipping a double edge. Zipping cuts the surface along the two
// edges and sews each of the two boundary holes shut, merging the two edge
// copies on each side into one "zipped" edge. On the dart level this is the
// local rewrite
//   sigma'(a) = sigma(b), sigma'(b) = sigma(a),
//   sigma'(abar) = sigma(bbar), sigma'(bbar) = sigma(abar),
//   alpha': a <-> bbar and b <-> abar            (abar = alpha(a) etc.)
// after which the map either stays connected (non-separating double edge) or
// splits into two components.
struct ZipResult {
    // The rewritten permutations over the original dart set (possibly
    // disconnected). unzip() restores the original map from these.
    std::vector<int> sigma, alpha;
    int root;
    DoubleEdge zipped;           // the surgery site (darts keep their ids)
    bool separated;              // true if the result has two components
    std::vector<DartMap> pieces; // 1 or 2 connected maps, darts re-indexed;
                                 // pieces[0] contains the original root
    std::vector<int> piece_genus;
    // For the separated case: the two rootings of the non-root piece at its
    // zipped edge (the zipped edge's two darts), per the surgery convention.
    std::vector<DartMap> non_root_piece_rootings;
};

// pre: a and b start at the same vertex, alpha(a) and alpha(b) at the same
// (other) vertex, and the two edges are distinct and not loops.
// Throws DomainError otherwise.
ZipResult zip_double_edge(const DartMap& m, const DoubleEdge& pair);

// Exact inverse of the dart-level rewrite: returns the original map.
DartMap unzip(const ZipResult& z);

// All double edges of m: one DoubleEdge per unordered pair of distinct
// parallel non-loop edges (a multiplicity-k bundle contributes C(k,2)).
std::vector<DoubleEdge> find_double_edges(const DartMap& m);
// All loops, one dart per loop edge.
std::vector<int> find_loops(const DartMap& m);

// True iff removing the given edge set (each edge named by one dart)
// disconnects the surface: faces are glued across the remaining edges.
bool cut_separates(const DartMap& m, const std::vector<int>& cut_edge_darts);

enum class DoubleEdgeKind { planar, nonplanar_separating, nonseparating };

DoubleEdgeKind classify_double_edge(const DartMap& m, const DoubleEdge& pair);

struct EdgeClassification {
    std::vector<int> loops;                       // one dart per loop
    std::vector<bool> loop_separating;            // parallel to loops
    std::vector<DoubleEdge> double_edges;
    std::vector<DoubleEdgeKind> double_edge_kind; // parallel to double_edges
    std::vector<std::pair<int, int>> separating_loop_pairs;  // dart pairs

    bool has_loop() const { return !loops.empty(); }
    bool has_double_edge() const { return !double_edges.empty(); }
    bool has_kind(DoubleEdgeKind k) const {
        for (auto kk : double_edge_kind)
            if (kk == k) return true;
        return false;
    }
    bool has_separating_loop() const {
        for (bool b : loop_separating)
            if (b) return true;
        return false;
    }
};

EdgeClassification classify_edges(const DartMap& m);

enum class TriangulationClass { S, Shat, R, N, M };

// Class predicates of the triangulation hierarchy:
//   S: no loops, no double edges; Shat: no loops;
//   R: no loops, no planar double edges;
//   N: no loops, no separating (planar or nonplanar-separating) double edges;
//   M: no separating loops, no separating double edges, no separating loop pairs.
// Returns false unless every face of m has valency 3.
bool is_in_class(const DartMap& m, TriangulationClass c);
bool is_in_class(const EdgeClassification& ec, TriangulationClass c);

}  // namespace surfenum
