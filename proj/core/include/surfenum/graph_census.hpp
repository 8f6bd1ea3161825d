#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "surfenum/multigraph.hpp"
#include "surfenum/rational.hpp"

namespace surfenum {

// Default budget (vertices) for exhaustive cubic multigraph enumeration.
int graph_census_budget();

// Exhaustively enumerates cubic multigraphs (possibly disconnected, loops and
// multi-edges allowed) on n vertices, one callback per isomorphism class, in
// deterministic canonical order, together with the number of vertex-labelled
// copies n!/|Aut|. Throws DomainError for odd n, BudgetExceeded beyond the
// budget (unless override_budget).
void enumerate_cubic(int n,
                     const std::function<void(const LabelledMultigraph&, const Integer&)>& callback,
                     bool override_budget = false);

enum class GraphClass { C, B, D, G };
enum class CountMode { weighted, unweighted, simple };

// Exact vertex-labelled count of cubic multigraphs with exactly n vertices in
// a class, on surfaces of genus at most `genus`:
//   C: connected; B: 2-connected; D: 3-connected (each with min_genus <= g);
//   G: all graphs whose component genera sum to <= g.
// include_phi: whether the triple edge Phi counts as a member (and, for class
// G, whether graphs with Phi components are admitted).
// Modes: weighted sums W(G) * n!/|Aut|, unweighted sums n!/|Aut|, simple sums
// n!/|Aut| over simple members only.
Rational class_count(GraphClass cls, int genus, int n, CountMode mode,
                     bool include_phi, const std::string& cache_dir = "");

// Verifies sum_G W(G) over all cubic multigraphs on 2n labelled vertices
// equals (6n)! / ((3n)! * 2^(3n) * 6^(2n)).
bool pairing_identity_check(int n);

// Facewidth of a connected graph: the maximum over all its embeddings of
// genus exactly `genus` of the facewidth of the embedded map; nullopt means
// infinity (genus 0). Throws DomainError if no embedding of that genus
// exists. Budget-gated (n <= 8).
std::optional<int> graph_facewidth(const LabelledMultigraph& g, int genus);

// One cached census record per isomorphism class.
struct GraphRecord {
    LabelledMultigraph graph;
    Integer labelled;  // n!/|Aut|
    int genus = 0;     // min_genus
    ConnectivityProfile profile;
};

// Full census of cubic multigraphs on n vertices with genus and connectivity
// annotations; persisted as JSON-lines in cache_dir when nonempty
// ({"n":..,"edges":[[i,j,mult]..],"loops":[[i,cnt]..],"aut":..,"genus":..,
//   "profile":{..}}).
std::vector<GraphRecord> cubic_graph_census(int n, const std::string& cache_dir = "");

// CSV with header class,genus,n,mode,count_num,count_den over the given
// parameter ranges.
std::string class_count_csv(int max_genus, int max_n, bool include_phi,
                            const std::string& cache_dir = "");

}  // namespace surfenum
