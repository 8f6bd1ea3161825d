#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "surfenum/dart_map.hpp"
#include "surfenum/rational.hpp"
#include "surfenum/surgery.hpp"

namespace surfenum {

enum class MapFlavor { general, triangulation, cubic };

// Default generation budgets (edges).
int census_budget(MapFlavor flavor);

// Exhaustively enumerates rooted maps with exactly `edges` edges, one per
// root-isomorphism class (generation follows the canonical BFS labeling, so
// every emitted map is in canonical form: alpha = (0 1)(2 3)..., root 0).
// The triangulation flavor prunes to face valency 3, the cubic flavor to
// vertex valency 3. part/nparts split the search space deterministically for
// parallel runs; the emitted multiset is the disjoint union over parts.
// Throws BudgetExceeded when edges exceeds the flavor budget (unless
// override_budget).
void enumerate_maps(int edges, MapFlavor flavor,
                    const std::function<void(const DartMap&)>& callback, int part = 0,
                    int nparts = 1, bool override_budget = false);

struct CountKey {
    int genus;
    int edges;
    std::string label;
    auto operator<=>(const CountKey&) const = default;
};

struct CountTable {
    std::map<CountKey, Integer> rows;
    std::string generator_version = "surfenum-census-1";
    std::string predicate;

    void add(int genus, int edges, const std::string& label, const Integer& k = 1);
    void merge(const CountTable& other);
    Integer get(int genus, int edges, const std::string& label) const;  // 0 if absent
    std::string to_csv() const;  // header genus,edges,class,count
};

// Census of triangulations with `edges` edges over all genera: rows for
// label "all" and for each class label "S","Shat","R","N","M".
// When cache_dir is nonempty, results are persisted as JSON-lines
// ({"code":…, "g":…, "m":…, "classes":[…]}) and reloaded on later calls.
CountTable census_triangulations(int edges, const std::string& cache_dir = "", int jobs = 1);

// Census of cubic maps: labels "cubic" and "cubic3c" (underlying multigraph
// 3-connected).
CountTable census_cubic(int edges, const std::string& cache_dir = "", int jobs = 1);

// Census of all rooted maps: label "maps".
CountTable census_maps(int edges, int jobs = 1);

// Generic census per the module interface: enumerate maps with `edges`
// edges of the given flavor and count those with the given genus satisfying
// the predicate, under `label`.
CountTable generate_census(int edges, int genus, MapFlavor flavor,
                           const std::function<bool(const DartMap&)>& predicate,
                           const std::string& label);

}  // namespace surfenum
