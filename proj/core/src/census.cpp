#include "surfenum/census.hpp"

#include <json.hpp>

#include "surfenum/multigraph.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace surfenum {

namespace {

// Backtracking construction of sigma over darts 0..2m-1 with alpha fixed as
// (0 1)(2 3)…. The recursion simulates the canonical BFS traversal
// (canonical_labels): darts are discovered in increasing order, vertices are
// walked (their sigma-cycle built) in order of their first-discovered dart.
// Every completed sigma is therefore the canonical form of its rooted map,
// and every rooted map with m edges arises exactly once.
struct Generator {
    int n;  // dart count
    MapFlavor flavor;
    const std::function<void(const DartMap&)>& callback;
    int part, nparts;
    static constexpr int kSplitDepth = 4;  // sigma assignments before partitioning
    long branch_counter = 0;

    std::vector<int> sigma;
    std::vector<bool> placed;
    int discovered = 0;  // darts 0..discovered-1 exist so far
    int depth = 0;       // number of sigma assignments made

    // Face (phi) chain tracking for the triangulation flavor. Each sigma
    // assignment sigma(prev)=x fixes one phi link alpha(prev) -> x; open
    // chains are kept via head/tail pointers with an undo journal.
    std::vector<int> head_of_tail, tail_of_head, len_of_head;
    struct ChainUndo {
        bool closed;  // link closed a face cycle (no pointer changes)
        int h1, p, q, t2, old_len;
    };
    std::vector<ChainUndo> chain_undo;

    Generator(int m, MapFlavor f, const std::function<void(const DartMap&)>& cb, int part_,
              int nparts_)
        : n(2 * m), flavor(f), callback(cb), part(part_), nparts(nparts_) {
        sigma.assign(n, -1);
        placed.assign(n, false);
        head_of_tail.resize(n);
        tail_of_head.resize(n);
        len_of_head.resize(n);
    }

    void discover_pair() {
        // fresh edge darts discovered and initialized as singleton phi-chains
        for (int x = discovered; x < discovered + 2; ++x) {
            head_of_tail[x] = x;
            tail_of_head[x] = x;
            len_of_head[x] = 1;
        }
        discovered += 2;
    }

    // returns false (and records nothing) if the link violates the
    // triangulation pruning; otherwise applies it and records an undo entry
    bool push_phi_link(int p, int q) {
        int h1 = head_of_tail[p];
        if (h1 == q) {  // closes a face cycle
            if (flavor == MapFlavor::triangulation && len_of_head[q] != 3) return false;
            chain_undo.push_back({true, h1, p, q, 0, 0});
            return true;
        }
        int t2 = tail_of_head[q];
        int merged = len_of_head[h1] + len_of_head[q];
        if (flavor == MapFlavor::triangulation && merged > 3) return false;
        chain_undo.push_back({false, h1, p, q, t2, len_of_head[h1]});
        head_of_tail[t2] = h1;
        tail_of_head[h1] = t2;
        len_of_head[h1] = merged;
        return true;
    }

    void pop_phi_link() {
        ChainUndo u = chain_undo.back();
        chain_undo.pop_back();
        if (u.closed) return;
        head_of_tail[u.t2] = u.q;
        tail_of_head[u.h1] = u.p;
        len_of_head[u.h1] = u.old_len;
    }

    void emit() {
        // maps too small to reach the partition depth belong to part 0
        if (nparts > 1 && depth <= kSplitDepth && part != 0) return;
        DartMap m;
        m.sigma = sigma;
        m.alpha.resize(n);
        for (int d = 0; d < n; ++d) m.alpha[d] = d ^ 1;
        m.root = 0;
        callback(m);
    }

    // try sigma(prev) = x inside the cycle started at d0 with current length
    // cycle_len (darts already in the cycle, counting d0)
    void assign_and_recurse(int prev, int x, int d0, int cycle_len);

    // choose sigma(prev) among the legal candidates
    void extend_cycle(int d0, int prev, int cycle_len) {
        bool cubic = flavor == MapFlavor::cubic;
        // close the cycle
        if (!cubic || cycle_len == 3) assign_and_recurse(prev, d0, d0, cycle_len);
        if (cubic && cycle_len >= 3) return;
        // continue with an already-discovered, unplaced dart > d0
        for (int x = d0 + 1; x < discovered; ++x)
            if (!placed[x]) assign_and_recurse(prev, x, d0, cycle_len);
        // or open a fresh edge
        if (discovered < n) {
            discover_pair();
            assign_and_recurse(prev, discovered - 2, d0, cycle_len);
            discovered -= 2;
        }
    }

    void start_next_cycle() {
        // next vertex walk starts at the smallest unplaced discovered dart
        int d0 = -1;
        for (int x = 0; x < discovered; ++x)
            if (!placed[x]) {
                d0 = x;
                break;
            }
        if (d0 < 0) {
            if (discovered == n) emit();
            // else: dead end, any completion would be disconnected
            return;
        }
        placed[d0] = true;
        extend_cycle(d0, d0, 1);
        placed[d0] = false;
    }

    void run() {
        if (n == 0) return;
        discover_pair();  // darts 0,1: the root edge
        start_next_cycle();
    }
};

void Generator::assign_and_recurse(int prev, int x, int d0, int cycle_len) {
    if (nparts > 1 && depth == kSplitDepth) {
        long id = branch_counter++;
        if (id % nparts != part) return;
    }
    // the sigma assignment fixes the phi link alpha(prev) -> x
    if (!push_phi_link(prev ^ 1, x)) return;
    sigma[prev] = x;
    ++depth;
    if (x == d0) {
        start_next_cycle();
    } else {
        placed[x] = true;
        extend_cycle(d0, x, cycle_len + 1);
        placed[x] = false;
    }
    --depth;
    sigma[prev] = -1;
    pop_phi_link();
}

}  // namespace

int census_budget(MapFlavor flavor) {
    switch (flavor) {
        case MapFlavor::general: return 7;
        case MapFlavor::triangulation: return 12;
        case MapFlavor::cubic: return 12;
    }
    return 0;
}

void enumerate_maps(int edges, MapFlavor flavor,
                    const std::function<void(const DartMap&)>& callback, int part, int nparts,
                    bool override_budget) {
    if (edges <= 0) throw DomainError("enumerate_maps: edge count must be positive");
    if (!override_budget && edges > census_budget(flavor))
        throw BudgetExceeded("enumerate_maps: " + std::to_string(edges) +
                             " edges exceeds the budget of " +
                             std::to_string(census_budget(flavor)) +
                             " (search grows roughly by a factor of 4m per extra edge)");
    Generator gen(edges, flavor, callback, part, nparts);
    gen.run();
}

void CountTable::add(int genus, int edges, const std::string& label, const Integer& k) {
    rows[{genus, edges, label}] += k;
}

void CountTable::merge(const CountTable& other) {
    for (const auto& [key, v] : other.rows) rows[key] += v;
}

Integer CountTable::get(int genus, int edges, const std::string& label) const {
    auto it = rows.find({genus, edges, label});
    return it == rows.end() ? Integer(0) : it->second;
}

std::string CountTable::to_csv() const {
    std::ostringstream os;
    os << "genus,edges,class,count\n";
    for (const auto& [key, v] : rows)
        os << key.genus << "," << key.edges << "," << key.label << "," << v.get_str() << "\n";
    return os.str();
}

namespace {

const char* kClassLabels[] = {"S", "Shat", "R", "N", "M"};
const TriangulationClass kClasses[] = {TriangulationClass::S, TriangulationClass::Shat,
                                       TriangulationClass::R, TriangulationClass::N,
                                       TriangulationClass::M};

std::filesystem::path cache_file(const std::string& cache_dir, MapFlavor flavor, int edges) {
    const char* name = flavor == MapFlavor::triangulation ? "triangulations" : "cubic";
    return std::filesystem::path(cache_dir) /
           (std::string(name) + "_m" + std::to_string(edges) + ".jsonl");
}

std::vector<std::string> triangulation_class_labels(const DartMap& m) {
    std::vector<std::string> out;
    auto ec = classify_edges(m);
    for (int i = 0; i < 5; ++i)
        if (is_in_class(ec, kClasses[i])) out.push_back(kClassLabels[i]);
    return out;
}

// Census with optional JSON-lines cache: record {"code":…,"g":…,"m":…,"classes":[…]}.
CountTable cached_census(int edges, MapFlavor flavor, const std::string& cache_dir, int jobs,
                         const std::function<std::vector<std::string>(const DartMap&)>& labeler) {
    namespace fs = std::filesystem;
    if (!cache_dir.empty()) {
        fs::path path = cache_file(cache_dir, flavor, edges);
        if (fs::exists(path)) {
            CountTable t;
            std::ifstream in(path);
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                auto j = nlohmann::json::parse(line);
                int g = j.at("g").get<int>();
                if (flavor == MapFlavor::triangulation)
                    t.add(g, edges, "all");
                for (const auto& c : j.at("classes"))
                    t.add(g, edges, c.get<std::string>());
            }
            return t;
        }
    }
    CountTable total;
    std::vector<std::string> lines;
    int parts = std::max(1, jobs);
    for (int p = 0; p < parts; ++p) {
        enumerate_maps(edges, flavor,
                       [&](const DartMap& m) {
                           int g = genus(m);
                           auto classes = labeler(m);
                           if (flavor == MapFlavor::triangulation) total.add(g, edges, "all");
                           for (const auto& c : classes) total.add(g, edges, c);
                           if (!cache_dir.empty()) {
                               nlohmann::json j;
                               j["code"] = m.sigma;
                               j["g"] = g;
                               j["m"] = edges;
                               j["classes"] = classes;
                               lines.push_back(j.dump());
                           }
                       },
                       p, parts);
    }
    if (!cache_dir.empty()) {
        fs::create_directories(cache_dir);
        fs::path path = cache_file(cache_dir, flavor, edges);
        fs::path tmp = path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            for (const auto& l : lines) out << l << "\n";
        }
        fs::rename(tmp, path);
    }
    return total;
}

}  // namespace

CountTable census_triangulations(int edges, const std::string& cache_dir, int jobs) {
    return cached_census(edges, MapFlavor::triangulation, cache_dir, jobs,
                         triangulation_class_labels);
}

CountTable census_cubic(int edges, const std::string& cache_dir, int jobs) {
    return cached_census(edges, MapFlavor::cubic, cache_dir, jobs,
                         [](const DartMap& m) -> std::vector<std::string> {
                             std::vector<std::string> out = {"cubic"};
                             if (cubic_map_underlying_three_connected(m)) out.push_back("cubic3c");
                             return out;
                         });
}

CountTable census_maps(int edges, int jobs) {
    CountTable t;
    int parts = std::max(1, jobs);
    for (int p = 0; p < parts; ++p)
        enumerate_maps(edges, MapFlavor::general,
                       [&](const DartMap& m) { t.add(genus(m), edges, "maps"); }, p, parts);
    return t;
}

CountTable generate_census(int edges, int g, MapFlavor flavor,
                           const std::function<bool(const DartMap&)>& predicate,
                           const std::string& label) {
    CountTable t;
    t.predicate = label;
    enumerate_maps(edges, flavor, [&](const DartMap& m) {
        if (genus(m) == g && predicate(m)) t.add(g, edges, label);
    });
    return t;
}

}  // namespace surfenum
