#include "surfenum/graph_census.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "surfenum/errors.hpp"
#include "surfenum/width.hpp"

namespace surfenum {

namespace {

Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

bool is_simple(const LabelledMultigraph& g) {
    for (int v = 0; v < g.n; ++v)
        if (g.loops[v] > 0) return false;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.mult[u][v] > 1) return false;
    return true;
}

// Backtracking over the degree sequence: fill loops and the upper triangle of
// the multiplicity matrix vertex by vertex, keeping every vertex at degree 3.
// Each isomorphism class is visited once per labelled copy; classes are
// aggregated by canonical form, so the multiplicity of a class is exactly
// n!/|Aut|.
void enumerate_labelled(LabelledMultigraph& g, int v,
                        std::map<LabelledMultigraph, Integer>& classes) {
    if (v == g.n) {
        classes[canonical_form(g)] += 1;
        return;
    }
    int deg = g.degree(v);
    if (deg > 3) return;
    // choose loops at v (2 degree units each), then distribute the remaining
    // degree over neighbours v+1..n-1
    for (int l = 0; 2 * l <= 3 - deg; ++l) {
        g.loops[v] = l;
        int rem = 3 - deg - 2 * l;
        // recursive distribution over later vertices
        std::function<void(int, int)> distribute = [&](int w, int left) {
            if (left == 0) {
                enumerate_labelled(g, v + 1, classes);
                return;
            }
            if (w == g.n) return;
            int cap = std::min(left, 3 - g.degree(w));
            for (int k = cap; k >= 0; --k) {
                g.mult[v][w] = g.mult[w][v] = k;
                distribute(w + 1, left - k);
            }
            g.mult[v][w] = g.mult[w][v] = 0;
        };
        distribute(v + 1, rem);
        g.loops[v] = 0;
    }
}

bool phi_free(const LabelledMultigraph& g) {
    for (const auto& comp : components(g))
        if (is_phi(induced(g, comp))) return false;
    return true;
}

bool in_class(const GraphRecord& rec, GraphClass cls, int genus, bool include_phi) {
    const LabelledMultigraph& g = rec.graph;
    if (cls == GraphClass::G) {
        // component genus sum <= genus; min_genus already sums components
        if (rec.genus > genus) return false;
        return include_phi || phi_free(g);
    }
    if (!rec.profile.connected || rec.genus > genus) return false;
    if (is_phi(g)) return include_phi;
    switch (cls) {
        case GraphClass::C: return true;
        case GraphClass::B: return rec.profile.two_connected;
        case GraphClass::D: return rec.profile.three_connected;
        default: return false;
    }
}

nlohmann::json record_to_json(const GraphRecord& rec, int n) {
    nlohmann::json edges = nlohmann::json::array();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rec.graph.mult[u][v] > 0)
                edges.push_back({u, v, rec.graph.mult[u][v]});
    nlohmann::json loops = nlohmann::json::array();
    for (int v = 0; v < n; ++v)
        if (rec.graph.loops[v] > 0) loops.push_back({v, rec.graph.loops[v]});
    Integer aut = factorial(n) / rec.labelled;
    return nlohmann::json{{"n", n},
                          {"edges", edges},
                          {"loops", loops},
                          {"aut", aut.get_str()},
                          {"genus", rec.genus},
                          {"profile",
                           {{"connected", rec.profile.connected},
                            {"two_connected", rec.profile.two_connected},
                            {"three_connected", rec.profile.three_connected},
                            {"three_edge_connected", rec.profile.three_edge_connected},
                            {"has_bridge", rec.profile.has_bridge}}}};
}

GraphRecord record_from_json(const nlohmann::json& j) {
    GraphRecord rec;
    int n = j.at("n").get<int>();
    rec.graph = LabelledMultigraph::empty(n);
    for (const auto& e : j.at("edges"))
        rec.graph.add_edge(e[0].get<int>(), e[1].get<int>(), e[2].get<int>());
    for (const auto& l : j.at("loops"))
        rec.graph.add_edge(l[0].get<int>(), l[0].get<int>(), l[1].get<int>());
    rec.labelled = factorial(n) / Integer(j.at("aut").get<std::string>());
    rec.genus = j.at("genus").get<int>();
    const auto& p = j.at("profile");
    rec.profile.connected = p.at("connected").get<bool>();
    rec.profile.two_connected = p.at("two_connected").get<bool>();
    rec.profile.three_connected = p.at("three_connected").get<bool>();
    rec.profile.three_edge_connected = p.at("three_edge_connected").get<bool>();
    rec.profile.has_bridge = p.at("has_bridge").get<bool>();
    return rec;
}

}  // namespace

int graph_census_budget() { return 10; }

void enumerate_cubic(int n,
                     const std::function<void(const LabelledMultigraph&, const Integer&)>& callback,
                     bool override_budget) {
    if (n % 2 != 0) throw DomainError("enumerate_cubic: vertex count must be even");
    if (n < 0) throw DomainError("enumerate_cubic: negative vertex count");
    if (n > graph_census_budget() && !override_budget)
        throw BudgetExceeded("enumerate_cubic: n = " + std::to_string(n) +
                             " exceeds the budget of " + std::to_string(graph_census_budget()) +
                             " vertices (roughly >1e8 labelled matrices)");
    if (n == 0) return;
    LabelledMultigraph g = LabelledMultigraph::empty(n);
    std::map<LabelledMultigraph, Integer> classes;
    enumerate_labelled(g, 0, classes);
    for (const auto& [graph, labelled] : classes) callback(graph, labelled);
}

std::vector<GraphRecord> cubic_graph_census(int n, const std::string& cache_dir) {
    namespace fs = std::filesystem;
    fs::path cache_file;
    if (!cache_dir.empty()) {
        cache_file = fs::path(cache_dir) / ("cubic_graphs_n" + std::to_string(n) + ".jsonl");
        if (fs::exists(cache_file)) {
            std::vector<GraphRecord> out;
            std::ifstream in(cache_file);
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                out.push_back(record_from_json(nlohmann::json::parse(line)));
            }
            return out;
        }
    }
    std::vector<GraphRecord> out;
    enumerate_cubic(n, [&](const LabelledMultigraph& g, const Integer& labelled) {
        GraphRecord rec;
        rec.graph = g;
        rec.labelled = labelled;
        rec.genus = min_genus(g);
        rec.profile = connectivity_profile(g);
        out.push_back(std::move(rec));
    });
    if (!cache_dir.empty()) {
        fs::create_directories(cache_dir);
        fs::path tmp = cache_file;
        tmp += ".tmp";
        {
            std::ofstream os(tmp);
            for (const auto& rec : out) os << record_to_json(rec, n).dump() << "\n";
        }
        fs::rename(tmp, cache_file);
    }
    return out;
}

Rational class_count(GraphClass cls, int genus, int n, CountMode mode,
                     bool include_phi, const std::string& cache_dir) {
    Rational total = 0;
    for (const auto& rec : cubic_graph_census(n, cache_dir)) {
        if (!in_class(rec, cls, genus, include_phi)) continue;
        switch (mode) {
            case CountMode::weighted:
                total += compensation_factor(rec.graph) * Rational(rec.labelled);
                break;
            case CountMode::unweighted:
                total += Rational(rec.labelled);
                break;
            case CountMode::simple:
                if (is_simple(rec.graph)) total += Rational(rec.labelled);
                break;
        }
    }
    return total;
}

bool pairing_identity_check(int n) {
    if (n < 0 || 2 * n > graph_census_budget())
        throw BudgetExceeded("pairing_identity_check: 2n exceeds the enumeration budget");
    Rational lhs = 0;
    enumerate_cubic(2 * n, [&](const LabelledMultigraph& g, const Integer& labelled) {
        lhs += compensation_factor(g) * Rational(labelled);
    });
    Integer den = factorial(3 * n);
    den <<= 3 * n;  // * 2^(3n)
    Integer six_pow = 1;
    for (int i = 0; i < 2 * n; ++i) six_pow *= 6;
    Rational rhs = Rational(factorial(6 * n)) / Rational(den * six_pow);
    return lhs == rhs;
}

std::optional<int> graph_facewidth(const LabelledMultigraph& g, int genus) {
    if (g.n > 8) throw BudgetExceeded("graph_facewidth: more than 8 vertices");
    bool found = false, infinite = false;
    int best = 0;
    for (const auto& m : all_embeddings(g)) {
        if (surfenum::genus(m) != genus) continue;
        found = true;
        auto fw = facewidth(m);
        if (!fw) {
            infinite = true;  // only possible at genus 0, where it is maximal
            continue;
        }
        best = std::max(best, *fw);
    }
    if (!found) throw DomainError("graph_facewidth: no embedding of the requested genus");
    if (infinite) return std::nullopt;
    return best;
}

std::string class_count_csv(int max_genus, int max_n, bool include_phi,
                            const std::string& cache_dir) {
    std::ostringstream os;
    os << "class,genus,n,mode,count_num,count_den\n";
    const std::pair<GraphClass, const char*> classes[] = {
        {GraphClass::C, "C"}, {GraphClass::B, "B"}, {GraphClass::D, "D"}, {GraphClass::G, "G"}};
    const std::pair<CountMode, const char*> modes[] = {{CountMode::weighted, "weighted"},
                                                       {CountMode::unweighted, "unweighted"},
                                                       {CountMode::simple, "simple"}};
    for (const auto& [cls, cname] : classes)
        for (int g = 0; g <= max_genus; ++g)
            for (int n = 2; n <= max_n; n += 2)
                for (const auto& [mode, mname] : modes) {
                    Rational c = class_count(cls, g, n, mode, include_phi, cache_dir);
                    os << cname << "," << g << "," << n << "," << mname << ","
                       << c.get_num().get_str() << "," << c.get_den().get_str() << "\n";
                }
    return os.str();
}

}  // namespace surfenum
