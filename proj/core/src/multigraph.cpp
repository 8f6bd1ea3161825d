#include "surfenum/multigraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace surfenum {

LabelledMultigraph LabelledMultigraph::empty(int n) {
    LabelledMultigraph g;
    g.n = n;
    g.mult.assign(n, std::vector<int>(n, 0));
    g.loops.assign(n, 0);
    return g;
}

void LabelledMultigraph::add_edge(int u, int v, int k) {
    if (u == v) {
        loops[u] += k;
    } else {
        mult[u][v] += k;
        mult[v][u] += k;
    }
}

int LabelledMultigraph::degree(int v) const {
    int d = 2 * loops[v];
    for (int u = 0; u < n; ++u) d += mult[v][u];
    return d;
}

int LabelledMultigraph::edge_total() const {
    int e = 0;
    for (int u = 0; u < n; ++u) {
        e += 2 * loops[u];
        for (int v = 0; v < n; ++v) e += mult[u][v];
    }
    return e / 2;
}

bool LabelledMultigraph::is_cubic() const {
    for (int v = 0; v < n; ++v)
        if (degree(v) != 3) return false;
    return true;
}

bool LabelledMultigraph::operator<(const LabelledMultigraph& o) const {
    if (n != o.n) return n < o.n;
    if (loops != o.loops) return loops < o.loops;
    return mult < o.mult;
}

LabelledMultigraph underlying_multigraph(const DartMap& m) {
    auto vid = orbit_index(m.sigma);
    int V = 1 + *std::max_element(vid.begin(), vid.end());
    auto g = LabelledMultigraph::empty(V);
    for (int d = 0; d < m.dart_count(); ++d)
        if (d < m.alpha[d]) g.add_edge(vid[d], vid[m.alpha[d]]);
    return g;
}

std::vector<std::vector<int>> components(const LabelledMultigraph& g) {
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> verts = {s};
        comp[s] = static_cast<int>(out.size());
        for (size_t i = 0; i < verts.size(); ++i)
            for (int u = 0; u < g.n; ++u)
                if (comp[u] < 0 && g.mult[verts[i]][u] > 0) {
                    comp[u] = comp[s];
                    verts.push_back(u);
                }
        std::sort(verts.begin(), verts.end());
        out.push_back(std::move(verts));
    }
    return out;
}

LabelledMultigraph induced(const LabelledMultigraph& g, const std::vector<int>& verts) {
    auto h = LabelledMultigraph::empty(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i) {
        h.loops[i] = g.loops[verts[i]];
        for (size_t j = 0; j < verts.size(); ++j) h.mult[i][j] = g.mult[verts[i]][verts[j]];
    }
    return h;
}

bool is_phi(const LabelledMultigraph& g) {
    return g.n == 2 && g.loops[0] == 0 && g.loops[1] == 0 && g.mult[0][1] == 3;
}

Rational compensation_factor(const LabelledMultigraph& g) {
    if (!g.is_cubic()) throw DomainError("compensation_factor: graph is not cubic");
    Rational w(1);
    for (const auto& verts : components(g)) {
        auto c = induced(g, verts);
        if (is_phi(c)) {
            w /= 6;
            continue;
        }
        long k = 0, l = 0;
        for (int u = 0; u < c.n; ++u) {
            l += c.loops[u];
            for (int v = u + 1; v < c.n; ++v) k += c.mult[u][v] * (c.mult[u][v] - 1) / 2;
        }
        Rational denom(1);
        denom <<= static_cast<unsigned>(k + l);  // 2^(k+l)
        w /= denom;
    }
    return w;
}

namespace {

bool connected_without(const LabelledMultigraph& g, const std::vector<bool>& removed_vertex,
                       int skip_u = -1, int skip_v = -1, int skip_u2 = -1, int skip_v2 = -1) {
    // connectivity of g minus removed vertices, minus one copy of edge
    // {skip_u,skip_v} and one of {skip_u2,skip_v2}
    auto mult = g.mult;
    if (skip_u >= 0) --mult[skip_u][skip_v], --mult[skip_v][skip_u];
    if (skip_u2 >= 0) --mult[skip_u2][skip_v2], --mult[skip_v2][skip_u2];
    int start = -1, remaining = 0;
    for (int v = 0; v < g.n; ++v)
        if (!removed_vertex[v]) {
            ++remaining;
            start = v;
        }
    if (remaining <= 1) return true;
    std::vector<bool> seen(g.n, false);
    std::vector<int> stack = {start};
    seen[start] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < g.n; ++u)
            if (!seen[u] && !removed_vertex[u] && mult[v][u] > 0) {
                seen[u] = true;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == remaining;
}

}  // namespace

ConnectivityProfile connectivity_profile(const LabelledMultigraph& g) {
    ConnectivityProfile p;
    std::vector<bool> none(g.n, false);
    p.connected = connected_without(g, none);
    if (!p.connected) return p;

    // bridges: single-multiplicity edges whose removal disconnects
    for (int u = 0; u < g.n && !p.has_bridge; ++u)
        for (int v = u + 1; v < g.n && !p.has_bridge; ++v)
            if (g.mult[u][v] == 1 && !connected_without(g, none, u, v)) p.has_bridge = true;

    // cut vertices
    bool has_cutvertex = false;
    for (int v = 0; v < g.n && !has_cutvertex; ++v) {
        auto removed = none;
        removed[v] = true;
        if (!connected_without(g, removed)) has_cutvertex = true;
    }
    p.two_connected = g.n >= 2 && !has_cutvertex && !p.has_bridge;

    // 2-vertex cuts
    bool has_two_cut = has_cutvertex;
    for (int u = 0; u < g.n && !has_two_cut; ++u)
        for (int v = u + 1; v < g.n && !has_two_cut; ++v) {
            auto removed = none;
            removed[u] = removed[v] = true;
            if (!connected_without(g, removed)) has_two_cut = true;
        }
    p.three_connected = g.n >= 4 && !has_two_cut;

    // 2-edge cuts (any two edge copies, same or different bundles)
    bool has_small_edge_cut = p.has_bridge;
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.mult[u][v] > 0) slots.push_back({u, v});
    for (size_t i = 0; i < slots.size() && !has_small_edge_cut; ++i)
        for (size_t j = i; j < slots.size() && !has_small_edge_cut; ++j) {
            if (i == j && g.mult[slots[i].first][slots[i].second] < 2) continue;
            if (!connected_without(g, none, slots[i].first, slots[i].second, slots[j].first,
                                   slots[j].second))
                has_small_edge_cut = true;
        }
    p.three_edge_connected = !has_small_edge_cut;
    return p;
}

bool cubic_map_underlying_three_connected(const DartMap& m) {
    return connectivity_profile(underlying_multigraph(m)).three_connected;
}

namespace {

// Enumerate rotation systems of a connected multigraph: darts grouped per
// vertex, all cyclic orders per vertex.
void for_each_embedding(const LabelledMultigraph& g,
                        const std::function<void(const DartMap&)>& cb) {
    // build darts: one pair per edge copy
    std::vector<int> alpha;
    std::vector<std::vector<int>> at_vertex(g.n);
    for (int u = 0; u < g.n; ++u) {
        for (int k = 0; k < g.loops[u]; ++k) {
            int d = static_cast<int>(alpha.size());
            alpha.push_back(d + 1);
            alpha.push_back(d);
            at_vertex[u].push_back(d);
            at_vertex[u].push_back(d + 1);
        }
        for (int v = u + 1; v < g.n; ++v)
            for (int k = 0; k < g.mult[u][v]; ++k) {
                int d = static_cast<int>(alpha.size());
                alpha.push_back(d + 1);
                alpha.push_back(d);
                at_vertex[u].push_back(d);
                at_vertex[v].push_back(d + 1);
            }
    }
    const int n = static_cast<int>(alpha.size());
    if (n == 0) throw DomainError("for_each_embedding: empty graph");

    // per-vertex cyclic orders: fix the first dart, permute the rest
    std::vector<int> sigma(n);
    std::function<void(int)> rec = [&](int v) {
        if (v == g.n) {
            DartMap m;
            m.sigma = sigma;
            m.alpha = alpha;
            m.root = 0;
            cb(m);
            return;
        }
        auto& darts = at_vertex[v];
        if (darts.empty()) throw DomainError("for_each_embedding: isolated vertex");
        std::vector<int> rest(darts.begin() + 1, darts.end());
        std::sort(rest.begin(), rest.end());
        do {
            int prev = darts[0];
            for (int x : rest) {
                sigma[prev] = x;
                prev = x;
            }
            sigma[prev] = darts[0];
            rec(v + 1);
        } while (std::next_permutation(rest.begin(), rest.end()));
    };
    rec(0);
}

long rotation_system_count(const LabelledMultigraph& g) {
    long total = 1;
    for (int v = 0; v < g.n; ++v) {
        int d = g.degree(v);
        for (int k = 2; k < d; ++k) total *= k;  // (d-1)!
        if (total > (1L << 20)) return total;
    }
    return total;
}

}  // namespace

int min_genus(const LabelledMultigraph& g) {
    int total = 0;
    for (const auto& verts : components(g)) {
        auto c = induced(g, verts);
        if (c.edge_total() == 0) continue;  // isolated vertex: plane
        if (rotation_system_count(c) > (1L << 20))
            throw BudgetExceeded("min_genus: too many rotation systems");
        int best = -1;
        for_each_embedding(c, [&](const DartMap& m) {
            int gg = genus(m);
            if (best < 0 || gg < best) best = gg;
        });
        total += best;
    }
    return total;
}

std::vector<DartMap> all_embeddings(const LabelledMultigraph& g) {
    if (components(g).size() != 1)
        throw DomainError("all_embeddings: graph must be connected");
    std::vector<DartMap> out;
    for_each_embedding(g, [&](const DartMap& m) { out.push_back(m); });
    return out;
}

LabelledMultigraph canonical_form(const LabelledMultigraph& g) {
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best_key;
    std::vector<int> best_perm;
    do {
        // key under relabeling: vertex i of the candidate is perm[i] of g
        std::vector<int> key;
        key.reserve(g.n + g.n * (g.n - 1) / 2);
        for (int i = 0; i < g.n; ++i) key.push_back(g.loops[perm[i]]);
        for (int i = 0; i < g.n; ++i)
            for (int j = i + 1; j < g.n; ++j) key.push_back(g.mult[perm[i]][perm[j]]);
        if (best_key.empty() || key < best_key) {
            best_key = key;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto h = LabelledMultigraph::empty(g.n);
    for (int i = 0; i < g.n; ++i) {
        h.loops[i] = g.loops[best_perm[i]];
        for (int j = 0; j < g.n; ++j) h.mult[i][j] = g.mult[best_perm[i]][best_perm[j]];
    }
    return h;
}

}  // namespace surfenum
