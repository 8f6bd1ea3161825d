#include "surfenum/width.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace surfenum {

DartMap radial_map(const DartMap& m) {
    const int n = m.dart_count();
    std::vector<int> sigma_inv(n);
    for (int d = 0; d < n; ++d) sigma_inv[m.sigma[d]] = d;
    DartMap r;
    r.sigma.resize(2 * n);
    r.alpha.resize(2 * n);
    for (int d = 0; d < n; ++d) {
        r.sigma[2 * d] = 2 * m.sigma[d];
        r.sigma[2 * d + 1] = 2 * m.alpha[sigma_inv[d]] + 1;
        r.alpha[2 * d] = 2 * d + 1;
        r.alpha[2 * d + 1] = 2 * d;
    }
    r.root = 2 * m.root;
    return r;
}

bool is_noncontractible(const DartMap& m, const std::vector<int>& cycle) {
    const int n = m.dart_count();
    std::vector<bool> cut(n, false);
    for (int d : cycle) {
        cut[d] = true;
        cut[m.alpha[d]] = true;
    }
    std::vector<int> phi(n);
    for (int d = 0; d < n; ++d) phi[d] = m.phi(d);
    auto fid = orbit_index(phi);
    const int faces = 1 + *std::max_element(fid.begin(), fid.end());

    std::vector<int> parent(faces);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int d = 0; d < n; ++d)
        if (!cut[d]) parent[find(fid[d])] = find(fid[m.alpha[d]]);

    int side0 = find(fid[0]);
    bool separates = false;
    for (int f = 0; f < faces && !separates; ++f)
        if (find(f) != side0) separates = true;
    if (!separates) return true;  // a nonseparating cycle is essential

    // per-side capped Euler characteristic: V_in - E_in + F_side + 1
    auto vid = orbit_index(m.sigma);
    const int verts = 1 + *std::max_element(vid.begin(), vid.end());
    std::vector<bool> on_cycle(verts, false);
    for (int d : cycle) {
        on_cycle[vid[d]] = true;
        on_cycle[vid[m.alpha[d]]] = true;
    }
    // side of a vertex/edge: side of any adjacent face (consistent per side)
    std::vector<int> chi_V(2, 0), chi_E(2, 0), chi_F(2, 0);
    auto side_of_face = [&](int f) { return find(f) == side0 ? 0 : 1; };
    for (int f = 0; f < faces; ++f) ++chi_F[side_of_face(f)];
    for (int v = 0; v < verts; ++v) {
        if (on_cycle[v]) continue;
        for (int d = 0; d < n; ++d)
            if (vid[d] == v) {
                ++chi_V[side_of_face(fid[d])];
                break;
            }
    }
    for (int d = 0; d < n; ++d)
        if (d < m.alpha[d] && !cut[d]) ++chi_E[side_of_face(fid[d])];
    for (int s = 0; s < 2; ++s)
        if (chi_V[s] - chi_E[s] + chi_F[s] + 1 == 2) return false;  // bounds a disc
    return true;
}

namespace {

// Shortest noncontractible simple cycle via exhaustive DFS over simple
// cycles (distinct vertices; loops are length-1 cycles, parallel edges give
// length-2 cycles). Fine at census sizes.
std::optional<int> shortest_essential(const DartMap& m) {
    if (genus(m) == 0) return std::nullopt;
    auto vid = orbit_index(m.sigma);
    const int n = m.dart_count();
    const int verts = 1 + *std::max_element(vid.begin(), vid.end());
    int best = -1;

    std::vector<int> path;
    std::vector<bool> vertex_used(verts, false);
    std::function<void(int, int)> extend = [&](int v0, int v) {
        if (best >= 0 && static_cast<int>(path.size()) >= best) return;
        for (int d = 0; d < n; ++d) {
            if (vid[d] != v) continue;
            if (!path.empty() && d == m.alpha[path.back()]) continue;  // no U-turn on same edge
            int w = vid[m.alpha[d]];
            if (w == v0) {
                path.push_back(d);
                if ((best < 0 || static_cast<int>(path.size()) < best) &&
                    is_noncontractible(m, path))
                    best = static_cast<int>(path.size());
                path.pop_back();
            } else if (!vertex_used[w]) {
                vertex_used[w] = true;
                path.push_back(d);
                extend(v0, w);
                path.pop_back();
                vertex_used[w] = false;
            }
        }
    };
    for (int v0 = 0; v0 < verts; ++v0) {
        vertex_used[v0] = true;
        extend(v0, v0);
        vertex_used[v0] = false;
    }
    if (best < 0) throw InternalError("shortest_essential: no essential cycle on g > 0");
    return best;
}

}  // namespace

std::optional<int> edgewidth(const DartMap& m) { return shortest_essential(m); }

std::optional<int> facewidth(const DartMap& m) {
    if (genus(m) == 0) return std::nullopt;
    auto w = shortest_essential(radial_map(m));
    if (!w || *w % 2 != 0) throw InternalError("facewidth: radial cycle length not even");
    return *w / 2;
}

}  // namespace surfenum
