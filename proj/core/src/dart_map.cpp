#include "surfenum/dart_map.hpp"

#include <algorithm>
#include <numeric>

namespace surfenum {

namespace {

std::vector<std::vector<int>> orbits_of(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> out;
    for (int d = 0; d < n; ++d) {
        if (seen[d]) continue;
        std::vector<int> orbit;
        int x = d;
        do {
            seen[x] = true;
            orbit.push_back(x);
            x = perm[x];
        } while (x != d);
        out.push_back(std::move(orbit));
    }
    return out;
}

bool is_permutation(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    std::vector<bool> hit(n, false);
    for (int v : p) {
        if (v < 0 || v >= n || hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

}  // namespace

void validate(const DartMap& m) {
    const int n = m.dart_count();
    if (n == 0 || n % 2 != 0) throw DomainError("DartMap: dart count must be even, nonzero");
    if (static_cast<int>(m.alpha.size()) != n)
        throw DomainError("DartMap: sigma/alpha size mismatch");
    if (!is_permutation(m.sigma)) throw DomainError("DartMap: sigma is not a permutation");
    if (!is_permutation(m.alpha)) throw DomainError("DartMap: alpha is not a permutation");
    for (int d = 0; d < n; ++d) {
        if (m.alpha[d] == d) throw DomainError("DartMap: alpha has a fixed point");
        if (m.alpha[m.alpha[d]] != d) throw DomainError("DartMap: alpha is not an involution");
    }
    if (m.root < 0 || m.root >= n) throw DomainError("DartMap: root out of range");
    // connectivity under <sigma, alpha>
    std::vector<bool> seen(n, false);
    std::vector<int> stack = {m.root};
    seen[m.root] = true;
    while (!stack.empty()) {
        int d = stack.back();
        stack.pop_back();
        for (int x : {m.sigma[d], m.alpha[d]})
            if (!seen[x]) {
                seen[x] = true;
                stack.push_back(x);
            }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw DomainError("DartMap: not connected");
}

std::vector<std::vector<int>> vertex_orbits(const DartMap& m) { return orbits_of(m.sigma); }

std::vector<std::vector<int>> trace_faces(const DartMap& m) {
    std::vector<int> phi(m.dart_count());
    for (int d = 0; d < m.dart_count(); ++d) phi[d] = m.phi(d);
    return orbits_of(phi);
}

std::vector<int> orbit_index(const std::vector<int>& perm) {
    std::vector<int> idx(perm.size(), -1);
    int k = 0;
    for (int d = 0; d < static_cast<int>(perm.size()); ++d) {
        if (idx[d] >= 0) continue;
        int x = d;
        do {
            idx[x] = k;
            x = perm[x];
        } while (x != d);
        ++k;
    }
    return idx;
}

int genus(const DartMap& m) {
    validate(m);
    const int V = static_cast<int>(vertex_orbits(m).size());
    const int E = m.edge_count();
    const int F = static_cast<int>(trace_faces(m).size());
    const int chi = V - E + F;
    if ((2 - chi) % 2 != 0 || chi > 2)
        throw InternalError("genus: Euler characteristic not of form 2-2g");
    return (2 - chi) / 2;
}

DartMap dual(const DartMap& m) {
    DartMap d;
    d.sigma.resize(m.dart_count());
    for (int x = 0; x < m.dart_count(); ++x) d.sigma[x] = m.phi(x);
    d.alpha = m.alpha;
    d.root = m.root;
    return d;
}

DartMap relabel(const DartMap& m, const std::vector<int>& perm) {
    const int n = m.dart_count();
    DartMap r;
    r.sigma.resize(n);
    r.alpha.resize(n);
    for (int d = 0; d < n; ++d) {
        r.sigma[perm[d]] = perm[m.sigma[d]];
        r.alpha[perm[d]] = perm[m.alpha[d]];
    }
    r.root = perm[m.root];
    return r;
}

std::vector<int> canonical_labels(const DartMap& m) {
    const int n = m.dart_count();
    std::vector<int> lab(n, -1);
    std::vector<bool> placed(n, false);
    std::vector<int> by_label;
    by_label.reserve(n);
    lab[m.root] = 0;
    lab[m.alpha[m.root]] = 1;
    by_label.push_back(m.root);
    by_label.push_back(m.alpha[m.root]);
    int next = 2;
    for (size_t pos = 0; pos < by_label.size(); ++pos) {
        int d = by_label[pos];
        if (placed[d]) continue;
        // walk the sigma-cycle of d's vertex from d
        int x = d;
        do {
            placed[x] = true;
            if (lab[x] < 0) {
                lab[x] = next;
                lab[m.alpha[x]] = next + 1;
                next += 2;
                by_label.push_back(x);
                by_label.push_back(m.alpha[x]);
            }
            x = m.sigma[x];
        } while (x != d);
    }
    if (static_cast<int>(by_label.size()) != n)
        throw DomainError("canonical_labels: map is not connected");
    return lab;
}

DartMap canonicalize(const DartMap& m) { return relabel(m, canonical_labels(m)); }

std::vector<int> canonical_code(const DartMap& m) { return canonicalize(m).sigma; }

DartMap map_from_code(const std::vector<int>& code) {
    DartMap m;
    m.sigma = code;
    m.alpha.resize(code.size());
    for (size_t d = 0; d < code.size(); ++d) m.alpha[d] = static_cast<int>(d ^ 1);
    m.root = 0;
    validate(m);
    return m;
}

bool is_triangulation(const DartMap& m) {
    for (const auto& f : trace_faces(m))
        if (f.size() != 3) return false;
    return true;
}

bool is_cubic(const DartMap& m) {
    for (const auto& v : vertex_orbits(m))
        if (v.size() != 3) return false;
    return true;
}

}  // namespace surfenum
