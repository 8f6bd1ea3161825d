#include "surfenum/surgery.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace surfenum {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Component ids of darts under <sigma, alpha>.
std::vector<int> dart_components(const std::vector<int>& sigma, const std::vector<int>& alpha) {
    const int n = static_cast<int>(sigma.size());
    std::vector<int> comp(n, -1);
    int k = 0;
    for (int d = 0; d < n; ++d) {
        if (comp[d] >= 0) continue;
        std::vector<int> stack = {d};
        comp[d] = k;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : {sigma[x], alpha[x]})
                if (comp[y] < 0) {
                    comp[y] = k;
                    stack.push_back(y);
                }
        }
        ++k;
    }
    return comp;
}

DartMap extract_component(const std::vector<int>& sigma, const std::vector<int>& alpha,
                          const std::vector<int>& comp, int which, std::vector<int>& rank_out) {
    const int n = static_cast<int>(sigma.size());
    rank_out.assign(n, -1);
    int k = 0;
    for (int d = 0; d < n; ++d)
        if (comp[d] == which) rank_out[d] = k++;
    DartMap piece;
    piece.sigma.resize(k);
    piece.alpha.resize(k);
    for (int d = 0; d < n; ++d)
        if (comp[d] == which) {
            piece.sigma[rank_out[d]] = rank_out[sigma[d]];
            piece.alpha[rank_out[d]] = rank_out[alpha[d]];
        }
    piece.root = 0;
    return piece;
}

}  // namespace

std::vector<int> find_loops(const DartMap& m) {
    auto vid = orbit_index(m.sigma);
    std::vector<int> loops;
    for (int d = 0; d < m.dart_count(); ++d)
        if (d < m.alpha[d] && vid[d] == vid[m.alpha[d]]) loops.push_back(d);
    return loops;
}

std::vector<DoubleEdge> find_double_edges(const DartMap& m) {
    auto vid = orbit_index(m.sigma);
    // bundle non-loop edges by endpoint pair; store the dart at the smaller
    // endpoint orbit (either for equal — excluded, loops are skipped)
    std::map<std::pair<int, int>, std::vector<int>> bundles;
    for (int d = 0; d < m.dart_count(); ++d) {
        if (d > m.alpha[d]) continue;
        int u = vid[d], v = vid[m.alpha[d]];
        if (u == v) continue;  // loop
        int dart_at_min = u < v ? d : m.alpha[d];
        bundles[{std::min(u, v), std::max(u, v)}].push_back(dart_at_min);
    }
    std::vector<DoubleEdge> out;
    for (auto& [key, darts] : bundles)
        for (size_t i = 0; i < darts.size(); ++i)
            for (size_t j = i + 1; j < darts.size(); ++j)
                out.push_back({darts[i], darts[j]});
    return out;
}

bool cut_separates(const DartMap& m, const std::vector<int>& cut_edge_darts) {
    const int n = m.dart_count();
    std::vector<bool> cut(n, false);
    for (int d : cut_edge_darts) {
        cut[d] = true;
        cut[m.alpha[d]] = true;
    }
    std::vector<int> phi(n);
    for (int d = 0; d < n; ++d) phi[d] = m.phi(d);
    auto fid = orbit_index(phi);
    int faces = 1 + *std::max_element(fid.begin(), fid.end());
    UnionFind uf(faces);
    for (int d = 0; d < n; ++d)
        if (!cut[d]) uf.unite(fid[d], fid[m.alpha[d]]);
    int root0 = uf.find(0);
    for (int f = 1; f < faces; ++f)
        if (uf.find(f) != root0) return true;
    return false;
}

ZipResult zip_double_edge(const DartMap& m, const DoubleEdge& pair) {
    validate(m);
    const int a = pair.a, b = pair.b;
    const int abar = m.alpha[a], bbar = m.alpha[b];
    auto vid = orbit_index(m.sigma);
    if (a == b || a == bbar) throw DomainError("zip_double_edge: edges not distinct");
    if (vid[a] != vid[b] || vid[abar] != vid[bbar])
        throw DomainError("zip_double_edge: darts do not form a double edge");
    if (vid[a] == vid[abar]) throw DomainError("zip_double_edge: edges are loops");

    ZipResult z;
    z.sigma = m.sigma;
    z.alpha = m.alpha;
    z.root = m.root;
    z.zipped = pair;
    std::swap(z.sigma[a], z.sigma[b]);
    std::swap(z.sigma[abar], z.sigma[bbar]);
    // zipped edges: z1 = {b, abar}, z2 = {a, bbar}
    z.alpha[b] = abar;
    z.alpha[abar] = b;
    z.alpha[a] = bbar;
    z.alpha[bbar] = a;

    auto comp = dart_components(z.sigma, z.alpha);
    int ncomp = 1 + *std::max_element(comp.begin(), comp.end());
    if (ncomp > 2) throw InternalError("zip_double_edge: more than two components");
    z.separated = (ncomp == 2);

    std::vector<int> rank;
    int root_comp = comp[z.root];
    DartMap p0 = extract_component(z.sigma, z.alpha, comp, root_comp, rank);
    p0.root = rank[z.root];
    z.pieces.push_back(p0);
    if (z.separated) {
        DartMap p1 = extract_component(z.sigma, z.alpha, comp, 1 - root_comp, rank);
        // the non-root piece contains exactly one zipped edge; its two darts
        // give the two rootings
        int z_dart = comp[b] != root_comp ? b : a;
        DartMap r1 = p1, r2 = p1;
        r1.root = rank[z_dart];
        r2.root = rank[z.alpha[z_dart]];
        p1.root = rank[z_dart];
        z.pieces.push_back(p1);
        z.non_root_piece_rootings = {r1, r2};
    }
    for (const auto& p : z.pieces) z.piece_genus.push_back(genus(p));
    return z;
}

DartMap unzip(const ZipResult& z) {
    DartMap m;
    m.sigma = z.sigma;
    m.alpha = z.alpha;
    m.root = z.root;
    const int a = z.zipped.a, b = z.zipped.b;
    const int abar = z.alpha[b], bbar = z.alpha[a];
    std::swap(m.sigma[a], m.sigma[b]);
    std::swap(m.sigma[abar], m.sigma[bbar]);
    m.alpha[a] = abar;
    m.alpha[abar] = a;
    m.alpha[b] = bbar;
    m.alpha[bbar] = b;
    validate(m);
    return m;
}

DoubleEdgeKind classify_double_edge(const DartMap& m, const DoubleEdge& pair) {
    ZipResult z = zip_double_edge(m, pair);
    if (!z.separated) return DoubleEdgeKind::nonseparating;
    if (z.piece_genus[0] == 0 || z.piece_genus[1] == 0) return DoubleEdgeKind::planar;
    return DoubleEdgeKind::nonplanar_separating;
}

EdgeClassification classify_edges(const DartMap& m) {
    EdgeClassification ec;
    ec.loops = find_loops(m);
    for (int l : ec.loops) ec.loop_separating.push_back(cut_separates(m, {l}));
    ec.double_edges = find_double_edges(m);
    for (const auto& de : ec.double_edges)
        ec.double_edge_kind.push_back(classify_double_edge(m, de));
    for (size_t i = 0; i < ec.loops.size(); ++i)
        for (size_t j = i + 1; j < ec.loops.size(); ++j)
            if (cut_separates(m, {ec.loops[i], ec.loops[j]}))
                ec.separating_loop_pairs.push_back({ec.loops[i], ec.loops[j]});
    return ec;
}

bool is_in_class(const EdgeClassification& ec, TriangulationClass c) {
    const bool sep_double = ec.has_kind(DoubleEdgeKind::planar) ||
                            ec.has_kind(DoubleEdgeKind::nonplanar_separating);
    switch (c) {
        case TriangulationClass::S:
            return !ec.has_loop() && !ec.has_double_edge();
        case TriangulationClass::Shat:
            return !ec.has_loop();
        case TriangulationClass::R:
            return !ec.has_loop() && !ec.has_kind(DoubleEdgeKind::planar);
        case TriangulationClass::N:
            return !ec.has_loop() && !sep_double;
        case TriangulationClass::M:
            return !ec.has_separating_loop() && !sep_double &&
                   ec.separating_loop_pairs.empty();
    }
    throw DomainError("is_in_class: unknown class");
}

bool is_in_class(const DartMap& m, TriangulationClass c) {
    if (!is_triangulation(m)) return false;
    return is_in_class(classify_edges(m), c);
}

}  // namespace surfenum
