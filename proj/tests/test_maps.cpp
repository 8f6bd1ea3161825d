#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <map>
#include <random>
#include <set>

#include "surfenum/census.hpp"
#include "surfenum/dart_map.hpp"
#include "surfenum/multigraph.hpp"
#include "surfenum/surgery.hpp"
#include "surfenum/width.hpp"

using namespace surfenum;

namespace {

// Triangle on the sphere: vertices {0,5}, {1,2}, {3,4}; edges (0,1),(2,3),(4,5)
DartMap triangle_map() {
    DartMap m;
    m.sigma = {5, 2, 1, 4, 3, 0};  // cycles (0 5)(1 2)(3 4)
    m.alpha = {1, 0, 3, 2, 5, 4};
    m.root = 0;
    return m;
}

// One vertex, two interleaved loops on the torus: sigma = (0 1 2 3),
// alpha: 0<->2, 1<->3.
DartMap torus_two_loops() {
    DartMap m;
    m.sigma = {1, 2, 3, 0};
    m.alpha = {2, 3, 0, 1};
    m.root = 0;
    return m;
}

DartMap single_edge() {
    DartMap m;
    m.sigma = {0, 1};
    m.alpha = {1, 0};
    m.root = 0;
    return m;
}

std::map<int, long> counts_by_genus(int edges, MapFlavor flavor) {
    std::map<int, long> c;
    enumerate_maps(edges, flavor, [&](const DartMap& m) { ++c[genus(m)]; });
    return c;
}

}  // namespace

TEST_CASE("trace_faces on the hand examples") {
    auto tri = triangle_map();
    auto f = trace_faces(tri);
    REQUIRE(f.size() == 2);
    CHECK(f[0].size() == 3);
    CHECK(f[1].size() == 3);

    auto t2 = torus_two_loops();
    auto f2 = trace_faces(t2);
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].size() == 4);

    auto e = single_edge();
    auto fe = trace_faces(e);
    REQUIRE(fe.size() == 1);
    CHECK(fe[0].size() == 2);
}

TEST_CASE("genus of the hand examples") {
    CHECK(genus(triangle_map()) == 0);
    CHECK(genus(torus_two_loops()) == 1);
    CHECK(genus(single_edge()) == 0);
}

TEST_CASE("dual is an involution; triangle dual is the theta map") {
    auto tri = triangle_map();
    auto d = dual(tri);
    CHECK(dual(d) == tri);
    // theta graph / triple edge: 2 vertices, 3 edges
    CHECK(vertex_orbits(d).size() == 2);
    CHECK(d.edge_count() == 3);
    CHECK(genus(d) == 0);
    // dual of a triangulation is cubic and vice versa
    CHECK(is_triangulation(tri));
    CHECK(is_cubic(d));
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(42);
    for (const DartMap& m : {triangle_map(), torus_two_loops(), single_edge()}) {
        auto code = canonical_code(m);
        CHECK(map_from_code(code) == canonicalize(m));
        for (int trial = 0; trial < 20; ++trial) {
            // random relabeling that keeps alpha arbitrary (relabel moves it)
            std::vector<int> perm(m.dart_count());
            for (int i = 0; i < m.dart_count(); ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            auto r = relabel(m, perm);
            CHECK(canonical_code(r) == code);
        }
    }
}

TEST_CASE("census: rooted map counts by edges and genus") {
    // m=1: two maps (single edge, single loop), both planar
    auto c1 = counts_by_genus(1, MapFlavor::general);
    CHECK(c1[0] == 2);
    CHECK(c1.size() == 1);
    // m=2: 9 planar + 1 toroidal
    auto c2 = counts_by_genus(2, MapFlavor::general);
    CHECK(c2[0] == 9);
    CHECK(c2[1] == 1);
    // m=3: 54 planar + 20 toroidal
    auto c3 = counts_by_genus(3, MapFlavor::general);
    CHECK(c3[0] == 54);
    CHECK(c3[1] == 20);
    // m=4: 378 / 307 / 21
    auto c4 = counts_by_genus(4, MapFlavor::general);
    CHECK(c4[0] == 378);
    CHECK(c4[1] == 307);
    CHECK(c4[2] == 21);
    // m=5: 2916 / 4280 / 966
    auto c5 = counts_by_genus(5, MapFlavor::general);
    CHECK(c5[0] == 2916);
    CHECK(c5[1] == 4280);
    CHECK(c5[2] == 966);
}

TEST_CASE("census maps are canonical, valid, and Euler-consistent") {
    long total = 0;
    enumerate_maps(4, MapFlavor::general, [&](const DartMap& m) {
        ++total;
        validate(m);
        CHECK(canonical_code(m) == m.sigma);  // emitted in canonical form
        CHECK(genus(m) >= 0);                 // Euler formula integral, checked inside
        CHECK(dual(dual(m)) == m);
        CHECK(genus(dual(m)) == genus(m));
    });
    CHECK(total == 706);
}

TEST_CASE("census partitioning is a disjoint cover") {
    std::set<std::vector<int>> all, parts;
    enumerate_maps(4, MapFlavor::general, [&](const DartMap& m) { all.insert(m.sigma); });
    long dup = 0;
    for (int p = 0; p < 5; ++p)
        enumerate_maps(4, MapFlavor::general,
                       [&](const DartMap& m) {
                           if (!parts.insert(m.sigma).second) ++dup;
                       },
                       p, 5);
    CHECK(dup == 0);
    CHECK(parts == all);
}

TEST_CASE("triangulation and cubic flavors agree with filtered general census") {
    long tri_direct = 0, cub_direct = 0;
    enumerate_maps(6, MapFlavor::triangulation, [&](const DartMap&) { ++tri_direct; });
    enumerate_maps(6, MapFlavor::cubic, [&](const DartMap&) { ++cub_direct; });
    long tri_filtered = 0, cub_filtered = 0;
    enumerate_maps(6, MapFlavor::general, [&](const DartMap& m) {
        if (is_triangulation(m)) ++tri_filtered;
        if (is_cubic(m)) ++cub_filtered;
    });
    CHECK(tri_direct == tri_filtered);
    CHECK(cub_direct == cub_filtered);
    // duals of triangulations are exactly the cubic maps
    CHECK(tri_direct == cub_direct);
}

TEST_CASE("budget is enforced") {
    CHECK_THROWS_AS(
        enumerate_maps(8, MapFlavor::general, [](const DartMap&) {}), BudgetExceeded);
}

TEST_CASE("zip surgery basics") {
    // theta map: double edges galore
    auto theta = dual(triangle_map());
    auto doubles = find_double_edges(theta);
    CHECK(doubles.size() == 3);  // C(3,2)
    for (const auto& de : doubles) {
        auto z = zip_double_edge(theta, de);
        // edge count preserved across outputs
        int total_edges = 0;
        for (const auto& p : z.pieces) total_edges += p.edge_count();
        CHECK(total_edges == theta.edge_count());
        // genus additivity
        int gsum = 0;
        for (int g : z.piece_genus) gsum += g;
        CHECK(gsum == genus(theta));
        // sphere double edges are planar
        CHECK(classify_double_edge(theta, de) == DoubleEdgeKind::planar);
        // un-zip round trip
        CHECK(unzip(z) == theta);
    }
}

TEST_CASE("zip properties over the m=6 triangulation census") {
    enumerate_maps(6, MapFlavor::triangulation, [&](const DartMap& m) {
        int g = genus(m);
        for (const auto& de : find_double_edges(m)) {
            auto z = zip_double_edge(m, de);
            CHECK(unzip(z) == m);
            int total_edges = 0, gsum = 0;
            for (const auto& p : z.pieces) total_edges += p.edge_count();
            for (int pg : z.piece_genus) gsum += pg;
            CHECK(total_edges == m.edge_count());
            if (z.separated) {
                CHECK(gsum == g);
                CHECK(z.non_root_piece_rootings.size() == 2);
                // zipped pieces of a triangulation are triangulations
                for (const auto& p : z.pieces) CHECK(is_triangulation(p));
            } else {
                // zipping a nonseparating double edge lowers the genus by one
                CHECK(z.piece_genus[0] == g - 1);
                CHECK(classify_double_edge(m, de) == DoubleEdgeKind::nonseparating);
            }
        }
    });
}

TEST_CASE("loop and loop-pair separation") {
    // the interleaved torus loops are individually nonseparating
    auto t = torus_two_loops();
    for (int l : find_loops(t)) CHECK_FALSE(cut_separates(t, {l}));
}

TEST_CASE("class predicates on hand examples") {
    auto tri = triangle_map();
    for (auto c : {TriangulationClass::S, TriangulationClass::Shat, TriangulationClass::R,
                   TriangulationClass::N, TriangulationClass::M})
        CHECK(is_in_class(tri, c));
    // non-triangulations are never in a class
    CHECK_FALSE(is_in_class(single_edge(), TriangulationClass::S));
}

TEST_CASE("Table-1 containment chains over the census") {
    for (int m_edges : {3, 6}) {
        enumerate_maps(m_edges, MapFlavor::triangulation, [&](const DartMap& m) {
            auto ec = classify_edges(m);
            bool S = is_in_class(ec, TriangulationClass::S);
            bool N = is_in_class(ec, TriangulationClass::N);
            bool R = is_in_class(ec, TriangulationClass::R);
            bool Sh = is_in_class(ec, TriangulationClass::Shat);
            bool M = is_in_class(ec, TriangulationClass::M);
            CHECK((!S || N));   // S subset of N
            CHECK((!N || R));   // N subset of R
            CHECK((!R || Sh));  // R subset of Shat
            CHECK((!N || M));   // N subset of M
            // sphere: any double edge is planar, so R = S there
            if (genus(m) == 0) CHECK(R == S);
        });
    }
}

TEST_CASE("radial map is a quadrangulation of the same surface") {
    for (const DartMap& m : {triangle_map(), torus_two_loops(), single_edge()}) {
        auto r = radial_map(m);
        validate(r);
        CHECK(genus(r) == genus(m));
        for (const auto& f : trace_faces(r)) CHECK(f.size() == 4);
        CHECK(vertex_orbits(r).size() ==
              vertex_orbits(m).size() + trace_faces(m).size());
        CHECK(r.edge_count() == m.dart_count());
    }
}

TEST_CASE("widths on hand examples") {
    CHECK_FALSE(facewidth(triangle_map()).has_value());  // sphere: infinity
    CHECK_FALSE(edgewidth(triangle_map()).has_value());
    auto t = torus_two_loops();
    auto fw = facewidth(t);
    REQUIRE(fw.has_value());
    CHECK(*fw == 1);
    auto ew = edgewidth(t);
    REQUIRE(ew.has_value());
    CHECK(*ew == 1);
    CHECK(*ew >= 1);
}

TEST_CASE("edgewidth is invariant under re-rooting") {
    auto t = torus_two_loops();
    for (int r = 0; r < t.dart_count(); ++r) {
        auto m = t;
        m.root = r;
        CHECK(edgewidth(m) == edgewidth(t));
    }
}

TEST_CASE("underlying multigraph of the theta map is Phi") {
    auto theta = dual(triangle_map());
    auto g = underlying_multigraph(theta);
    CHECK(is_phi(g));
}

TEST_CASE("triangulation class census tables") {
    // planar simple triangulations by edge count: 1, 1, 3 at m = 3, 6, 9
    // planar loopless triangulations:             1, 4, 24
    std::map<int, std::pair<long, long>> expect = {
        {3, {1, 1}}, {6, {1, 4}}, {9, {3, 24}}};
    for (auto [m_edges, pair] : expect) {
        auto t = census_triangulations(m_edges);
        CHECK(t.get(0, m_edges, "S") == Integer(pair.first));
        CHECK(t.get(0, m_edges, "Shat") == Integer(pair.second));
        // containment chain at the table level
        CHECK(t.get(0, m_edges, "S") <= t.get(0, m_edges, "N"));
        CHECK(t.get(0, m_edges, "N") <= t.get(0, m_edges, "R"));
        CHECK(t.get(0, m_edges, "R") <= t.get(0, m_edges, "Shat"));
        CHECK(t.get(0, m_edges, "Shat") <= t.get(0, m_edges, "all"));
        CHECK(t.get(0, m_edges, "N") <= t.get(0, m_edges, "M"));
        // on the sphere every double edge is planar, so R = S
        CHECK(t.get(0, m_edges, "R") == t.get(0, m_edges, "S"));
    }
}

TEST_CASE("cubic census equals dual triangulation census") {
    for (int m_edges : {3, 6}) {
        auto tri = census_triangulations(m_edges);
        auto cub = census_cubic(m_edges);
        for (int g = 0; g <= 2; ++g)
            CHECK(tri.get(g, m_edges, "all") == cub.get(g, m_edges, "cubic"));
    }
}

TEST_CASE("census cache round trip") {
    std::string dir = "cache_test_tmp";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    auto fresh = census_triangulations(6, dir);
    CHECK(std::filesystem::exists(dir + "/triangulations_m6.jsonl"));
    auto reloaded = census_triangulations(6, dir);
    CHECK(fresh.rows == reloaded.rows);
    std::filesystem::remove_all(dir);
}

TEST_CASE("facewidth equals edgewidth of the dual for cubic maps on the torus") {
    for (int m_edges : {3, 6}) {
        enumerate_maps(m_edges, MapFlavor::cubic, [&](const DartMap& m) {
            if (genus(m) != 1) return;
            CHECK(facewidth(m) == edgewidth(dual(m)));
        });
    }
}

namespace {

// Canonical key for a rooted map with one marked edge: the canonical code
// plus the canonical id (smaller canonical dart label) of the marked edge.
std::pair<std::vector<int>, int> marked_key(const DartMap& m, int marked_dart) {
    auto lab = canonical_labels(m);
    auto key = canonical_code(m);
    return {key, std::min(lab[marked_dart], lab[m.alpha[marked_dart]])};
}

}  // namespace

TEST_CASE("zipping separating double edges is a 2-to-2 correspondence") {
    // Zipping a marked separating double edge of a rooted triangulation gives
    // two images: (root piece with the zipped edge marked) x (non-root piece
    // rooted at its zipped edge, two choices).  Count-wise this is 2-to-2:
    // every such pair arises from exactly two (map, marked double edge)
    // inputs, and the image set is exactly the set of pairs of rooted
    // triangulations of the right sizes with a non-loop marked edge in the
    // first factor and a non-loop root edge in the second (cutting along a
    // double edge leaves two distinct vertex copies on each side, so a
    // zipped edge can never be a loop).  Verified exhaustively for m <= 6.
    for (int m_edges : {3, 6}) {
        // per (genus, edges): number of (map, marked non-loop edge) pairs and
        // number of rooted maps whose root edge is not a loop
        std::map<std::pair<int, int>, long> nonloop_markings, nonloop_rooted;
        for (int m1 = 3; m1 <= m_edges; m1 += 3)
            enumerate_maps(m1, MapFlavor::triangulation, [&](const DartMap& m) {
                auto vid = orbit_index(m.sigma);
                int g = genus(m);
                for (int d = 0; d < m.dart_count(); ++d)
                    if (d < m.alpha[d] && vid[d] != vid[m.alpha[d]])
                        ++nonloop_markings[{g, m1}];
                if (vid[m.root] != vid[m.alpha[m.root]]) ++nonloop_rooted[{g, m1}];
            });

        using Image = std::pair<std::pair<std::vector<int>, int>, std::vector<int>>;
        std::map<Image, int> hits;
        long marked_separating = 0;
        enumerate_maps(m_edges, MapFlavor::triangulation, [&](const DartMap& m) {
            for (const auto& de : find_double_edges(m)) {
                auto z = zip_double_edge(m, de);
                if (!z.separated) continue;
                ++marked_separating;
                // both pieces are triangulations and the mark sits in the
                // root piece: locate the zipped edge that stayed with piece 0
                for (const auto& p : z.pieces) CHECK(is_triangulation(p));
                // recover both zipped edges in the rewritten dart set and
                // find the one in the root piece via its piece coordinates
                DartMap whole;
                whole.sigma = z.sigma;
                whole.alpha = z.alpha;
                whole.root = z.root;
                // piece-0 darts: those reachable from the root
                std::vector<int> in_root(whole.dart_count(), 0);
                {
                    std::vector<int> stack = {whole.root};
                    in_root[whole.root] = 1;
                    while (!stack.empty()) {
                        int x = stack.back();
                        stack.pop_back();
                        for (int y : {whole.sigma[x], whole.alpha[x]})
                            if (!in_root[y]) {
                                in_root[y] = 1;
                                stack.push_back(y);
                            }
                    }
                }
                int zr = in_root[z.zipped.a] ? z.zipped.a : z.zipped.b;
                REQUIRE(in_root[zr]);
                // re-extract piece 0 with the same rank convention as zip
                std::vector<int> rank(whole.dart_count(), -1);
                int k = 0;
                for (int d = 0; d < whole.dart_count(); ++d)
                    if (in_root[d]) rank[d] = k++;
                DartMap p0;
                p0.sigma.resize(k);
                p0.alpha.resize(k);
                for (int d = 0; d < whole.dart_count(); ++d)
                    if (in_root[d]) {
                        p0.sigma[rank[d]] = rank[whole.sigma[d]];
                        p0.alpha[rank[d]] = rank[whole.alpha[d]];
                    }
                p0.root = rank[whole.root];
                CHECK(canonicalize(p0) == canonicalize(z.pieces[0]));
                auto first = marked_key(p0, rank[zr]);
                for (const auto& rooted : z.non_root_piece_rootings)
                    ++hits[{first, canonical_code(rooted)}];
            }
        });

        // every image pair is hit exactly twice
        for (const auto& [img, n] : hits) CHECK(n == 2);
        // and the image set is the full predicted union over all genus and
        // size splits (at m <= 6 every separating double edge is planar, so
        // one side of the split is always genus 0)
        long expected_images = 0;
        for (int m1 = 3; m1 < m_edges; m1 += 3) {
            int m2 = m_edges - m1;
            for (const auto& [gm1, marks] : nonloop_markings) {
                if (gm1.second != m1) continue;
                for (const auto& [gm2, rooted] : nonloop_rooted)
                    if (gm2.second == m2) expected_images += marks * rooted;
            }
        }
        CHECK(static_cast<long>(hits.size()) == expected_images);
        // 2-to-2: |X| = |image union|
        CHECK(marked_separating == expected_images);
        // nonplanar-separating double edges need two positive-genus pieces,
        // impossible at these sizes
        enumerate_maps(m_edges, MapFlavor::triangulation, [&](const DartMap& m) {
            for (const auto& de : find_double_edges(m))
                CHECK(classify_double_edge(m, de) != DoubleEdgeKind::nonplanar_separating);
        });
    }
}
