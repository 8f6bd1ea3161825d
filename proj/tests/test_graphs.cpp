#include <doctest.h>

#include <filesystem>
#include <map>
#include <random>

#include "surfenum/graph_census.hpp"
#include "surfenum/multigraph.hpp"

using namespace surfenum;

namespace {

LabelledMultigraph phi() {
    auto g = LabelledMultigraph::empty(2);
    g.add_edge(0, 1, 3);
    return g;
}

// loop - edge - loop on two vertices
LabelledMultigraph loop_edge_loop() {
    auto g = LabelledMultigraph::empty(2);
    g.add_edge(0, 0);
    g.add_edge(1, 1);
    g.add_edge(0, 1);
    return g;
}

LabelledMultigraph k4() {
    auto g = LabelledMultigraph::empty(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
    return g;
}

LabelledMultigraph k33() {
    auto g = LabelledMultigraph::empty(6);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("compensation factor") {
    CHECK(compensation_factor(phi()) == Rational(1, 6));
    CHECK(compensation_factor(loop_edge_loop()) == Rational(1, 4));
    // disjoint union of two Phi: multiplicative
    auto two_phi = LabelledMultigraph::empty(4);
    two_phi.add_edge(0, 1, 3);
    two_phi.add_edge(2, 3, 3);
    CHECK(compensation_factor(two_phi) == Rational(1, 36));
    // K4 is simple: weight 1
    CHECK(compensation_factor(k4()) == Rational(1));
    // non-cubic input rejected
    auto bad = LabelledMultigraph::empty(2);
    bad.add_edge(0, 1, 2);
    CHECK_THROWS_AS(compensation_factor(bad), DomainError);
}

TEST_CASE("minimum genus") {
    CHECK(min_genus(phi()) == 0);
    CHECK(min_genus(k4()) == 0);
    CHECK(min_genus(k33()) == 1);
    CHECK(min_genus(loop_edge_loop()) == 0);
}

TEST_CASE("min_genus is additive over components") {
    // K33 + Phi in one multigraph
    auto g = LabelledMultigraph::empty(8);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) g.add_edge(u, v);
    g.add_edge(6, 7, 3);
    CHECK(min_genus(g) == 1);
    // two disjoint K4: still planar
    auto h = LabelledMultigraph::empty(8);
    for (int b : {0, 4})
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v) h.add_edge(b + u, b + v);
    CHECK(min_genus(h) == 0);
}

TEST_CASE("connectivity profiles") {
    auto p = connectivity_profile(phi());
    CHECK(p.connected);
    CHECK(p.two_connected);
    CHECK(p.three_edge_connected);
    CHECK_FALSE(p.has_bridge);
    CHECK_FALSE(p.three_connected);  // fewer than 4 vertices

    auto lel = connectivity_profile(loop_edge_loop());
    CHECK(lel.connected);
    CHECK(lel.has_bridge);
    CHECK_FALSE(lel.two_connected);

    auto pk4 = connectivity_profile(k4());
    CHECK(pk4.three_connected);
    CHECK(pk4.three_edge_connected);

    auto pk33 = connectivity_profile(k33());
    CHECK(pk33.three_connected);
}

TEST_CASE("3-connectivity and 3-edge-connectivity coincide for cubic n>=4") {
    for (int n : {4, 6}) {
        enumerate_cubic(n, [&](const LabelledMultigraph& g, const Integer&) {
            auto p = connectivity_profile(g);
            if (!p.connected) return;
            CHECK(p.three_connected == p.three_edge_connected);
        });
    }
}

TEST_CASE("enumerate_cubic basics") {
    CHECK_THROWS_AS(enumerate_cubic(3, [](const LabelledMultigraph&, const Integer&) {}),
                    DomainError);
    CHECK_THROWS_AS(enumerate_cubic(12, [](const LabelledMultigraph&, const Integer&) {}),
                    BudgetExceeded);

    // n=2: exactly Phi and loop-edge-loop, both connected
    std::vector<LabelledMultigraph> found;
    Rational weight_sum = 0;
    enumerate_cubic(2, [&](const LabelledMultigraph& g, const Integer& labelled) {
        found.push_back(g);
        weight_sum += compensation_factor(g) * Rational(labelled);
        CHECK(g.is_cubic());
    });
    REQUIRE(found.size() == 2);
    CHECK(weight_sum == Rational(5, 12));

    // edge counts: always 3n/2; labelled counts divide n!
    enumerate_cubic(4, [&](const LabelledMultigraph& g, const Integer& labelled) {
        CHECK(g.edge_total() == 6);
        CHECK(Integer(24) % labelled == 0);
        CHECK(canonical_form(g) == g);  // stream is canonical
    });
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(7);
    enumerate_cubic(4, [&](const LabelledMultigraph& g, const Integer&) {
        std::vector<int> perm(g.n);
        for (int i = 0; i < g.n; ++i) perm[i] = i;
        for (int t = 0; t < 5; ++t) {
            std::shuffle(perm.begin(), perm.end(), rng);
            auto h = LabelledMultigraph::empty(g.n);
            for (int u = 0; u < g.n; ++u) {
                if (g.loops[u]) h.add_edge(perm[u], perm[u], g.loops[u]);
                for (int v = u + 1; v < g.n; ++v)
                    if (g.mult[u][v]) h.add_edge(perm[u], perm[v], g.mult[u][v]);
            }
            CHECK(canonical_form(h) == g);
        }
    });
}

TEST_CASE("pairing identity") {
    CHECK(pairing_identity_check(1));
    CHECK(pairing_identity_check(2));
    CHECK(pairing_identity_check(3));
}

TEST_CASE("class counts on two vertices") {
    CHECK(class_count(GraphClass::G, 0, 2, CountMode::weighted, true) == Rational(5, 12));
    CHECK(class_count(GraphClass::G, 0, 2, CountMode::weighted, false) == Rational(1, 4));
    for (auto mode : {CountMode::weighted, CountMode::unweighted, CountMode::simple})
        CHECK(class_count(GraphClass::D, 0, 2, mode, false) == 0);
    CHECK(class_count(GraphClass::D, 0, 2, CountMode::weighted, true) == Rational(1, 6));
    // no simple cubic graph on 2 vertices
    CHECK(class_count(GraphClass::C, 1, 2, CountMode::simple, true) == 0);
}

TEST_CASE("class count containments") {
    for (int n : {2, 4, 6}) {
        for (int g = 0; g <= 1; ++g) {
            auto d = class_count(GraphClass::D, g, n, CountMode::unweighted, false);
            auto b = class_count(GraphClass::B, g, n, CountMode::unweighted, false);
            auto c = class_count(GraphClass::C, g, n, CountMode::unweighted, false);
            auto all = class_count(GraphClass::G, g, n, CountMode::unweighted, false);
            CHECK(d <= b);
            CHECK(b <= c);
            CHECK(c <= all);
            CHECK(class_count(GraphClass::C, g, n, CountMode::simple, false) <= c);
            CHECK(class_count(GraphClass::C, g, n, CountMode::weighted, false) <= c);
            // counts are cumulative in the genus
            CHECK(c <= class_count(GraphClass::C, g + 1, n, CountMode::unweighted, false));
        }
        // K4 and K33 sightings
        if (n == 4)
            CHECK(class_count(GraphClass::D, 0, 4, CountMode::simple, false) == 1);
    }
}

TEST_CASE("at most one nonplanar component fits on the torus") {
    for (int n : {4, 6}) {
        enumerate_cubic(n, [&](const LabelledMultigraph& g, const Integer&) {
            if (min_genus(g) > 1) return;
            int nonplanar = 0;
            for (const auto& comp : components(g))
                if (min_genus(induced(g, comp)) > 0) ++nonplanar;
            CHECK(nonplanar <= 1);
        });
    }
}

TEST_CASE("graph facewidth") {
    // K33 on the torus: facewidth of its best toroidal embedding
    auto fw = graph_facewidth(k33(), 1);
    REQUIRE(fw.has_value());
    CHECK(*fw >= 1);
    // planar graphs have infinite facewidth at genus 0
    CHECK_FALSE(graph_facewidth(k4(), 0).has_value());
    CHECK_THROWS_AS(graph_facewidth(k4(), 2), DomainError);
}

TEST_CASE("graph census cache round trip") {
    std::string dir = "graph_cache_tmp";
    std::filesystem::remove_all(dir);
    auto fresh = cubic_graph_census(4, dir);
    CHECK(std::filesystem::exists(dir + "/cubic_graphs_n4.jsonl"));
    auto reloaded = cubic_graph_census(4, dir);
    REQUIRE(fresh.size() == reloaded.size());
    for (size_t i = 0; i < fresh.size(); ++i) {
        CHECK(fresh[i].graph == reloaded[i].graph);
        CHECK(fresh[i].labelled == reloaded[i].labelled);
        CHECK(fresh[i].genus == reloaded[i].genus);
        CHECK(fresh[i].profile.three_connected == reloaded[i].profile.three_connected);
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("class count CSV shape") {
    auto csv = class_count_csv(1, 4, true);
    CHECK(csv.rfind("class,genus,n,mode,count_num,count_den\n", 0) == 0);
    CHECK(csv.find("G,0,2,weighted,5,12") != std::string::npos);
    CHECK(csv.find("D,0,2,weighted,1,6") != std::string::npos);
}
