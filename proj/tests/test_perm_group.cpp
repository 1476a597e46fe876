#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixig/enumerate.hpp"
#include "fixig/group.hpp"
#include "oracles.hpp"

using namespace fixig;

TEST_CASE("perm basics") {
    Perm id = Perm::identity(4);
    Perm p = Perm::from_images(std::vector<int>{1, 0, 3, 2});
    CHECK(compose(id, p) == p);
    CHECK(compose(p, p.inverse()).is_identity());

    // (0 1) then (1 2): 0->1, 1->2, 2->0
    Perm a = Perm::from_images(std::vector<int>{1, 0, 2});
    Perm b = Perm::from_images(std::vector<int>{0, 2, 1});
    CHECK(compose(a, b) == Perm::from_images(std::vector<int>{1, 2, 0}));

    CHECK_THROWS_AS(compose(id, a), std::invalid_argument);
    CHECK_THROWS_AS(Perm::from_images(std::vector<int>{0, 0, 1}), std::invalid_argument);
    CHECK(Perm::from_line("0 2 1 3").to_line() == "0 2 1 3");
}

TEST_CASE("automorphism groups of known graphs") {
    CHECK(automorphism_group(complete_graph(3)).order() == 6);
    CHECK(automorphism_group(path_graph(4)).order() == 2);
    CHECK(automorphism_group(cycle_graph(4)).order() == 8);
    CHECK(automorphism_group(make_graph(1, {})).order() == 1);
}

TEST_CASE("group equals the all-permutations oracle") {
    auto agree = [](const Graph& g) {
        PermGroup grp = automorphism_group(g);
        auto want = oracle::aut_images(g);
        REQUIRE(grp.order() == want.size());
        for (std::uint64_t i = 0; i < grp.order(); ++i) {
            auto e = grp.element(i);
            for (int v = 0; v < g.order(); ++v) CHECK(e[v] == want[i][v]);
        }
    };
    for (const Graph& g : all_labeled_graphs(4)) agree(g);
    for (const Graph& g : connected_graphs(5)) agree(g);
    agree(cycle_graph(6));
    agree(star_graph(5));
    agree(pendant_pair_tree(2));
    agree(complete_minus_matching(5, 2));
}

TEST_CASE("groups are closed under composition and inverse") {
    for (const Graph& g : {complete_graph(4), cycle_graph(6), pendant_pair_tree(3),
                           star_graph(4), complete_minus_matching(6, 3)}) {
        PermGroup grp = automorphism_group(g);
        REQUIRE(grp.order() <= 10'000);
        auto elems = grp.elements();
        std::set<Perm> members(elems.begin(), elems.end());
        CHECK(members.count(Perm::identity(g.order())) == 1);
        for (const Perm& a : elems) {
            CHECK(members.count(a.inverse()) == 1);
            for (const Perm& b : elems) CHECK(members.count(compose(a, b)) == 1);
        }
    }
}

TEST_CASE("every element preserves the edge relation") {
    for (const Graph& g : {pendant_pair_tree(2), complete_minus_matching(6, 2),
                           join_graphs(path_graph(2), path_graph(3))}) {
        PermGroup grp = automorphism_group(g);
        for (std::uint64_t i = 0; i < grp.order(); ++i) {
            auto e = grp.element(i);
            for (int u = 0; u < g.order(); ++u)
                for (int v = u + 1; v < g.order(); ++v)
                    CHECK(g.adjacent(u, v) == g.adjacent(e[u], e[v]));
        }
    }
}

TEST_CASE("generators generate the group") {
    for (const Graph& g : {complete_graph(4), cycle_graph(5), star_graph(4),
                           pendant_pair_tree(2)}) {
        PermGroup grp = automorphism_group(g);
        std::set<Perm> closure{Perm::identity(g.order())};
        std::vector<Perm> queue{Perm::identity(g.order())};
        while (!queue.empty()) {
            Perm x = queue.back();
            queue.pop_back();
            for (const Perm& h : grp.generators()) {
                Perm y = compose(x, h);
                if (closure.insert(y).second) queue.push_back(y);
            }
        }
        CHECK(closure.size() == grp.order());
    }
}

TEST_CASE("find_automorphism_fixing") {
    Graph k3 = complete_graph(3);
    std::vector<int> zero{0};
    auto alpha = find_automorphism_fixing(k3, zero);
    REQUIRE(alpha.has_value());
    CHECK(!alpha->is_identity());
    CHECK((*alpha)(0) == 0);
    // it must be an automorphism
    for (int u = 0; u < 3; ++u)
        for (int v = u + 1; v < 3; ++v)
            CHECK(k3.adjacent(u, v) == k3.adjacent((*alpha)(u), (*alpha)(v)));

    std::vector<int> two{0, 1};
    CHECK(!find_automorphism_fixing(k3, two).has_value());
    CHECK(!find_automorphism_fixing(path_graph(4), zero).has_value());
    CHECK_THROWS_AS(find_automorphism_fixing(k3, std::vector<int>{7}), std::invalid_argument);
}

TEST_CASE("find_automorphism_fixing agrees with stabilizer triviality") {
    auto cross_check = [](const Graph& g) {
        PermGroup grp = automorphism_group(g);
        for (int mask = 0; mask < (1 << g.order()); ++mask) {
            std::vector<int> subset;
            for (int v = 0; v < g.order(); ++v)
                if ((mask >> v) & 1) subset.push_back(v);
            bool none = !find_automorphism_fixing(g, subset).has_value();
            CHECK(none == pointwise_stabilizer(grp, subset).is_trivial());
        }
    };
    for (const Graph& g : connected_graphs(4)) cross_check(g);
    cross_check(complete_graph(5));
    cross_check(star_graph(4));
    cross_check(cycle_graph(6));
    cross_check(pendant_pair_tree(2));
    cross_check(complete_minus_matching(7, 3));
}

TEST_CASE("orbits") {
    OrbitPartition k4 = orbits(automorphism_group(complete_graph(4)));
    CHECK(k4.orbits == std::vector<std::vector<int>>{{0, 1, 2, 3}});

    OrbitPartition p4 = orbits(automorphism_group(path_graph(4)));
    CHECK(p4.orbits == std::vector<std::vector<int>>{{0, 3}, {1, 2}});

    OrbitPartition star = orbits(automorphism_group(star_graph(3)));
    CHECK(star.orbits == std::vector<std::vector<int>>{{0}, {1, 2, 3}});
}

TEST_CASE("orbits from generators equal orbits from all elements") {
    for (const Graph& g : connected_graphs(5)) {
        PermGroup grp = automorphism_group(g);
        OrbitPartition via_gens = orbits(grp);
        // direct union-find over every element
        std::vector<int> parent(g.order());
        for (int v = 0; v < g.order(); ++v) parent[v] = v;
        std::function<int(int)> find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (std::uint64_t i = 0; i < grp.order(); ++i) {
            auto e = grp.element(i);
            for (int v = 0; v < g.order(); ++v) {
                int a = find(v), b = find(e[v]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v)
                CHECK((via_gens.block_of[u] == via_gens.block_of[v]) == (find(u) == find(v)));
    }
}

TEST_CASE("pointwise stabilizers") {
    PermGroup k3 = automorphism_group(complete_graph(3));
    CHECK(pointwise_stabilizer(k3, std::vector<int>{0}).order() == 2);
    CHECK(pointwise_stabilizer(k3, std::vector<int>{}).order() == k3.order());
    PermGroup c4 = automorphism_group(cycle_graph(4));
    CHECK(pointwise_stabilizer(c4, std::vector<int>{0}).order() == 2);
}

TEST_CASE("caps are enforced") {
    Caps tiny;
    tiny.aut_max_n = 4;
    CHECK_THROWS_AS(automorphism_group(complete_graph(5), tiny), CapExceeded);

    Caps low;
    low.aut_max_elements = 10;
    try {
        automorphism_group(complete_graph(5), low);
        FAIL("expected AutCapExceeded");
    } catch (const AutCapExceeded& e) {
        CHECK(e.elements_found == 10);
        CHECK(!e.partial_generators.empty());
    }
}
