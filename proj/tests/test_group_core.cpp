#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fusec/catalog.hpp"
#include "fusec/group_ops.hpp"
#include "oracles.hpp"

using namespace fusec;

namespace {

Subgroup subgroup_by_labels(const GroupPtr& g, const std::vector<std::string>& labs) {
    std::vector<int> elems;
    for (int i = 0; i < g->order; ++i)
        for (const auto& l : labs)
            if (g->label(i) == l) elems.push_back(i);
    return subgroup_from_elements(g, elems);
}

} // namespace

TEST_CASE("permutation generator closure") {
    auto s3 = from_permutation_generators(3, {{1, 2, 0}, {1, 0, 2}});
    CHECK(s3->order == 6);
    auto v4 = from_permutation_generators(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
    CHECK(v4->order == 4);
    // frozen from the products-to-fixpoint oracle
    CHECK(oracle::perm_closure_order(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}) == 12);
    auto a4 = from_permutation_generators(4, {{1, 2, 0, 3}, {1, 0, 3, 2}});
    CHECK(a4->order == 12);

    CHECK_THROWS_WITH(from_permutation_generators(3, {{0, 0, 1}}), "invalid permutation");
    CHECK_THROWS_WITH(from_permutation_generators(5, {{1, 2, 3, 4, 0}}, 4), "group too large");

    // identity sits at index 0 and the table passes the exhaustive check
    CHECK(a4->label(0) == "e");
    a4->validate();
}

TEST_CASE("table construction and validation") {
    // broken associativity must be rejected by from_cayley
    std::vector<std::vector<int>> bad{{0, 1, 2}, {1, 2, 0}, {2, 1, 0}};
    CHECK_THROWS(from_cayley(bad));
    auto c3 = from_cayley({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    CHECK(c3->order == 3);
    CHECK(c3->element_order(1) == 3);
}

TEST_CASE("subgroup lattice against subset-closure oracle") {
    auto v4 = elementary_abelian(2, 2);
    auto subs = subgroups(v4);
    CHECK(subs.size() == 5);
    auto expect = oracle::subgroup_sets_by_subsets(v4);
    REQUIRE(subs.size() == expect.size());
    for (std::size_t i = 0; i < subs.size(); ++i) CHECK(subs[i].elements == expect[i]);

    auto d8 = dihedral(8);
    auto subs8 = subgroups(d8);
    CHECK(subs8.size() == 10);
    auto expect8 = oracle::subgroup_sets_by_subsets(d8);
    REQUIRE(subs8.size() == expect8.size());
    for (std::size_t i = 0; i < subs8.size(); ++i) CHECK(subs8[i].elements == expect8[i]);

    for (int p : {2, 3, 5, 7}) CHECK(subgroups(cyclic(p)).size() == 2);

    CHECK_THROWS_WITH((void)subgroups(cyclic(65)), "lattice too large");
}

TEST_CASE("normalizer, centralizer, center") {
    auto d8 = dihedral(8);
    auto z = center(d8);
    CHECK(z.elements == std::vector<int>{0, 2});
    CHECK(centralizer(d8, z).size() == 8);

    auto s4 = symmetric4();
    auto v4n = subgroup_by_labels(s4, {"e", "(0 1)(2 3)", "(0 2)(1 3)", "(0 3)(1 2)"});
    CHECK(normalizer(s4, v4n).size() == 24);

    auto a4 = alternating4();
    CHECK(center(a4).size() == 1);

    // C_G(P) normal in N_G(P), P <= N_G(P), on every subgroup of S4
    for (const auto& p : subgroups(s4, 24)) {
        auto n = normalizer(s4, p);
        auto c = centralizer(s4, p);
        CHECK(p.is_subset_of(n));
        CHECK(c.is_subset_of(n));
        auto nm = materialize(n);
        std::vector<int> c_local;
        for (int x : c.elements) c_local.push_back(nm.from_parent[x]);
        CHECK(is_normal(nm.grp, subgroup_from_elements(nm.grp, c_local)));
    }
}

TEST_CASE("transporter") {
    auto v4 = elementary_abelian(2, 2);
    auto full = full_subgroup(v4);
    CHECK(transporter(v4, full, full).size() == 4);
    auto a = subgroup_from_elements(v4, {0, 1});
    auto b = subgroup_from_elements(v4, {0, 2});
    CHECK(transporter(v4, a, b).empty());

    auto s4 = symmetric4();
    auto p = subgroup_by_labels(s4, {"e", "(0 1)"});
    auto q = subgroup_by_labels(s4, {"e", "(2 3)"});
    auto t = transporter(s4, p, q);
    CHECK(!t.empty());
    CHECK(t == oracle::transporter_by_definition(s4, p.elements, q.elements));

    // transporter(G,P,P) agrees with the normalizer elementwise
    for (const auto& h : subgroups(s4, 24))
        CHECK(transporter(s4, h, h) == normalizer(s4, h).elements);
}

TEST_CASE("sylow subgroups") {
    auto s4 = symmetric4();
    auto syl2 = sylow_p(s4, 2);
    CHECK(syl2.size() == 8);
    CHECK(is_isomorphic(materialize(syl2).grp, dihedral(8)));

    auto c3 = cyclic(3);
    CHECK(sylow_p(c3, 3).size() == 3);
    CHECK(sylow_p(alternating4(), 5).size() == 1);

    // exact p-part, and every p-subgroup conjugates into the chosen Sylow
    for (const auto& e : corpus(16)) {
        for (int p : {2, 3, 5, 7, 11, 13}) {
            auto s = sylow_p(e.grp, p);
            CHECK(s.size() == p_part(e.grp->order, p));
            for (const auto& h : subgroups(e.grp)) {
                if (p_part(h.size(), p) != h.size() || h.size() == 1) continue;
                CHECK(!transporter(e.grp, h, s).empty());
            }
        }
    }
}

TEST_CASE("automorphism groups") {
    auto v4 = elementary_abelian(2, 2);
    auto av4 = automorphisms(full_subgroup(v4));
    CHECK(av4.size() == 6);
    CHECK(oracle::automorphism_count_by_bijections(v4) == 6);

    CHECK(automorphisms(full_subgroup(cyclic(2))).size() == 1);

    auto d8 = dihedral(8);
    auto ad8 = automorphisms(full_subgroup(d8));
    CHECK(ad8.size() == 8);
    CHECK(oracle::automorphism_count_by_bijections(d8) == 8);

    auto q8 = dicyclic(8);
    CHECK(automorphisms(full_subgroup(q8)).size() ==
          oracle::automorphism_count_by_bijections(q8));

    // closed under composition, size divides |P|!
    std::vector<std::vector<int>> perms;
    auto full = full_subgroup(d8);
    for (const auto& h : ad8) {
        std::vector<int> perm(h.images.size());
        for (std::size_t i = 0; i < h.images.size(); ++i) perm[i] = full.position_of(h.images[i]);
        perms.push_back(perm);
    }
    auto mg = group_from_maps(perms);
    CHECK(mg.grp->order == 8);
}

TEST_CASE("largest normal p-subgroup") {
    auto d8 = dihedral(8);
    CHECK(o_p(d8, 2).size() == 8);
    auto a4 = alternating4();
    auto o2 = o_p(a4, 2);
    CHECK(o2.size() == 4);
    // brute-force over normal subgroups: largest normal 2-subgroup of A4
    std::size_t best = 1;
    for (const auto& h : subgroups(a4))
        if (is_normal(a4, h) && p_part(h.size(), 2) == h.size()) best = std::max(best, h.elements.size());
    CHECK(o2.elements.size() == best);
    CHECK(o_p(symmetric4(), 3).size() == 1);

    // contained in every Sylow p-subgroup
    for (const auto& e : corpus(12))
        for (int p : {2, 3}) {
            auto op = o_p(e.grp, p);
            CHECK(op.is_subset_of(sylow_p(e.grp, p)));
        }
}

TEST_CASE("maximal p-perfect subgroup") {
    auto c2 = full_subgroup(cyclic(2));
    CHECK(max_p_perfect(c2, 2).size() == 1);
    auto c3 = full_subgroup(cyclic(3));
    CHECK(max_p_perfect(c3, 2).size() == 3);
    auto a4 = alternating4();
    CHECK(max_p_perfect(full_subgroup(a4), 2).size() == 12);
    CHECK(p_rank_of_abelianization(a4, 2) == 0);  // O^2(A4) = A4

    // fixpoint is p-perfect and contains every p-perfect subgroup
    for (const auto& e : corpus(24)) {
        if (e.grp->order > 24) continue;
        for (int p : {2, 3}) {
            auto c = full_subgroup(e.grp);
            auto m = max_p_perfect(c, p);
            CHECK(is_p_perfect(m, p));
            for (const auto& h : subgroups(e.grp))
                if (is_p_perfect(h, p)) CHECK(h.is_subset_of(m));
        }
    }
}

TEST_CASE("thompson subgroup") {
    CHECK(thompson_subgroup(elementary_abelian(2, 2)).size() == 4);
    CHECK(thompson_subgroup(dihedral(8)).size() == 8);
    CHECK(thompson_subgroup(dicyclic(8)).size() == 8);
}

TEST_CASE("quotients") {
    auto s4 = symmetric4();
    auto v4n = subgroup_by_labels(s4, {"e", "(0 1)(2 3)", "(0 2)(1 3)", "(0 3)(1 2)"});
    auto q = quotient(s4, v4n);
    CHECK(q.grp->order == 6);
    CHECK(is_isomorphic(q.grp, symmetric3()));

    auto a4 = alternating4();
    auto v4a = o_p(a4, 2);
    CHECK(is_isomorphic(quotient(a4, v4a).grp, cyclic(3)));

    CHECK_THROWS(quotient(s4, subgroup_by_labels(s4, {"e", "(0 1)"})));
}

TEST_CASE("catalog is the complete list up to order 24") {
    const int expected[] = {0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15};
    for (int n = 1; n <= 24; ++n) {
        auto batch = groups_of_order(n);
        CHECK(static_cast<int>(batch.size()) == expected[n]);
        for (const auto& e : batch) {
            CHECK(e.grp->order == n);
            e.grp->validate();
        }
        for (std::size_t i = 0; i < batch.size(); ++i)
            for (std::size_t j = i + 1; j < batch.size(); ++j)
                CHECK_FALSE(is_isomorphic(batch[i].grp, batch[j].grp));
    }
    CHECK(corpus().size() == 74);
}

TEST_CASE("catalog spot checks") {
    CHECK(is_isomorphic(metacyclic(4, 2, 3), dihedral(8)));
    CHECK_FALSE(is_isomorphic(dihedral(8), dicyclic(8)));
    CHECK(sl23()->order == 24);
    CHECK(center(sl23()).size() == 2);
    CHECK(is_isomorphic(generalized_dihedral(cyclic(9)), dihedral(18)));
    CHECK(catalog_group("S4")->order == 24);
    CHECK_THROWS(catalog_group("M11"));
}
