#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "minell/classify.hpp"
#include "minell/errors.hpp"

using namespace minell;

TEST_CASE("class construction and canonical strings") {
    CHECK(SingularityClass::el(3).str() == "El(3)");
    CHECK(SingularityClass::cu({5, 2}).str() == "Cu(2,5)");
    CHECK(SingularityClass::cu({3, 2, 2, 2, 2, 2}).str() == "Cu(2,2,2,2,2,3)");
    CHECK(SingularityClass::cu({7}).str() == "Cu(7)");
    CHECK(SingularityClass::ta(4, 3).str() == "Ta(3,4)");
    CHECK(SingularityClass::tr(4, 2, 3).str() == "Tr(2,3,4)");
    CHECK(SingularityClass::cyclic_quotient(9, 2).str() == "CQ(9/2)");
    // dihedral canonicalization identifies reflected cycles
    CHECK(SingularityClass::cu({2, 4, 3}) == SingularityClass::cu({2, 3, 4}));
    CHECK(SingularityClass::cu({2, 3, 4, 5}) == SingularityClass::cu({2, 5, 4, 3}));
}

TEST_CASE("class validation") {
    CHECK_THROWS_AS(SingularityClass::el(0), input_error);
    CHECK_THROWS_AS(SingularityClass::cu({2, 2}), input_error);
    CHECK_THROWS_AS(SingularityClass::cu({2, 1, 3}), input_error);
    CHECK_THROWS_AS(SingularityClass::cu({}), input_error);
    CHECK_THROWS_AS(SingularityClass::no(0), input_error);
    CHECK_THROWS_AS(SingularityClass::ta(1, 5), input_error);
    CHECK_THROWS_AS(SingularityClass::ta(2, 2), input_error);
    CHECK_THROWS_AS(SingularityClass::tr(2, 2, 2), input_error);
    CHECK_THROWS_AS(SingularityClass::tr(1, 3, 3), input_error);
    CHECK_THROWS_AS(SingularityClass::cyclic_quotient(6, 3), input_error);
}

TEST_CASE("Dolgachev stars normalize to named families") {
    CHECK(SingularityClass::dolgachev(2, 3, 7) == SingularityClass::no(1));
    CHECK(SingularityClass::dolgachev(7, 3, 2) == SingularityClass::no(1));
    CHECK(SingularityClass::dolgachev(2, 4, 5) == SingularityClass::ta(2, 3));
    CHECK(SingularityClass::dolgachev(3, 4, 5) == SingularityClass::tr(2, 3, 4));
    // degenerate stars are rejected
    CHECK_THROWS_AS(SingularityClass::dolgachev(2, 3, 6), input_error);
    CHECK_THROWS_AS(SingularityClass::dolgachev(2, 4, 4), input_error);
    CHECK_THROWS_AS(SingularityClass::dolgachev(3, 3, 3), input_error);
    CHECK_THROWS_AS(SingularityClass::dolgachev(2, 2, 9), input_error);
}

TEST_CASE("class expression grammar") {
    CHECK(parse_class("El(3)") == SingularityClass::el(3));
    CHECK(parse_class("Cu(2,5)") == SingularityClass::cu({2, 5}));
    CHECK(parse_class("Cu( 5 , 2 )") == SingularityClass::cu({2, 5}));
    CHECK(parse_class("No(5)") == SingularityClass::no(5));
    CHECK(parse_class("Ta(3,4)") == SingularityClass::ta(3, 4));
    CHECK(parse_class("Tr(3,3,3)") == SingularityClass::tr(3, 3, 3));
    CHECK(parse_class("D(2,3,7)") == SingularityClass::no(1));
    CHECK(parse_class("CQ(9/2)") == SingularityClass::cyclic_quotient(9, 2));
    CHECK_THROWS_AS(parse_class("El"), input_error);
    CHECK_THROWS_AS(parse_class("El()"), input_error);
    CHECK_THROWS_AS(parse_class("Xy(3)"), input_error);
    CHECK_THROWS_AS(parse_class("Ta(3)"), input_error);
    CHECK_THROWS_AS(parse_class("CQ(9)"), input_error);
    CHECK_THROWS_AS(parse_class("Cu(2,x)"), input_error);
}

TEST_CASE("graph_of shapes") {
    DualGraph no1 = graph_of(SingularityClass::no(1));
    REQUIRE(no1.size() == 4);
    CHECK(no1.vertices()[0].weight == -1);
    CHECK(no1.vertices()[3].weight == -7);
    CHECK(no1.adjacency(0, 3) == 1);
    CHECK(no1.adjacency(1, 2) == 0);

    DualGraph cu25 = graph_of(SingularityClass::cu({2, 5}));
    REQUIRE(cu25.size() == 2);
    CHECK(cu25.adjacency(0, 1) == 2);

    DualGraph cq = graph_of(SingularityClass::cyclic_quotient(9, 2));
    REQUIRE(cq.size() == 2);
    CHECK(cq.vertices()[0].weight == -5);
    CHECK(cq.vertices()[1].weight == -2);
    CHECK(cq.adjacency(0, 1) == 1);

    DualGraph el = graph_of(SingularityClass::el(4));
    CHECK(el.vertices()[0].genus == 1);
    DualGraph cu1 = graph_of(SingularityClass::cu({4}));
    CHECK(cu1.vertices()[0].nodes == 1);

    CHECK_THROWS_AS(graph_of(SingularityClass::unknown("x")), input_error);
}

TEST_CASE("degree table") {
    CHECK(degree(SingularityClass::cu({2, 5})) == 3);
    CHECK(degree(SingularityClass::cu({3})) == 3);
    CHECK(degree(SingularityClass::ta(3, 4)) == 3);
    CHECK(degree(SingularityClass::no(5)) == 5);
    CHECK(degree(SingularityClass::el(9)) == 9);
    CHECK(degree(SingularityClass::tr(2, 2, 3)) == 1);
    CHECK_THROWS_AS(degree(SingularityClass::cyclic_quotient(9, 2)), input_error);
    CHECK_THROWS_AS(degree(SingularityClass::unknown("x")), input_error);
}

TEST_CASE("classify_graph on point examples") {
    CHECK(classify_graph(graph_of(SingularityClass::cu({2, 5}))) == SingularityClass::cu({2, 5}));
    CHECK(classify_graph(graph_of(SingularityClass::no(1))) == SingularityClass::no(1));
    CHECK(classify_graph(graph_of(SingularityClass::cyclic_quotient(9, 2))) ==
          SingularityClass::cyclic_quotient(9, 2));
    // single -2 rational curve is the A1 cyclic quotient
    DualGraph a1({{"e", -2, 0, 0}}, {});
    CHECK(classify_graph(a1) == SingularityClass::cyclic_quotient(2, 1));
    // shapes outside the taxonomy
    DualGraph genus2({{"e", -3, 2, 0}}, {});
    CHECK(classify_graph(genus2).family() == Family::Unknown);
    DualGraph badpair({{"a", -1, 0, 0}, {"b", -5, 0, 0}}, {{0, 1, 2}});
    CHECK(classify_graph(badpair).family() == Family::Unknown);
    DualGraph d4({{"c", -2, 0, 0}, {"a", -2, 0, 0}, {"b", -2, 0, 0}, {"d", -2, 0, 0}},
                 {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
    CHECK(classify_graph(d4).family() == Family::Unknown);
    DualGraph nodal_genus1({{"e", -3, 1, 1}, {"f", -2, 0, 0}}, {{0, 1, 1}});
    CHECK(classify_graph(nodal_genus1).family() == Family::Unknown);
    // not negative definite is an error, not Unknown
    DualGraph cycle22({{"a", -2, 0, 0}, {"b", -2, 0, 0}}, {{0, 1, 2}});
    CHECK_THROWS_AS(classify_graph(cycle22), not_resolution_graph);
}

TEST_CASE("round trip over the family sweeps") {
    // El and Cu(r=1)
    for (long long d = 1; d <= 10; ++d) {
        CHECK(classify_graph(graph_of(SingularityClass::el(d))) == SingularityClass::el(d));
        CHECK(classify_graph(graph_of(SingularityClass::cu({d}))) == SingularityClass::cu({d}));
    }
    // No / Ta / Tr via Dolgachev leaves up to 12
    for (long long b2 = 2; b2 <= 12; ++b2)
        for (long long b3 = b2; b3 <= 12; ++b3)
            for (long long b1 = 2; b1 <= b2; ++b1) {
                if (b2 * b3 + b1 * b3 + b1 * b2 >= b1 * b2 * b3) continue;  // degenerate star
                SingularityClass c = SingularityClass::dolgachev(b1, b2, b3);
                DualGraph g = graph_of(c);
                REQUIRE(classify_graph(g) == c);
                REQUIRE(is_minimally_elliptic(g));
            }
    // CQ
    for (long long n = 2; n <= 40; ++n)
        for (long long q = 1; q < n; ++q) {
            if (std::gcd(n, q) != 1) continue;
            SingularityClass c = SingularityClass::cyclic_quotient(n, q);
            REQUIRE(classify_graph(graph_of(c)) == c);
        }
}

TEST_CASE("round trip over canonical cusp tuples, d_i <= 8, r <= 8") {
    long long checked = 0;
    for (std::size_t r = 2; r <= 8; ++r) {
        std::vector<long long> t(r, 2);
        while (true) {
            // only canonical representatives; rotations/reflections are equal classes
            bool some_big = std::any_of(t.begin(), t.end(), [](long long d) { return d > 2; });
            if (some_big && t == SingularityClass::cu(t).params()) {
                SingularityClass c = SingularityClass::cu(t);
                REQUIRE(classify_graph(graph_of(c)) == c);
                ++checked;
            }
            std::size_t p = 0;
            while (p < r && t[p] == 8) t[p++] = 2;
            if (p == r) break;
            ++t[p];
        }
    }
    CHECK(checked > 100000);
}

TEST_CASE("degree formula matches the Laufer oracle on a modest sweep") {
    auto oracle = [](const SingularityClass& c) {
        DualGraph g = graph_of(c);
        return -self_intersection(g, fundamental_cycle(g));
    };
    for (long long d = 1; d <= 8; ++d) {
        CHECK(degree(SingularityClass::el(d)) == oracle(SingularityClass::el(d)));
        CHECK(degree(SingularityClass::no(d)) == oracle(SingularityClass::no(d)));
        CHECK(degree(SingularityClass::cu({d})) == oracle(SingularityClass::cu({d})));
    }
    for (long long a = 2; a <= 6; ++a)
        for (long long b = a; b <= 6; ++b) {
            if (a + b > 4) {
                SingularityClass c = SingularityClass::ta(a, b);
                CHECK(degree(c) == oracle(c));
            }
            for (long long cc = b; cc <= 6; ++cc)
                if (cc > 2) {
                    SingularityClass c = SingularityClass::tr(a, b, cc);
                    CHECK(degree(c) == oracle(c));
                }
        }
}

TEST_CASE("family templates are negative definite and minimally elliptic, chains are not") {
    for (const auto& c : {SingularityClass::el(5), SingularityClass::cu({2, 3, 2, 4}),
                          SingularityClass::no(4), SingularityClass::ta(3, 3),
                          SingularityClass::tr(2, 3, 3)}) {
        DualGraph g = graph_of(c);
        CHECK(is_negative_definite(g));
        CHECK(is_minimally_elliptic(g));
    }
    for (long long n = 2; n <= 20; ++n)
        for (long long q = 1; q < n; ++q) {
            if (std::gcd(n, q) != 1) continue;
            DualGraph g = graph_of(SingularityClass::cyclic_quotient(n, q));
            CHECK(is_negative_definite(g));
            CHECK_FALSE(is_minimally_elliptic(g));
        }
}

TEST_CASE("predicates at the degree thresholds") {
    ClassPredicates p = predicates(SingularityClass::cu({2, 5}));
    CHECK(p.is_lci);
    CHECK(p.is_hypersurface);
    CHECK(p.el_smoothable);
    CHECK_FALSE(p.nf_component);
    CHECK_FALSE(p.fc_chi_smooth);

    p = predicates(SingularityClass::el(10));
    CHECK_FALSE(p.is_lci);
    CHECK_FALSE(p.is_hypersurface);
    CHECK_FALSE(p.el_smoothable);
    CHECK(p.nf_component);
    CHECK_FALSE(p.fc_chi_smooth);

    p = predicates(SingularityClass::el(1));
    CHECK(p.fc_chi_smooth);
    p = predicates(SingularityClass::el(2));
    CHECK(p.fc_chi_smooth);
    p = predicates(SingularityClass::el(3));
    CHECK_FALSE(p.fc_chi_smooth);

    p = predicates(SingularityClass::el(4));
    CHECK(p.is_lci);
    CHECK_FALSE(p.is_hypersurface);
    p = predicates(SingularityClass::el(9));
    CHECK(p.el_smoothable);
    CHECK_FALSE(p.nf_component);

    CHECK_THROWS_AS(predicates(SingularityClass::cyclic_quotient(9, 2)), input_error);
    CHECK_THROWS_AS(predicates(SingularityClass::unknown("x")), input_error);
}

TEST_CASE("predicate monotonicity over degrees 1..20") {
    for (long long d = 1; d <= 20; ++d) {
        ClassPredicates p = predicates(SingularityClass::el(d));
        if (p.is_hypersurface) CHECK(p.is_lci);
        if (p.nf_component) CHECK_FALSE(p.el_smoothable);
    }
}

TEST_CASE("lci criteria for cusp equations") {
    CHECK(is_lci_cusp(CuspEquation::t(3, 3, 5)));
    CHECK_FALSE(is_lci_cusp(CuspEquation::t(2, 3, 6)));  // sum exactly 1
    CHECK_FALSE(is_lci_cusp(CuspEquation::pi(2, 2, 2, 2)));  // product exactly 1
    CHECK(is_lci_cusp(CuspEquation::pi(3, 3, 3, 3)));
    CHECK_THROWS_AS(CuspEquation::t(1, 3, 5), input_error);
}

TEST_CASE("T^1 dimensions of the hypersurface cusps") {
    CHECK(t1_dim_hypersurface_cusp(CuspEquation::t(3, 3, 5)) == 12);
    CHECK(t1_dim_hypersurface_cusp(CuspEquation::t(3, 3, 4)) == 11);
    CHECK(t1_dim_hypersurface_cusp(CuspEquation::t(2, 3, 12)) == 18);
    CHECK(t1_dim_hypersurface_cusp(CuspEquation::t(2, 3, 9)) == 15);
    CHECK_THROWS_AS(t1_dim_hypersurface_cusp(CuspEquation::pi(3, 3, 3, 3)), input_error);
    CHECK_THROWS_AS(t1_dim_hypersurface_cusp(CuspEquation::t(2, 3, 6)), input_error);
}

TEST_CASE("equation strings") {
    CHECK(CuspEquation::t(3, 3, 5).equation() == "x^3+y^3+z^5-xyz");
    CHECK(CuspEquation::t(2, 3, 12).equation() == "x^2+y^3+z^12-xyz");
    CHECK(CuspEquation::t(3, 3, 5).str() == "T(3,3,5)");
}

TEST_CASE("stratum dimension formula") {
    CHECK(delta_dimension(12, 3) == 5);
    CHECK(delta_dimension(11, 3) == 4);
    CHECK(delta_dimension(20, 4) == 14);
    CHECK_THROWS_AS(delta_dimension(20, 5), input_error);
}
