#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fcslab/catalog.hpp"
#include "fcslab/plane.hpp"
#include "support/oracles.hpp"

using namespace fcslab;

namespace {

std::set<int> as_set(const Bitset& s) {
    auto m = s.members();
    return {m.begin(), m.end()};
}

std::set<std::pair<int, int>> as_pair_set(const std::vector<Vector2>& vs) {
    std::set<std::pair<int, int>> out;
    for (auto v : vs) out.insert({v.a, v.b});
    return out;
}

std::set<std::pair<int, int>> vectors_of(const Bitset& codes, int n) {
    std::set<std::pair<int, int>> out;
    codes.for_each([&](int code) { out.insert({code / n, code % n}); });
    return out;
}

}  // namespace

TEST_CASE("left annihilators") {
    FiniteRing z6 = ring_zn(6);
    CHECK(as_set(left_annihilator(z6, 2)) == std::set<int>{0, 3});
    CHECK(left_annihilator(z6, 0).count() == 6);

    Bitset with_unit(6);
    with_unit.set(2);
    with_unit.set(5);
    CHECK(as_set(left_annihilator(z6, with_unit)) == std::set<int>{0});

    // element 2 of the ternions is [[0,1],[0,0]]; its killers are the
    // matrices with zero (1,1) entry
    FiniteRing t2 = ring_ternions(2);
    CHECK(as_set(left_annihilator(t2, 2)) == std::set<int>{0, 2, 4, 6});
}

TEST_CASE("annihilator union law matches the brute-force oracle") {
    FiniteRing t2 = ring_ternions(2);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            Bitset pair(8);
            pair.set(a);
            pair.set(b);
            CHECK(as_set(left_annihilator(t2, pair)) ==
                  oracles::left_annihilator(t2, {a, b}));
        }
}

TEST_CASE("cyclic submodules") {
    FiniteRing z4 = ring_zn(4);
    SubmoduleSet s = cyclic_submodule(z4, {1, 2});
    CHECK(vectors_of(s.vectors, 4) ==
          std::set<std::pair<int, int>>{{0, 0}, {1, 2}, {2, 0}, {3, 2}});
    CHECK(s.free);

    SubmoduleSet killed = cyclic_submodule(z4, {2, 0});
    CHECK(vectors_of(killed.vectors, 4) == std::set<std::pair<int, int>>{{0, 0}, {2, 0}});
    CHECK_FALSE(killed.free);

    FiniteRing t2 = ring_ternions(2);
    SubmoduleSet ternion = cyclic_submodule(t2, {2, 4});
    CHECK(ternion.vectors.count() == 8);
    CHECK(ternion.free);
}

TEST_CASE("freeness agrees with the orbit-size oracle on the plane") {
    for (const char* name : {"Z4", "Z6", "GF4", "T2_GF2", "Z2xZ4"}) {
        FiniteRing ring = catalog_ring(name);
        for (int a = 0; a < ring.order(); ++a)
            for (int b = 0; b < ring.order(); ++b)
                CHECK(is_free(ring, {a, b}) == oracles::is_free(ring, a, b));
    }
}

TEST_CASE("freeness examples") {
    CHECK_FALSE(is_free(ring_zn(4), {2, 2}));
    CHECK(is_free(ring_zn(6), {2, 3}));
    CHECK(is_free(ring_ternions(2), {2, 4}));
}

TEST_CASE("unimodularity via the ideal engine and via witnesses") {
    FiniteRing z6 = ring_zn(6);
    CHECK(is_unimodular(z6, {2, 3}));
    CHECK_FALSE(is_unimodular(ring_zn(4), {2, 2}));
    CHECK_FALSE(is_unimodular(ring_ternions(2), {2, 4}));

    for (const char* name : {"Z6", "GF4", "T2_GF2", "Z2xZ2"}) {
        FiniteRing ring = catalog_ring(name);
        for (int a = 0; a < ring.order(); ++a)
            for (int b = 0; b < ring.order(); ++b)
                CHECK(is_unimodular(ring, {a, b}) ==
                      oracles::unimodular_witness(ring, a, b).has_value());
    }
}

TEST_CASE("unimodular types") {
    FiniteRing z6 = ring_zn(6);
    CHECK(unimodular_type(z6, {1, 4}) == UnimodularType::TypeI);
    CHECK(unimodular_type(z6, {2, 3}) == UnimodularType::TypeII);
    CHECK(unimodular_type(ring_zn(4), {2, 0}) == UnimodularType::NotUnimodular);
}

TEST_CASE("outliers of small rings") {
    CHECK(outliers(ring_zn(4)).empty());
    CHECK(outliers(ring_gf(4)).empty());
    CHECK(oracles::outliers_left(ring_zn(4)).empty());

    // frozen from the brute-force coverage computation
    const std::set<std::pair<int, int>> expected_left = {{2, 4}, {2, 6}, {4, 2},
                                                         {4, 6}, {6, 2}, {6, 4}};
    FiniteRing t2 = ring_ternions(2);
    CHECK(as_pair_set(outliers(t2)) == expected_left);
    CHECK(oracles::outliers_left(t2) == expected_left);
}

TEST_CASE("left and right outliers of the ternions differ as sets") {
    FiniteRing t2 = ring_ternions(2);
    const std::set<std::pair<int, int>> expected_right = {{1, 2}, {1, 3}, {2, 1},
                                                          {2, 3}, {3, 1}, {3, 2}};
    CHECK(as_pair_set(outliers(t2, Side::Right)) == expected_right);
    CHECK(oracles::outliers_right(t2) == expected_right);
    CHECK(as_pair_set(outliers(t2)) != expected_right);
}

TEST_CASE("a local ring whose outliers are all non-free") {
    FiniteRing k = ring_xy_sq(2);
    const std::set<std::pair<int, int>> expected = {{2, 4}, {2, 6}, {4, 2},
                                                    {4, 6}, {6, 2}, {6, 4}};
    CHECK(as_pair_set(outliers(k)) == expected);
    CHECK(oracles::outliers_left(k) == expected);
    for (auto [a, b] : expected) {
        CHECK(classify_vector(k, {a, b}) == VectorClass::OutlierNonFree);
        CHECK_FALSE(oracles::is_free(k, a, b));
    }
    PlaneAnalysis analysis = analyze_plane(k);
    CHECK(analysis.count(VectorClass::OutlierNonFree) == 6);
    CHECK(analysis.count(VectorClass::OutlierFree) == 0);
    CHECK(analysis.nonunimodular_fcs_count() == 0);
}

TEST_CASE("outliers match the coverage oracle on a bigger non-commutative ring") {
    FiniteRing t3 = ring_ternions(3);
    CHECK(as_pair_set(outliers(t3, Side::Left)) == oracles::outliers_left(t3));
    CHECK(as_pair_set(outliers(t3, Side::Right)) == oracles::outliers_right(t3));
    // elements 3 = [[0,1],[0,0]] and 9 = [[0,0],[0,1]]: the order-27 sibling
    // of the order-8 free outlier
    CHECK(classify_vector(t3, {3, 9}) == VectorClass::OutlierFree);
}

TEST_CASE("submodule vector sets equal the oracle orbits") {
    FiniteRing t2 = ring_ternions(2);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            CHECK(vectors_of(cyclic_submodule(t2, {a, b}).vectors, 8) ==
                  oracles::submodule(t2, a, b));
}

TEST_CASE("commutative rings have the same outliers on both sides") {
    for (const char* name : {"Z4", "Z6", "GF4", "Z2xZ4", "Z3[x]_x2"}) {
        FiniteRing ring = catalog_ring(name);
        CHECK(as_pair_set(outliers(ring, Side::Left)) ==
              as_pair_set(outliers(ring, Side::Right)));
    }
}

TEST_CASE("vector classification") {
    FiniteRing z6 = ring_zn(6);
    CHECK(classify_vector(z6, {2, 3}) == VectorClass::UnimodularTypeII);
    CHECK(classify_vector(ring_zn(4), {2, 2}) == VectorClass::NonUnimodularCovered);
    CHECK(classify_vector(ring_ternions(2), {2, 4}) == VectorClass::OutlierFree);
    CHECK(classify_vector(z6, {0, 0}) == VectorClass::NonUnimodularCovered);
}

TEST_CASE("plane analysis of Z4") {
    PlaneAnalysis analysis = analyze_plane(ring_zn(4));
    CHECK(analysis.count(VectorClass::UnimodularTypeI) == 12);
    CHECK(analysis.count(VectorClass::UnimodularTypeII) == 0);
    CHECK(analysis.count(VectorClass::NonUnimodularCovered) == 4);
    CHECK(analysis.count(VectorClass::OutlierFree) == 0);
    CHECK(analysis.count(VectorClass::OutlierNonFree) == 0);
    CHECK(analysis.fcs.size() == 6);
    for (const auto& f : analysis.fcs) CHECK(f.unimodular_generated);
}

TEST_CASE("free cyclic submodule lists") {
    CHECK(analyze_plane(ring_gf(4)).fcs.size() == 5);

    PlaneAnalysis z6 = analyze_plane(ring_zn(6));
    for (const auto& f : z6.fcs) CHECK(f.unimodular_generated);

    PlaneAnalysis t2 = analyze_plane(ring_ternions(2));
    CHECK(t2.fcs.size() == 21);
    CHECK(t2.nonunimodular_fcs_count() == 3);
    std::set<std::pair<int, int>> canonical;
    for (const auto& f : t2.fcs)
        if (!f.unimodular_generated)
            canonical.insert({f.canonical_generator.a, f.canonical_generator.b});
    CHECK(canonical == std::set<std::pair<int, int>>{{2, 4}, {4, 2}, {4, 6}});
    // each non-unimodular FCS here has exactly the two generators u*(g)
    for (const auto& f : t2.fcs) CHECK(f.generators.size() == 2);
}

TEST_CASE("canonical generators are the smallest by vector code") {
    PlaneAnalysis t2 = analyze_plane(ring_ternions(2));
    for (const auto& f : t2.fcs)
        for (auto g : f.generators)
            CHECK(vector_code(f.canonical_generator, 8) <= vector_code(g, 8));
}

TEST_CASE("intersection matrix") {
    PlaneAnalysis z4 = analyze_plane(ring_zn(4));
    auto m = fcs_intersection_matrix(z4);
    for (std::size_t i = 0; i < m.size(); ++i) CHECK(m[i][i] == 3);

    // R(1,0) and R(0,1) meet only in (0,0)
    int row_10 = -1, row_01 = -1;
    for (std::size_t i = 0; i < z4.fcs.size(); ++i) {
        if (z4.fcs[i].canonical_generator == Vector2{1, 0}) row_10 = static_cast<int>(i);
        if (z4.fcs[i].canonical_generator == Vector2{0, 1}) row_01 = static_cast<int>(i);
    }
    REQUIRE(row_10 >= 0);
    REQUIRE(row_01 >= 0);
    CHECK(m[row_10][row_01] == 0);

    PlaneAnalysis t2 = analyze_plane(ring_ternions(2));
    auto mt = fcs_intersection_matrix(t2);
    for (std::size_t i = 0; i < t2.fcs.size(); ++i) {
        CHECK(mt[i][i] == 7);
        if (t2.fcs[i].unimodular_generated) continue;
        for (std::size_t j = 0; j < t2.fcs.size(); ++j)
            if (i != j) CHECK(mt[i][j] >= 1);
    }
}

TEST_CASE("the zero vector lies in every cyclic submodule") {
    FiniteRing t2 = ring_ternions(2);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            CHECK(cyclic_submodule(t2, {a, b}).vectors.test(0));
}

TEST_CASE("order cap") {
    CHECK_THROWS_AS(analyze_plane(ring_zn(6), Side::Left, 4), OrderCapError);
    CHECK_THROWS_AS(outliers(ring_zn(6), Side::Left, 5), OrderCapError);
    CHECK_NOTHROW(analyze_plane(ring_zn(6), Side::Left, 6));
}
