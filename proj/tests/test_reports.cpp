#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fcslab/catalog.hpp"
#include "fcslab/reports.hpp"

using namespace fcslab;

TEST_CASE("scan rows mirror the plane analysis") {
    FiniteRing t2 = ring_ternions(2);
    ScanRow row = scan_ring(t2);
    PlaneAnalysis left = analyze_plane(t2, Side::Left);
    PlaneAnalysis right = analyze_plane(t2, Side::Right);
    CHECK(row.ok);
    CHECK(row.order == 8);
    CHECK_FALSE(row.commutative);
    CHECK(row.max_right_ideals == 2);
    CHECK_FALSE(row.pir_right);
    CHECK_FALSE(row.local);
    CHECK(row.outliers_left == static_cast<int>(left.outliers.size()));
    CHECK(row.outliers_right == static_cast<int>(right.outliers.size()));
    CHECK(row.fcs_count == static_cast<int>(left.fcs.size()));
    CHECK(row.nonunimodular_fcs_left == left.nonunimodular_fcs_count());
    CHECK(row.nonunimodular_fcs_right == right.nonunimodular_fcs_count());
    CHECK(row.intersection_property == 1);
    CHECK(row.theorems_pass);
}

TEST_CASE("scan csv keeps the fixed column order and embeds errors in-row") {
    ScanRow good = scan_ring(ring_zn(4));
    ScanRow bad;
    bad.ring_name = "broken, ring";
    bad.order = 0;
    bad.error = "the \"add\" table is junk";
    std::string csv = scan_csv({good, bad});
    CHECK(csv.find("# fcslab scan format v1\n") == 0);
    CHECK(csv.find("ring,order,commutative,max_right_ideals,pir_right,local,outliers_left,"
                   "outliers_right,fcs_count,nonunimodular_fcs_left,nonunimodular_fcs_right,"
                   "intersection_property,theorems,error\n") != std::string::npos);
    CHECK(csv.find("Z4,4,yes,1,yes,yes,0,0,6,0,0,na,pass,\n") != std::string::npos);
    // quoted name and message on the error row, analysis columns empty
    CHECK(csv.find("\"broken, ring\",0,,,,,,,,,,,,\"the \"\"add\"\" table is junk\"\n") !=
          std::string::npos);
}

TEST_CASE("scan json uses null for the undefined intersection property") {
    std::string json = scan_json({scan_ring(ring_zn(4))});
    CHECK(json.find("\"intersection_property\": null") != std::string::npos);
    std::string ternions = scan_json({scan_ring(ring_ternions(2))});
    CHECK(ternions.find("\"intersection_property\": true") != std::string::npos);
}

TEST_CASE("classification outputs") {
    FiniteRing z4 = ring_zn(4);
    PlaneAnalysis analysis = analyze_plane(z4);
    std::string csv = classification_csv(z4.name(), analysis);
    CHECK(csv.find("Z4,left,1,2,unimodular_I\n") != std::string::npos);
    CHECK(csv.find("Z4,left,2,2,covered\n") != std::string::npos);
    CHECK(csv.find("# summary unimodular_I=12 unimodular_II=0 covered=4 outlier_free=0 "
                   "outlier_nonfree=0\n") != std::string::npos);
    CHECK(csv.find("# fcs=6 nonunimodular_fcs=0\n") != std::string::npos);

    std::string json = classification_json(z4.name(), analysis);
    CHECK(json.find("\"unimodular_I\": 12") != std::string::npos);
    CHECK(json.find("\"fcs_count\": 6") != std::string::npos);

    FiniteRing z6 = ring_zn(6);
    std::string z6_csv = classification_csv(z6.name(), analyze_plane(z6));
    CHECK(z6_csv.find("Z6,left,2,3,unimodular_II\n") != std::string::npos);
}

TEST_CASE("fcs listing shows generators and the intersection matrix") {
    FiniteRing t2 = ring_ternions(2);
    std::string text = fcs_text(t2.name(), analyze_plane(t2), true);
    CHECK(text.find("fcs: 21  nonunimodular: 3") != std::string::npos);
    CHECK(text.find("generator=(2,4) size=8 generators=2 unimodular=no") != std::string::npos);
    CHECK(text.find("shared vectors beyond (0,0):") != std::string::npos);
}

TEST_CASE("info text") {
    std::string text = info_text(ring_zn(4));
    CHECK(text.find("radical (2): {0,2}  nilpotency: 2") != std::string::npos);
    CHECK(text.find("local: yes") != std::string::npos);

    std::string ternions = info_text(ring_ternions(2));
    CHECK(ternions.find("maximal right ideals (2): {0,1,2,3} {0,2,4,6}") != std::string::npos);
    CHECK(ternions.find("non-principal right ideals: 1") != std::string::npos);
}

TEST_CASE("serializers are stable across repeated calls") {
    FiniteRing t2 = ring_ternions(2);
    CHECK(scan_csv({scan_ring(t2)}) == scan_csv({scan_ring(t2)}));
    CHECK(classification_csv(t2.name(), analyze_plane(t2)) ==
          classification_csv(t2.name(), analyze_plane(t2)));
    CHECK(info_text(t2) == info_text(t2));
}
