#include "fcslab/reports.hpp"

#include <sstream>

#include <json.hpp>

#include "fcslab/ideals.hpp"

namespace fcslab {

namespace {

const char* kScanFormatHeader = "# fcslab scan format v1";
const char* kClassifyFormatHeader = "# fcslab classify format v1";

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string set_text(const Bitset& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int x) {
        if (!first) out += ",";
        out += std::to_string(x);
        first = false;
    });
    return out + "}";
}

int intersection_property_flag(const PlaneAnalysis& analysis) {
    bool any_nonuni = false;
    for (std::size_t i = 0; i < analysis.fcs.size(); ++i) {
        if (analysis.fcs[i].unimodular_generated) continue;
        any_nonuni = true;
        for (std::size_t j = 0; j < analysis.fcs.size(); ++j) {
            if (i == j) continue;
            if ((analysis.fcs[i].vectors & analysis.fcs[j].vectors).count() - 1 < 1) return 0;
        }
    }
    return any_nonuni ? 1 : -1;
}

}  // namespace

ScanRow scan_ring(const FiniteRing& ring, const SuiteOptions& options) {
    ScanRow row;
    row.ring_name = ring.name();
    row.order = ring.order();

    PlaneAnalysis left = analyze_plane(ring, Side::Left, options.order_cap);
    PlaneAnalysis right = analyze_plane(ring, Side::Right, options.order_cap);

    row.commutative = ring.is_commutative();
    row.max_right_ideals = static_cast<int>(maximal_ideals(ring, Side::Right).size());
    row.pir_right = is_principal_ideal_ring(ring, Side::Right);
    row.local = is_local(ring);
    row.outliers_left = static_cast<int>(left.outliers.size());
    row.outliers_right = static_cast<int>(right.outliers.size());
    row.fcs_count = static_cast<int>(left.fcs.size());
    row.nonunimodular_fcs_left = left.nonunimodular_fcs_count();
    row.nonunimodular_fcs_right = right.nonunimodular_fcs_count();
    row.intersection_property = intersection_property_flag(left);
    row.theorems_pass = run_all(ring, options).all_passed();
    row.ok = true;
    return row;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream out;
    out << kScanFormatHeader << "\n";
    out << "ring,order,commutative,max_right_ideals,pir_right,local,outliers_left,"
           "outliers_right,fcs_count,nonunimodular_fcs_left,nonunimodular_fcs_right,"
           "intersection_property,theorems,error\n";
    for (const auto& r : rows) {
        out << csv_field(r.ring_name) << "," << r.order << ",";
        if (!r.ok) {
            out << ",,,,,,,,,,," << csv_field(r.error) << "\n";
            continue;
        }
        out << yes_no(r.commutative) << "," << r.max_right_ideals << "," << yes_no(r.pir_right)
            << "," << yes_no(r.local) << "," << r.outliers_left << "," << r.outliers_right
            << "," << r.fcs_count << "," << r.nonunimodular_fcs_left << ","
            << r.nonunimodular_fcs_right << ","
            << (r.intersection_property < 0 ? "na" : yes_no(r.intersection_property == 1))
            << "," << (r.theorems_pass ? "pass" : "fail") << ",\n";
    }
    return out.str();
}

std::string scan_json(const std::vector<ScanRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["ring"] = r.ring_name;
        j["order"] = r.order;
        if (!r.ok) {
            j["error"] = r.error;
        } else {
            j["commutative"] = r.commutative;
            j["max_right_ideals"] = r.max_right_ideals;
            j["pir_right"] = r.pir_right;
            j["local"] = r.local;
            j["outliers_left"] = r.outliers_left;
            j["outliers_right"] = r.outliers_right;
            j["fcs_count"] = r.fcs_count;
            j["nonunimodular_fcs_left"] = r.nonunimodular_fcs_left;
            j["nonunimodular_fcs_right"] = r.nonunimodular_fcs_right;
            if (r.intersection_property < 0)
                j["intersection_property"] = nullptr;
            else
                j["intersection_property"] = r.intersection_property == 1;
            j["theorems"] = r.theorems_pass ? "pass" : "fail";
        }
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string classification_csv(const std::string& ring_name, const PlaneAnalysis& analysis) {
    std::ostringstream out;
    out << kClassifyFormatHeader << "\n";
    out << "ring,side,a,b,class\n";
    const int n = analysis.order;
    for (int code = 0; code < n * n; ++code) {
        Vector2 v = vector_of_code(code, n);
        out << csv_field(ring_name) << "," << side_name(analysis.side) << "," << v.a << ","
            << v.b << "," << vector_class_name(analysis.classes[code]) << "\n";
    }
    out << "# summary unimodular_I=" << analysis.count(VectorClass::UnimodularTypeI)
        << " unimodular_II=" << analysis.count(VectorClass::UnimodularTypeII)
        << " covered=" << analysis.count(VectorClass::NonUnimodularCovered)
        << " outlier_free=" << analysis.count(VectorClass::OutlierFree)
        << " outlier_nonfree=" << analysis.count(VectorClass::OutlierNonFree) << "\n";
    out << "# fcs=" << analysis.fcs.size()
        << " nonunimodular_fcs=" << analysis.nonunimodular_fcs_count() << "\n";
    return out.str();
}

std::string classification_json(const std::string& ring_name, const PlaneAnalysis& analysis) {
    nlohmann::ordered_json j;
    j["ring"] = ring_name;
    j["side"] = side_name(analysis.side);
    j["order"] = analysis.order;
    nlohmann::ordered_json counts;
    counts["unimodular_I"] = analysis.count(VectorClass::UnimodularTypeI);
    counts["unimodular_II"] = analysis.count(VectorClass::UnimodularTypeII);
    counts["covered"] = analysis.count(VectorClass::NonUnimodularCovered);
    counts["outlier_free"] = analysis.count(VectorClass::OutlierFree);
    counts["outlier_nonfree"] = analysis.count(VectorClass::OutlierNonFree);
    j["counts"] = std::move(counts);
    j["fcs_count"] = analysis.fcs.size();
    j["nonunimodular_fcs_count"] = analysis.nonunimodular_fcs_count();
    return j.dump(2) + "\n";
}

std::string fcs_text(const std::string& ring_name, const PlaneAnalysis& analysis,
                     bool intersections) {
    std::ostringstream out;
    out << "ring: " << ring_name << "  side: " << side_name(analysis.side) << "\n";
    out << "fcs: " << analysis.fcs.size()
        << "  nonunimodular: " << analysis.nonunimodular_fcs_count() << "\n";
    for (std::size_t i = 0; i < analysis.fcs.size(); ++i) {
        const auto& f = analysis.fcs[i];
        out << "  [" << i << "] generator=(" << f.canonical_generator.a << ","
            << f.canonical_generator.b << ") size=" << f.vectors.count()
            << " generators=" << f.generators.size()
            << " unimodular=" << yes_no(f.unimodular_generated) << "\n";
    }
    if (intersections) {
        auto matrix = fcs_intersection_matrix(analysis);
        out << "shared vectors beyond (0,0):\n";
        for (const auto& row : matrix) {
            out << "   ";
            for (int x : row) out << " " << x;
            out << "\n";
        }
    }
    return out.str();
}

std::string info_text(const FiniteRing& ring) {
    std::ostringstream out;
    Bitset unit_set = units(ring);
    Bitset zdiv = zero_divisors(ring);
    auto left = all_ideals(ring, Side::Left);
    auto right = all_ideals(ring, Side::Right);
    auto max_left = maximal_ideals(ring, Side::Left);
    auto max_right = maximal_ideals(ring, Side::Right);
    RadicalInfo radical = jacobson_radical(ring);

    int nonprincipal_right = 0;
    for (const auto& ideal : right)
        if (!is_principal(ring, ideal)) ++nonprincipal_right;

    out << "ring: " << ring.name() << "\n";
    out << "order: " << ring.order() << "\n";
    out << "one: " << ring.one() << "\n";
    out << "commutative: " << yes_no(ring.is_commutative()) << "\n";
    out << "units (" << unit_set.count() << "): " << set_text(unit_set) << "\n";
    out << "zero divisors (" << zdiv.count() << "): " << set_text(zdiv) << "\n";
    out << "left ideals: " << left.size() << "  right ideals: " << right.size() << "\n";
    out << "maximal left ideals (" << max_left.size() << "):";
    for (const auto& m : max_left) out << " " << set_text(m.members);
    out << "\n";
    out << "maximal right ideals (" << max_right.size() << "):";
    for (const auto& m : max_right) out << " " << set_text(m.members);
    out << "\n";
    out << "non-principal right ideals: " << nonprincipal_right << "\n";
    out << "radical (" << radical.radical.members.count()
        << "): " << set_text(radical.radical.members) << "  nilpotency: " << radical.nilpotency
        << "\n";
    out << "local: " << yes_no(is_local(ring)) << "\n";
    out << "principal ideal ring: left " << yes_no(is_principal_ideal_ring(ring, Side::Left))
        << ", right " << yes_no(is_principal_ideal_ring(ring, Side::Right)) << "\n";
    return out.str();
}

std::string theorem_report_text(const TheoremReport& report, bool timings) {
    std::ostringstream out;
    out << "ring: " << report.ring_name << "\n";
    for (const auto& c : report.checks) {
        std::string status = check_status_name(c.status);
        status.resize(4, ' ');
        out << "  " << status << "  " << c.id;
        if (timings) {
            std::ostringstream ms;
            ms.setf(std::ios::fixed);
            ms.precision(2);
            ms << c.elapsed_ms;
            out << " (" << ms.str() << " ms)";
        }
        out << "\n";
        if (!c.witness.empty()) out << "        witness: " << c.witness << "\n";
        for (const auto& note : c.notes) out << "        " << note << "\n";
    }
    out << "  summary: " << report.count(CheckStatus::Pass) << " pass, "
        << report.count(CheckStatus::Fail) << " fail, "
        << report.count(CheckStatus::NotApplicable) << " n/a\n";
    return out.str();
}

namespace {

nlohmann::ordered_json report_json(const TheoremReport& report) {
    nlohmann::ordered_json j;
    j["ring"] = report.ring_name;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json cj;
        cj["id"] = c.id;
        cj["status"] = check_status_name(c.status);
        if (!c.witness.empty()) cj["witness"] = c.witness;
        if (!c.notes.empty()) cj["notes"] = c.notes;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    nlohmann::ordered_json summary;
    summary["pass"] = report.count(CheckStatus::Pass);
    summary["fail"] = report.count(CheckStatus::Fail);
    summary["not_applicable"] = report.count(CheckStatus::NotApplicable);
    j["summary"] = std::move(summary);
    return j;
}

}  // namespace

std::string theorem_report_json(const TheoremReport& report) {
    return report_json(report).dump(2) + "\n";
}

std::string theorem_reports_json(const std::vector<TheoremReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    return arr.dump(2) + "\n";
}

}  // namespace fcslab
