#pragma once

#include <string>
#include <vector>

#include "fcslab/plane.hpp"
#include "fcslab/ring.hpp"
#include "fcslab/theorems.hpp"

namespace fcslab {

/// One row of a batch scan. Counts mirror the plane analysis of the same
/// ring; `error` is set (and the rest left blank) when a ring could not be
/// analyzed, so a scan never aborts on a single bad input.
struct ScanRow {
    std::string ring_name;
    int order = 0;
    bool ok = false;
    std::string error;

    bool commutative = false;
    int max_right_ideals = 0;
    bool pir_right = false;
    bool local = false;
    int outliers_left = 0;
    int outliers_right = 0;
    int fcs_count = 0;  // left module
    int nonunimodular_fcs_left = 0;
    int nonunimodular_fcs_right = 0;
    /// 1 = every non-unimodular FCS meets every other FCS beyond (0,0),
    /// 0 = some pair misses, -1 = no non-unimodular FCS to ask about.
    int intersection_property = -1;
    bool theorems_pass = false;
};

ScanRow scan_ring(const FiniteRing& ring, const SuiteOptions& options = {});

std::string scan_csv(const std::vector<ScanRow>& rows);
std::string scan_json(const std::vector<ScanRow>& rows);

/// Vector classification dump: one CSV row per vector plus summary comment
/// lines, or a JSON summary with per-class counts and FCS counts.
std::string classification_csv(const std::string& ring_name, const PlaneAnalysis& analysis);
std::string classification_json(const std::string& ring_name, const PlaneAnalysis& analysis);

/// FCS listing with canonical generators; optionally the pairwise
/// intersection matrix.
std::string fcs_text(const std::string& ring_name, const PlaneAnalysis& analysis,
                     bool intersections);

/// Structural summary of one ring: units, ideals, radical, flags.
std::string info_text(const FiniteRing& ring);

/// Aligned-text and JSON forms of a theorem report. Timings are opt-in and
/// text-only, keeping default output byte-stable across runs.
std::string theorem_report_text(const TheoremReport& report, bool timings = false);
std::string theorem_report_json(const TheoremReport& report);
std::string theorem_reports_json(const std::vector<TheoremReport>& reports);

}  // namespace fcslab
