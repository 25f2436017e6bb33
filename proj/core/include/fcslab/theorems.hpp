#pragma once

#include <string>
#include <vector>

#include "fcslab/ideals.hpp"
#include "fcslab/plane.hpp"
#include "fcslab/ring.hpp"

namespace fcslab {

enum class CheckStatus { Pass, Fail, NotApplicable };

const char* check_status_name(CheckStatus s);

/// Outcome of one structural check. A Fail always carries a witness; notes
/// record evidence that is reported but never asserted.
struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::Pass;
    std::string witness;
    std::vector<std::string> notes;
    double elapsed_ms = 0.0;
};

struct TheoremReport {
    std::string ring_name;
    std::vector<CheckResult> checks;

    int count(CheckStatus s) const;
    bool all_passed() const { return count(CheckStatus::Fail) == 0; }
};

struct SuiteOptions {
    int order_cap = kDefaultOrderCap;
    /// Number of components for the radical check: vectors of 2..n
    /// radical entries must never generate a free cyclic submodule.
    int radical_components = 2;
};

// Individual checks. Every one is deterministic and pure; plane-scale checks
// propagate OrderCapError when the ring exceeds the cap.

/// For zero-divisor pairs, unimodularity is equivalent to separation by two
/// maximal right ideals (a in I1\I2, b in I2\I1). Exhaustive both ways.
CheckResult check_two_max_ideals(const FiniteRing& ring);

/// Scalar action on cyclic submodules: R(alpha*a, alpha*b) is contained in
/// R(a,b); on free R(a,b) equality holds exactly for unit alpha; scaling a
/// unimodular vector stays unimodular exactly for unit alpha.
CheckResult check_scaling(const FiniteRing& ring, int order_cap = kDefaultOrderCap);

/// The coverage definition of outliers agrees with the principal-ideal
/// characterization (no alpha with a,b in alpha*R and aR+bR = alpha*R),
/// on both sides.
CheckResult check_outlier_characterization(const FiniteRing& ring,
                                           int order_cap = kDefaultOrderCap);

/// No vector with all components in the radical generates a free cyclic
/// submodule (checked for 2..components entries); re-verifies nilpotency by
/// direct products.
CheckResult check_radical(const FiniteRing& ring, int components = 2);

/// In a local ring: no outlier generates an FCS, outliers are exactly the
/// pairs with a not in bR and b not in aR, and free generators are
/// unimodular. NotApplicable on non-local rings.
CheckResult check_local(const FiniteRing& ring, int order_cap = kDefaultOrderCap);

/// Two entries of one proper principal right ideal never generate an FCS;
/// in a right principal ideal ring every free generator is unimodular.
CheckResult check_principal_necessity(const FiniteRing& ring,
                                      int order_cap = kDefaultOrderCap);

/// A non-unimodular free generator requires at least two maximal right
/// ideals, one of them non-principal. The converse is recorded as evidence
/// only: the condition is known not to be sufficient.
CheckResult check_main_condition(const FiniteRing& ring, int order_cap = kDefaultOrderCap);

/// Pairs inside a non-principal right ideal, sharing no proper principal
/// right ideal and no maximal left ideal, are left outliers whose transpose
/// is right-unimodular.
CheckResult check_duality(const FiniteRing& ring, int order_cap = kDefaultOrderCap);

/// Freeness through annihilators agrees with |R(a,b)| = |R|, both sides.
CheckResult check_freeness_criterion(const FiniteRing& ring);

/// aR + bR = R agrees with the existence of x,y with a*x + b*y = 1.
CheckResult check_unimodular_combination(const FiniteRing& ring);

/// Annihilator of a union is the intersection of annihilators.
CheckResult check_annihilator_union(const FiniteRing& ring);

/// Every unimodular vector generates a free cyclic submodule, both sides.
CheckResult check_unimodular_generates_fcs(const FiniteRing& ring);

/// In an associative ring every free generator is unimodular or an outlier;
/// a covered non-unimodular free generator would contradict associativity.
CheckResult check_associativity_contrapositive(const FiniteRing& ring,
                                               int order_cap = kDefaultOrderCap);

/// Runs every registered check in registration order and assembles the
/// report. Identical rings yield identical reports (timings aside).
TheoremReport run_all(const FiniteRing& ring, const SuiteOptions& options = {});

/// Registered check ids in execution order.
const std::vector<std::string>& registered_check_ids();

}  // namespace fcslab
