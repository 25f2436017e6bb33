#include "fcslab/theorems.hpp"

#include <chrono>
#include <functional>

namespace fcslab {

namespace {

std::string vec(Vector2 v) {
    return "(" + std::to_string(v.a) + "," + std::to_string(v.b) + ")";
}

std::string vec(int a, int b) { return vec(Vector2{a, b}); }

CheckResult fail(std::string witness) {
    CheckResult r;
    r.status = CheckStatus::Fail;
    r.witness = std::move(witness);
    return r;
}

}  // namespace

const char* check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::NotApplicable: return "n/a";
    }
    return "?";
}

int TheoremReport::count(CheckStatus s) const {
    int k = 0;
    for (const auto& c : checks)
        if (c.status == s) ++k;
    return k;
}

CheckResult check_two_max_ideals(const FiniteRing& ring) {
    const int n = ring.order();
    Bitset zdiv = zero_divisors(ring);
    auto maxr = maximal_ideals(ring, Side::Right);

    auto separated = [&](int a, int b) {
        for (const auto& m1 : maxr)
            for (const auto& m2 : maxr) {
                if (&m1 == &m2) continue;
                if (m1.members.test(a) && !m1.members.test(b) && m2.members.test(b) &&
                    !m2.members.test(a))
                    return true;
            }
        return false;
    };

    CheckResult r;
    int type2 = 0;
    std::string first_type2;
    for (int a = 0; a < n; ++a) {
        if (!zdiv.test(a)) continue;
        for (int b = 0; b < n; ++b) {
            if (!zdiv.test(b)) continue;
            bool uni = is_unimodular(ring, {a, b});
            if (uni != separated(a, b))
                return fail(vec(a, b) + (uni ? " unimodular but not separated"
                                             : " separated but not unimodular"));
            if (uni && ++type2 == 1) first_type2 = vec(a, b);
        }
    }
    r.notes.push_back("type II unimodular vectors: " + std::to_string(type2) +
                      (type2 ? ", first " + first_type2 : ""));
    return r;
}

CheckResult check_scaling(const FiniteRing& ring, int order_cap) {
    const int n = ring.order();
    if (n > order_cap) throw OrderCapError(n, order_cap);
    Bitset unit_set = units(ring);

    Bitset unimod(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (is_unimodular(ring, {a, b})) unimod.set(a * n + b);

    Bitset sub(n * n), scaled(n * n);
    std::vector<int> sub_codes, scaled_codes;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            sub_codes.clear();
            int sub_size = 0;
            for (int alpha = 0; alpha < n; ++alpha) {
                int code = vector_code({ring.mul(alpha, a), ring.mul(alpha, b)}, n);
                if (!sub.test(code)) {
                    sub.set(code);
                    sub_codes.push_back(code);
                    ++sub_size;
                }
            }
            bool base_free = sub_size == n;

            for (int alpha = 0; alpha < n; ++alpha) {
                int sa = ring.mul(alpha, a), sb = ring.mul(alpha, b);
                scaled_codes.clear();
                int scaled_size = 0;
                bool contained = true;
                for (int beta = 0; beta < n; ++beta) {
                    int code = vector_code({ring.mul(beta, sa), ring.mul(beta, sb)}, n);
                    if (!sub.test(code)) contained = false;
                    if (!scaled.test(code)) {
                        scaled.set(code);
                        scaled_codes.push_back(code);
                        ++scaled_size;
                    }
                }
                for (int code : scaled_codes) scaled.reset(code);

                if (!contained) {
                    for (int code : sub_codes) sub.reset(code);
                    return fail("R" + vec(sa, sb) + " not contained in R" + vec(a, b) +
                                ", alpha=" + std::to_string(alpha));
                }
                if (base_free) {
                    bool equal = scaled_size == sub_size;
                    if (equal != unit_set.test(alpha)) {
                        for (int code : sub_codes) sub.reset(code);
                        return fail("R" + vec(sa, sb) + (equal ? " = R" : " < R") + vec(a, b) +
                                    " with alpha=" + std::to_string(alpha) +
                                    (unit_set.test(alpha) ? " a unit" : " a non-unit"));
                    }
                }
                if (unimod.test(a * n + b)) {
                    if (unimod.test(sa * n + sb) != unit_set.test(alpha))
                        {
                        for (int code : sub_codes) sub.reset(code);
                        return fail("scaling " + vec(a, b) + " by alpha=" +
                                    std::to_string(alpha) + " breaks the unimodular-unit link");
                    }
                }
            }
            for (int code : sub_codes) sub.reset(code);
        }
    return {};
}

CheckResult check_outlier_characterization(const FiniteRing& ring, int order_cap) {
    for (Side side : {Side::Left, Side::Right}) {
        PlaneAnalysis analysis = analyze_plane(ring, side, order_cap);
        FiniteRing op_storage;
        const FiniteRing* work = &ring;
        if (side == Side::Right) {
            op_storage = ring.opposite();
            work = &op_storage;
        }
        const int n = work->order();

        std::vector<Bitset> principal(n);
        for (int a = 0; a < n; ++a)
            principal[a] = principal_ideal(*work, a, Side::Right).members;

        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Bitset sum(n);
                principal[a].for_each([&](int x) {
                    principal[b].for_each([&](int y) { sum.set(work->add(x, y)); });
                });
                bool characterized_covered = false;
                for (int alpha = 0; alpha < n && !characterized_covered; ++alpha)
                    if (principal[alpha].test(a) && principal[alpha].test(b) &&
                        principal[alpha] == sum)
                        characterized_covered = true;
                bool covered = analysis.covered_set.test(a * n + b);
                if (covered != characterized_covered)
                    return fail(std::string(side_name(side)) + " vector " + vec(a, b) +
                                (covered ? " covered but characterized as outlier"
                                         : " outlier but characterized as covered"));
            }
    }
    return {};
}

CheckResult check_radical(const FiniteRing& ring, int components) {
    const int n = ring.order();
    RadicalInfo info = jacobson_radical(ring);
    const Bitset& rad = info.radical.members;
    auto rad_members = rad.members();

    // nilpotency re-verified on raw products: every m-fold product of radical
    // elements is zero and, for m > 1, some (m-1)-fold product is not
    Bitset zero_only(n);
    zero_only.set(0);
    Bitset power = rad;
    for (int k = 2; k <= info.nilpotency; ++k) {
        Bitset next(n);
        power.for_each([&](int p) {
            for (int j : rad_members) next.set(ring.mul(p, j));
        });
        power = std::move(next);
    }
    if (!(power == zero_only))
        return fail("an " + std::to_string(info.nilpotency) +
                    "-fold product of radical elements is nonzero");
    if (info.nilpotency > 1) {
        Bitset prev = rad;
        for (int k = 2; k <= info.nilpotency - 1; ++k) {
            Bitset next(n);
            prev.for_each([&](int p) {
                for (int j : rad_members) next.set(ring.mul(p, j));
            });
            prev = std::move(next);
        }
        if (prev == zero_only)
            return fail("all " + std::to_string(info.nilpotency - 1) +
                        "-fold products of radical elements vanish already");
    }

    // no vector over the radical generates a free cyclic submodule
    std::vector<Bitset> ann(rad_members.size());
    for (std::size_t i = 0; i < rad_members.size(); ++i)
        ann[i] = left_annihilator(ring, rad_members[i]);

    CheckResult r;
    for (int k = 2; k <= components; ++k) {
        std::vector<int> tuple(k);
        std::function<bool(int, const Bitset&)> sweep = [&](int depth,
                                                            const Bitset& killers) -> bool {
            if (depth == k) return killers.count() > 1;
            for (std::size_t i = 0; i < rad_members.size(); ++i) {
                tuple[depth] = rad_members[i];
                if (!sweep(depth + 1, killers & ann[i])) return false;
            }
            return true;
        };
        Bitset all(n);
        for (int x = 0; x < n; ++x) all.set(x);
        if (!sweep(0, all)) {
            std::string witness;
            for (int x : tuple) witness += (witness.empty() ? "" : ",") + std::to_string(x);
            return fail("radical vector (" + witness + ") generates a free cyclic submodule");
        }
    }
    r.notes.push_back("radical size " + std::to_string(rad.count()) + ", nilpotency " +
                      std::to_string(info.nilpotency));
    return r;
}

CheckResult check_local(const FiniteRing& ring, int order_cap) {
    if (!is_local(ring)) {
        CheckResult r;
        r.status = CheckStatus::NotApplicable;
        r.notes.push_back("ring is not local");
        return r;
    }
    const int n = ring.order();
    PlaneAnalysis analysis = analyze_plane(ring, Side::Left, order_cap);

    std::vector<Bitset> principal(n);
    for (int a = 0; a < n; ++a) principal[a] = principal_ideal(ring, a, Side::Right).members;

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int code = a * n + b;
            bool outlier = !analysis.covered_set.test(code);
            if (outlier && analysis.free_set.test(code))
                return fail("outlier " + vec(a, b) + " generates a free cyclic submodule");
            bool disjoint = !principal[b].test(a) && !principal[a].test(b);
            if (outlier != disjoint)
                return fail(vec(a, b) + (outlier ? " outlier despite lying in aR or bR"
                                                 : " covered despite a not in bR, b not in aR"));
            if (analysis.free_set.test(code) && !analysis.unimodular_set.test(code))
                return fail("free generator " + vec(a, b) + " is not unimodular");
        }
    CheckResult r;
    r.notes.push_back("outliers: " + std::to_string(analysis.outliers.size()));
    return r;
}

CheckResult check_principal_necessity(const FiniteRing& ring, int order_cap) {
    const int n = ring.order();
    PlaneAnalysis analysis = analyze_plane(ring, Side::Left, order_cap);

    std::vector<Bitset> seen;
    for (int alpha = 0; alpha < n; ++alpha) {
        Bitset p = principal_ideal(ring, alpha, Side::Right).members;
        if (p.count() == n) continue;  // proper ideals only
        bool dup = false;
        for (const auto& s : seen)
            if (s == p) {
                dup = true;
                break;
            }
        if (dup) continue;
        seen.push_back(p);
        auto members = p.members();
        for (int a : members)
            for (int b : members)
                if (analysis.free_set.test(a * n + b))
                    return fail(vec(a, b) + " free while both entries lie in the principal right ideal of " +
                                std::to_string(alpha));
    }

    CheckResult r;
    if (is_principal_ideal_ring(ring, Side::Right)) {
        for (int code = 0; code < n * n; ++code)
            if (analysis.free_set.test(code) && !analysis.unimodular_set.test(code))
                return fail("free generator " + vec(vector_of_code(code, n)) +
                            " is not unimodular in a right principal ideal ring");
        r.notes.push_back("right principal ideal ring: free generators all unimodular");
    } else {
        r.notes.push_back("not a right principal ideal ring; second clause not applicable");
    }
    return r;
}

CheckResult check_main_condition(const FiniteRing& ring, int order_cap) {
    const int n = ring.order();
    PlaneAnalysis analysis = analyze_plane(ring, Side::Left, order_cap);

    int nu_free = 0;
    Vector2 first{};
    for (int code = 0; code < n * n; ++code)
        if (analysis.free_set.test(code) && !analysis.unimodular_set.test(code)) {
            if (nu_free == 0) first = vector_of_code(code, n);
            ++nu_free;
        }

    std::size_t max_right = maximal_ideals(ring, Side::Right).size();
    bool has_nonprincipal = false;
    for (const auto& ideal : all_ideals(ring, Side::Right))
        if (!is_principal(ring, ideal)) {
            has_nonprincipal = true;
            break;
        }

    CheckResult r;
    if (nu_free > 0) {
        if (max_right < 2 || !has_nonprincipal)
            return fail("non-unimodular free generator " + vec(first) + " but " +
                        std::to_string(max_right) + " maximal right ideal(s), non-principal: " +
                        (has_nonprincipal ? "yes" : "no"));
        r.notes.push_back("non-unimodular free generators: " + std::to_string(nu_free) +
                          ", first " + vec(first));
    } else if (max_right >= 2 && has_nonprincipal) {
        r.notes.push_back("necessary condition holds yet no non-unimodular free generator "
                          "(converse evidence, not a failure)");
    } else {
        r.notes.push_back("no non-unimodular free generators");
    }
    return r;
}

CheckResult check_duality(const FiniteRing& ring, int order_cap) {
    const int n = ring.order();
    FiniteRing op = ring.opposite();
    PlaneAnalysis analysis = analyze_plane(ring, Side::Left, order_cap);

    std::vector<Bitset> nonprincipal_right;
    for (const auto& ideal : all_ideals(ring, Side::Right))
        if (!is_principal(ring, ideal)) nonprincipal_right.push_back(ideal.members);

    std::vector<Bitset> proper_principal;
    for (int alpha = 0; alpha < n; ++alpha) {
        Bitset p = principal_ideal(ring, alpha, Side::Right).members;
        if (p.count() < n) proper_principal.push_back(std::move(p));
    }

    std::vector<Bitset> max_left;
    for (const auto& m : maximal_ideals(ring, Side::Left)) max_left.push_back(m.members);

    auto pair_in_any = [](const std::vector<Bitset>& sets, int a, int b) {
        for (const auto& s : sets)
            if (s.test(a) && s.test(b)) return true;
        return false;
    };

    int hypothesis_pairs = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!pair_in_any(nonprincipal_right, a, b)) continue;
            if (pair_in_any(proper_principal, a, b)) continue;
            if (pair_in_any(max_left, a, b)) continue;
            ++hypothesis_pairs;
            if (analysis.covered_set.test(a * n + b))
                return fail(vec(a, b) + " satisfies the ideal conditions but is not a left outlier");
            if (!is_unimodular(op, {a, b}))
                return fail(vec(a, b) + " satisfies the ideal conditions but its transpose is not right-unimodular");
        }

    PlaneAnalysis right = analyze_plane(ring, Side::Right, order_cap);
    CheckResult r;
    r.notes.push_back("pairs matching the hypothesis: " + std::to_string(hypothesis_pairs));
    r.notes.push_back("left outliers: " + std::to_string(analysis.outliers.size()) +
                      ", right outliers: " + std::to_string(right.outliers.size()) +
                      (analysis.outliers == right.outliers ? " (same sets)"
                                                           : " (different sets)"));
    return r;
}

CheckResult check_freeness_criterion(const FiniteRing& ring) {
    const FiniteRing op = ring.opposite();
    for (const FiniteRing* r : {&ring, &op}) {
        const int n = r->order();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                SubmoduleSet s = cyclic_submodule(*r, {a, b});
                if (s.free != (s.vectors.count() == n))
                    return fail(std::string(r == &ring ? "left" : "right") + " vector " +
                                vec(a, b) + ": annihilator criterion disagrees with orbit size");
            }
    }
    return {};
}

CheckResult check_unimodular_combination(const FiniteRing& ring) {
    const int n = ring.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bool by_ideal = is_unimodular(ring, {a, b});
            bool by_witness = unimodular_witness(ring, {a, b}).has_value();
            if (by_ideal != by_witness)
                return fail(vec(a, b) + (by_ideal ? ": aR+bR = R but no ax+by = 1"
                                                  : ": ax+by = 1 exists but aR+bR < R"));
        }
    return {};
}

CheckResult check_annihilator_union(const FiniteRing& ring) {
    const int n = ring.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Bitset pair(n);
            pair.set(a);
            pair.set(b);
            if (!((left_annihilator(ring, a) & left_annihilator(ring, b)) ==
                  left_annihilator(ring, pair)))
                return fail("singleton sets {" + std::to_string(a) + "}, {" +
                            std::to_string(b) + "}");
        }
    // same law on principal-ideal subsets
    std::vector<Bitset> principal(n);
    for (int a = 0; a < n; ++a) principal[a] = principal_ideal(ring, a, Side::Right).members;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Bitset un = principal[a] | principal[b];
            if (!((left_annihilator(ring, principal[a]) & left_annihilator(ring, principal[b])) ==
                  left_annihilator(ring, un)))
                return fail("principal-ideal subsets of " + std::to_string(a) + " and " +
                            std::to_string(b));
        }
    return {};
}

CheckResult check_unimodular_generates_fcs(const FiniteRing& ring) {
    const FiniteRing op = ring.opposite();
    for (const FiniteRing* r : {&ring, &op}) {
        const int n = r->order();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (is_unimodular(*r, {a, b}) && !is_free(*r, {a, b}))
                    return fail(std::string(r == &ring ? "left" : "right") +
                                " unimodular vector " + vec(a, b) + " is not free");
    }
    return {};
}

CheckResult check_associativity_contrapositive(const FiniteRing& ring, int order_cap) {
    for (Side side : {Side::Left, Side::Right}) {
        PlaneAnalysis analysis = analyze_plane(ring, side, order_cap);
        const int n = analysis.order;
        for (int code = 0; code < n * n; ++code)
            if (analysis.free_set.test(code) && !analysis.unimodular_set.test(code) &&
                analysis.covered_set.test(code))
                return fail(std::string(side_name(side)) + " vector " +
                            vec(vector_of_code(code, n)) +
                            " is free, covered and non-unimodular");
    }
    return {};
}

namespace {

struct CheckDef {
    const char* id;
    std::function<CheckResult(const FiniteRing&, const SuiteOptions&)> run;
};

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = {
        {"freeness_annihilator_criterion",
         [](const FiniteRing& r, const SuiteOptions&) { return check_freeness_criterion(r); }},
        {"unimodular_linear_combination",
         [](const FiniteRing& r, const SuiteOptions&) { return check_unimodular_combination(r); }},
        {"annihilator_union",
         [](const FiniteRing& r, const SuiteOptions&) { return check_annihilator_union(r); }},
        {"unimodular_generates_fcs",
         [](const FiniteRing& r, const SuiteOptions&) { return check_unimodular_generates_fcs(r); }},
        {"two_maximal_ideals",
         [](const FiniteRing& r, const SuiteOptions&) { return check_two_max_ideals(r); }},
        {"scaling_action",
         [](const FiniteRing& r, const SuiteOptions& o) { return check_scaling(r, o.order_cap); }},
        {"outlier_characterization",
         [](const FiniteRing& r, const SuiteOptions& o) {
             return check_outlier_characterization(r, o.order_cap);
         }},
        {"outlier_duality",
         [](const FiniteRing& r, const SuiteOptions& o) { return check_duality(r, o.order_cap); }},
        {"radical_vectors_not_free",
         [](const FiniteRing& r, const SuiteOptions& o) {
             return check_radical(r, o.radical_components);
         }},
        {"local_ring_outliers",
         [](const FiniteRing& r, const SuiteOptions& o) { return check_local(r, o.order_cap); }},
        {"principal_ideal_necessity",
         [](const FiniteRing& r, const SuiteOptions& o) {
             return check_principal_necessity(r, o.order_cap);
         }},
        {"main_necessary_condition",
         [](const FiniteRing& r, const SuiteOptions& o) {
             return check_main_condition(r, o.order_cap);
         }},
        {"associativity_contrapositive",
         [](const FiniteRing& r, const SuiteOptions& o) {
             return check_associativity_contrapositive(r, o.order_cap);
         }},
    };
    return defs;
}

}  // namespace

TheoremReport run_all(const FiniteRing& ring, const SuiteOptions& options) {
    TheoremReport report;
    report.ring_name = ring.name();
    for (const auto& def : registry()) {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult result = def.run(ring, options);
        auto t1 = std::chrono::steady_clock::now();
        result.id = def.id;
        result.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        report.checks.push_back(std::move(result));
    }
    return report;
}

const std::vector<std::string>& registered_check_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& def : registry()) out.emplace_back(def.id);
        return out;
    }();
    return ids;
}

}  // namespace fcslab
