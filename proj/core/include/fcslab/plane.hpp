#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fcslab/bitset.hpp"
#include "fcslab/ideals.hpp"
#include "fcslab/ring.hpp"

namespace fcslab {

/// A vector (a,b) of the rank-2 module over a ring. For the left module the
/// scalar action is alpha*(a,b) = (alpha*a, alpha*b); the right module is the
/// transposed picture and is analyzed through the opposite ring.
struct Vector2 {
    int a = 0;
    int b = 0;
    friend bool operator==(const Vector2&, const Vector2&) = default;
};

inline int vector_code(Vector2 v, int order) { return v.a * order + v.b; }
inline Vector2 vector_of_code(int code, int order) { return {code / order, code % order}; }

/// Full plane analyses are guarded by an order cap; the CLI lets the
/// FCSLAB_ORDER_CAP environment variable raise it.
inline constexpr int kDefaultOrderCap = 64;

class OrderCapError : public std::runtime_error {
public:
    OrderCapError(int order, int cap)
        : std::runtime_error("ring order " + std::to_string(order) +
                             " exceeds the analysis cap " + std::to_string(cap) +
                             " (set FCSLAB_ORDER_CAP to raise it)") {}
};

/// {x : x*a = 0 for every a in S}; a left ideal.
Bitset left_annihilator(const FiniteRing& ring, const Bitset& s);
Bitset left_annihilator(const FiniteRing& ring, int a);

/// {x : a*x = 0 for every a in S}; a right ideal.
Bitset right_annihilator(const FiniteRing& ring, const Bitset& s);
Bitset right_annihilator(const FiniteRing& ring, int a);

/// The cyclic submodule R(a,b) as a set of vector codes, with its generator
/// and freeness flag.
struct SubmoduleSet {
    Vector2 generator;
    Bitset vectors;  // indexed by vector_code
    bool free = false;
};

SubmoduleSet cyclic_submodule(const FiniteRing& ring, Vector2 v);

/// Freeness through annihilators: R(a,b) is free iff the only scalar killing
/// both entries is zero.
bool is_free(const FiniteRing& ring, Vector2 v);

/// Unimodularity through the ideal engine: aR + bR = R.
bool is_unimodular(const FiniteRing& ring, Vector2 v);

/// The (x,y) with a*x + b*y = 1, when one exists. Gives the alternate
/// unimodularity route used as a cross-check.
std::optional<std::pair<int, int>> unimodular_witness(const FiniteRing& ring, Vector2 v);

enum class UnimodularType { TypeI, TypeII, NotUnimodular };

/// Type I: unimodular with a unit entry. Type II: unimodular with both
/// entries zero divisors.
UnimodularType unimodular_type(const FiniteRing& ring, Vector2 v);

enum class VectorClass {
    UnimodularTypeI,
    UnimodularTypeII,
    NonUnimodularCovered,
    OutlierNonFree,
    OutlierFree,
};

const char* vector_class_name(VectorClass c);

/// One free cyclic submodule: its vector set, every generator, the
/// lexicographically-smallest generator, and whether any generator is
/// unimodular.
struct FcsInfo {
    Vector2 canonical_generator;
    Bitset vectors;
    std::vector<Vector2> generators;
    bool unimodular_generated = false;
};

/// Everything the plane-wide operations need, computed in one sweep:
/// per-vector class, the coverage/freeness/unimodularity bitmaps, the
/// outlier list, and the deduplicated FCS list.
struct PlaneAnalysis {
    Side side = Side::Left;
    int order = 0;
    std::vector<VectorClass> classes;  // indexed by vector_code
    Bitset unimodular_set;
    Bitset covered_set;  // vectors lying in some unimodular-generated FCS
    Bitset free_set;
    std::vector<Vector2> outliers;
    std::vector<FcsInfo> fcs;

    int count(VectorClass c) const;
    int nonunimodular_fcs_count() const;
};

PlaneAnalysis analyze_plane(const FiniteRing& ring, Side side = Side::Left,
                            int order_cap = kDefaultOrderCap);

/// Vectors lying in no FCS generated by a unimodular vector. (0,0) is never
/// an outlier: it lies in every cyclic submodule.
std::vector<Vector2> outliers(const FiniteRing& ring, Side side = Side::Left,
                              int order_cap = kDefaultOrderCap);

std::vector<FcsInfo> fcs_list(const FiniteRing& ring, Side side = Side::Left,
                              int order_cap = kDefaultOrderCap);

VectorClass classify_vector(const FiniteRing& ring, Vector2 v, Side side = Side::Left,
                            int order_cap = kDefaultOrderCap);

/// Entry (i,j) counts the vectors shared by FCS i and FCS j beyond (0,0);
/// the diagonal is |R| - 1.
std::vector<std::vector<int>> fcs_intersection_matrix(const PlaneAnalysis& analysis);

}  // namespace fcslab
