#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fcslab/bitset.hpp"
#include "fcslab/ring.hpp"

namespace fcslab {

enum class Side { Left, Right };

inline const char* side_name(Side side) { return side == Side::Left ? "left" : "right"; }

/// A one-sided ideal: an additive subgroup absorbing ring multiplication on
/// the stated side. `generators` records elements whose closure is `members`
/// when the ideal came out of a generator-based construction.
struct IdealSet {
    Side side = Side::Right;
    Bitset members;
    std::vector<int> generators;
};

/// Internal-consistency failures that can only come from corrupted tables
/// (e.g. the two radical characterizations disagreeing).
class IntegrityError : public std::runtime_error {
public:
    enum class Kind { RadicalCharacterizationMismatch, NotNilpotent, LocalSideMismatch };
    IntegrityError(Kind kind, const std::string& message)
        : std::runtime_error(message), kind(kind) {}
    Kind kind;
};

/// aR (side=Right) or Ra (side=Left).
IdealSet principal_ideal(const FiniteRing& ring, int a, Side side);

/// Smallest side-ideal containing `gens`: fixpoint closure under addition and
/// side-multiplication by every ring element. Empty `gens` gives {0}.
IdealSet ideal_closure(const FiniteRing& ring, const std::vector<int>& gens, Side side);

/// Every side-ideal exactly once, sorted by (size, lexicographic member list).
/// Computed by closing the principal ideals under pairwise ideal sum; every
/// ideal of a finite unital ring is a finite sum of principal ideals.
std::vector<IdealSet> all_ideals(const FiniteRing& ring, Side side);

/// Proper side-ideals maximal under inclusion, in the all_ideals order.
std::vector<IdealSet> maximal_ideals(const FiniteRing& ring, Side side);

/// True iff some single element of I generates exactly I.members.
bool is_principal(const FiniteRing& ring, const IdealSet& ideal);

struct RadicalInfo {
    IdealSet radical;  // two-sided; stored with side=Left
    int nilpotency = 1;
};

/// Jacobson radical as the intersection of all maximal left ideals,
/// cross-checked against the quasi-regularity characterization
/// {x : 1 + rx is a unit for every r} and verified to be a right ideal.
/// nilpotency m is the least m with every m-fold product of radical
/// elements equal to zero.
RadicalInfo jacobson_radical(const FiniteRing& ring);

/// Exactly one maximal left ideal and exactly one maximal right ideal.
/// A one-sided mismatch throws IntegrityError(LocalSideMismatch).
bool is_local(const FiniteRing& ring);

bool is_principal_ideal_ring(const FiniteRing& ring, Side side);

}  // namespace fcslab
