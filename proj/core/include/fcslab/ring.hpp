#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fcslab/bitset.hpp"

namespace fcslab {

/// Raw operation tables as parsed from a file or built by a constructor,
/// prior to any axiom checking.
struct RingData {
    std::string name;
    int order = 0;
    int one = -1;
    std::vector<std::vector<int>> add;
    std::vector<std::vector<int>> mul;
};

enum class RingAxiom {
    TableShape,      // non-square tables or out-of-range entries
    BadZeroIndex,    // index 0 is not the additive identity
    NotAbelianGroup, // addition fails commutativity/associativity/inverses
    NotAssociative,  // multiplication fails associativity
    NotDistributive, // a*(b+c) != a*b+a*c or (a+b)*c != a*c+b*c
    NoUnity,         // declared unity is not a two-sided identity
};

const char* axiom_name(RingAxiom axiom);

/// Raised when validation finds the first violated axiom; carries a witness
/// triple (unused positions are -1).
class ValidationError : public std::runtime_error {
public:
    ValidationError(RingAxiom axiom, int x, int y, int z, const std::string& detail);

    RingAxiom axiom;
    int x, y, z;
};

/// A validated finite associative unital ring of order n. Elements are the
/// indices 0..n-1, index 0 is the additive identity. Immutable after
/// construction; all analyses are pure functions over it.
class FiniteRing {
public:
    const std::string& name() const { return name_; }
    int order() const { return n_; }
    int one() const { return one_; }

    int add(int a, int b) const { return add_[a * n_ + b]; }
    int mul(int a, int b) const { return mul_[a * n_ + b]; }

    /// Additive inverse of a.
    int neg(int a) const { return neg_[a]; }

    /// Same carrier and addition, reversed multiplication. Turns every
    /// right-sided question into a left-sided one and vice versa.
    FiniteRing opposite() const;

    bool is_commutative() const;

private:
    friend FiniteRing validate_ring(const RingData& data);

    std::string name_;
    int n_ = 0;
    int one_ = -1;
    std::vector<int> add_;
    std::vector<int> mul_;
    std::vector<int> neg_;
};

/// Checks every ring axiom on the raw tables and returns the validated ring.
/// Throws ValidationError naming the first violated axiom with a witness.
FiniteRing validate_ring(const RingData& data);

/// The group of units R*: elements with a two-sided inverse. Both sides are
/// verified rather than assumed equivalent.
Bitset units(const FiniteRing& ring);

/// Complement of units(ring); by the unit/zero-divisor dichotomy of finite
/// unital rings this is exactly the set of two-sided zero divisors.
Bitset zero_divisors(const FiniteRing& ring);

}  // namespace fcslab
