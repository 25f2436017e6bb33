#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcslab/ring.hpp"

namespace fcslab {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

/// Integers modulo n.
FiniteRing ring_zn(int n);

/// GF(q) for q in {2,3,4,5,7,8,9}. Non-prime q use pinned irreducible
/// polynomials: x^2+x+1 for q=4, x^3+x+1 for q=8, x^2+1 for q=9. Elements
/// are polynomial coefficient vectors read as base-p digits.
FiniteRing ring_gf(int q);

/// Upper-triangular 2x2 matrices over GF(q), q in {2,3,4}; order q^3.
/// Element (x,y,z) with x the (1,1) entry, y the (1,2) entry and z the
/// (2,2) entry is encoded as x + q*y + q^2*z.
FiniteRing ring_ternions(int q);

/// Componentwise product; element (r,s) is encoded as r*|S| + s.
FiniteRing ring_product(const FiniteRing& r, const FiniteRing& s);

/// Z_p[x]/(x^2) for p in {2,3}: local, radical generated by x, nilpotency 2.
/// Element a+bx is encoded as a + p*b.
FiniteRing ring_poly_sq(int p);

/// Z_p[x,y]/(x,y)^2 for p in {2,3}: local of order p^3 whose maximal ideal
/// needs two generators. Element a+bx+cy is encoded as a + p*b + p^2*c.
FiniteRing ring_xy_sq(int p);

/// Full 2x2 matrix ring over GF(2), order 16. Matrix [[a,b],[c,d]] is
/// encoded as a + 2b + 4c + 8d.
FiniteRing ring_m2_gf2();

/// Facts pinned per catalog entry and asserted by the test suites.
struct CatalogFacts {
    std::optional<int> unit_count;
    std::optional<int> max_right_ideals;
    std::optional<int> radical_size;
    std::optional<int> nilpotency;
    std::optional<bool> commutative;
    std::optional<bool> local;
    std::optional<bool> principal_right;
};

struct CatalogEntry {
    std::string name;
    std::string description;
    std::function<FiniteRing()> make;
    CatalogFacts facts;
};

/// The built-in rings, in the fixed order used by every report.
const std::vector<CatalogEntry>& builtin_catalog();

/// Looks a catalog entry up by name; throws ParseError when unknown.
FiniteRing catalog_ring(const std::string& name);

/// Canonical single-line JSON form: {"name","order","one","add","mul"},
/// newline-terminated. save/load round-trips are byte-identical.
std::string ring_to_json(const FiniteRing& ring);

/// Parses the canonical format. Shape and axiom checking happens in
/// validate_ring, which this calls.
FiniteRing ring_from_json(const std::string& text);

FiniteRing load_ring(const std::string& path);
void save_ring(const FiniteRing& ring, const std::string& path);

}  // namespace fcslab
