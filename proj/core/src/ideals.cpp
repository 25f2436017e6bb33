#include "fcslab/ideals.hpp"

#include <algorithm>

namespace fcslab {

namespace {

Bitset principal_members(const FiniteRing& ring, int a, Side side) {
    const int n = ring.order();
    Bitset out(n);
    for (int r = 0; r < n; ++r)
        out.set(side == Side::Right ? ring.mul(a, r) : ring.mul(r, a));
    return out;
}

// One fixpoint pass: close under side-multiplication and pairwise sums.
// Returns true if the set grew.
bool closure_pass(const FiniteRing& ring, Bitset& s, Side side) {
    const int n = ring.order();
    bool grew = false;
    auto members = s.members();
    for (int x : members)
        for (int r = 0; r < n; ++r) {
            int p = side == Side::Right ? ring.mul(x, r) : ring.mul(r, x);
            if (!s.test(p)) {
                s.set(p);
                grew = true;
            }
        }
    members = s.members();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i; j < members.size(); ++j) {
            int sum = ring.add(members[i], members[j]);
            if (!s.test(sum)) {
                s.set(sum);
                grew = true;
            }
        }
    return grew;
}

// Sum of two ideals of the same side; elementwise sums already form an ideal.
Bitset ideal_sum(const FiniteRing& ring, const Bitset& a, const Bitset& b) {
    Bitset out(ring.order());
    auto bm = b.members();
    a.for_each([&](int x) {
        for (int y : bm) out.set(ring.add(x, y));
    });
    return out;
}

}  // namespace

IdealSet principal_ideal(const FiniteRing& ring, int a, Side side) {
    return IdealSet{side, principal_members(ring, a, side), {a}};
}

IdealSet ideal_closure(const FiniteRing& ring, const std::vector<int>& gens, Side side) {
    Bitset s(ring.order());
    s.set(0);
    for (int g : gens) s.set(g);
    while (closure_pass(ring, s, side)) {
    }
    return IdealSet{side, std::move(s), gens};
}

std::vector<IdealSet> all_ideals(const FiniteRing& ring, Side side) {
    const int n = ring.order();
    std::vector<Bitset> found;
    auto insert = [&](const Bitset& s) {
        for (const auto& f : found)
            if (f == s) return false;
        found.push_back(s);
        return true;
    };

    Bitset zero(n);
    zero.set(0);
    insert(zero);
    for (int a = 0; a < n; ++a) insert(principal_members(ring, a, side));

    // close under pairwise sum
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t k = found.size();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (insert(ideal_sum(ring, found[i], found[j]))) grew = true;
    }

    std::sort(found.begin(), found.end(),
              [](const Bitset& a, const Bitset& b) { return a.precedes(b); });

    std::vector<IdealSet> out;
    out.reserve(found.size());
    for (auto& f : found) out.push_back(IdealSet{side, std::move(f), {}});
    return out;
}

std::vector<IdealSet> maximal_ideals(const FiniteRing& ring, Side side) {
    auto ideals = all_ideals(ring, side);
    const int n = ring.order();
    std::vector<IdealSet> out;
    for (const auto& i : ideals) {
        if (i.members.count() == n) continue;  // improper
        bool maximal = true;
        for (const auto& j : ideals) {
            if (j.members.count() == n || j.members == i.members) continue;
            if (i.members.is_subset_of(j.members)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(i);
    }
    return out;
}

bool is_principal(const FiniteRing& ring, const IdealSet& ideal) {
    bool found = false;
    ideal.members.for_each([&](int a) {
        if (!found && principal_members(ring, a, ideal.side) == ideal.members) found = true;
    });
    return found;
}

RadicalInfo jacobson_radical(const FiniteRing& ring) {
    const int n = ring.order();

    Bitset rad(n);
    auto maximal_left = maximal_ideals(ring, Side::Left);
    if (maximal_left.empty()) {
        rad.set(0);  // order-1 ring: no proper ideals at all
    } else {
        for (int x = 0; x < n; ++x) rad.set(x);
        for (const auto& m : maximal_left) rad &= m.members;
    }

    // Quasi-regularity characterization: x is in the radical iff 1 + rx is a
    // unit for every r. Any disagreement means the tables are corrupt.
    Bitset unit_set = units(ring);
    Bitset quasi(n);
    for (int x = 0; x < n; ++x) {
        bool ok = true;
        for (int r = 0; r < n && ok; ++r)
            if (!unit_set.test(ring.add(ring.one(), ring.mul(r, x)))) ok = false;
        if (ok) quasi.set(x);
    }
    if (!(quasi == rad))
        throw IntegrityError(IntegrityError::Kind::RadicalCharacterizationMismatch,
                             "radical characterizations disagree on ring " + ring.name());

    // The radical must absorb multiplication on the right as well.
    bool right_ok = true;
    rad.for_each([&](int j) {
        for (int r = 0; r < n; ++r)
            if (!rad.test(ring.mul(j, r))) right_ok = false;
    });
    if (!right_ok)
        throw IntegrityError(IntegrityError::Kind::RadicalCharacterizationMismatch,
                             "radical is not a right ideal on ring " + ring.name());

    // Nilpotency via iterated product spans J^(k+1) = span{ j*x : j in J, x in J^k }.
    Bitset zero_only(n);
    zero_only.set(0);
    int m = 1;
    Bitset power = rad;
    while (!(power == zero_only)) {
        if (m > n)
            throw IntegrityError(IntegrityError::Kind::NotNilpotent,
                                 "radical power chain does not reach zero on ring " +
                                     ring.name());
        Bitset next(n);
        next.set(0);
        rad.for_each([&](int j) {
            power.for_each([&](int x) { next.set(ring.mul(j, x)); });
        });
        // additive span
        while (true) {
            bool grew = false;
            auto mem = next.members();
            for (std::size_t i = 0; i < mem.size(); ++i)
                for (std::size_t k = i; k < mem.size(); ++k) {
                    int s = ring.add(mem[i], mem[k]);
                    if (!next.test(s)) {
                        next.set(s);
                        grew = true;
                    }
                }
            if (!grew) break;
        }
        power = std::move(next);
        ++m;
    }

    return RadicalInfo{IdealSet{Side::Left, std::move(rad), {}}, m};
}

bool is_local(const FiniteRing& ring) {
    bool left_one = maximal_ideals(ring, Side::Left).size() == 1;
    bool right_one = maximal_ideals(ring, Side::Right).size() == 1;
    if (left_one != right_one)
        throw IntegrityError(IntegrityError::Kind::LocalSideMismatch,
                             "maximal ideal counts disagree between sides on ring " +
                                 ring.name());
    return left_one;
}

bool is_principal_ideal_ring(const FiniteRing& ring, Side side) {
    for (const auto& ideal : all_ideals(ring, side))
        if (!is_principal(ring, ideal)) return false;
    return true;
}

}  // namespace fcslab
