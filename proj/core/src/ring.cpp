#include "fcslab/ring.hpp"

namespace fcslab {

const char* axiom_name(RingAxiom axiom) {
    switch (axiom) {
        case RingAxiom::TableShape: return "TableShape";
        case RingAxiom::BadZeroIndex: return "BadZeroIndex";
        case RingAxiom::NotAbelianGroup: return "NotAbelianGroup";
        case RingAxiom::NotAssociative: return "NotAssociative";
        case RingAxiom::NotDistributive: return "NotDistributive";
        case RingAxiom::NoUnity: return "NoUnity";
    }
    return "?";
}

ValidationError::ValidationError(RingAxiom axiom_, int x_, int y_, int z_,
                                 const std::string& detail)
    : std::runtime_error(std::string(axiom_name(axiom_)) + ": " + detail + " (witness " +
                         std::to_string(x_) + "," + std::to_string(y_) + "," +
                         std::to_string(z_) + ")"),
      axiom(axiom_), x(x_), y(y_), z(z_) {}

FiniteRing validate_ring(const RingData& data) {
    const int n = data.order;
    if (n <= 0)
        throw ValidationError(RingAxiom::TableShape, -1, -1, -1, "order must be positive");
    auto check_table = [&](const std::vector<std::vector<int>>& t, const char* which) {
        if (static_cast<int>(t.size()) != n)
            throw ValidationError(RingAxiom::TableShape, -1, -1, -1,
                                  std::string(which) + " table is not order x order");
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(t[i].size()) != n)
                throw ValidationError(RingAxiom::TableShape, i, -1, -1,
                                      std::string(which) + " table row has wrong length");
            for (int j = 0; j < n; ++j)
                if (t[i][j] < 0 || t[i][j] >= n)
                    throw ValidationError(RingAxiom::TableShape, i, j, -1,
                                          std::string(which) + " table entry out of range");
        }
    };
    check_table(data.add, "add");
    check_table(data.mul, "mul");
    if (data.one < 0 || data.one >= n)
        throw ValidationError(RingAxiom::NoUnity, data.one, -1, -1, "unity index out of range");

    const auto& add = data.add;
    const auto& mul = data.mul;

    // canonical form: index 0 is the additive identity
    for (int x = 0; x < n; ++x)
        if (add[0][x] != x || add[x][0] != x)
            throw ValidationError(RingAxiom::BadZeroIndex, x, -1, -1,
                                  "index 0 is not the additive identity");

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (add[a][b] != add[b][a])
                throw ValidationError(RingAxiom::NotAbelianGroup, a, b, -1,
                                      "addition is not commutative");

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (add[add[a][b]][c] != add[a][add[b][c]])
                    throw ValidationError(RingAxiom::NotAbelianGroup, a, b, c,
                                          "addition is not associative");

    std::vector<int> neg(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (add[a][b] == 0) {
                neg[a] = b;
                break;
            }
        if (neg[a] < 0)
            throw ValidationError(RingAxiom::NotAbelianGroup, a, -1, -1,
                                  "element has no additive inverse");
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw ValidationError(RingAxiom::NotAssociative, a, b, c,
                                          "multiplication is not associative");

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]])
                    throw ValidationError(RingAxiom::NotDistributive, a, b, c,
                                          "left distributivity fails");
                if (mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]])
                    throw ValidationError(RingAxiom::NotDistributive, a, b, c,
                                          "right distributivity fails");
            }

    for (int x = 0; x < n; ++x)
        if (mul[data.one][x] != x || mul[x][data.one] != x)
            throw ValidationError(RingAxiom::NoUnity, data.one, x, -1,
                                  "declared unity is not a two-sided identity");

    FiniteRing ring;
    ring.name_ = data.name;
    ring.n_ = n;
    ring.one_ = data.one;
    ring.add_.resize(n * n);
    ring.mul_.resize(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            ring.add_[a * n + b] = add[a][b];
            ring.mul_[a * n + b] = mul[a][b];
        }
    ring.neg_ = std::move(neg);
    return ring;
}

FiniteRing FiniteRing::opposite() const {
    FiniteRing op;
    op.name_ = name_ + "^op";
    op.n_ = n_;
    op.one_ = one_;
    op.add_ = add_;
    op.neg_ = neg_;
    op.mul_.resize(n_ * n_);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) op.mul_[a * n_ + b] = mul(b, a);
    return op;
}

bool FiniteRing::is_commutative() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

Bitset units(const FiniteRing& ring) {
    const int n = ring.order();
    Bitset out(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (ring.mul(u, v) == ring.one() && ring.mul(v, u) == ring.one()) {
                out.set(u);
                break;
            }
    return out;
}

Bitset zero_divisors(const FiniteRing& ring) {
    Bitset out(ring.order());
    Bitset u = units(ring);
    for (int x = 0; x < ring.order(); ++x)
        if (!u.test(x)) out.set(x);
    return out;
}

}  // namespace fcslab
