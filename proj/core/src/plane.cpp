#include "fcslab/plane.hpp"

#include <unordered_map>

namespace fcslab {

Bitset left_annihilator(const FiniteRing& ring, const Bitset& s) {
    const int n = ring.order();
    auto members = s.members();
    Bitset out(n);
    for (int x = 0; x < n; ++x) {
        bool kills = true;
        for (int a : members)
            if (ring.mul(x, a) != 0) {
                kills = false;
                break;
            }
        if (kills) out.set(x);
    }
    return out;
}

Bitset left_annihilator(const FiniteRing& ring, int a) {
    Bitset s(ring.order());
    s.set(a);
    return left_annihilator(ring, s);
}

Bitset right_annihilator(const FiniteRing& ring, const Bitset& s) {
    const int n = ring.order();
    auto members = s.members();
    Bitset out(n);
    for (int x = 0; x < n; ++x) {
        bool kills = true;
        for (int a : members)
            if (ring.mul(a, x) != 0) {
                kills = false;
                break;
            }
        if (kills) out.set(x);
    }
    return out;
}

Bitset right_annihilator(const FiniteRing& ring, int a) {
    Bitset s(ring.order());
    s.set(a);
    return right_annihilator(ring, s);
}

SubmoduleSet cyclic_submodule(const FiniteRing& ring, Vector2 v) {
    const int n = ring.order();
    SubmoduleSet out;
    out.generator = v;
    out.vectors = Bitset(n * n);
    for (int alpha = 0; alpha < n; ++alpha)
        out.vectors.set(vector_code({ring.mul(alpha, v.a), ring.mul(alpha, v.b)}, n));
    out.free = is_free(ring, v);
    return out;
}

bool is_free(const FiniteRing& ring, Vector2 v) {
    Bitset both = left_annihilator(ring, v.a) & left_annihilator(ring, v.b);
    return both.count() == 1;  // the intersection always contains 0
}

bool is_unimodular(const FiniteRing& ring, Vector2 v) {
    return ideal_closure(ring, {v.a, v.b}, Side::Right).members.count() == ring.order();
}

std::optional<std::pair<int, int>> unimodular_witness(const FiniteRing& ring, Vector2 v) {
    const int n = ring.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (ring.add(ring.mul(v.a, x), ring.mul(v.b, y)) == ring.one())
                return std::make_pair(x, y);
    return std::nullopt;
}

UnimodularType unimodular_type(const FiniteRing& ring, Vector2 v) {
    if (!is_unimodular(ring, v)) return UnimodularType::NotUnimodular;
    Bitset u = units(ring);
    return (u.test(v.a) || u.test(v.b)) ? UnimodularType::TypeI : UnimodularType::TypeII;
}

const char* vector_class_name(VectorClass c) {
    switch (c) {
        case VectorClass::UnimodularTypeI: return "unimodular_I";
        case VectorClass::UnimodularTypeII: return "unimodular_II";
        case VectorClass::NonUnimodularCovered: return "covered";
        case VectorClass::OutlierNonFree: return "outlier_nonfree";
        case VectorClass::OutlierFree: return "outlier_free";
    }
    return "?";
}

int PlaneAnalysis::count(VectorClass c) const {
    int k = 0;
    for (auto cl : classes)
        if (cl == c) ++k;
    return k;
}

int PlaneAnalysis::nonunimodular_fcs_count() const {
    int k = 0;
    for (const auto& f : fcs)
        if (!f.unimodular_generated) ++k;
    return k;
}

namespace {

std::size_t hash_words(const std::vector<std::uint64_t>& words) {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : words) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace

PlaneAnalysis analyze_plane(const FiniteRing& input, Side side, int order_cap) {
    const int n = input.order();
    if (n > order_cap) throw OrderCapError(n, order_cap);

    // The right module over R is the left module over R^op.
    FiniteRing op_storage;
    const FiniteRing* work = &input;
    if (side == Side::Right) {
        op_storage = input.opposite();
        work = &op_storage;
    }
    const FiniteRing& ring = *work;

    PlaneAnalysis out;
    out.side = side;
    out.order = n;
    const int codes = n * n;
    out.unimodular_set = Bitset(codes);
    out.covered_set = Bitset(codes);
    out.free_set = Bitset(codes);
    out.classes.assign(codes, VectorClass::NonUnimodularCovered);

    std::vector<Bitset> ann(n);
    for (int a = 0; a < n; ++a) ann[a] = left_annihilator(ring, a);

    Bitset unit_set = units(ring);

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Vector2 v{a, b};
            int code = vector_code(v, n);
            if ((ann[a] & ann[b]).count() == 1) out.free_set.set(code);
            if (is_unimodular(ring, v)) out.unimodular_set.set(code);
        }

    // coverage: orbits of unimodular vectors under the scalar action
    out.unimodular_set.for_each([&](int code) {
        Vector2 u = vector_of_code(code, n);
        for (int alpha = 0; alpha < n; ++alpha)
            out.covered_set.set(vector_code({ring.mul(alpha, u.a), ring.mul(alpha, u.b)}, n));
    });

    for (int code = 0; code < codes; ++code) {
        Vector2 v = vector_of_code(code, n);
        if (out.unimodular_set.test(code)) {
            out.classes[code] = (unit_set.test(v.a) || unit_set.test(v.b))
                                    ? VectorClass::UnimodularTypeI
                                    : VectorClass::UnimodularTypeII;
        } else if (out.covered_set.test(code)) {
            out.classes[code] = VectorClass::NonUnimodularCovered;
        } else {
            out.classes[code] = out.free_set.test(code) ? VectorClass::OutlierFree
                                                        : VectorClass::OutlierNonFree;
            out.outliers.push_back(v);
        }
    }

    // deduplicate the free cyclic submodules; ascending code order makes the
    // first generator of each set the canonical one
    std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;
    out.free_set.for_each([&](int code) {
        Vector2 v = vector_of_code(code, n);
        Bitset vectors(codes);
        for (int alpha = 0; alpha < n; ++alpha)
            vectors.set(vector_code({ring.mul(alpha, v.a), ring.mul(alpha, v.b)}, n));
        std::size_t h = hash_words(vectors.words());
        for (auto idx : buckets[h]) {
            if (out.fcs[idx].vectors == vectors) {
                out.fcs[idx].generators.push_back(v);
                if (out.unimodular_set.test(code)) out.fcs[idx].unimodular_generated = true;
                return;
            }
        }
        FcsInfo info;
        info.canonical_generator = v;
        info.vectors = std::move(vectors);
        info.generators = {v};
        info.unimodular_generated = out.unimodular_set.test(code);
        buckets[h].push_back(out.fcs.size());
        out.fcs.push_back(std::move(info));
    });

    return out;
}

std::vector<Vector2> outliers(const FiniteRing& ring, Side side, int order_cap) {
    return analyze_plane(ring, side, order_cap).outliers;
}

std::vector<FcsInfo> fcs_list(const FiniteRing& ring, Side side, int order_cap) {
    return analyze_plane(ring, side, order_cap).fcs;
}

VectorClass classify_vector(const FiniteRing& ring, Vector2 v, Side side, int order_cap) {
    return analyze_plane(ring, side, order_cap).classes[vector_code(v, ring.order())];
}

std::vector<std::vector<int>> fcs_intersection_matrix(const PlaneAnalysis& analysis) {
    const std::size_t k = analysis.fcs.size();
    std::vector<std::vector<int>> out(k, std::vector<int>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            int shared = (analysis.fcs[i].vectors & analysis.fcs[j].vectors).count() - 1;
            out[i][j] = shared;
            out[j][i] = shared;
        }
    return out;
}

}  // namespace fcslab
