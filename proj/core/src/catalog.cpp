#include "fcslab/catalog.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fcslab {

namespace {

RingData empty_tables(const std::string& name, int n) {
    RingData data;
    data.name = name;
    data.order = n;
    data.add.assign(n, std::vector<int>(n, 0));
    data.mul.assign(n, std::vector<int>(n, 0));
    return data;
}

struct FieldSpec {
    int p;                  // characteristic
    int degree;
    std::vector<int> red;   // x^degree rewritten in lower-degree coefficients
    const char* poly;
};

FieldSpec field_spec(int q) {
    switch (q) {
        case 2: return {2, 1, {}, ""};
        case 3: return {3, 1, {}, ""};
        case 5: return {5, 1, {}, ""};
        case 7: return {7, 1, {}, ""};
        case 4: return {2, 2, {1, 1}, "x^2+x+1"};
        case 8: return {2, 3, {1, 1, 0}, "x^3+x+1"};
        case 9: return {3, 2, {2, 0}, "x^2+1"};
        default: throw ParseError("GF(" + std::to_string(q) + ") is not supported");
    }
}

std::vector<int> digits_of(int e, int p, int d) {
    std::vector<int> out(d);
    for (int i = 0; i < d; ++i) {
        out[i] = e % p;
        e /= p;
    }
    return out;
}

int digits_to_index(const std::vector<int>& c, int p, int d) {
    int e = 0;
    for (int i = d - 1; i >= 0; --i) e = e * p + c[i];
    return e;
}

}  // namespace

FiniteRing ring_zn(int n) {
    if (n < 2 || n > 256) throw ParseError("Z_n supports 2 <= n <= 256");
    RingData data = empty_tables("Z" + std::to_string(n), n);
    data.one = 1 % n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            data.add[a][b] = (a + b) % n;
            data.mul[a][b] = (a * b) % n;
        }
    return validate_ring(data);
}

FiniteRing ring_gf(int q) {
    FieldSpec spec = field_spec(q);
    const int p = spec.p, d = spec.degree;
    RingData data = empty_tables("GF" + std::to_string(q), q);
    data.one = 1;
    for (int a = 0; a < q; ++a) {
        auto ca = digits_of(a, p, d);
        for (int b = 0; b < q; ++b) {
            auto cb = digits_of(b, p, d);
            std::vector<int> sum(d);
            for (int i = 0; i < d; ++i) sum[i] = (ca[i] + cb[i]) % p;
            data.add[a][b] = digits_to_index(sum, p, d);

            std::vector<int> prod(2 * d - 1, 0);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
            for (int deg = 2 * d - 2; deg >= d; --deg) {
                int c = prod[deg];
                if (c == 0) continue;
                prod[deg] = 0;
                for (int j = 0; j < d; ++j)
                    prod[deg - d + j] = (prod[deg - d + j] + c * spec.red[j]) % p;
            }
            prod.resize(d);
            data.mul[a][b] = digits_to_index(prod, p, d);
        }
    }
    return validate_ring(data);
}

FiniteRing ring_ternions(int q) {
    if (q != 2 && q != 3 && q != 4)
        throw ParseError("ternions are built over GF(q) for q in {2,3,4}");
    FiniteRing gf = ring_gf(q);
    const int n = q * q * q;
    RingData data = empty_tables("T2_GF" + std::to_string(q), n);

    auto enc = [&](int x, int y, int z) { return x + q * y + q * q * z; };
    auto x_of = [&](int e) { return e % q; };
    auto y_of = [&](int e) { return (e / q) % q; };
    auto z_of = [&](int e) { return e / (q * q); };

    data.one = enc(1, 0, 1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            data.add[a][b] = enc(gf.add(x_of(a), x_of(b)), gf.add(y_of(a), y_of(b)),
                                 gf.add(z_of(a), z_of(b)));
            // [[x1,y1],[0,z1]] * [[x2,y2],[0,z2]] = [[x1x2, x1y2+y1z2],[0, z1z2]]
            data.mul[a][b] = enc(gf.mul(x_of(a), x_of(b)),
                                 gf.add(gf.mul(x_of(a), y_of(b)), gf.mul(y_of(a), z_of(b))),
                                 gf.mul(z_of(a), z_of(b)));
        }
    return validate_ring(data);
}

FiniteRing ring_product(const FiniteRing& r, const FiniteRing& s) {
    const int nr = r.order(), ns = s.order();
    const int n = nr * ns;
    if (n > 4096) throw ParseError("product ring order exceeds 4096");
    RingData data = empty_tables(r.name() + "x" + s.name(), n);
    auto enc = [&](int a, int b) { return a * ns + b; };
    data.one = enc(r.one(), s.one());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ra = a / ns, sa = a % ns, rb = b / ns, sb = b % ns;
            data.add[a][b] = enc(r.add(ra, rb), s.add(sa, sb));
            data.mul[a][b] = enc(r.mul(ra, rb), s.mul(sa, sb));
        }
    return validate_ring(data);
}

FiniteRing ring_poly_sq(int p) {
    if (p != 2 && p != 3) throw ParseError("Z_p[x]/(x^2) is built for p in {2,3}");
    const int n = p * p;
    RingData data = empty_tables("Z" + std::to_string(p) + "[x]_x2", n);
    auto enc = [&](int a, int b) { return a + p * b; };
    data.one = enc(1, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            int a = u % p, b = u / p, c = v % p, d = v / p;
            data.add[u][v] = enc((a + c) % p, (b + d) % p);
            // (a+bx)(c+dx) = ac + (ad+bc)x, with x^2 = 0
            data.mul[u][v] = enc((a * c) % p, (a * d + b * c) % p);
        }
    return validate_ring(data);
}

FiniteRing ring_xy_sq(int p) {
    if (p != 2 && p != 3) throw ParseError("Z_p[x,y]/(x,y)^2 is built for p in {2,3}");
    const int n = p * p * p;
    RingData data = empty_tables("Z" + std::to_string(p) + "[xy]_xy2", n);
    auto enc = [&](int a, int b, int c) { return a + p * b + p * p * c; };
    data.one = enc(1, 0, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            int a1 = u % p, b1 = (u / p) % p, c1 = u / (p * p);
            int a2 = v % p, b2 = (v / p) % p, c2 = v / (p * p);
            data.add[u][v] = enc((a1 + a2) % p, (b1 + b2) % p, (c1 + c2) % p);
            // every degree-2 monomial vanishes
            data.mul[u][v] =
                enc((a1 * a2) % p, (a1 * b2 + b1 * a2) % p, (a1 * c2 + c1 * a2) % p);
        }
    return validate_ring(data);
}

FiniteRing ring_m2_gf2() {
    const int n = 16;
    RingData data = empty_tables("M2_GF2", n);
    auto a_of = [](int e) { return e & 1; };
    auto b_of = [](int e) { return (e >> 1) & 1; };
    auto c_of = [](int e) { return (e >> 2) & 1; };
    auto d_of = [](int e) { return (e >> 3) & 1; };
    auto enc = [](int a, int b, int c, int d) { return a | (b << 1) | (c << 2) | (d << 3); };
    data.one = enc(1, 0, 0, 1);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            data.add[u][v] = u ^ v;
            int a = a_of(u), b = b_of(u), c = c_of(u), d = d_of(u);
            int e = a_of(v), f = b_of(v), g = c_of(v), h = d_of(v);
            data.mul[u][v] = enc((a * e + b * g) & 1, (a * f + b * h) & 1,
                                 (c * e + d * g) & 1, (c * f + d * h) & 1);
        }
    return validate_ring(data);
}

const std::vector<CatalogEntry>& builtin_catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> out;
        auto add = [&](std::string name, std::string description,
                       std::function<FiniteRing()> make, CatalogFacts facts) {
            out.push_back(CatalogEntry{std::move(name), std::move(description),
                                       std::move(make), facts});
        };

        struct ZnFacts {
            int n, units, maxr, rad, nil;
            bool local;
        };
        // unit count phi(n); one maximal ideal per prime divisor; radical size
        // n / squarefree-part; nilpotency = largest prime exponent
        const ZnFacts zn[] = {
            {2, 1, 1, 1, 1, true},   {3, 2, 1, 1, 1, true},   {4, 2, 1, 2, 2, true},
            {5, 4, 1, 1, 1, true},   {6, 2, 2, 1, 1, false},  {7, 6, 1, 1, 1, true},
            {8, 4, 1, 4, 3, true},   {9, 6, 1, 3, 2, true},   {10, 4, 2, 1, 1, false},
            {11, 10, 1, 1, 1, true}, {12, 4, 2, 2, 2, false}, {13, 12, 1, 1, 1, true},
            {14, 6, 2, 1, 1, false}, {15, 8, 2, 1, 1, false}, {16, 8, 1, 8, 4, true},
        };
        for (const auto& f : zn)
            add("Z" + std::to_string(f.n), "integers modulo " + std::to_string(f.n),
                [n = f.n] { return ring_zn(n); },
                CatalogFacts{f.units, f.maxr, f.rad, f.nil, true, f.local, true});

        add("GF4", "Galois field of order 4, GF(2)[x]/(x^2+x+1)", [] { return ring_gf(4); },
            CatalogFacts{3, 1, 1, 1, true, true, true});
        add("GF8", "Galois field of order 8, GF(2)[x]/(x^3+x+1)", [] { return ring_gf(8); },
            CatalogFacts{7, 1, 1, 1, true, true, true});
        add("GF9", "Galois field of order 9, GF(3)[x]/(x^2+1)", [] { return ring_gf(9); },
            CatalogFacts{8, 1, 1, 1, true, true, true});

        add("Z2[x]_x2", "Z2[x]/(x^2), local with nilpotent radical",
            [] { return ring_poly_sq(2); }, CatalogFacts{2, 1, 2, 2, true, true, true});
        add("Z3[x]_x2", "Z3[x]/(x^2), local with nilpotent radical",
            [] { return ring_poly_sq(3); }, CatalogFacts{6, 1, 3, 2, true, true, true});
        add("Z2[xy]_xy2", "Z2[x,y]/(x,y)^2, local, maximal ideal needs two generators",
            [] { return ring_xy_sq(2); }, CatalogFacts{4, 1, 4, 2, true, true, false});

        add("Z2xZ2", "direct product Z2 x Z2", [] { return ring_product(ring_zn(2), ring_zn(2)); },
            CatalogFacts{1, 2, 1, 1, true, false, true});
        add("Z2xZ4", "direct product Z2 x Z4", [] { return ring_product(ring_zn(2), ring_zn(4)); },
            CatalogFacts{2, 2, 2, 2, true, false, true});
        add("Z2xGF4", "direct product Z2 x GF4",
            [] { return ring_product(ring_zn(2), ring_gf(4)); },
            CatalogFacts{3, 2, 1, 1, true, false, true});
        // two maximal right ideals, one non-principal, yet no non-unimodular
        // FCS: the necessary condition without the phenomenon
        add("Z2xZ2[xy]_xy2", "direct product Z2 x Z2[x,y]/(x,y)^2",
            [] { return ring_product(ring_zn(2), ring_xy_sq(2)); },
            CatalogFacts{4, 2, 4, 2, true, false, false});

        // units are the matrices with both diagonal entries invertible:
        // q*(q-1)^2 of them
        add("T2_GF2", "upper-triangular 2x2 matrices over GF(2)",
            [] { return ring_ternions(2); },
            CatalogFacts{2, 2, 2, 2, false, false, false});
        add("T2_GF3", "upper-triangular 2x2 matrices over GF(3)",
            [] { return ring_ternions(3); },
            CatalogFacts{12, 2, 3, 2, false, false, false});
        add("T2_GF4", "upper-triangular 2x2 matrices over GF(4)",
            [] { return ring_ternions(4); },
            CatalogFacts{36, 2, 4, 2, false, false, false});

        add("M2_GF2", "full 2x2 matrix ring over GF(2)", [] { return ring_m2_gf2(); },
            CatalogFacts{6, 3, 1, 1, false, false, true});

        return out;
    }();
    return entries;
}

FiniteRing catalog_ring(const std::string& name) {
    for (const auto& entry : builtin_catalog())
        if (entry.name == name) return entry.make();
    throw ParseError("unknown catalog ring: " + name);
}

std::string ring_to_json(const FiniteRing& ring) {
    nlohmann::ordered_json j;
    j["name"] = ring.name();
    j["order"] = ring.order();
    j["one"] = ring.one();
    auto table = [&](auto&& get) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int a = 0; a < ring.order(); ++a) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (int b = 0; b < ring.order(); ++b) row.push_back(get(a, b));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    j["add"] = table([&](int a, int b) { return ring.add(a, b); });
    j["mul"] = table([&](int a, int b) { return ring.mul(a, b); });
    return j.dump() + "\n";
}

FiniteRing ring_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    RingData data;
    try {
        data.name = j.at("name").get<std::string>();
        data.order = j.at("order").get<int>();
        data.one = j.at("one").get<int>();
        data.add = j.at("add").get<std::vector<std::vector<int>>>();
        data.mul = j.at("mul").get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed ring file: ") + e.what());
    }
    return validate_ring(data);
}

FiniteRing load_ring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return ring_from_json(buffer.str());
}

void save_ring(const FiniteRing& ring, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << ring_to_json(ring);
}

}  // namespace fcslab
