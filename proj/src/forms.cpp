#include "mtc/forms.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace mtc {

namespace {

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

// x_i(x_i - 1)/2 without intermediate overflow worries at desk scale.
long triangle(long x) { return x * (x - 1) / 2; }

void check_square_table(const Group& g, const std::vector<std::vector<long>>& B) {
    size_t r = g.rank();
    if (B.size() != r)
        throw std::invalid_argument("exponent matrix rank mismatch");
    for (const auto& row : B)
        if (row.size() != r)
            throw std::invalid_argument("exponent matrix is not square");
}

void classify(Bicharacter& chi) {
    long n = chi.group.order();
    chi.symmetric = true;
    for (long i = 0; i < n && chi.symmetric; ++i)
        for (long j = i + 1; j < n; ++j)
            if (chi.expo[i][j] != chi.expo[j][i]) {
                chi.symmetric = false;
                break;
            }
    // x -> chi(x,.) is injective iff all rows are distinct.
    std::set<std::vector<long>> rows(chi.expo.begin(), chi.expo.end());
    chi.nondegenerate = (long)rows.size() == n;
}

} // namespace

long Bicharacter::exponent_of(const Element& x, const Element& y) const {
    return expo[group.index_of(x)][group.index_of(y)];
}

Cyc Bicharacter::value(const Element& x, const Element& y) const {
    return Cyc::root_of_unity(value_order, exponent_of(x, y));
}

Cyc Bicharacter::value_at(long i, long j) const {
    return Cyc::root_of_unity(value_order, expo[i][j]);
}

long QuadraticForm::exponent_of(const Element& x) const {
    return expo[group.index_of(x)];
}

Cyc QuadraticForm::value(const Element& x) const {
    return Cyc::root_of_unity(value_order, exponent_of(x));
}

Cyc QuadraticForm::value_at(long i) const {
    return Cyc::root_of_unity(value_order, expo[i]);
}

long RhoFunction::exponent_of(const Element& x) const {
    return expo[group.index_of(x)];
}

Cyc RhoFunction::value(const Element& x) const {
    return Cyc::root_of_unity(value_order, exponent_of(x));
}

Cyc RhoFunction::value_at(long i) const {
    return Cyc::root_of_unity(value_order, expo[i]);
}

RhoFunction RhoFunction::normalized() const {
    long g = value_order;
    for (long e : expo) g = std::gcd(g, e);
    if (g <= 1) return *this;
    RhoFunction r;
    r.group = group;
    r.value_order = value_order / g;
    r.expo.reserve(expo.size());
    for (long e : expo) r.expo.push_back(e / g);
    return r;
}

Bicharacter bicharacter_from_exponents(const Group& g,
                                       const std::vector<std::vector<long>>& B) {
    check_square_table(g, B);
    long n = g.order();
    long E = g.exponent();
    size_t r = g.rank();

    // Scale the (i,j) entry into exponents of zeta_E: the Z/d_i x Z/d_j
    // pairing takes values in mu_{gcd(d_i,d_j)}.
    std::vector<std::vector<long>> scaled(r, std::vector<long>(r, 0));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            long l = std::gcd(g.factors[i], g.factors[j]);
            scaled[i][j] = mod(B[i][j], l) * (E / l);
        }

    Bicharacter chi;
    chi.group = g;
    chi.value_order = E;
    chi.expo.assign(n, std::vector<long>(n, 0));
    for (long xi = 0; xi < n; ++xi) {
        Element x = g.element_at(xi);
        for (long yi = 0; yi < n; ++yi) {
            Element y = g.element_at(yi);
            long e = 0;
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < r; ++j)
                    e = mod(e + scaled[i][j] % E * x[i] % E * y[j], E);
            chi.expo[xi][yi] = e;
        }
    }
    classify(chi);
    return chi;
}

Bicharacter hyperbolic_bicharacter(const Group& g) {
    size_t r = g.rank();
    if (r % 2 != 0)
        throw std::invalid_argument("hyperbolic form needs an even number of factors");
    std::vector<std::vector<long>> B(r, std::vector<long>(r, 0));
    for (size_t i = 0; i + 1 < r; i += 2) {
        if (g.factors[i] != g.factors[i + 1])
            throw std::invalid_argument("hyperbolic form needs equal paired factors");
        B[i][i + 1] = 1;
        B[i + 1][i] = 1;
    }
    return bicharacter_from_exponents(g, B);
}

QuadraticForm quadratic_from_diag(const Group& g, const std::vector<long>& a) {
    if (a.size() != g.rank())
        throw std::invalid_argument("diagonal exponent count mismatch");
    long n = g.order();
    long E = g.exponent();
    size_t r = g.rank();

    QuadraticForm q;
    q.group = g;
    q.value_order = E;
    q.expo.assign(n, 0);
    for (long xi = 0; xi < n; ++xi) {
        Element x = g.element_at(xi);
        long e = 0;
        for (size_t i = 0; i < r; ++i)
            e = mod(e + mod(a[i], g.factors[i]) * x[i] % E * x[i] % E * (E / g.factors[i]), E);
        q.expo[xi] = e;
    }

    std::vector<std::vector<long>> B(r, std::vector<long>(r, 0));
    for (size_t i = 0; i < r; ++i) B[i][i] = 2 * mod(a[i], g.factors[i]);
    q.chi = bicharacter_from_exponents(g, B);

    // q(x+y) = q(x) q(y) chi(x,y) holds by construction; spot-assert anyway.
    for (long xi = 0; xi < n; ++xi)
        for (long yi = 0; yi < n; ++yi) {
            long s = g.index_of(g.add(g.element_at(xi), g.element_at(yi)));
            if (q.expo[s] != mod(q.expo[xi] + q.expo[yi] + q.chi.expo[xi][yi], E))
                throw std::logic_error("diagonal form violates its own pairing");
        }
    return q;
}

Element hat(const Bicharacter& chi, const Element& a) {
    if (!chi.nondegenerate)
        throw std::invalid_argument("hat requires a nondegenerate pairing");
    const Group& g = chi.group;
    long E = g.exponent();
    long ai = g.index_of(a);
    Element c(g.rank(), 0);
    for (size_t i = 0; i < g.rank(); ++i) {
        Element ei(g.rank(), 0);
        ei[i] = 1;
        long t = chi.expo[g.index_of(ei)][ai];
        // chi(e_i, a)^{d_i} = 1, so t is a multiple of E/d_i.
        long step = E / g.factors[i];
        if (t % step != 0)
            throw std::logic_error("pairing value order exceeds factor order");
        c[i] = t / step;
    }
    return c;
}

Element unhat(const Bicharacter& chi, const Element& phi) {
    if (!chi.nondegenerate)
        throw std::invalid_argument("unhat requires a nondegenerate pairing");
    const Group& g = chi.group;
    Element c = g.reduce(phi);
    for (long ai = 0; ai < g.order(); ++ai) {
        Element a = g.element_at(ai);
        if (hat(chi, a) == c) return a;
    }
    throw std::logic_error("character is not in the image of hat");
}

QuadraticForm quadratic_from_bicharacter(const Bicharacter& chi) {
    const Group& g = chi.group;
    if (g.order() % 2 == 0)
        throw std::invalid_argument("unique quadratic refinement needs odd group order");
    if (!chi.symmetric)
        throw std::invalid_argument("quadratic refinement needs a symmetric pairing");
    long n = g.order();
    long E = g.exponent();
    long m = (E + 1) / 2;  // 2m = 1 mod E

    QuadraticForm q;
    q.group = g;
    q.value_order = E;
    q.chi = chi;
    q.expo.assign(n, 0);
    for (long i = 0; i < n; ++i) q.expo[i] = mod(m % E * chi.expo[i][i], E);

    for (long xi = 0; xi < n; ++xi) {
        long ni = g.index_of(g.neg(g.element_at(xi)));
        if (q.expo[ni] != q.expo[xi])
            throw std::logic_error("quadratic refinement is not even");
        for (long yi = 0; yi < n; ++yi) {
            long s = g.index_of(g.add(g.element_at(xi), g.element_at(yi)));
            if (q.expo[s] != mod(q.expo[xi] + q.expo[yi] + chi.expo[xi][yi], E))
                throw std::logic_error("quadratic refinement violates the pairing");
        }
    }
    return q;
}

namespace {

Cyc power_sum(long value_order, const std::vector<long>& expo, long power) {
    // Bucket the exponents first so the cyclotomic work is one pass.
    std::vector<long> count(value_order, 0);
    for (long e : expo) count[mod(e * power, value_order)]++;
    Cyc s = Cyc::zero();
    for (long k = 0; k < value_order; ++k)
        if (count[k])
            s = s + Cyc::root_of_unity(value_order, k) * Rat(count[k]);
    return s;
}

} // namespace

Cyc gauss_sum(const QuadraticForm& q, long power) {
    return power_sum(q.value_order, q.expo, power);
}

Cyc gauss_sum(const RhoFunction& rho, long power) {
    return power_sum(rho.value_order, rho.expo, power);
}

long gauss_ratio_sign(const QuadraticForm& q) {
    if (q.group.order() % 2 == 0)
        throw std::invalid_argument("gauss_ratio_sign is defined for odd group order");
    Cyc g1 = gauss_sum(q, 1);
    Cyc g2 = gauss_sum(q, 2);
    Cyc ratio = g2 * g1.inv();
    auto r = ratio.is_rational();
    if (!r || (*r != Rat(1) && *r != Rat(-1)))
        throw std::logic_error("gauss sum ratio is not an exact sign");
    return *r == Rat(1) ? 1 : -1;
}

std::vector<Subgroup> lagrangian_subgroups(const Bicharacter& chi) {
    const Group& g = chi.group;
    std::vector<Subgroup> out;
    for (auto& sub : enumerate_subgroups(g, max_group_order_bound())) {
        if ((long)sub.members.size() * (long)sub.members.size() != g.order()) continue;
        bool isotropic = true;
        for (const auto& x : sub.members) {
            long xi = g.index_of(x);
            for (const auto& y : sub.members)
                if (chi.expo[xi][g.index_of(y)] != 0) {
                    isotropic = false;
                    break;
                }
            if (!isotropic) break;
        }
        if (isotropic) out.push_back(sub);
    }
    return out;
}

bool has_lagrangian(const Bicharacter& chi) {
    return !lagrangian_subgroups(chi).empty();
}

Subgroup find_isotropic_2group(const Bicharacter& chi) {
    const Group& g = chi.group;
    long n = g.order();
    if ((n & (n - 1)) != 0)
        throw std::invalid_argument("constructive search needs a 2-group");
    long root = 1;
    while (root * root < n) ++root;
    if (root * root != n)
        throw std::invalid_argument("constructive search needs square group order");
    if (!chi.symmetric || !chi.nondegenerate)
        throw std::invalid_argument("constructive search needs a nondegenerate symmetric pairing");

    // Grow an isotropic K inside H = K-perp; each step adjoins an isotropic
    // vector of H \ K (one exists while |K|^2 < |A|, by descent to the
    // nondegenerate form on H/K).
    Subgroup K = subgroup_generated_by(g, {});
    std::vector<long> H(n);
    for (long i = 0; i < n; ++i) H[i] = i;
    std::vector<Element> gens;
    while ((long)K.members.size() * (long)K.members.size() < n) {
        long found = -1;
        for (long i : H) {
            Element x = g.element_at(i);
            if (K.contains(x)) continue;
            if (chi.expo[i][i] == 0) {
                found = i;
                break;
            }
        }
        if (found < 0)
            throw std::logic_error("no isotropic vector found; pairing data inconsistent");
        gens.push_back(g.element_at(found));
        K = subgroup_generated_by(g, gens);
        std::vector<long> H2;
        for (long i : H)
            if (chi.expo[i][found] == 0) H2.push_back(i);
        H = std::move(H2);
    }
    return K;
}

std::vector<RhoFunction> solve_rho(const Bicharacter& chi) {
    const Group& g = chi.group;
    if (!chi.symmetric || !chi.nondegenerate)
        throw std::invalid_argument("projective character solve needs nondegenerate symmetric chi");
    long n = g.order();
    long E = g.exponent();
    size_t r = g.rank();

    // Seed values on generators: rho(e_i)^{d_i} = chi(e_i,e_i)^{d_i(d_i-1)/2}
    // =: w_i, solved inside mu_{d_i * ord(w_i)}.
    std::vector<long> gen_idx(r), Ki(r), ji(r);
    long R = E;
    for (size_t i = 0; i < r; ++i) {
        Element ei(r, 0);
        ei[i] = 1;
        gen_idx[i] = g.index_of(ei);
        long d = g.factors[i];
        long ew = mod(chi.expo[gen_idx[i]][gen_idx[i]] * (triangle(d) % E), E);
        long o = E / std::gcd(E, ew == 0 ? E : ew);
        if (ew == 0) o = 1;
        Ki[i] = d * o;
        ji[i] = ew / (E / o);  // w_i = zeta_o^{j}; zeta_{K_i}^{j} is a d-th root of it
        R = std::lcm(R, Ki[i]);
    }

    RhoFunction seed;
    seed.group = g;
    seed.value_order = R;
    seed.expo.assign(n, 0);
    for (long xi = 0; xi < n; ++xi) {
        Element x = g.element_at(xi);
        long e = 0;
        for (size_t i = 0; i < r; ++i) {
            e = mod(e + x[i] % R * ji[i] % R * (R / Ki[i]), R);
            e = mod(e - (triangle(x[i]) % R) * chi.expo[gen_idx[i]][gen_idx[i]] % R * (R / E), R);
            for (size_t j = i + 1; j < r; ++j)
                e = mod(e - x[i] * x[j] % R * chi.expo[gen_idx[i]][gen_idx[j]] % R * (R / E), R);
        }
        seed.expo[xi] = e;
    }

    auto validate = [&](const RhoFunction& rho) {
        if (rho.expo[g.index_of(g.zero())] != 0)
            throw std::logic_error("projective character does not send 0 to 1");
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b) {
                long s = g.index_of(g.add(g.element_at(a), g.element_at(b)));
                if (rho.expo[s] !=
                    mod(rho.expo[a] + rho.expo[b] - chi.expo[a][b] * (R / E), R))
                    throw std::logic_error("projective character fails its defining relation");
            }
    };
    validate(seed);

    // The solution set is a torsor over the character group: twist by every
    // character, in character-label order.
    std::vector<RhoFunction> out;
    out.reserve(n);
    for (long ci = 0; ci < n; ++ci) {
        Element c = g.element_at(ci);
        RhoFunction rho = seed;
        for (long xi = 0; xi < n; ++xi) {
            Element x = g.element_at(xi);
            long e = 0;
            for (size_t i = 0; i < r; ++i)
                e = mod(e + c[i] * x[i] % E * (E / g.factors[i]), E);
            rho.expo[xi] = mod(rho.expo[xi] + e * (R / E), R);
        }
        validate(rho);
        out.push_back(std::move(rho));
    }
    return out;
}

std::vector<Automorphism> automorphisms_preserving(const Bicharacter& chi) {
    const Group& g = chi.group;
    std::vector<Automorphism> out;
    for (auto& aut : all_automorphisms(g)) {
        bool ok = true;
        for (size_t i = 0; i < g.rank() && ok; ++i)
            for (size_t j = 0; j < g.rank(); ++j) {
                Element ei(g.rank(), 0), ej(g.rank(), 0);
                ei[i] = 1;
                ej[j] = 1;
                if (chi.exponent_of(aut.apply(g, ei), aut.apply(g, ej)) !=
                    chi.exponent_of(ei, ej)) {
                    ok = false;
                    break;
                }
            }
        if (ok) out.push_back(aut);
    }
    return out;
}

bool is_G_stable(const Group& g, const Subgroup& L,
                 const std::vector<Automorphism>& G) {
    for (const auto& aut : G)
        for (const auto& x : L.members)
            if (!L.contains(aut.apply(g, x))) return false;
    return true;
}

long legendre_symbol(long a, long p) {
    long b = mod(a, p);
    if (b == 0) return 0;
    long e = (p - 1) / 2;
    long acc = 1;
    long base = b;
    while (e > 0) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return acc == 1 ? 1 : -1;
}

} // namespace mtc
