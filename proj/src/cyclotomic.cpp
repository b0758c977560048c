#include "mtc/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace mtc {

namespace {

long checked_order(long m) {
    if (m < 1) throw std::domain_error("cyclotomic order must be >= 1");
    if (m > kMaxCyclotomicOrder) throw std::domain_error("cyclotomic order exceeds limit");
    return m;
}

// ---- cached per-order data -------------------------------------------------

struct FieldData {
    long m = 1;
    long phi = 1;
    std::vector<mpz_class> poly;  // Phi_m, ascending, monic
};

std::map<long, FieldData>& field_cache() {
    static std::map<long, FieldData> cache;
    return cache;
}
std::mutex& field_mutex() {
    static std::mutex mu;
    return mu;
}

// Phi_m by the divisor recursion: Phi_m = (x^m - 1) / prod_{d|m, d<m} Phi_d.
// Exact integer polynomial division throughout.
std::vector<mpz_class> compute_phi_poly(long m, const std::map<long, FieldData>& cache) {
    std::vector<mpz_class> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        const auto& den = cache.at(d).poly;
        long dn = (long)den.size() - 1;
        std::vector<mpz_class> q(num.size() - dn, 0);
        for (long i = (long)num.size() - 1; i >= dn; --i) {
            // den is monic
            mpz_class c = num[i];
            q[i - dn] = c;
            if (c != 0) {
                for (long j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
            }
        }
        num = std::move(q);
    }
    return num;
}

const FieldData& field(long m) {
    checked_order(m);
    std::lock_guard<std::mutex> lock(field_mutex());
    auto& cache = field_cache();
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // make sure all divisors are present first (ascending order suffices)
    for (long d = 1; d <= m; ++d) {
        if (m % d != 0 || cache.count(d)) continue;
        FieldData fd;
        fd.m = d;
        fd.poly = compute_phi_poly(d, cache);
        fd.phi = (long)fd.poly.size() - 1;
        cache.emplace(d, std::move(fd));
    }
    return cache.at(m);
}

// Reduce a coefficient vector over exponents [0, deg] (deg < m) modulo Phi_m.
// Plain long division by the monic Phi_m.
std::vector<Rat> reduce_mod_phi(std::vector<Rat> acc, long m) {
    const FieldData& fd = field(m);
    long phi = fd.phi;
    for (long i = (long)acc.size() - 1; i >= phi; --i) {
        if (acc[i] == 0) continue;
        Rat c = acc[i];
        for (long j = 0; j <= phi; ++j) {
            Rat t(fd.poly[j]);
            acc[i - phi + j] -= c * t;
        }
    }
    acc.resize(phi);
    for (auto& x : acc) x.canonicalize();
    return acc;
}

// Same division over Z (Phi_m is monic, so no fractions appear).
std::vector<mpz_class> reduce_mod_phi_z(std::vector<mpz_class> acc, long m) {
    const FieldData& fd = field(m);
    long phi = fd.phi;
    for (long i = (long)acc.size() - 1; i >= phi; --i) {
        if (acc[i] == 0) continue;
        mpz_class c = acc[i];
        for (long j = 0; j <= phi; ++j)
            acc[i - phi + j] -= c * fd.poly[j];
    }
    acc.resize(phi);
    return acc;
}

// Product in Z[x]/(x^m - 1); reduction mod Phi_m commutes with this, so whole
// product trees can stay here and be reduced once at the end.
std::vector<mpz_class> cyclic_convolve(const std::vector<mpz_class>& a,
                                       const std::vector<mpz_class>& b, long m) {
    std::vector<mpz_class> out(m, 0);
    std::vector<long> bsup;
    for (long j = 0; j < m; ++j)
        if (b[j] != 0) bsup.push_back(j);
    for (long i = 0; i < m; ++i) {
        if (a[i] == 0) continue;
        for (long j : bsup) {
            long t = i + j;
            if (t >= m) t -= m;
            mpz_addmul(out[t].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return out;
}

} // namespace

long euler_phi(long m) { return field(m).phi; }

const std::vector<mpz_class>& cyclotomic_polynomial(long m) { return field(m).poly; }

Cyc make_cyc_raw(long order, std::vector<Rat> c) { return Cyc(order, std::move(c)); }

Cyc Cyc::from_rational(const Rat& r) {
    std::vector<Rat> c(1, r);
    return make_cyc_raw(1, std::move(c));
}

Cyc Cyc::root_of_unity(long m, long k) {
    checked_order(m);
    k %= m;
    if (k < 0) k += m;
    const long phi = field(m).phi;
    if (k < phi) {  // already a power-basis vector
        std::vector<Rat> c(phi, Rat(0));
        c[k] = 1;
        return make_cyc_raw(m, std::move(c));
    }
    std::vector<Rat> acc(k + 1, Rat(0));
    acc[k] = 1;
    return make_cyc_raw(m, reduce_mod_phi(std::move(acc), m));
}

Cyc Cyc::from_coefficients(long order, std::vector<Rat> coeffs) {
    checked_order(order);
    for (auto& c : coeffs) c.canonicalize();
    return make_cyc_raw(order, reduce_mod_phi(std::move(coeffs), order));
}

bool Cyc::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
}

bool Cyc::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Cyc Cyc::embed(long m2) const {
    checked_order(m2);
    if (m2 == order_) return *this;
    if (m2 % order_ != 0) throw std::domain_error("embed: target order not a multiple");
    long t = m2 / order_;
    std::vector<Rat> acc(m2, Rat(0));
    for (long i = 0; i < (long)c_.size(); ++i) {
        if (c_[i] != 0) acc[(i * t) % m2] += c_[i];
    }
    return make_cyc_raw(m2, reduce_mod_phi(std::move(acc), m2));
}

namespace {
long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }
} // namespace

Cyc Cyc::operator+(const Cyc& o) const {
    long m = lcm_long(order_, o.order_);
    Cyc a = embed(m), b = o.embed(m);
    std::vector<Rat> c(a.c_);
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] += b.c_[i];
        c[i].canonicalize();
    }
    return make_cyc_raw(m, std::move(c));
}

Cyc Cyc::operator-(const Cyc& o) const { return *this + (-o); }

Cyc Cyc::operator-() const {
    std::vector<Rat> c(c_);
    for (auto& x : c) x = -x;
    return make_cyc_raw(order_, std::move(c));
}

// Multiplication clears denominators and works in Z[x]/(x^m - 1): embedding
// into the common field is a pure exponent rescaling there, so neither factor
// needs its own reduction, and the single division by Phi_m at the end stays
// over Z.  Rational arithmetic only reappears in the final coefficients.
Cyc Cyc::operator*(const Cyc& o) const {
    const long m = lcm_long(order_, o.order_);
    const long ta = m / order_, tb = m / o.order_;
    mpz_class da = 1, db = 1;
    for (const auto& c : c_)
        mpz_lcm(da.get_mpz_t(), da.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& c : o.c_)
        mpz_lcm(db.get_mpz_t(), db.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> fa(m, 0), fb(m, 0);
    for (long i = 0; i < (long)c_.size(); ++i)
        if (c_[i] != 0) fa[(i * ta) % m] = c_[i].get_num() * (da / c_[i].get_den());
    for (long i = 0; i < (long)o.c_.size(); ++i)
        if (o.c_[i] != 0) fb[(i * tb) % m] = o.c_[i].get_num() * (db / o.c_[i].get_den());
    std::vector<mpz_class> p = reduce_mod_phi_z(cyclic_convolve(fa, fb, m), m);
    const mpz_class den = da * db;
    std::vector<Rat> out(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        out[i] = Rat(p[i], den);
        out[i].canonicalize();
    }
    return make_cyc_raw(m, std::move(out));
}

Cyc Cyc::operator*(const Rat& r) const {
    std::vector<Rat> c(c_);
    for (auto& x : c) {
        x *= r;
        x.canonicalize();
    }
    return make_cyc_raw(order_, std::move(c));
}

// 1/z = prod_{k != 1} sigma_k(z) / N(z): the conjugate product P is computed
// over Z (denominators cleared first) as a balanced tree of cyclic
// convolutions, and the rational norm N = z_int * P divides out at the end.
// This keeps every intermediate in integer arithmetic; the old extended
// Euclid over Q[x] suffered badly from fraction growth at large phi(m).
Cyc Cyc::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (auto r = is_rational()) return from_rational(Rat(1) / *r);
    const long m = order_;
    mpz_class den = 1;
    for (const auto& c : c_)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> f(m, 0);
    for (long i = 0; i < (long)c_.size(); ++i)
        if (c_[i] != 0) f[i] = c_[i].get_num() * (den / c_[i].get_den());
    std::vector<std::vector<mpz_class>> nodes;
    for (long k = 2; k < m; ++k) {
        if (std::gcd(k, m) != 1) continue;
        std::vector<mpz_class> g(m, 0);
        for (long i = 0; i < m; ++i)
            if (f[i] != 0) g[(i * k) % m] += f[i];
        nodes.push_back(std::move(g));
    }
    while (nodes.size() > 1) {
        std::vector<std::vector<mpz_class>> next;
        for (size_t i = 0; i + 1 < nodes.size(); i += 2)
            next.push_back(cyclic_convolve(nodes[i], nodes[i + 1], m));
        if (nodes.size() % 2) next.push_back(std::move(nodes.back()));
        nodes = std::move(next);
    }
    std::vector<mpz_class> p = reduce_mod_phi_z(std::move(nodes.front()), m);
    std::vector<mpz_class> full(m, 0);
    for (long i = 0; i < (long)p.size(); ++i) full[i] = p[i];
    std::vector<mpz_class> nrm = reduce_mod_phi_z(cyclic_convolve(f, full, m), m);
    for (size_t i = 1; i < nrm.size(); ++i)
        if (nrm[i] != 0) throw std::logic_error("inv: conjugate product not rational");
    if (nrm[0] == 0) throw std::domain_error("inverse of zero");
    std::vector<Rat> out(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        out[i] = Rat(p[i] * den, nrm[0]);
        out[i].canonicalize();
    }
    return make_cyc_raw(m, std::move(out));
}

Cyc Cyc::galois(long k) const {
    long m = order_;
    long kk = k % m;
    if (kk < 0) kk += m;
    if (std::gcd(kk, m) != 1) throw std::domain_error("galois exponent not coprime to order");
    std::vector<Rat> acc(m, Rat(0));
    for (long i = 0; i < (long)c_.size(); ++i) {
        if (c_[i] != 0) acc[(i * kk) % m] += c_[i];
    }
    return make_cyc_raw(m, reduce_mod_phi(std::move(acc), m));
}

bool Cyc::equals(const Cyc& o) const {
    long m = lcm_long(order_, o.order_);
    Cyc a = embed(m), b = o.embed(m);
    return a.c_ == b.c_;
}

std::optional<Rat> Cyc::is_rational() const {
    // In the power basis the rationals are exactly the constant vectors.
    // (Equivalent to fixedness under the full Galois group.)
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return std::nullopt;
    return c_[0];
}

std::optional<std::pair<long, long>> Cyc::as_root_exponent() const {
    if (!(abs_squared().is_one())) return std::nullopt;
    // roots of unity contained in Q(zeta_M): mu_M for even M, mu_2M for odd M
    long m = order_;
    long big = (m % 2 == 0) ? m : 2 * m;
    Cyc up = embed(big);
    auto canon = [&](long j) {
        long g = std::gcd(j, big);
        long mm = (j == 0) ? 1 : big / g;
        long kk = (mm == 1) ? 0 : (j / g);
        return std::make_pair(mm, kk);
    };
    // The float angle pins the only possible exponent (neighbors cover
    // rounding at the boundary); equality stays exact either way.
    auto v = to_complex_approx();
    double turns = std::atan2(v.imag(), v.real()) / (2.0 * M_PI);
    long guess = (long)std::llround(turns * (double)big) % big;
    if (guess < 0) guess += big;
    for (long off : {0L, 1L, big - 1}) {
        long j = (guess + off) % big;
        if (up.equals(Cyc::root_of_unity(big, j))) return canon(j);
    }
    for (long j = 0; j < big; ++j)
        if (up.equals(Cyc::root_of_unity(big, j))) return canon(j);
    return std::nullopt;
}

std::optional<long> Cyc::order_as_root_of_unity() const {
    auto rk = as_root_exponent();
    if (!rk) return std::nullopt;
    return rk->first;
}

Cyc Cyc::descend() const {
    // smallest divisor field that contains the element;
    // z lies in Q(zeta_d) iff every galois(k) with k = 1 mod d fixes z
    if (auto r = is_rational()) return Cyc::from_rational(*r);
    long m = order_;
    std::vector<long> support;
    for (long i = 0; i < (long)c_.size(); ++i)
        if (c_[i] != 0) support.push_back(i);
    // sigma_k(z) - z assembled in exponent space (a permutation needs no
    // reduction); the usually-sparse difference is reduced once to test zero.
    auto fixed_by = [&](long k) {
        std::vector<Rat> diff(m, Rat(0));
        bool trivial = true;
        for (long i : support) {
            long j = (i * k) % m;
            if (j == i) continue;
            diff[j] += c_[i];
            diff[i] -= c_[i];
            trivial = false;
        }
        if (trivial) return true;
        std::vector<Rat> red = reduce_mod_phi(std::move(diff), m);
        return std::all_of(red.begin(), red.end(), [](const Rat& x) { return x == 0; });
    };
    for (long d = 2; d < m; ++d) {
        if (m % d != 0) continue;
        bool fixed = true;
        for (long k = 2; k < m && fixed; ++k) {
            if (std::gcd(k, m) != 1 || k % d != 1) continue;
            if (!fixed_by(k)) fixed = false;
        }
        if (!fixed) continue;
        // solve for coordinates over the basis of Q(zeta_d) inside Q(zeta_m)
        long pd = euler_phi(d);
        long pm = euler_phi(m);
        std::vector<std::vector<Rat>> cols(pd);
        for (long i = 0; i < pd; ++i) cols[i] = Cyc::root_of_unity(d, i).embed(m).c_;
        // gaussian elimination on the pm x (pd+1) system
        std::vector<std::vector<Rat>> a(pm, std::vector<Rat>(pd + 1, Rat(0)));
        for (long r = 0; r < pm; ++r) {
            for (long i = 0; i < pd; ++i) a[r][i] = cols[i][r];
            a[r][pd] = c_[r];
        }
        long row = 0;
        std::vector<long> pivot_col;
        for (long col = 0; col < pd && row < pm; ++col) {
            long sel = -1;
            for (long r = row; r < pm; ++r)
                if (a[r][col] != 0) { sel = r; break; }
            if (sel < 0) continue;
            std::swap(a[row], a[sel]);
            Rat pv = a[row][col];
            for (auto& x : a[row]) x /= pv;
            for (long r = 0; r < pm; ++r) {
                if (r != row && a[r][col] != 0) {
                    Rat f = a[r][col];
                    for (long cidx = 0; cidx <= pd; ++cidx) a[r][cidx] -= f * a[row][cidx];
                }
            }
            pivot_col.push_back(col);
            ++row;
        }
        bool consistent = true;
        std::vector<Rat> sol(pd, Rat(0));
        for (long r = 0; r < pm; ++r) {
            long lead = -1;
            for (long cidx = 0; cidx < pd; ++cidx)
                if (a[r][cidx] != 0) { lead = cidx; break; }
            if (lead < 0) {
                if (a[r][pd] != 0) { consistent = false; break; }
            } else {
                sol[lead] = a[r][pd];
            }
        }
        if (consistent) {
            for (auto& x : sol) x.canonicalize();
            return make_cyc_raw(d, std::move(sol));
        }
    }
    return *this;
}

std::complex<double> Cyc::to_complex_approx() const {
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        double v = c_[i].get_d();
        double ang = 2.0 * M_PI * (double)i / (double)order_;
        acc += v * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

std::pair<Cyc, Cyc> sqrt_root_of_unity(const Cyc& z) {
    auto ord = z.as_root_exponent();
    if (!ord) throw std::domain_error("sqrt_root_of_unity: not a root of unity");
    auto [m, k] = *ord;
    // z = zeta_m^k; roots are zeta_2m^k and zeta_2m^{k+m}, smaller exponent first
    long target = std::lcm(z.order(), 2 * m);
    return {Cyc::root_of_unity(2 * m, k).embed(target),
            Cyc::root_of_unity(2 * m, k + m).embed(target)};
}

Cyc canonical_sqrt_root_of_unity(const Cyc& z) {
    auto ord = z.as_root_exponent();
    if (!ord) throw std::domain_error("canonical sqrt: not a root of unity");
    auto [m, k] = *ord;
    long bigk = 2 * m;
    for (long j : {k, k + m}) {
        // Re > 0, tie toward Im > 0: j/K in [0, 1/4] or (3/4, 1)
        if (4 * j <= bigk || 4 * j > 3 * bigk) return Cyc::root_of_unity(bigk, j);
    }
    throw std::logic_error("canonical sqrt: no branch selected");
}

Cyc sqrt_positive_integer(long n) {
    if (n <= 0) throw std::domain_error("sqrt_positive_integer: need n > 0");
    long square_part = 1, free_part = n;
    for (long k = 2; k * k <= free_part; ++k) {
        while (free_part % (k * k) == 0) {
            free_part /= k * k;
            square_part *= k;
        }
    }
    Cyc out = Cyc::from_int(square_part);
    long mm = free_part;
    for (long p = 2; p <= mm; ++p) {
        if (mm % p != 0) continue;
        mm /= p;
        if (p == 2) {
            out = out * (Cyc::root_of_unity(8, 1) - Cyc::root_of_unity(8, 3));
        } else {
            Cyc gauss = Cyc::zero();
            for (long x = 0; x < p; ++x) gauss = gauss + Cyc::root_of_unity(p, (x * x) % p);
            if (p % 4 == 1) {
                out = out * gauss;
            } else {
                out = out * (Cyc::root_of_unity(4, 3) * gauss);  // -i * (i sqrt p)
            }
        }
    }
    return out;
}

} // namespace mtc
