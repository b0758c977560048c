#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_M).
//
// Elements are stored as dense rational coordinate vectors over the power
// basis 1, zeta, ..., zeta^{phi(M)-1} of Q(zeta_M), i.e. as polynomials in
// zeta reduced modulo the M-th cyclotomic polynomial Phi_M.  Binary
// operations on elements of different fields first embed both into
// Q(zeta_lcm).  Nothing here is asymptotically clever; the verification
// hot paths use the integer kernel in fastcyc.hpp instead.

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mtc/rational.hpp"

namespace mtc {

// Hard cap on accepted cyclotomic orders (inclusive).
inline constexpr long kMaxCyclotomicOrder = 1000000;

long euler_phi(long m);

// Coefficients of Phi_M, ascending degree, exact integers.
const std::vector<mpz_class>& cyclotomic_polynomial(long m);

class Cyc {
public:
    Cyc() : order_(1), c_(1, Rat(0)) {}  // zero in Q

    static Cyc zero() { return Cyc(); }
    static Cyc from_rational(const Rat& r);
    static Cyc from_int(long v) { return from_rational(Rat(v)); }
    // zeta_M^k (k may be any integer; reduced mod M)
    static Cyc root_of_unity(long m, long k);
    // sum_k coeffs[k] * zeta_order^k, any length; reduced into the power basis
    static Cyc from_coefficients(long order, std::vector<Rat> coeffs);

    long order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;

    // Re-expresses the element in Q(zeta_m2); m2 must be a multiple of order().
    Cyc embed(long m2) const;
    // Smallest cyclotomic subfield containing the element.
    Cyc descend() const;

    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator-() const;
    Cyc operator*(const Cyc& o) const;
    Cyc operator*(const Rat& r) const;
    Cyc inv() const;  // throws std::domain_error on zero

    // Galois action zeta -> zeta^k, gcd(k, order) = 1.
    Cyc galois(long k) const;
    Cyc conjugate() const { return galois(-1); }
    Cyc abs_squared() const { return *this * conjugate(); }

    bool equals(const Cyc& o) const;
    bool operator==(const Cyc& o) const { return equals(o); }

    std::optional<Rat> is_rational() const;

    // Least m with z^m = 1, when z is a root of unity; nullopt otherwise.
    // Verifies |z|^2 = 1 first, then bounded power search (roots of unity in
    // Q(zeta_M) all have order dividing lcm(2, M)).
    std::optional<long> order_as_root_of_unity() const;

    // (m, k) with z = zeta_m^k and m minimal; nullopt if not a root of unity.
    std::optional<std::pair<long, long>> as_root_exponent() const;

    std::complex<double> to_complex_approx() const;

private:
    Cyc(long order, std::vector<Rat> c) : order_(order), c_(std::move(c)) {}
    friend Cyc make_cyc_raw(long order, std::vector<Rat> c);

    long order_;
    std::vector<Rat> c_;  // size == phi(order_)
};

inline Cyc operator*(const Rat& r, const Cyc& z) { return z * r; }

// Both square roots of a root of unity z = zeta_M^k, as elements of
// Q(zeta_2M): (zeta_2M^k, zeta_2M^{k+M}).  First component has the smaller
// exponent.  Throws if z is not a root of unity.
std::pair<Cyc, Cyc> sqrt_root_of_unity(const Cyc& z);

// The square root with positive real part (tie broken toward positive
// imaginary part); picks between the two values of sqrt_root_of_unity.
// Exact criterion on the exponent j of zeta_K: 4j <= K or 4j > 3K.
Cyc canonical_sqrt_root_of_unity(const Cyc& z);

// Exact sqrt(n) for a positive integer n, built from quadratic Gauss sums:
// sqrt(2) = zeta_8 - zeta_8^3, sqrt(p) = sum_x zeta_p^{x^2} for p = 1 mod 4,
// sqrt(p) = -i * sum_x zeta_p^{x^2} for p = 3 mod 4.
Cyc sqrt_positive_integer(long n);

} // namespace mtc
