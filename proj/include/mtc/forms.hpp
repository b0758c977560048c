#pragma once

#include <optional>
#include <vector>

#include "mtc/abelian.hpp"
#include "mtc/cyclotomic.hpp"

namespace mtc {

// Symmetric pairings, quadratic forms and the projective characters rho all
// take values in roots of unity, so the tables below store integer exponents
// to a fixed base (value_order) and convert to Cyc only on demand.  This keeps
// bulk identity checks in integer arithmetic.

struct Bicharacter {
    Group group;
    long value_order = 1;                  // values are ζ_value_order^e
    std::vector<std::vector<long>> expo;   // expo[i][j] for element indices
    bool symmetric = false;
    bool nondegenerate = false;

    long exponent_at(long i, long j) const { return expo[i][j]; }
    long exponent_of(const Element& x, const Element& y) const;
    Cyc value(const Element& x, const Element& y) const;
    Cyc value_at(long i, long j) const;
};

struct QuadraticForm {
    Group group;
    long value_order = 1;
    std::vector<long> expo;                // expo[i] for element index i
    Bicharacter chi;                       // the associated bicharacter

    long exponent_at(long i) const { return expo[i]; }
    long exponent_of(const Element& x) const;
    Cyc value(const Element& x) const;
    Cyc value_at(long i) const;
};

// Solution of rho(a+b) = chi(a,b)^{-1} rho(a) rho(b), rho(0)=1.
struct RhoFunction {
    Group group;
    long value_order = 1;
    std::vector<long> expo;

    long exponent_at(long i) const { return expo[i]; }
    long exponent_of(const Element& x) const;
    Cyc value(const Element& x) const;
    Cyc value_at(long i) const;
    // Same function with the exponent base reduced as far as possible, so
    // value tables compare independently of how they were produced.
    RhoFunction normalized() const;
    bool operator==(const RhoFunction& o) const {
        RhoFunction a = normalized(), b = o.normalized();
        return a.value_order == b.value_order && a.expo == b.expo;
    }
};

// chi(x,y) = prod_{i,j} zeta_{gcd(d_i,d_j)}^{B[i][j] x_i y_j}.  Any integer
// matrix B yields a well-defined bicharacter with this scaling; symmetry and
// nondegeneracy are detected by scanning the finished table.
Bicharacter bicharacter_from_exponents(const Group& g,
                                       const std::vector<std::vector<long>>& B);

// Rank-2k groups with equal paired factors; chi pairs coordinates (2i,2i+1).
Bicharacter hyperbolic_bicharacter(const Group& g);

// q(x) = prod_i zeta_{d_i}^{a[i] x_i^2} together with its induced bicharacter
// chi(x,y) = q(x+y)/q(x)q(y).
QuadraticForm quadratic_from_diag(const Group& g, const std::vector<long>& a);

// The character x -> chi(x,a), as a character label c (so that
// character_eval(g,c,x) reproduces it), and its inverse.  Both require chi
// nondegenerate.
Element hat(const Bicharacter& chi, const Element& a);
Element unhat(const Bicharacter& chi, const Element& phi);

// Unique q with q(a+b)=q(a)q(b)chi(a,b), q(-a)=q(a), for odd |A|:
// q(a) = chi(a,a)^m with 2m = 1 mod exponent(A).
QuadraticForm quadratic_from_bicharacter(const Bicharacter& chi);

Cyc gauss_sum(const QuadraticForm& q, long power = 1);
Cyc gauss_sum(const RhoFunction& rho, long power = 1);

// sum q(a)^2 / sum q(a), asserted to be exactly +-1 (odd nondegenerate q).
long gauss_ratio_sign(const QuadraticForm& q);

// Subgroups L with |L|^2 = |A| and chi identically 1 on L x L.
std::vector<Subgroup> lagrangian_subgroups(const Bicharacter& chi);
bool has_lagrangian(const Bicharacter& chi);

// Constructive Lagrangian for nondegenerate symmetric chi on a 2-group of
// square order: greedily adjoin isotropic vectors orthogonal to the part
// already chosen (the induction on |A| from the subquotient argument).
Subgroup find_isotropic_2group(const Bicharacter& chi);

// All |A| solutions of rho(a+b) = chi(a,b)^{-1} rho(a) rho(b): one seed
// solution built on generators by bounded root search, then twisted by every
// character of A.  Each returned function is validated on all pairs.
std::vector<RhoFunction> solve_rho(const Bicharacter& chi);

// Automorphisms g of A with chi(gx,gy) = chi(x,y).
std::vector<Automorphism> automorphisms_preserving(const Bicharacter& chi);

bool is_G_stable(const Group& g, const Subgroup& L,
                 const std::vector<Automorphism>& G);

// (a|p) for odd prime p.
long legendre_symbol(long a, long p);

} // namespace mtc
