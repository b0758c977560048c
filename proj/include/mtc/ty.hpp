#pragma once

#include <string>
#include <vector>

#include "mtc/abelian.hpp"
#include "mtc/cyclotomic.hpp"
#include "mtc/forms.hpp"

namespace mtc {

// TY(A, chi, tau): invertibles indexed by A plus one object m with
// FPdim sqrt(|A|); tau = tau_sign / sqrt(|A|).
struct TYCategory {
    Group group;
    Bicharacter chi;       // symmetric nondegenerate
    int tau_sign = 1;      // +1 or -1
    long ambient_order = 8;

    long n() const { return group.order(); }
    Cyc sqrt_n() const;    // sqrt(|A|) as an exact cyclotomic
    Cyc tau() const;       // tau_sign / sqrt(|A|)
};

TYCategory make_ty(const Group& g, const Bicharacter& chi, int tau_sign);

struct TYSimple {
    bool is_m = false;
    Element a;  // empty when is_m

    bool operator==(const TYSimple& o) const { return is_m == o.is_m && a == o.a; }
};

TYSimple ty_invertible(const Element& a);
TYSimple ty_m();

std::vector<TYSimple> ty_simples(const TYCategory& c);

// a (x) b = a+b, a (x) m = m (x) a = m, m (x) m = sum over A.
std::vector<TYSimple> ty_fusion(const TYCategory& c, const TYSimple& s,
                                const TYSimple& t);

// A diagonal family of scalars, one per summand of the object it acts on;
// `index` carries a printable tag for each component (empty for a single
// untagged scalar).
struct ScalarComponents {
    std::vector<std::string> index;
    std::vector<Cyc> scalars;
};

// Associator components: alpha_{a,m,b} = chi(a,b); alpha_{m,a,m} has one
// component chi(a,b) per b in A; alpha_{m,m,m} has one component
// tau chi(a,b)^{-1} per pair (a,b); every other triple is 1.
ScalarComponents ty_associator(const TYCategory& c, const TYSimple& s,
                               const TYSimple& t, const TYSimple& u);

// Simple objects of the relative center: X(a, phi) for (a, phi) in A x A^,
// with phi stored as a character label, and Z(rho) for each solution rho.
struct RelCenterSimple {
    bool is_z = false;
    Element a;           // X only
    Element phi;         // X only: character label
    RhoFunction rho;     // Z only

    bool operator==(const RelCenterSimple& o) const;
    std::string to_string(const Group& g) const;
};

std::vector<RelCenterSimple> relcenter_simples(const TYCategory& c);

// The four product rules; the result is a multiset of simples.
std::vector<RelCenterSimple> relcenter_fusion(const TYCategory& c,
                                              const RelCenterSimple& u,
                                              const RelCenterSimple& v);

// The braided autoequivalence induced by the grading flip:
// X(a,phi) -> X(-unhat(phi), -hat(a)), Z(rho) -> Z(rho).
RelCenterSimple t_delta(const TYCategory& c, const RelCenterSimple& u);

// gamma on X(a,phi) is phi(a); on Z(rho) it is tau * sum_x rho(x)^{-1}.
Cyc gamma_scalar(const TYCategory& c, const RelCenterSimple& u);

// Crossed-braiding scalar families:
//   X(a,phi) (x) X(b,psi): psi(a); X(a,phi) (x) Z(rho): rho(a);
//   Z (x) X: 1; Z(rho') (x) Z(rho): one component rho(-a)^{-1} per a.
ScalarComponents crossed_braiding(const TYCategory& c, const RelCenterSimple& u,
                                  const RelCenterSimple& v);

} // namespace mtc
