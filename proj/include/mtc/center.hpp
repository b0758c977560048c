#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtc/modular_data.hpp"
#include "mtc/ty.hpp"

namespace mtc {

// Simple objects of the center: 2n invertibles X(a,eps) with
// eps^2 = chi(a,a)^{-1}, n(n-1)/2 two-dimensionals Y{a,b} over unordered
// distinct pairs, and 2n objects Z(rho,Delta) of dimension sqrt(n) with
// Delta^2 = tau * sum_x rho(x)^{-1}.
struct CenterSimple {
    enum Kind { Inv, TwoDim, Big };
    Kind kind = Inv;
    Element a;            // Inv and TwoDim
    Element b;            // TwoDim only; index(a) < index(b)
    long rho_index = -1;  // Big: position in solve_rho order
    RhoFunction rho;      // Big
    int branch = 0;       // Inv/Big: which square root (pair order)
    Cyc root;             // Inv: eps; Big: Delta

    std::string label(const Group& g) const;
};

// Deterministic enumeration: invertibles by (a, branch), then pairs
// lexicographically, then (rho index, branch).
std::vector<CenterSimple> center_simples(const TYCategory& c);

// theta: chi(a,a)^{-1} on X, chi(a,b)^{-1} on Y, Delta on Z.
std::vector<Cyc> center_twists(const TYCategory& c,
                               const std::vector<CenterSimple>& simples);

std::vector<Cyc> center_dims(const TYCategory& c,
                             const std::vector<CenterSimple>& simples);

std::vector<std::vector<Cyc>> center_S(const TYCategory& c,
                                       const std::vector<CenterSimple>& simples);

// Labels + dims + twists + S in one bundle; unit is X(0,+1) at index 0.
ModularData center_modular_data(const TYCategory& c);

// Whether a -> chi(a,.)^2 is injective; equivalent to |A| odd, and
// cross-checked against that parity.
bool pointed_nondegenerate(const TYCategory& c);

struct GTResult {
    bool value = false;
    std::optional<Subgroup> witness;
};

// TY(A,chi,tau) is group-theoretical iff (A,chi) has a Lagrangian subgroup.
GTResult is_group_theoretical(const TYCategory& c);

// True iff some Lagrangian subgroup is stable under every automorphism in G;
// G must consist of chi-preserving automorphisms.
bool equivariantization_is_gt(const TYCategory& c,
                              const std::vector<Automorphism>& G);

} // namespace mtc
