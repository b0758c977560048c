#pragma once

#include <string>
#include <vector>

#include "mtc/forms.hpp"
#include "mtc/modular_data.hpp"

namespace mtc {

// The rank-(3 + (n-1)/2 + 1) series E(q,+-) attached to a nondegenerate
// quadratic form q on an odd-order group: labels 1, X-, the classes
// Y{a,-a}, and Z0, Z1.
struct ESimple {
    enum Kind { Unit, XMinus, Y, Z };
    Kind kind = Unit;
    Element a;  // Y: canonical representative, min(a,-a) by element index
    int l = 0;  // Z: 0 or 1

    bool operator==(const ESimple& o) const {
        return kind == o.kind && a == o.a && l == o.l;
    }
    std::string label(const Group& g) const;
};

// Order: 1, X-, Y classes by representative index, Z0, Z1;
// requires odd |A| > 0.
std::vector<ESimple> e_simples(const Group& g);

// The closed-form fusion rules; result is a multiset.
std::vector<ESimple> e_fusion(const Group& g, const ESimple& u, const ESimple& v);

// Modular data: T = (1, 1, q(a)^2, Delta_l) and
//   S rows (d = (1,1,2,..,sqrt n)):
//   S_{X-,Z_l} = -sqrt n, S_{Y_a,Y_b} = 2(chi(a,b)^2 + chi(a,b)^{-2}),
//   S_{Y,Z} = 0, S_{Z_l,Z_m} = (+-)(sum q^2 / sum q) sqrt(n) with + iff l = m
//   and an overall tau sign.
// Delta_0^2 = tau * sum_a q(a) (tau = sign/sqrt n), Delta_0 the canonical
// square root, Delta_1 = -Delta_0.
ModularData e_modular_data(const QuadraticForm& q, int tau_sign);

// p_minus / sqrt(4n), exact; a root of unity for this family.
Cyc e_central_charge(const QuadraticForm& q, int tau_sign);

struct ReproduceReport {
    bool matched = false;
    bool z_swapped = false;        // golden matched after exchanging Z0/Z1
    bool y_conjugated = false;     // golden stores conjugated Y twists
    std::string case_name;
    int tau_sign = 1;
    std::vector<std::string> notes;
    ModularData computed;
};

// Rebuild one of the six stored tables ("5.3a", "5.3b", "5.4a".."5.4d") and
// compare against the golden file entry-exactly (S, T, central charge),
// tolerating only the documented Z0/Z1 transposition and the flagged Y-twist
// conjugation.  Golden files live in MTC_DATA_DIR (or the build default).
ReproduceReport reproduce_example(const std::string& case_name, int tau_sign);

std::vector<std::string> reproduce_case_names();

// Group and diagonal q exponents behind a named case.
struct ECase {
    std::vector<long> group_factors;
    std::vector<long> q_diag;
};
ECase reproduce_case_params(const std::string& case_name);

} // namespace mtc
