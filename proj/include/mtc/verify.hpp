#pragma once

#include "mtc/cyclotomic.hpp"
#include "mtc/modular_data.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace mtc {

// Outcome of one identity check.  `detail` carries the first counterexample
// coordinate (or a skip notice); empty on a clean pass.
struct CheckOutcome {
    bool passed = true;
    bool skipped = false;
    std::string detail;
};

struct VerificationReport {
    CheckOutcome s_symmetric;
    CheckOutcome unitarity;        // S S-dagger = (sum d^2) I
    CheckOutcome verlinde_integral;
    CheckOutcome balancing;        // S regenerated from (N, theta, d)
    CheckOutcome gauss_product;    // p+ p- = global dim
    CheckOutcome charge_modulus;   // |p+|^2 = global dim, i.e. |charge| = 1
    CheckOutcome weak_integrality; // every d^2 and the global dim are integers

    Cyc global_dim;
    Cyc p_plus;
    Cyc p_minus;
    Cyc central_charge;  // p- / sqrt(global dim) when the dim is a positive integer
    bool has_charge = false;

    std::vector<std::vector<std::vector<long>>> fusion;  // empty when Verlinde failed

    bool all_passed() const;
};

// Runs the full identity suite.  `with_verlinde` also computes the fusion
// tensor and the balancing check (the expensive part on large data).
VerificationReport check_axioms(const ModularData& md, bool with_verlinde = true,
                                bool parallel = true);

// Fusion tensor by Verlinde inversion; throws std::runtime_error with the
// offending coordinate when an entry is not a nonnegative integer.
std::vector<std::vector<std::vector<long>>> verlinde(const ModularData& md,
                                                     bool parallel = true);

// Per-row decomposition of the label set: T = zero entries of row x,
// U = entries of maximal modulus |S_xy| = d_y, D = everything else except the
// unit.  Dim-sums are exact integers (weak integrality is a precondition).
struct ZeroStructure {
    std::vector<std::size_t> t_set, d_set, u_set;
    long dim_t = 0, dim_d = 0, dim_u = 0;
};
ZeroStructure zero_structure(const ModularData& md, std::size_t x);

// Every row of a label with dim > 1 contains a zero, quantitatively
// dim(T_x) >= d_x^2 - 1.
CheckOutcome theorem_6_1_check(const ModularData& md);

// 3 dim(T_x) + dim(U_x) > global dim for every non-invertible label.
CheckOutcome prop_6_2_check(const ModularData& md);

// prod_{y in D_x} (|S_xy|^2 / d_y^2)^(d_y^2) is rational and >= 1.
CheckOutcome galois_product_check(const ModularData& md, std::size_t x);

} // namespace mtc
