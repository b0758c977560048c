#pragma once

#include "mtc/cyclotomic.hpp"
#include "mtc/modular_data.hpp"

#include <utility>
#include <vector>

namespace mtc {

// Integer kernel for the hot verification paths (Gram products, Verlinde
// inversion).  Matrix entries are re-expressed as sparse monomial lists over a
// common root order M with a common denominator cleared, so that all inner
// loops run on int64 exponent/coefficient pairs accumulated in Z[x]/(x^M - 1).
// Reduction mod Phi_M happens once per output entry, through a precomputed
// integer table, never inside a loop over rationals.
struct SparseCycMatrix {
    long order = 1;       // common M: every entry lives in Q(zeta_M)
    long long scale = 1;  // original entry = (monomial sum) / scale
    std::vector<std::vector<std::vector<std::pair<long, long long>>>> entry;
};

SparseCycMatrix sparse_from_matrix(const std::vector<std::vector<Cyc>>& m);

// Gram product G[i][j] = sum_w A[i][w] * conj(A[j][w]), exact.
std::vector<std::vector<Cyc>> gram_matrix(const std::vector<std::vector<Cyc>>& a,
                                          bool parallel = true);

// Same result computed directly with field arithmetic; kept as the oracle the
// kernel is tested (and benchmarked) against.
std::vector<std::vector<Cyc>> gram_matrix_reference(const std::vector<std::vector<Cyc>>& a);

// Full fusion tensor N[x][y][z] by Verlinde inversion of md.S:
//   N = (1/D) sum_w S[x][w] S[y][w] conj(S[z][w]) / S[unit][w],  D = sum d^2.
// Throws std::runtime_error naming the first coordinate whose value fails to
// be a nonnegative rational integer (or when S[unit][w] vanishes).
std::vector<std::vector<std::vector<long>>> verlinde_tensor(const ModularData& md,
                                                            bool parallel = true);

std::vector<std::vector<std::vector<long>>> verlinde_tensor_reference(const ModularData& md);

} // namespace mtc
