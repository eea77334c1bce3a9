#pragma once

#include <stdexcept>

#include "kk/report.hpp"
#include "kk/root_system.hpp"

namespace kk {

// A suite refused a run that exceeds its configured size budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Pairwise distinctness of the Kostant-Kumar polynomials of involutions.
// Ranks up to 3 run plainly; rank 4 needs allow_big (minutes of exact
// arithmetic); larger ranks are refused.
VerificationReport verify_distinct_dw(Kind kind, int rank, int jobs = 1,
                                      bool allow_big = false);

// Column-1 divisibility of d_w for involutions of B_n/C_n, including the
// factorization d_w = d~_w * prod(column 1) when the support misses column 1.
VerificationReport verify_divisibility_lemma(Kind kind, int rank);

// The first-column Bruhat chain and the comparability/incomparability
// patterns between s_{e_i-e_j}, s_{e_i+e_j} and the diagonal reflections.
VerificationReport verify_bruhat_remarks(Kind kind, int rank);

// Length of w' = embed(w) * cross reflection, direct inversion count vs the
// two closed forms, for every involution and every admissible (k1,k2).
VerificationReport verify_length_lemma_A(int rank);
VerificationReport verify_length_lemma_C(int rank);

// Equal-length distinct involutions are separated by the constructed
// embedding: l''(w1') != l''(w2').
VerificationReport verify_distinguishing(Kind kind, int rank);

// dim of the Borel orbit of f_sigma equals l(sigma), for sl_{rank+1} (A,
// rank <= 4) and sp_{2 rank} (C, rank <= 3).
VerificationReport verify_orbit_dims(Kind kind, int rank);

}  // namespace kk
