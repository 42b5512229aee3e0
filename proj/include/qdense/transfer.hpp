#pragma once

#include <cstddef>
#include <utility>

#include "qdense/tensor.hpp"

namespace qdense {

// Outcome of upgrading a symmetric q x q channel to a non-symmetric
// p x q one with a p-level ancilla on the sender's side. States live
// over layout [q, q, p]: particle 1 and 2 are the original pair
// (particle 2 with the receiver), particle 3 the ancilla.
struct TransferReport {
    std::size_t q = 0;
    std::size_t p = 0;
    StateVector initial_state;
    StateVector final_state;
    // trace(rho_1^2); 1 means particle 1 fully disentangled.
    double particle1_purity = 0.0;
    // Overlap with the target |0>_1 (x) sum_k |kk>_23 / sqrt(q).
    double channel23_fidelity = 0.0;
    double capacity_before = 0.0;  // log2(q^2)
    double capacity_after = 0.0;   // log2(p*q)
};

// The two permutation unitaries on the sender's particles (1, 3), in
// the q*p-dimensional joint basis with particle 1 most significant.
// Construction self-checks that the defining index sets cover every
// basis ket exactly once.
std::pair<UnitaryOperator, UnitaryOperator> transfer_unitaries(std::size_t q, std::size_t p);

// Runs the two-step transfer on channel_state(q,q) (x) |0>_3 and
// verifies the factorized result.
TransferReport run_transfer(std::size_t q, std::size_t p);

// log2(p*q) - log2(q^2) = log2(p/q) extra bits per round.
double capacity_gain(std::size_t q, std::size_t p);

// The transferred channel re-expressed as a two-particle state over
// layout [p, q], sender particle first. Requires particle 1 of the
// final state to be exactly |0>.
StateVector transferred_channel(const TransferReport& report);

}  // namespace qdense
