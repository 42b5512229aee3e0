#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qdense/bell.hpp"
#include "qdense/tensor.hpp"

namespace qdense {

// Classical message pair, 0 <= m < p and 0 <= n < q for the session's
// channel dimensions.
struct MessageSymbol {
    std::size_t m = 0;
    std::size_t n = 0;

    bool operator==(const MessageSymbol&) const = default;

    std::size_t flat(std::size_t q) const { return m * q + n; }
    static MessageSymbol from_flat(std::size_t k, std::size_t q) { return {k / q, k % q}; }
};

struct MeasurementOutcome {
    MessageSymbol symbol;
    double probability = 0.0;
    // Probability of every basis element, indexed by k = m*q + n.
    std::vector<double> distribution;
};

// U_mn on the sender's p-level particle. Columns j < q carry the phase
// e^{2*pi*i*j*n/q} into row (j+m) mod p; columns q <= j < p complete
// the matrix as the phase-free cyclic shift so the result is unitary.
UnitaryOperator encoding_unitary(std::size_t p, std::size_t q, std::size_t m, std::size_t n);

// Applies U_mn to particle 1 of the shared channel; the output is the
// Bell state |Psi_mn>.
StateVector encode(const StateVector& channel, MessageSymbol msg);

// Projective measurement statistics in the Bell basis; the symbol is
// the argmax of the distribution, ties broken toward the smallest flat
// index.
MeasurementOutcome decode_deterministic(const StateVector& s, const BellBasis& basis);

// Samples the measured symbol from the Bell-basis distribution with a
// seed-determined generator; identical seeds give identical outcomes.
MeasurementOutcome decode_sampled(const StateVector& s, const BellBasis& basis,
                                  std::uint64_t seed);

// log2(p*q) bits per transmitted particle.
double capacity_bits(std::size_t p, std::size_t q);

}  // namespace qdense
