#pragma once

#include <cstddef>
#include <vector>

#include "qdense/tensor.hpp"

namespace qdense {

// The complete generalized Bell family for a (p, q) channel: p*q
// pairwise-orthonormal states over layout [p, q], enumerated by the
// flat message index k = m*q + n.
struct BellBasis {
    std::size_t p = 0;
    std::size_t q = 0;
    std::vector<StateVector> states;

    std::size_t size() const { return states.size(); }
    const StateVector& state(std::size_t m, std::size_t n) const { return states[m * q + n]; }
};

// Shared maximally entangled channel: sum_j |jj> / sqrt(q) over layout
// [p, q]. Requires 1 <= q <= p.
StateVector channel_state(std::size_t p, std::size_t q);

// |Psi_mn> = sum_j e^{2*pi*i*j*n/q} |(j+m) mod p>|j> / sqrt(q).
StateVector bell_state(std::size_t p, std::size_t q, std::size_t m, std::size_t n);

BellBasis full_basis(std::size_t p, std::size_t q);

// Entry (k, l) = <states[k]|states[l]>; identity iff orthonormal.
ComplexMatrix gram_matrix(const BellBasis& basis);

}  // namespace qdense
