#include "qdense/dense_coding.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qdense/rng.hpp"

namespace qdense {

namespace {

constexpr double kProbabilityFloor = 1e-15;

std::vector<double> basis_distribution(const StateVector& s, const BellBasis& basis) {
    if (basis.size() == 0) throw std::invalid_argument("decode: empty basis");
    if (s.layout() != basis.states.front().layout()) {
        throw std::invalid_argument("decode: state layout does not match basis layout");
    }
    std::vector<double> dist(basis.size());
    double total = 0.0;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        double prob = std::norm(inner(basis.states[k], s));
        if (prob < kProbabilityFloor) prob = 0.0;
        dist[k] = prob;
        total += prob;
    }
    if (std::abs(total - 1.0) > kInvariantTol) {
        throw std::invalid_argument("decode: basis probabilities sum to " +
                                    std::to_string(total) + ", state is outside the basis span");
    }
    return dist;
}

MeasurementOutcome outcome_at(std::size_t k, std::size_t q, std::vector<double> dist) {
    return {MessageSymbol::from_flat(k, q), dist[k], std::move(dist)};
}

}  // namespace

UnitaryOperator encoding_unitary(std::size_t p, std::size_t q, std::size_t m, std::size_t n) {
    if (q < 1 || p < q) {
        throw std::invalid_argument("encoding_unitary: require 1 <= q <= p");
    }
    if (m >= p || n >= q) {
        throw std::out_of_range("encoding_unitary: message (" + std::to_string(m) + "," +
                                std::to_string(n) + ") out of range");
    }
    ComplexMatrix u(p);
    for (std::size_t j = 0; j < p; ++j) {
        const cplx phase = (j < q) ? root_of_unity(j * n, q) : cplx{1.0, 0.0};
        u.at((j + m) % p, j) = phase;
    }
    return UnitaryOperator(std::move(u));
}

StateVector encode(const StateVector& channel, MessageSymbol msg) {
    if (channel.layout().num_subsystems() != 2) {
        throw std::invalid_argument("encode: channel must be a two-particle state");
    }
    const std::size_t p = channel.layout().dim(0);
    const std::size_t q = channel.layout().dim(1);
    return apply_on(encoding_unitary(p, q, msg.m, msg.n), channel, {0});
}

MeasurementOutcome decode_deterministic(const StateVector& s, const BellBasis& basis) {
    std::vector<double> dist = basis_distribution(s, basis);
    std::size_t best = 0;
    for (std::size_t k = 1; k < dist.size(); ++k) {
        if (dist[k] > dist[best]) best = k;
    }
    return outcome_at(best, basis.q, std::move(dist));
}

MeasurementOutcome decode_sampled(const StateVector& s, const BellBasis& basis,
                                  std::uint64_t seed) {
    std::vector<double> dist = basis_distribution(s, basis);
    SplitMix64 rng(seed);
    const double u = rng.next_unit();
    double cumulative = 0.0;
    std::size_t drawn = dist.size() - 1;  // absorbs rounding shortfall
    for (std::size_t k = 0; k < dist.size(); ++k) {
        cumulative += dist[k];
        if (u < cumulative) {
            drawn = k;
            break;
        }
    }
    return outcome_at(drawn, basis.q, std::move(dist));
}

double capacity_bits(std::size_t p, std::size_t q) {
    if (p < 1 || q < 1) throw std::invalid_argument("capacity_bits: dimensions must be >= 1");
    return std::log2(static_cast<double>(p) * static_cast<double>(q));
}

}  // namespace qdense
