#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qdense/dense_coding.hpp"

namespace qdense {

enum class DecodeMode { kDeterministic, kSampled };

struct SessionConfig {
    std::size_t p = 2;
    std::size_t q = 2;
    std::size_t num_symbols = 1;
    std::uint64_t seed = 0;
    DecodeMode decode_mode = DecodeMode::kDeterministic;
    // When set, first run the entanglement transfer from a q x q
    // channel with a p-level ancilla, then code over the result.
    bool use_transfer = false;
};

struct SessionReport {
    std::vector<MessageSymbol> sent;
    std::vector<MessageSymbol> received;
    std::size_t error_count = 0;
    double empirical_mutual_information = 0.0;  // bits
    double theoretical_capacity = 0.0;          // bits, log2(p*q)
    double per_symbol_bits = 0.0;               // bits, log2(p*q)
    // log2(q^2), present only for transfer-enabled sessions.
    std::optional<double> pre_transfer_bits;
};

// Uniform message stream over the p*q alphabet, reproducible from seed.
std::vector<MessageSymbol> frame_messages(std::size_t num_symbols, std::size_t p, std::size_t q,
                                          std::uint64_t seed);

SessionReport run_session(const SessionConfig& cfg);

// Plug-in estimate I(X;Y) in bits from a joint count matrix (sent rows,
// received columns); 0*log(0) terms are dropped.
double mutual_information(const std::vector<std::vector<std::uint64_t>>& joint_counts);

}  // namespace qdense
