#include "qdense/protocol.hpp"

#include <cmath>
#include <stdexcept>

#include "qdense/rng.hpp"
#include "qdense/transfer.hpp"

namespace qdense {

std::vector<MessageSymbol> frame_messages(std::size_t num_symbols, std::size_t p, std::size_t q,
                                          std::uint64_t seed) {
    if (num_symbols < 1) throw std::invalid_argument("frame_messages: need at least one symbol");
    if (q < 1 || p < q) throw std::invalid_argument("frame_messages: require 1 <= q <= p");
    SplitMix64 rng(seed);
    std::vector<MessageSymbol> symbols;
    symbols.reserve(num_symbols);
    const std::uint64_t alphabet = static_cast<std::uint64_t>(p) * q;
    for (std::size_t i = 0; i < num_symbols; ++i) {
        symbols.push_back(MessageSymbol::from_flat(rng.next_below(alphabet), q));
    }
    return symbols;
}

SessionReport run_session(const SessionConfig& cfg) {
    if (cfg.num_symbols < 1) throw std::invalid_argument("session: need at least one symbol");
    if (cfg.q < 1 || cfg.p < cfg.q) throw std::invalid_argument("session: require 1 <= q <= p");

    SessionReport report;
    if (cfg.use_transfer) {
        report.pre_transfer_bits = 2.0 * std::log2(static_cast<double>(cfg.q));
    }

    const BellBasis basis = full_basis(cfg.p, cfg.q);
    report.sent = frame_messages(cfg.num_symbols, cfg.p, cfg.q, cfg.seed);
    report.received.reserve(cfg.num_symbols);

    // Per-round sampling seeds come from a session-level stream that is
    // independent of the framing stream.
    SplitMix64 sample_seeds(cfg.seed ^ 0xa5a5a5a5a5a5a5a5ULL);

    const std::size_t alphabet = cfg.p * cfg.q;
    std::vector<std::vector<std::uint64_t>> joint(alphabet,
                                                  std::vector<std::uint64_t>(alphabet, 0));
    for (const MessageSymbol& msg : report.sent) {
        // The entangled pair is consumed each round; re-prepare it.
        const StateVector channel = cfg.use_transfer
                                        ? transferred_channel(run_transfer(cfg.q, cfg.p))
                                        : channel_state(cfg.p, cfg.q);
        const StateVector encoded = encode(channel, msg);
        const MeasurementOutcome outcome =
            cfg.decode_mode == DecodeMode::kDeterministic
                ? decode_deterministic(encoded, basis)
                : decode_sampled(encoded, basis, sample_seeds.next());
        report.received.push_back(outcome.symbol);
        if (outcome.symbol != msg) ++report.error_count;
        ++joint[msg.flat(cfg.q)][outcome.symbol.flat(cfg.q)];
    }

    report.empirical_mutual_information = mutual_information(joint);
    report.theoretical_capacity = capacity_bits(cfg.p, cfg.q);
    report.per_symbol_bits = report.theoretical_capacity;
    return report;
}

double mutual_information(const std::vector<std::vector<std::uint64_t>>& joint_counts) {
    std::uint64_t total = 0;
    std::vector<double> row_sums(joint_counts.size(), 0.0);
    std::vector<double> col_sums;
    for (std::size_t x = 0; x < joint_counts.size(); ++x) {
        if (col_sums.empty()) col_sums.assign(joint_counts[x].size(), 0.0);
        if (joint_counts[x].size() != col_sums.size()) {
            throw std::invalid_argument("mutual_information: ragged count matrix");
        }
        for (std::size_t y = 0; y < joint_counts[x].size(); ++y) {
            total += joint_counts[x][y];
            row_sums[x] += static_cast<double>(joint_counts[x][y]);
            col_sums[y] += static_cast<double>(joint_counts[x][y]);
        }
    }
    if (total == 0) throw std::invalid_argument("mutual_information: all counts are zero");

    const double n = static_cast<double>(total);
    double bits = 0.0;
    for (std::size_t x = 0; x < joint_counts.size(); ++x) {
        for (std::size_t y = 0; y < joint_counts[x].size(); ++y) {
            if (joint_counts[x][y] == 0) continue;
            const double pxy = static_cast<double>(joint_counts[x][y]) / n;
            bits += pxy * std::log2(pxy * n * n / (row_sums[x] * col_sums[y]));
        }
    }
    return bits;
}

}  // namespace qdense
