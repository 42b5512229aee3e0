#include "qdense/transfer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qdense/bell.hpp"

namespace qdense {

namespace {

void check_dims(std::size_t q, std::size_t p) {
    if (q < 1 || p < q) {
        throw std::invalid_argument("transfer: require 1 <= q <= p, got q=" + std::to_string(q) +
                                    " p=" + std::to_string(p));
    }
}

// Builds a permutation on the (1,3) joint space from (row, col) ket
// pairs, rejecting any ket mapped more or less than once.
class PermutationBuilder {
  public:
    PermutationBuilder(std::size_t q, std::size_t p)
        : q_(q), p_(p), matrix_(q * p), row_used_(q * p, false), col_used_(q * p, false) {}

    void map(std::size_t row1, std::size_t row3, std::size_t col1, std::size_t col3) {
        const std::size_t row = row1 * p_ + row3;
        const std::size_t col = col1 * p_ + col3;
        if (row_used_[row] || col_used_[col]) {
            throw std::logic_error("transfer: index sets cover a basis ket twice");
        }
        row_used_[row] = true;
        col_used_[col] = true;
        matrix_.at(row, col) = 1.0;
    }

    UnitaryOperator finish() {
        for (std::size_t k = 0; k < q_ * p_; ++k) {
            if (!row_used_[k] || !col_used_[k]) {
                throw std::logic_error("transfer: index sets leave a basis ket uncovered");
            }
        }
        return UnitaryOperator(std::move(matrix_));
    }

  private:
    std::size_t q_;
    std::size_t p_;
    ComplexMatrix matrix_;
    std::vector<bool> row_used_;
    std::vector<bool> col_used_;
};

}  // namespace

std::pair<UnitaryOperator, UnitaryOperator> transfer_unitaries(std::size_t q, std::size_t p) {
    check_dims(q, p);

    // First step: |i0> -> |ii>, |jj> -> |j0> (j >= 1), identity on the
    // remaining |mn> with n >= 1, n != m.
    PermutationBuilder first(q, p);
    for (std::size_t i = 0; i < q; ++i) first.map(i, i, i, 0);
    for (std::size_t j = 1; j < q; ++j) first.map(j, 0, j, j);
    for (std::size_t m = 0; m < q; ++m) {
        for (std::size_t n = 1; n < p; ++n) {
            if (n != m) first.map(m, n, m, n);
        }
    }

    // Second step: |ii> -> |0i>, |0j> -> |jj> (j >= 1); identity on
    // m = 0 with n >= q and on m >= 1 with n != m.
    PermutationBuilder second(q, p);
    for (std::size_t i = 0; i < q; ++i) second.map(0, i, i, i);
    for (std::size_t j = 1; j < q; ++j) second.map(j, j, 0, j);
    for (std::size_t n = q; n < p; ++n) second.map(0, n, 0, n);
    for (std::size_t m = 1; m < q; ++m) {
        for (std::size_t n = 0; n < p; ++n) {
            if (n != m) second.map(m, n, m, n);
        }
    }

    return {first.finish(), second.finish()};
}

TransferReport run_transfer(std::size_t q, std::size_t p) {
    check_dims(q, p);
    const auto [u13, u13_second] = transfer_unitaries(q, p);

    StateVector initial = tensor(channel_state(q, q), basis_ket(SubsystemLayout({p}), {0}));
    StateVector mid = apply_on(u13, initial, {0, 2});
    StateVector final_state = apply_on(u13_second, mid, {0, 2});

    // Target: |0>_1 (x) sum_k |kk>_23 / sqrt(q).
    SubsystemLayout layout({q, q, p});
    std::vector<cplx> target_amps(layout.total(), cplx{0.0, 0.0});
    const double scale = 1.0 / std::sqrt(static_cast<double>(q));
    for (std::size_t k = 0; k < q; ++k) {
        target_amps[layout.encode({0, k, k})] = scale;
    }
    const StateVector target(layout, std::move(target_amps));

    const double fidelity = std::norm(inner(target, final_state));
    const double purity = reduce(final_state, {0}).purity();
    return TransferReport{
        q,
        p,
        std::move(initial),
        std::move(final_state),
        purity,
        fidelity,
        2.0 * std::log2(static_cast<double>(q)),
        std::log2(static_cast<double>(p) * static_cast<double>(q)),
    };
}

double capacity_gain(std::size_t q, std::size_t p) {
    check_dims(q, p);
    return std::log2(static_cast<double>(p) / static_cast<double>(q));
}

StateVector transferred_channel(const TransferReport& report) {
    const SubsystemLayout& layout = report.final_state.layout();
    const std::size_t q = report.q;
    const std::size_t p = report.p;
    // Everything must sit in the particle-1 = |0> slice.
    for (std::size_t flat = 0; flat < layout.total(); ++flat) {
        if (layout.decode(flat)[0] != 0 &&
            std::abs(report.final_state.amp(flat)) > kInvariantTol) {
            throw std::logic_error("transferred_channel: particle 1 is not |0>");
        }
    }
    // Reorder (2,3) -> sender-first [p, q]: particle 3 is the new
    // sender particle.
    std::vector<cplx> amps(p * q, cplx{0.0, 0.0});
    for (std::size_t a = 0; a < q; ++a) {
        for (std::size_t b = 0; b < p; ++b) {
            amps[b * q + a] = report.final_state.amp(layout.encode({0, a, b}));
        }
    }
    return make_state(SubsystemLayout({p, q}), std::move(amps));
}

}  // namespace qdense
