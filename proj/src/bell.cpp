#include "qdense/bell.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qdense {

namespace {

void check_dims(std::size_t p, std::size_t q) {
    if (q < 1 || p < q) {
        throw std::invalid_argument("channel dimensions require 1 <= q <= p, got p=" +
                                    std::to_string(p) + " q=" + std::to_string(q));
    }
}

}  // namespace

StateVector channel_state(std::size_t p, std::size_t q) {
    return bell_state(p, q, 0, 0);
}

StateVector bell_state(std::size_t p, std::size_t q, std::size_t m, std::size_t n) {
    check_dims(p, q);
    if (m >= p || n >= q) {
        throw std::out_of_range("bell_state: message (" + std::to_string(m) + "," +
                                std::to_string(n) + ") out of range for p=" + std::to_string(p) +
                                " q=" + std::to_string(q));
    }
    SubsystemLayout layout({p, q});
    std::vector<cplx> amps(layout.total(), cplx{0.0, 0.0});
    const double scale = 1.0 / std::sqrt(static_cast<double>(q));
    for (std::size_t j = 0; j < q; ++j) {
        amps[((j + m) % p) * q + j] = scale * root_of_unity(j * n, q);
    }
    return StateVector(std::move(layout), std::move(amps));
}

BellBasis full_basis(std::size_t p, std::size_t q) {
    check_dims(p, q);
    BellBasis basis{p, q, {}};
    basis.states.reserve(p * q);
    for (std::size_t m = 0; m < p; ++m) {
        for (std::size_t n = 0; n < q; ++n) {
            basis.states.push_back(bell_state(p, q, m, n));
        }
    }
    return basis;
}

ComplexMatrix gram_matrix(const BellBasis& basis) {
    const std::size_t d = basis.size();
    ComplexMatrix g(d);
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l) {
            g.at(k, l) = inner(basis.states[k], basis.states[l]);
        }
    }
    return g;
}

}  // namespace qdense
