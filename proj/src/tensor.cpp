#include "qdense/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qdense {

namespace {

// Offsets of every digit combination of `subset`, in mixed-radix order
// with the first listed subsystem most significant.
std::vector<std::size_t> subset_offsets(const SubsystemLayout& layout,
                                        const std::vector<std::size_t>& subset) {
    std::vector<std::size_t> offsets{0};
    for (std::size_t k : subset) {
        std::vector<std::size_t> next;
        next.reserve(offsets.size() * layout.dim(k));
        for (std::size_t base : offsets) {
            for (std::size_t d = 0; d < layout.dim(k); ++d) {
                next.push_back(base + d * layout.stride(k));
            }
        }
        offsets = std::move(next);
    }
    return offsets;
}

void check_subset(const SubsystemLayout& layout, const std::vector<std::size_t>& subset,
                  const char* what) {
    std::vector<bool> seen(layout.num_subsystems(), false);
    for (std::size_t k : subset) {
        if (k >= layout.num_subsystems()) {
            throw std::out_of_range(std::string(what) + ": subsystem index " +
                                    std::to_string(k) + " out of range");
        }
        if (seen[k]) {
            throw std::invalid_argument(std::string(what) + ": duplicate subsystem index " +
                                        std::to_string(k));
        }
        seen[k] = true;
    }
}

std::vector<std::size_t> complement(const SubsystemLayout& layout,
                                    const std::vector<std::size_t>& subset) {
    std::vector<bool> in(layout.num_subsystems(), false);
    for (std::size_t k : subset) in[k] = true;
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < layout.num_subsystems(); ++k) {
        if (!in[k]) rest.push_back(k);
    }
    return rest;
}

}  // namespace

SubsystemLayout::SubsystemLayout(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw std::invalid_argument("layout: no subsystems");
    for (std::size_t d : dims_) {
        if (d == 0) throw std::invalid_argument("layout: zero-dimensional subsystem");
        if (d > kMaxAmplitudes || total_ > kMaxAmplitudes / d) {
            throw std::invalid_argument("layout: total dimension exceeds " +
                                        std::to_string(kMaxAmplitudes));
        }
        total_ *= d;
    }
    strides_.assign(dims_.size(), 1);
    for (std::size_t k = dims_.size(); k-- > 1;) {
        strides_[k - 1] = strides_[k] * dims_[k];
    }
}

std::size_t SubsystemLayout::encode(const std::vector<std::size_t>& digits) const {
    if (digits.size() != dims_.size()) {
        throw std::invalid_argument("encode: digit count mismatch");
    }
    std::size_t flat = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        if (digits[k] >= dims_[k]) throw std::out_of_range("encode: digit out of range");
        flat += digits[k] * strides_[k];
    }
    return flat;
}

std::vector<std::size_t> SubsystemLayout::decode(std::size_t flat) const {
    if (flat >= total_) throw std::out_of_range("decode: index out of range");
    std::vector<std::size_t> digits(dims_.size());
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        digits[k] = (flat / strides_[k]) % dims_[k];
    }
    return digits;
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
        throw std::invalid_argument("matrix: entry count does not match dimension");
    }
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out.at(c, r) = std::conj(at(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::multiply(const ComplexMatrix& rhs) const {
    if (rhs.dim_ != dim_) throw std::invalid_argument("matrix multiply: dimension mismatch");
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const cplx lhs_rk = at(r, k);
            if (lhs_rk == cplx{0.0, 0.0}) continue;
            for (std::size_t c = 0; c < dim_; ++c) {
                out.at(r, c) += lhs_rk * rhs.at(k, c);
            }
        }
    }
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t{0.0, 0.0};
    for (std::size_t k = 0; k < dim_; ++k) t += at(k, k);
    return t;
}

double ComplexMatrix::max_deviation_from_identity() const {
    double dev = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            const cplx want = (r == c) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            dev = std::max(dev, std::abs(at(r, c) - want));
        }
    }
    return dev;
}

StateVector::StateVector(SubsystemLayout layout, std::vector<cplx> amps)
    : layout_(std::move(layout)), amps_(std::move(amps)) {
    if (amps_.size() != layout_.total()) {
        throw std::invalid_argument("state: amplitude count does not match layout");
    }
}

UnitaryOperator::UnitaryOperator(ComplexMatrix entries) : entries_(std::move(entries)) {
    if (entries_.dim() == 0) throw std::invalid_argument("unitary: empty matrix");
    const double dev = entries_.adjoint().multiply(entries_).max_deviation_from_identity();
    if (dev > kInvariantTol) {
        throw std::invalid_argument("unitary: U^dagger U deviates from identity by " +
                                    std::to_string(dev));
    }
}

UnitaryOperator UnitaryOperator::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) m.at(k, k) = 1.0;
    return UnitaryOperator(std::move(m));
}

DensityMatrix::DensityMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
    const std::size_t d = entries_.dim();
    if (d == 0) throw std::invalid_argument("density: empty matrix");
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = r; c < d; ++c) {
            if (std::abs(entries_.at(r, c) - std::conj(entries_.at(c, r))) > kInvariantTol) {
                throw std::invalid_argument("density: not Hermitian");
            }
        }
    }
    if (std::abs(entries_.trace() - cplx{1.0, 0.0}) > kInvariantTol) {
        throw std::invalid_argument("density: trace is not 1");
    }
    for (double ev : hermitian_eigenvalues(entries_)) {
        if (ev < -kInvariantTol) {
            throw std::invalid_argument("density: negative eigenvalue " + std::to_string(ev));
        }
    }
}

double DensityMatrix::purity() const {
    // trace(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    double p = 0.0;
    for (const cplx& e : entries_.entries()) p += std::norm(e);
    return p;
}

std::vector<double> DensityMatrix::eigenvalues() const {
    return hermitian_eigenvalues(entries_);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    const std::size_t d = m.dim();
    ComplexMatrix a = m;
    // Cyclic Jacobi: rotate away the largest off-diagonal entries until
    // the matrix is numerically diagonal. Dimensions here are tiny.
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = r + 1; c < d; ++c) off += std::norm(a.at(r, c));
        }
        if (off < 1e-26) break;
        for (std::size_t p = 0; p < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const cplx apq = a.at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                // Phase rotation making the pivot real, then a standard
                // real 2x2 Jacobi rotation.
                const cplx phase = apq / std::abs(apq);
                const double app = a.at(p, p).real();
                const double aqq = a.at(q, q).real();
                const double g = std::abs(apq);
                const double theta = 0.5 * std::atan2(2.0 * g, app - aqq);
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                // A <- J^dagger A J with J(p,p)=c, J(p,q)=-s*phase,
                // J(q,p)=s*conj(phase), J(q,q)=c.
                for (std::size_t k = 0; k < d; ++k) {
                    const cplx akp = a.at(k, p);
                    const cplx akq = a.at(k, q);
                    a.at(k, p) = c * akp + s * std::conj(phase) * akq;
                    a.at(k, q) = -s * phase * akp + c * akq;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    const cplx apk = a.at(p, k);
                    const cplx aqk = a.at(q, k);
                    a.at(p, k) = c * apk + s * phase * aqk;
                    a.at(q, k) = -s * std::conj(phase) * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> evs(d);
    for (std::size_t k = 0; k < d; ++k) evs[k] = a.at(k, k).real();
    std::sort(evs.begin(), evs.end());
    return evs;
}

StateVector make_state(SubsystemLayout layout, std::vector<cplx> amps) {
    if (amps.size() != layout.total()) {
        throw std::invalid_argument("make_state: amplitude count does not match layout");
    }
    double norm_sq = 0.0;
    for (const cplx& a : amps) norm_sq += std::norm(a);
    const double norm = std::sqrt(norm_sq);
    if (norm < kInputTol) throw std::invalid_argument("make_state: zero vector");
    if (std::abs(norm - 1.0) > kInputTol) {
        throw std::invalid_argument("make_state: norm " + std::to_string(norm) +
                                    " is not within tolerance of 1");
    }
    for (cplx& a : amps) a /= norm;
    return StateVector(std::move(layout), std::move(amps));
}

StateVector basis_ket(SubsystemLayout layout, const std::vector<std::size_t>& digits) {
    std::vector<cplx> amps(layout.total(), cplx{0.0, 0.0});
    amps[layout.encode(digits)] = 1.0;
    return StateVector(std::move(layout), std::move(amps));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    std::vector<std::size_t> dims = a.layout().dims();
    dims.insert(dims.end(), b.layout().dims().begin(), b.layout().dims().end());
    SubsystemLayout layout(std::move(dims));
    std::vector<cplx> amps(layout.total());
    const std::size_t nb = b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < nb; ++j) {
            amps[i * nb + j] = a.amp(i) * b.amp(j);
        }
    }
    return StateVector(std::move(layout), std::move(amps));
}

cplx inner(const StateVector& a, const StateVector& b) {
    if (a.layout() != b.layout()) throw std::invalid_argument("inner: layout mismatch");
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a.amp(i)) * b.amp(i);
    }
    return acc;
}

StateVector apply_on(const UnitaryOperator& u, const StateVector& s,
                     const std::vector<std::size_t>& targets) {
    const SubsystemLayout& layout = s.layout();
    check_subset(layout, targets, "apply_on");
    std::size_t target_dim = 1;
    for (std::size_t k : targets) target_dim *= layout.dim(k);
    if (u.dim() != target_dim) {
        throw std::invalid_argument("apply_on: operator dimension " + std::to_string(u.dim()) +
                                    " does not match target dimension " +
                                    std::to_string(target_dim));
    }

    const std::vector<std::size_t> fiber = subset_offsets(layout, targets);
    const std::vector<std::size_t> rest = subset_offsets(layout, complement(layout, targets));
    const std::size_t k_dim = fiber.size();

    std::vector<cplx> out(s.size());
    std::vector<cplx> in_fiber(k_dim);
    for (std::size_t base : rest) {
        for (std::size_t c = 0; c < k_dim; ++c) in_fiber[c] = s.amp(base + fiber[c]);
        for (std::size_t r = 0; r < k_dim; ++r) {
            cplx acc{0.0, 0.0};
            for (std::size_t c = 0; c < k_dim; ++c) acc += u.at(r, c) * in_fiber[c];
            out[base + fiber[r]] = acc;
        }
    }
    return StateVector(layout, std::move(out));
}

DensityMatrix reduce(const StateVector& s, const std::vector<std::size_t>& keep) {
    const SubsystemLayout& layout = s.layout();
    check_subset(layout, keep, "reduce");

    const std::vector<std::size_t> kept = subset_offsets(layout, keep);
    const std::vector<std::size_t> rest = subset_offsets(layout, complement(layout, keep));
    const std::size_t d = kept.size();

    ComplexMatrix rho(d);
    for (std::size_t base : rest) {
        for (std::size_t r = 0; r < d; ++r) {
            const cplx ar = s.amp(base + kept[r]);
            if (ar == cplx{0.0, 0.0}) continue;
            for (std::size_t c = 0; c < d; ++c) {
                rho.at(r, c) += ar * std::conj(s.amp(base + kept[c]));
            }
        }
    }
    return DensityMatrix(std::move(rho));
}

cplx root_of_unity(std::size_t k, std::size_t q) {
    if (q == 0) throw std::invalid_argument("root_of_unity: q must be positive");
    k %= q;
    // Quarter turns are exact so that phase matrices with entries in
    // {0, +-1, +-i} compare bitwise against hand-written fixtures.
    if (k == 0) return {1.0, 0.0};
    if (4 * k == q) return {0.0, 1.0};
    if (2 * k == q) return {-1.0, 0.0};
    if (4 * k == 3 * q) return {0.0, -1.0};
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(q);
    return std::polar(1.0, angle);
}

}  // namespace qdense
