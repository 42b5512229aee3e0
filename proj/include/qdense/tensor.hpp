#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qdense {

using cplx = std::complex<double>;

// Tolerance policy: inputs validated at 1e-8 (then renormalized),
// stored-value invariants checked at 1e-10, algebraic identities in
// tests at 1e-12.
inline constexpr double kInputTol = 1e-8;
inline constexpr double kInvariantTol = 1e-10;

// Dense storage only; larger layouts are rejected outright.
inline constexpr std::size_t kMaxAmplitudes = 1'000'000;

// Ordered subsystem dimensions of a composite system. Fixes the index
// convention: the flat index of |a1 a2 ... ak> is the mixed-radix value
// with a1 (particle 1) most significant.
class SubsystemLayout {
  public:
    explicit SubsystemLayout(std::vector<std::size_t> dims);

    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t num_subsystems() const { return dims_.size(); }
    std::size_t dim(std::size_t k) const { return dims_[k]; }
    std::size_t total() const { return total_; }
    // Amplitude-index distance between consecutive values of digit k.
    std::size_t stride(std::size_t k) const { return strides_[k]; }

    std::size_t encode(const std::vector<std::size_t>& digits) const;
    std::vector<std::size_t> decode(std::size_t flat) const;

    bool operator==(const SubsystemLayout& other) const = default;

  private:
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> strides_;
    std::size_t total_ = 1;
};

// Square complex matrix, row-major. Shared storage for unitaries,
// density matrices and Gram matrices.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim)
        : dim_(dim), entries_(dim * dim, cplx{0.0, 0.0}) {}
    ComplexMatrix(std::size_t dim, std::vector<cplx> entries);

    std::size_t dim() const { return dim_; }
    cplx& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const cplx& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    const std::vector<cplx>& entries() const { return entries_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix multiply(const ComplexMatrix& rhs) const;
    cplx trace() const;
    double max_deviation_from_identity() const;

  private:
    std::size_t dim_ = 0;
    std::vector<cplx> entries_;
};

// Normalized pure state over a SubsystemLayout.
class StateVector {
  public:
    StateVector(SubsystemLayout layout, std::vector<cplx> amps);

    const SubsystemLayout& layout() const { return layout_; }
    const std::vector<cplx>& amps() const { return amps_; }
    std::size_t size() const { return amps_.size(); }
    cplx amp(std::size_t flat) const { return amps_[flat]; }

  private:
    SubsystemLayout layout_;
    std::vector<cplx> amps_;
};

// dim x dim complex matrix with U^dagger U = I verified at construction.
class UnitaryOperator {
  public:
    explicit UnitaryOperator(ComplexMatrix entries);

    std::size_t dim() const { return entries_.dim(); }
    const ComplexMatrix& matrix() const { return entries_; }
    cplx at(std::size_t row, std::size_t col) const { return entries_.at(row, col); }

    static UnitaryOperator identity(std::size_t dim);

  private:
    ComplexMatrix entries_;
};

// Hermitian, trace-one, positive-semidefinite matrix, verified at
// construction.
class DensityMatrix {
  public:
    explicit DensityMatrix(ComplexMatrix entries);

    std::size_t dim() const { return entries_.dim(); }
    const ComplexMatrix& matrix() const { return entries_; }
    cplx at(std::size_t row, std::size_t col) const { return entries_.at(row, col); }

    // trace(rho^2); 1 iff pure.
    double purity() const;
    // Real spectrum, ascending.
    std::vector<double> eigenvalues() const;

  private:
    ComplexMatrix entries_;
};

// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

StateVector make_state(SubsystemLayout layout, std::vector<cplx> amps);
StateVector basis_ket(SubsystemLayout layout, const std::vector<std::size_t>& digits);

StateVector tensor(const StateVector& a, const StateVector& b);
cplx inner(const StateVector& a, const StateVector& b);

// Applies u to the listed subsystems (identity elsewhere). The matrix
// basis order is the mixed-radix order of the targets as listed, first
// target most significant.
StateVector apply_on(const UnitaryOperator& u, const StateVector& s,
                     const std::vector<std::size_t>& targets);

// Partial trace over the complement of `keep`.
DensityMatrix reduce(const StateVector& s, const std::vector<std::size_t>& keep);

// e^{2*pi*i*k/q}, exact at quarter turns so integer-valued matrices
// come out with entries in {0, +-1, +-i} exactly.
cplx root_of_unity(std::size_t k, std::size_t q);

}  // namespace qdense
