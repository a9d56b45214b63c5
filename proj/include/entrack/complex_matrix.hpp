#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace entrack {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Values are immutable in spirit: every
// operation returns a new matrix, nothing here mutates shared state.
class ComplexMatrix {
public:
    ComplexMatrix() : rows_(0), cols_(0) {}
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<cplx>& data() const { return data_; }

    ComplexMatrix adjoint() const;
    cplx trace() const;

    // Largest |a_ij - b_ij|; infinity if shapes differ.
    double max_abs_diff(const ComplexMatrix& other) const;
    bool approx_equal(const ComplexMatrix& other, double tol) const {
        return max_abs_diff(other) <= tol;
    }

    // max_ij |m - m^dagger| for a square matrix.
    double hermitian_defect() const;
    bool is_hermitian(double tol) const { return hermitian_defect() <= tol; }
    bool is_unitary(double tol) const;

private:
    std::size_t rows_, cols_;
    std::vector<cplx> data_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Eigenvalues sorted descending; eigenvectors() column i pairs with eigenvalue i.
struct Spectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

// Tolerances for the Hermitian eigensolver. Density matrices in this code are
// well conditioned, so the defaults sit far below any physical eigenvalue.
inline constexpr double kTauHermitian = 1e-10;  // max allowed |m - m^dagger| entry
inline constexpr double kTauEigen = 1e-12;      // off-diagonal residual at convergence
inline constexpr int kMaxJacobiSweeps = 100;

// Cyclic Jacobi with complex Givens rotations. Throws std::invalid_argument if
// the input is not square or not Hermitian within tau_herm, std::runtime_error
// if the sweep limit is hit before the off-diagonal residual drops below tau_eig.
Spectrum hermitian_eigensystem(const ComplexMatrix& m,
                               double tau_herm = kTauHermitian,
                               double tau_eig = kTauEigen,
                               int max_sweeps = kMaxJacobiSweeps);

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

}  // namespace entrack
