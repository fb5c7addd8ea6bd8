#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace lindsq {

using complexd = std::complex<double>;

/// Dense complex matrix, row-major storage.
///
/// This is the one matrix type of the library; it carries operators on the
/// truncated Fock space (d x d) as well as superoperators (d^2 x d^2).
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CMatrix identity(std::size_t n);
    static CMatrix diag(std::span<const complexd> entries);
    static CMatrix diag_real(std::span<const double> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return data_.empty(); }

    complexd& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const complexd& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    complexd* data() noexcept { return data_.data(); }
    const complexd* data() const noexcept { return data_.data(); }
    complexd* row(std::size_t i) noexcept { return data_.data() + i * cols_; }
    const complexd* row(std::size_t i) const noexcept { return data_.data() + i * cols_; }

    CMatrix& operator+=(const CMatrix& other);
    CMatrix& operator-=(const CMatrix& other);
    CMatrix& operator*=(complexd s);

    CMatrix transpose() const;
    CMatrix conjugate() const;
    CMatrix adjoint() const;

    bool all_finite() const noexcept;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<complexd> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(complexd s, CMatrix a);
CMatrix operator*(CMatrix a, complexd s);
CMatrix operator*(const CMatrix& a, const CMatrix& b);

/// Kronecker product; entry ((i*rB+k),(j*cB+l)) = A(i,j)*B(k,l).
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// exp(scale*A) by scaling-and-squaring with a diagonal Pade kernel.
/// Squaring count is chosen from the 1-norm so the backward error bound
/// stays below 1e-13.
CMatrix expm(const CMatrix& a, complexd scale = complexd{1.0, 0.0});

/// All eigenvalues of a Hermitian matrix (ascending), by cyclic Jacobi sweeps.
/// The input must be Hermitian within 1e-10 relative Frobenius defect.
std::vector<double> hermitian_eigenvalues(const CMatrix& h);
double hermitian_min_eig(const CMatrix& h);

struct MatrixStats {
    double frobenius = 0.0;
    complexd trace{0.0, 0.0};
    double herm_defect = 0.0;
};

/// Frobenius norm, trace, and ||A - A^dagger||_F for a square matrix.
MatrixStats norms_and_trace(const CMatrix& a);

double frobenius_norm(const CMatrix& a);
double one_norm(const CMatrix& a);
double max_abs(const CMatrix& a);
complexd trace_of(const CMatrix& a);

/// Solve A X = B by LU with partial pivoting.
CMatrix solve(CMatrix a, CMatrix b);

CMatrix commutator(const CMatrix& a, const CMatrix& b);

}  // namespace lindsq
