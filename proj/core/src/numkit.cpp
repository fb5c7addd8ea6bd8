#include "lindsq/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "lindsq/errors.hpp"

namespace lindsq {

namespace {

// y += s*x on interleaved complex data; written out in doubles so the
// compiler vectorizes it without the Annex-G multiply helper.
void axpy(complexd s, const complexd* x, complexd* y, std::size_t n) {
    const double sr = s.real(), si = s.imag();
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    for (std::size_t j = 0; j < n; ++j) {
        const double xr = xp[2 * j], xi = xp[2 * j + 1];
        yp[2 * j] += sr * xr - si * xi;
        yp[2 * j + 1] += sr * xi + si * xr;
    }
}

bool is_diagonal(const CMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j && (a(i, j).real() != 0.0 || a(i, j).imag() != 0.0)) return false;
    return true;
}

}  // namespace

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diag(std::span<const complexd> entries) {
    CMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

CMatrix CMatrix::diag_real(std::span<const double> entries) {
    CMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw shape_error("matrix add: dimensions differ");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw shape_error("matrix subtract: dimensions differ");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

CMatrix& CMatrix::operator*=(complexd s) {
    for (auto& v : data_) v *= s;
    return *this;
}

CMatrix CMatrix::transpose() const {
    CMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

CMatrix CMatrix::conjugate() const {
    CMatrix c(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) c.data_[k] = std::conj(data_[k]);
    return c;
}

CMatrix CMatrix::adjoint() const {
    CMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
    return t;
}

bool CMatrix::all_finite() const noexcept {
    for (const auto& v : data_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

CMatrix operator+(CMatrix a, const CMatrix& b) {
    a += b;
    return a;
}

CMatrix operator-(CMatrix a, const CMatrix& b) {
    a -= b;
    return a;
}

CMatrix operator*(complexd s, CMatrix a) {
    a *= s;
    return a;
}

CMatrix operator*(CMatrix a, complexd s) {
    a *= s;
    return a;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw shape_error("matmul: inner dimensions differ");
    CMatrix c(a.rows(), b.cols());
    const std::size_t n = b.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        complexd* ci = c.row(i);
        const complexd* ai = a.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const complexd s = ai[k];
            if (s.real() == 0.0 && s.imag() == 0.0) continue;
            axpy(s, b.row(k), ci, n);
        }
    }
    return c;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    constexpr std::size_t max_entries = std::size_t{1} << 32;
    const std::size_t ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
    if (ra == 0 || rb == 0 || ca == 0 || cb == 0)
        throw shape_error("kron: empty operand");
    if (ra > max_entries / rb || ca > max_entries / cb ||
        ra * rb > max_entries / (ca * cb))
        throw shape_error("kron: product dimensions overflow supported size");
    CMatrix c(ra * rb, ca * cb);
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ca; ++j) {
            const complexd aij = a(i, j);
            if (aij.real() == 0.0 && aij.imag() == 0.0) continue;
            for (std::size_t k = 0; k < rb; ++k) {
                complexd* crow = c.row(i * rb + k) + j * cb;
                const complexd* brow = b.row(k);
                for (std::size_t l = 0; l < cb; ++l) crow[l] = aij * brow[l];
            }
        }
    return c;
}

double frobenius_norm(const CMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const complexd* r = a.row(i);
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(r[j]);
    }
    return std::sqrt(s);
}

double one_norm(const CMatrix& a) {
    std::vector<double> colsum(a.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const complexd* r = a.row(i);
        for (std::size_t j = 0; j < a.cols(); ++j) colsum[j] += std::abs(r[j]);
    }
    double m = 0.0;
    for (double v : colsum) m = std::max(m, v);
    return m;
}

double max_abs(const CMatrix& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const complexd* r = a.row(i);
        for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(r[j]));
    }
    return m;
}

complexd trace_of(const CMatrix& a) {
    if (!a.is_square()) throw shape_error("trace: matrix must be square");
    complexd t{0.0, 0.0};
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

MatrixStats norms_and_trace(const CMatrix& a) {
    if (!a.is_square()) throw shape_error("norms_and_trace: matrix must be square");
    MatrixStats s;
    s.frobenius = frobenius_norm(a);
    s.trace = trace_of(a);
    double defect = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            defect += std::norm(a(i, j) - std::conj(a(j, i)));
    s.herm_defect = std::sqrt(defect);
    return s;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

CMatrix solve(CMatrix a, CMatrix b) {
    if (!a.is_square()) throw shape_error("solve: coefficient matrix must be square");
    if (a.rows() != b.rows()) throw shape_error("solve: right-hand side rows differ");
    const std::size_t n = a.rows();
    const std::size_t m = b.cols();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(a(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0.0) throw numeric_error("solve: singular matrix");
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(piv, j));
            for (std::size_t j = 0; j < m; ++j) std::swap(b(k, j), b(piv, j));
        }
        const complexd inv_akk = 1.0 / a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const complexd f = a(i, k) * inv_akk;
            if (f.real() == 0.0 && f.imag() == 0.0) continue;
            a(i, k) = 0.0;
            axpy(-f, a.row(k) + k + 1, a.row(i) + k + 1, n - k - 1);
            axpy(-f, b.row(k), b.row(i), m);
        }
    }
    // back substitution
    for (std::size_t kk = n; kk-- > 0;) {
        const complexd inv = 1.0 / a(kk, kk);
        for (std::size_t j = 0; j < m; ++j) b(kk, j) *= inv;
        for (std::size_t i = 0; i < kk; ++i) {
            const complexd f = a(i, kk);
            if (f.real() == 0.0 && f.imag() == 0.0) continue;
            axpy(-f, b.row(kk), b.row(i), m);
        }
    }
    if (!b.all_finite()) throw numeric_error("solve: non-finite solution (near-singular matrix)");
    return b;
}

namespace {

// Pade numerator coefficients for the diagonal approximants used by expm.
const double kPade3[] = {120.0, 60.0, 12.0, 1.0};
const double kPade5[] = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
const double kPade7[] = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                         25200.0,    1512.0,    56.0,      1.0};
const double kPade9[] = {17643225600.0, 8821612800.0, 2075673600.0, 302702400.0,
                         30270240.0,    2162160.0,    110880.0,     3960.0,
                         90.0,          1.0};
const double kPade13[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                          1187353796428800.0,  129060195264000.0,   10559470521600.0,
                          670442572800.0,      33522128640.0,       1323241920.0,
                          40840800.0,          960960.0,            16380.0,
                          182.0,               1.0};

constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068;
constexpr double kTheta13 = 5.371920351148152;

// (V - U)^{-1} (V + U) given even/odd polynomial parts.
CMatrix pade_ratio(const CMatrix& u, const CMatrix& v) {
    return solve(v - u, v + u);
}

CMatrix pade_low_order(const CMatrix& a, std::span<const double> b) {
    const std::size_t n = a.rows();
    const CMatrix a2 = a * a;
    // powers a2^0 .. a2^{(m-1)/2}
    std::vector<CMatrix> even;
    even.push_back(CMatrix::identity(n));
    for (std::size_t k = 1; 2 * k + 1 < b.size(); ++k) even.push_back(even.back() * a2);
    CMatrix usum(n, n), v(n, n);
    for (std::size_t k = 0; k < even.size(); ++k) {
        usum += b[2 * k + 1] * even[k];
        v += b[2 * k] * even[k];
    }
    return pade_ratio(a * usum, v);
}

CMatrix pade13(const CMatrix& a) {
    const std::size_t n = a.rows();
    const double* b = kPade13;
    const CMatrix a2 = a * a;
    const CMatrix a4 = a2 * a2;
    const CMatrix a6 = a2 * a4;
    const CMatrix id = CMatrix::identity(n);
    CMatrix u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) +
                     (b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id));
    CMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) +
                (b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id);
    return pade_ratio(u, v);
}

}  // namespace

CMatrix expm(const CMatrix& a, complexd scale) {
    if (!a.is_square()) throw shape_error("expm: matrix must be square");
    const std::size_t n = a.rows();
    if (n == 0) return a;
    CMatrix b = scale * a;
    if (!b.all_finite()) throw numeric_error("expm: non-finite input");

    if (is_diagonal(b)) {
        CMatrix r(n, n);
        for (std::size_t i = 0; i < n; ++i) r(i, i) = std::exp(b(i, i));
        if (!r.all_finite()) throw numeric_error("expm: overflow in diagonal exponential");
        return r;
    }

    const double nrm = one_norm(b);
    CMatrix r(0, 0);
    int squarings = 0;
    if (nrm <= kTheta3) {
        r = pade_low_order(b, kPade3);
    } else if (nrm <= kTheta5) {
        r = pade_low_order(b, kPade5);
    } else if (nrm <= kTheta7) {
        r = pade_low_order(b, kPade7);
    } else if (nrm <= kTheta9) {
        r = pade_low_order(b, kPade9);
    } else {
        squarings = std::max(0, static_cast<int>(std::ceil(std::log2(nrm / kTheta13))));
        b *= complexd{std::ldexp(1.0, -squarings), 0.0};
        r = pade13(b);
    }
    for (int s = 0; s < squarings; ++s) r = r * r;
    if (!r.all_finite()) throw numeric_error("expm: overflow");
    return r;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& h) {
    if (!h.is_square()) throw shape_error("hermitian_eigenvalues: matrix must be square");
    const std::size_t n = h.rows();
    const MatrixStats st = norms_and_trace(h);
    if (st.herm_defect > 1e-10 * std::max(1.0, st.frobenius))
        throw contract_error("hermitian_eigenvalues: input not Hermitian within tolerance");

    CMatrix a = 0.5 * (h + h.adjoint());
    const double scale = std::max(1.0, st.frobenius);
    const double stop = 1e-14 * scale;

    constexpr int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (std::sqrt(2.0 * off) <= stop) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const complexd apq = a(p, q);
                const double r = std::abs(apq);
                if (r <= 1e-300) continue;
                const complexd phase = apq / r;  // e^{i psi}
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
                // smaller-magnitude root of t^2 - 2 tau t - 1 = 0
                double t;
                if (tau >= 0.0)
                    t = -1.0 / (tau + std::hypot(1.0, tau));
                else
                    t = 1.0 / (-tau + std::hypot(1.0, tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // columns p and q
                for (std::size_t i = 0; i < n; ++i) {
                    const complexd vp = a(i, p), vq = a(i, q);
                    a(i, p) = c * vp + s * std::conj(phase) * vq;
                    a(i, q) = -s * phase * vp + c * vq;
                }
                // rows p and q
                for (std::size_t j = 0; j < n; ++j) {
                    const complexd wp = a(p, j), wq = a(q, j);
                    a(p, j) = c * wp + s * phase * wq;
                    a(q, j) = -s * std::conj(phase) * wp + c * wq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = complexd{a(p, p).real(), 0.0};
                a(q, q) = complexd{a(q, q).real(), 0.0};
            }
        }
    }

    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

double hermitian_min_eig(const CMatrix& h) { return hermitian_eigenvalues(h).front(); }

}  // namespace lindsq
