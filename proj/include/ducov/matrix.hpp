#pragma once

#include <complex>
#include <vector>

#include "ducov/errors.hpp"

namespace ducov {

using Cx = std::complex<double>;
using Vec = std::vector<Cx>;

// Relative tolerances for spectral/equality tests plus one absolute cutoff
// for treating entries as zero. Double precision at d <= 64 keeps roundoff
// well below the defaults.
struct Tolerances {
    double psd_tol = 1e-9;
    double eq_tol = 1e-10;
    double zero_tol = 1e-12;
};

// Dense square complex matrix, row-major. The storage is layout-compatible
// with interleaved doubles, which is what the kernels operate on.
class Mat {
public:
    Mat() = default;

    explicit Mat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {
        if (n < 1) throw DimMismatchError("matrix dimension must be positive");
    }

    static Mat identity(int n) {
        Mat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static Mat ones(int n) {
        Mat m(n);
        for (auto& z : m.a_) z = 1.0;
        return m;
    }

    int dim() const { return n_; }

    Cx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Cx& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    Cx* data() { return a_.data(); }
    const Cx* data() const { return a_.data(); }

    Cx* row(int i) { return a_.data() + static_cast<std::size_t>(i) * n_; }
    const Cx* row(int i) const { return a_.data() + static_cast<std::size_t>(i) * n_; }

    double* raw() { return reinterpret_cast<double*>(a_.data()); }
    const double* raw() const { return reinterpret_cast<const double*>(a_.data()); }

    const double* raw_row(int i) const { return reinterpret_cast<const double*>(row(i)); }
    double* raw_row(int i) { return reinterpret_cast<double*>(row(i)); }

    std::size_t size() const { return a_.size(); }

    friend bool operator==(const Mat&, const Mat&) = default;

private:
    int n_ = 0;
    std::vector<Cx> a_;
};

inline void require_same_dim(const Mat& x, const Mat& y, const char* what) {
    if (x.dim() != y.dim()) throw DimMismatchError(std::string(what) + ": dimension mismatch");
}

Mat transpose(const Mat& m);
Mat conj_transpose(const Mat& m);

Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat operator*(Cx s, const Mat& m);
inline Mat operator*(double s, const Mat& m) { return Cx(s) * m; }

// Entrywise (Hadamard) product.
Mat hadamard(const Mat& x, const Mat& y);

// Plain complex matrix product.
Mat matmul(const Mat& x, const Mat& y);

Vec matvec(const Mat& m, const Vec& v);

Vec diagvec(const Mat& m);
Mat diag_matrix(const Vec& d);
Mat diag_matrix(const std::vector<double>& d);

// m with its diagonal zeroed (the paper-style tilde).
Mat offdiag(const Mat& m);

// m += s * v w^H
void add_scaled_outer(Mat& m, Cx s, const Vec& v, const Vec& w);

double max_abs(const Mat& m);
double frobenius(const Mat& m);
double max_abs_diff(const Mat& x, const Mat& y);
double frobenius_diff(const Mat& x, const Mat& y);

bool all_finite(const Mat& m);
void require_finite(const Mat& m, const char* what);

// Number of entries with |v_i| > 0 (exact; tolerance handled by callers that
// clip first).
int support_size(const Vec& v, double zero_tol = 0.0);

} // namespace ducov
