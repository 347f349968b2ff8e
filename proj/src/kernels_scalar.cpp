#include "ducov/kernels.hpp"

#include <cmath>

// Reference kernels. Complex products are written out as explicit double
// arithmetic so the AVX2 variant can reproduce the identical operation order
// (the build disables FP contraction for the same reason).

namespace ducov::kernels {
namespace {

void chad_scalar(double* z, const double* x, const double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[2 * i], xi = x[2 * i + 1];
        const double yr = y[2 * i], yi = y[2 * i + 1];
        z[2 * i] = xr * yr - xi * yi;
        z[2 * i + 1] = xr * yi + xi * yr;
    }
}

void caxpy_scalar(double* y, const double* a, const double* x, std::size_t n) {
    const double ar = a[0], ai = a[1];
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[2 * i], xi = x[2 * i + 1];
        y[2 * i] += ar * xr - ai * xi;
        y[2 * i + 1] += ar * xi + ai * xr;
    }
}

void caxpy_conj_scalar(double* y, const double* a, const double* x, std::size_t n) {
    const double ar = a[0], ai = a[1];
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[2 * i], xi = -x[2 * i + 1];
        y[2 * i] += ar * xr - ai * xi;
        y[2 * i + 1] += ar * xi + ai * xr;
    }
}

void rot2_scalar(double* x, double* y, const double* r, std::size_t n) {
    const double r00r = r[0], r00i = r[1], r01r = r[2], r01i = r[3];
    const double r10r = r[4], r10i = r[5], r11r = r[6], r11i = r[7];
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[2 * i], xi = x[2 * i + 1];
        const double yr = y[2 * i], yi = y[2 * i + 1];
        x[2 * i] = (r00r * xr - r00i * xi) + (r01r * yr - r01i * yi);
        x[2 * i + 1] = (r00r * xi + r00i * xr) + (r01r * yi + r01i * yr);
        y[2 * i] = (r10r * xr - r10i * xi) + (r11r * yr - r11i * yi);
        y[2 * i + 1] = (r10r * xi + r10i * xr) + (r11r * yi + r11i * yr);
    }
}

double abs_sum_scalar(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double re = x[2 * i], im = x[2 * i + 1];
        s += std::sqrt(re * re + im * im);
    }
    return s;
}

double sumsq_scalar(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double re = x[2 * i], im = x[2 * i + 1];
        s += re * re + im * im;
    }
    return s;
}

double max_abs2_diff_scalar(const double* x, const double* y, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dr = x[2 * i] - y[2 * i];
        const double di = x[2 * i + 1] - y[2 * i + 1];
        const double a2 = dr * dr + di * di;
        if (a2 > m) m = a2;
    }
    return m;
}

void dmatvec_scalar(double* y, const double* p, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = p + i * n;
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += row[j] * x[j];
        y[i] = s;
    }
}

constexpr KernelTable k_scalar = {
    "scalar",        chad_scalar,  caxpy_scalar,         caxpy_conj_scalar,
    rot2_scalar,     abs_sum_scalar, sumsq_scalar,       max_abs2_diff_scalar,
    dmatvec_scalar,
};

} // namespace

const KernelTable& scalar_table() { return k_scalar; }

} // namespace ducov::kernels
