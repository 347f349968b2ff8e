#include "ducov/kernels.hpp"

#include <cmath>

// AVX2 variants. One __m256d holds two interleaved complex doubles; the
// complex product uses the movedup/permute/addsub pattern, which performs the
// same multiplies and adds as the scalar reference (no FMA contraction).

#if defined(__AVX2__)

#include <immintrin.h>

namespace ducov::kernels {
namespace {

inline __m256d cmul(__m256d x, __m256d y) {
    __m256d xre = _mm256_movedup_pd(x);
    __m256d xim = _mm256_permute_pd(x, 0xF);
    __m256d ysw = _mm256_permute_pd(y, 0x5);
    return _mm256_addsub_pd(_mm256_mul_pd(xre, y), _mm256_mul_pd(xim, ysw));
}

// a broadcast to [re, im, re, im]
inline __m256d cbroadcast(const double* a) {
    return _mm256_broadcast_pd(reinterpret_cast<const __m128d*>(a));
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    s = _mm_hadd_pd(s, s);
    return _mm_cvtsd_f64(s);
}

void chad_avx2(double* z, const double* x, const double* y, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(x + 2 * i);
        __m256d vy = _mm256_loadu_pd(y + 2 * i);
        _mm256_storeu_pd(z + 2 * i, cmul(vx, vy));
    }
    for (; i < n; ++i) {
        const double xr = x[2 * i], xi = x[2 * i + 1];
        const double yr = y[2 * i], yi = y[2 * i + 1];
        z[2 * i] = xr * yr - xi * yi;
        z[2 * i + 1] = xr * yi + xi * yr;
    }
}

void caxpy_avx2(double* y, const double* a, const double* x, std::size_t n) {
    const __m256d va = cbroadcast(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vy = _mm256_loadu_pd(y + 2 * i);
        __m256d vx = _mm256_loadu_pd(x + 2 * i);
        _mm256_storeu_pd(y + 2 * i, _mm256_add_pd(vy, cmul(va, vx)));
    }
    const double ar = a[0], ai = a[1];
    for (; i < n; ++i) {
        const double xr = x[2 * i], xi = x[2 * i + 1];
        y[2 * i] += ar * xr - ai * xi;
        y[2 * i + 1] += ar * xi + ai * xr;
    }
}

void caxpy_conj_avx2(double* y, const double* a, const double* x, std::size_t n) {
    const __m256d va = cbroadcast(a);
    const __m256d conj_mask = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vy = _mm256_loadu_pd(y + 2 * i);
        __m256d vx = _mm256_xor_pd(_mm256_loadu_pd(x + 2 * i), conj_mask);
        _mm256_storeu_pd(y + 2 * i, _mm256_add_pd(vy, cmul(va, vx)));
    }
    const double ar = a[0], ai = a[1];
    for (; i < n; ++i) {
        const double xr = x[2 * i], xi = -x[2 * i + 1];
        y[2 * i] += ar * xr - ai * xi;
        y[2 * i + 1] += ar * xi + ai * xr;
    }
}

void rot2_avx2(double* x, double* y, const double* r, std::size_t n) {
    const __m256d r00 = cbroadcast(r + 0);
    const __m256d r01 = cbroadcast(r + 2);
    const __m256d r10 = cbroadcast(r + 4);
    const __m256d r11 = cbroadcast(r + 6);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(x + 2 * i);
        __m256d vy = _mm256_loadu_pd(y + 2 * i);
        __m256d nx = _mm256_add_pd(cmul(r00, vx), cmul(r01, vy));
        __m256d ny = _mm256_add_pd(cmul(r10, vx), cmul(r11, vy));
        _mm256_storeu_pd(x + 2 * i, nx);
        _mm256_storeu_pd(y + 2 * i, ny);
    }
    if (i < n) scalar_table().rot2(x + 2 * i, y + 2 * i, r, n - i);
}

double abs_sum_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d v = _mm256_loadu_pd(x + 2 * i);
        __m256d sq = _mm256_mul_pd(v, v);
        __m256d h = _mm256_hadd_pd(sq, sq); // [|z0|^2, |z0|^2, |z1|^2, |z1|^2]
        __m256d a = _mm256_sqrt_pd(h);
        acc = _mm256_add_pd(acc, _mm256_blend_pd(_mm256_setzero_pd(), a, 0x5));
    }
    double s = hsum(acc);
    for (; i < n; ++i) {
        const double re = x[2 * i], im = x[2 * i + 1];
        s += std::sqrt(re * re + im * im);
    }
    return s;
}

double sumsq_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d v = _mm256_loadu_pd(x + 2 * i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    double s = hsum(acc);
    for (; i < n; ++i) {
        const double re = x[2 * i], im = x[2 * i + 1];
        s += re * re + im * im;
    }
    return s;
}

double max_abs2_diff_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + 2 * i), _mm256_loadu_pd(y + 2 * i));
        __m256d sq = _mm256_mul_pd(d, d);
        acc = _mm256_max_pd(acc, _mm256_hadd_pd(sq, sq));
    }
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    __m128d m2 = _mm_max_pd(lo, hi);
    double m = _mm_cvtsd_f64(_mm_max_sd(m2, _mm_unpackhi_pd(m2, m2)));
    for (; i < n; ++i) {
        const double dr = x[2 * i] - y[2 * i];
        const double di = x[2 * i + 1] - y[2 * i + 1];
        const double a2 = dr * dr + di * di;
        if (a2 > m) m = a2;
    }
    return m;
}

void dmatvec_avx2(double* y, const double* p, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = p + i * n;
        __m256d acc = _mm256_setzero_pd();
        std::size_t j = 0;
        for (; j + 4 <= n; j += 4)
            acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(row + j), _mm256_loadu_pd(x + j)));
        double s = hsum(acc);
        for (; j < n; ++j) s += row[j] * x[j];
        y[i] = s;
    }
}

constexpr KernelTable k_avx2 = {
    "avx2",        chad_avx2,   caxpy_avx2,   caxpy_conj_avx2,
    rot2_avx2,     abs_sum_avx2, sumsq_avx2,  max_abs2_diff_avx2,
    dmatvec_avx2,
};

} // namespace

const KernelTable* avx2_table() { return &k_avx2; }

} // namespace ducov::kernels

#else

namespace ducov::kernels {
const KernelTable* avx2_table() { return nullptr; }
}

#endif
