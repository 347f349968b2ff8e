#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ducov::kernels {

// Flat arithmetic kernels shared by every module. Complex buffers are viewed
// as interleaved doubles [re0, im0, re1, im1, ...]; `n` counts complex
// elements. Real buffers are plain doubles.
//
// Two implementations exist: a scalar reference and an AVX2 variant compiled
// in its own translation unit. The active table is chosen once at runtime
// from CPU capabilities; DUCOV_KERNELS=scalar|avx2 overrides the choice.
// Pointwise kernels (chad, caxpy, caxpy_conj, rot2) evaluate the exact same
// arithmetic in both variants; reduction kernels may reassociate sums and are
// equivalence-tested to tolerance instead of bitwise.

struct KernelTable {
    const char* name;

    // z[i] = x[i] * y[i]                                  (complex Hadamard)
    void (*chad)(double* z, const double* x, const double* y, std::size_t n);

    // y[i] += a * x[i], a = {re, im}
    void (*caxpy)(double* y, const double* a, const double* x, std::size_t n);

    // y[i] += a * conj(x[i])
    void (*caxpy_conj)(double* y, const double* a, const double* x, std::size_t n);

    // Paired complex rotation over two rows, r = 2x2 complex {r00,r01,r10,r11}:
    //   x[i], y[i] <- r00*x[i] + r01*y[i], r10*x[i] + r11*y[i]
    void (*rot2)(double* x, double* y, const double* r, std::size_t n);

    // sum_i sqrt(re_i^2 + im_i^2)
    double (*abs_sum)(const double* x, std::size_t n);

    // sum_i (re_i^2 + im_i^2)
    double (*sumsq)(const double* x, std::size_t n);

    // max_i |x[i] - y[i]|^2 (squared complex modulus)
    double (*max_abs2_diff)(const double* x, const double* y, std::size_t n);

    // y = P * x for a real row-major n x n matrix
    void (*dmatvec)(double* y, const double* p, const double* x, std::size_t n);
};

const KernelTable& scalar_table();

// nullptr when the binary was built without AVX2 support.
const KernelTable* avx2_table();

bool cpu_has_avx2();

// Selected once per process (env override, then CPU detection).
const KernelTable& active();

// All tables usable on this machine, for equivalence tests.
std::vector<const KernelTable*> available_tables();

} // namespace ducov::kernels
