#pragma once

#include <complex>
#include <vector>

namespace rppg::kernels {

// Dense row-major kernels behind the numeric hot paths. Every kernel
// computes each output element with a fixed serial reduction order, so
// results are bitwise identical for any thread count, including when a
// kernel runs inside an already-parallel region (it then executes
// serially rather than nesting).
//
// kernels::ref holds straightforward single-threaded implementations of
// the same contracts. They are the comparison oracles for the unit tests
// and the baselines for the benchmark target.

// c[m x n] = a[m x k] * b[k x n]
void matmul(const double* a, const double* b, double* c, int m, int k, int n);

// c[k x n] = a^T * b with a[m x k], b[m x n]; the dW shape in backprop.
void matmul_at_b(const double* a, const double* b, double* c, int m, int k, int n);

// c[m x k] = a * b^T with a[m x n], b[k x n]; the dX shape in backprop.
void matmul_a_bt(const double* a, const double* b, double* c, int m, int k, int n);

// In-place complex FFT/DFT, any length >= 1. Radix-2 for powers of two,
// Bluestein's chirp-z otherwise.
void fft(std::vector<std::complex<double>>& x);

// Area-average resampling of a row-major plane to out_h x out_w using
// exact fractional-rectangle overlap weights. Requires h >= out_h and
// w >= out_w.
void area_downsample(const double* src, int h, int w, double* dst, int out_h, int out_w);

namespace ref {

void matmul(const double* a, const double* b, double* c, int m, int k, int n);
void matmul_at_b(const double* a, const double* b, double* c, int m, int k, int n);
void matmul_a_bt(const double* a, const double* b, double* c, int m, int k, int n);

// O(N^2) discrete Fourier transform.
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x);

// O(HW) per output cell: scans the whole plane and accumulates exact
// overlap areas.
void area_downsample(const double* src, int h, int w, double* dst, int out_h, int out_w);

}  // namespace ref

}  // namespace rppg::kernels
