#include "rppg/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "rppg/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rppg::kernels {

namespace {

bool in_parallel() {
#ifdef _OPENMP
    return omp_in_parallel() != 0;
#else
    return false;
#endif
}

// Four-row block: four independent accumulator rows break the FMA
// dependency chain while keeping the per-element k order fixed.
void matmul_rows(const double* a, const double* b, double* c, int k, int n, int i0, int i1) {
    int i = i0;
    for (; i + 4 <= i1; i += 4) {
        const double* a0 = a + static_cast<size_t>(i) * k;
        const double* a1 = a0 + k;
        const double* a2 = a1 + k;
        const double* a3 = a2 + k;
        double* c0 = c + static_cast<size_t>(i) * n;
        double* c1 = c0 + n;
        double* c2 = c1 + n;
        double* c3 = c2 + n;
        std::fill(c0, c0 + n, 0.0);
        std::fill(c1, c1 + n, 0.0);
        std::fill(c2, c2 + n, 0.0);
        std::fill(c3, c3 + n, 0.0);
        for (int kk = 0; kk < k; ++kk) {
            const double* brow = b + static_cast<size_t>(kk) * n;
            const double v0 = a0[kk], v1 = a1[kk], v2 = a2[kk], v3 = a3[kk];
            for (int j = 0; j < n; ++j) {
                const double bj = brow[j];
                c0[j] += v0 * bj;
                c1[j] += v1 * bj;
                c2[j] += v2 * bj;
                c3[j] += v3 * bj;
            }
        }
    }
    for (; i < i1; ++i) {
        const double* arow = a + static_cast<size_t>(i) * k;
        double* crow = c + static_cast<size_t>(i) * n;
        std::fill(crow, crow + n, 0.0);
        for (int kk = 0; kk < k; ++kk) {
            const double v = arow[kk];
            const double* brow = b + static_cast<size_t>(kk) * n;
            for (int j = 0; j < n; ++j) crow[j] += v * brow[j];
        }
    }
}

// Rank-1 accumulation over the m dimension for rows [i0, i1) of c.
void at_b_rows(const double* a, const double* b, double* c, int m, int k, int n, int i0, int i1) {
    for (int i = i0; i < i1; ++i) std::fill(c + static_cast<size_t>(i) * n, c + static_cast<size_t>(i + 1) * n, 0.0);
    for (int r = 0; r < m; ++r) {
        const double* arow = a + static_cast<size_t>(r) * k;
        const double* brow = b + static_cast<size_t>(r) * n;
        for (int i = i0; i < i1; ++i) {
            const double v = arow[i];
            double* crow = c + static_cast<size_t>(i) * n;
            for (int j = 0; j < n; ++j) crow[j] += v * brow[j];
        }
    }
}

void a_bt_rows(const double* a, const double* b, double* c, int k, int n, int i0, int i1) {
    for (int i = i0; i < i1; ++i) {
        const double* arow = a + static_cast<size_t>(i) * n;
        double* crow = c + static_cast<size_t>(i) * k;
        for (int j = 0; j < k; ++j) {
            const double* brow = b + static_cast<size_t>(j) * n;
            double s = 0.0;
            for (int t = 0; t < n; ++t) s += arow[t] * brow[t];
            crow[j] = s;
        }
    }
}

constexpr long long kParallelFlops = 1 << 20;

}  // namespace

void matmul(const double* a, const double* b, double* c, int m, int k, int n) {
    const long long flops = 2LL * m * k * n;
    if (!in_parallel() && flops >= kParallelFlops && m >= 8) {
#pragma omp parallel
        {
#ifdef _OPENMP
            const int nt = omp_get_num_threads();
            const int t = omp_get_thread_num();
#else
            const int nt = 1, t = 0;
#endif
            // block boundaries in multiples of 4 keep the row-block layout
            const int rows4 = (m + 3) / 4;
            const int lo = static_cast<int>(static_cast<long long>(rows4) * t / nt) * 4;
            const int hi = std::min(m, static_cast<int>(static_cast<long long>(rows4) * (t + 1) / nt) * 4);
            if (lo < hi) matmul_rows(a, b, c, k, n, lo, hi);
        }
    } else {
        matmul_rows(a, b, c, k, n, 0, m);
    }
}

void matmul_at_b(const double* a, const double* b, double* c, int m, int k, int n) {
    const long long flops = 2LL * m * k * n;
    if (!in_parallel() && flops >= kParallelFlops && k >= 8) {
#pragma omp parallel
        {
#ifdef _OPENMP
            const int nt = omp_get_num_threads();
            const int t = omp_get_thread_num();
#else
            const int nt = 1, t = 0;
#endif
            const int lo = static_cast<int>(static_cast<long long>(k) * t / nt);
            const int hi = static_cast<int>(static_cast<long long>(k) * (t + 1) / nt);
            if (lo < hi) at_b_rows(a, b, c, m, k, n, lo, hi);
        }
    } else {
        at_b_rows(a, b, c, m, k, n, 0, k);
    }
}

void matmul_a_bt(const double* a, const double* b, double* c, int m, int k, int n) {
    const long long flops = 2LL * m * k * n;
    if (!in_parallel() && flops >= kParallelFlops && m >= 8) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < m; ++i) a_bt_rows(a, b, c, k, n, i, i + 1);
    } else {
        a_bt_rows(a, b, c, k, n, 0, m);
    }
}

namespace {

using cd = std::complex<double>;

void fft_pow2(std::vector<cd>& x, bool inverse) {
    const size_t n = x.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
        const cd wlen(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            cd w(1.0, 0.0);
            for (size_t j = 0; j < len / 2; ++j) {
                const cd u = x[i + j];
                const cd v = x[i + j + len / 2] * w;
                x[i + j] = u + v;
                x[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        const double inv = 1.0 / static_cast<double>(n);
        for (auto& v : x) v *= inv;
    }
}

// Bluestein's chirp-z transform expresses a length-N DFT as a
// convolution, evaluated with power-of-two FFTs. The chirp exponent is
// reduced mod 2N before the trig call to keep precision at large n.
void fft_bluestein(std::vector<cd>& x) {
    const size_t n = x.size();
    size_t m = 1;
    while (m < 2 * n + 1) m <<= 1;

    std::vector<cd> w(n);
    for (size_t i = 0; i < n; ++i) {
        const std::uint64_t idx = (static_cast<std::uint64_t>(i) * i) % (2 * n);
        const double ang = -std::numbers::pi * static_cast<double>(idx) / static_cast<double>(n);
        w[i] = cd(std::cos(ang), std::sin(ang));
    }

    std::vector<cd> a(m, cd(0, 0)), b(m, cd(0, 0));
    for (size_t i = 0; i < n; ++i) a[i] = x[i] * w[i];
    b[0] = cd(1, 0);
    for (size_t i = 1; i < n; ++i) b[i] = b[m - i] = std::conj(w[i]);

    fft_pow2(a, false);
    fft_pow2(b, false);
    for (size_t i = 0; i < m; ++i) a[i] *= b[i];
    fft_pow2(a, true);

    for (size_t i = 0; i < n; ++i) x[i] = a[i] * w[i];
}

}  // namespace

void fft(std::vector<cd>& x) {
    const size_t n = x.size();
    if (n <= 1) return;
    if (std::has_single_bit(n)) {
        fft_pow2(x, false);
    } else {
        fft_bluestein(x);
    }
}

void area_downsample(const double* src, int h, int w, double* dst, int out_h, int out_w) {
    require(h >= out_h && w >= out_w, "area_downsample: plane smaller than output grid");
    // Exact overlap of pixel [p, p+1) with output strip [j*s, (j+1)*s),
    // accumulated separably: cell = sum_y sum_x wy*wx*v / (sy*sx).
    const double sy = static_cast<double>(h) / out_h;
    const double sx = static_cast<double>(w) / out_w;
    for (int oy = 0; oy < out_h; ++oy) {
        const double y0 = oy * sy;
        const double y1 = y0 + sy;
        const int py0 = static_cast<int>(y0);
        const int py1 = std::min(h - 1, static_cast<int>(std::ceil(y1)) - 1);
        for (int ox = 0; ox < out_w; ++ox) {
            const double x0 = ox * sx;
            const double x1 = x0 + sx;
            const int px0 = static_cast<int>(x0);
            const int px1 = std::min(w - 1, static_cast<int>(std::ceil(x1)) - 1);
            double acc = 0.0;
            for (int py = py0; py <= py1; ++py) {
                const double wy = std::min(y1, static_cast<double>(py + 1)) - std::max(y0, static_cast<double>(py));
                const double* row = src + static_cast<size_t>(py) * w;
                double rowacc = 0.0;
                for (int px = px0; px <= px1; ++px) {
                    const double wx = std::min(x1, static_cast<double>(px + 1)) - std::max(x0, static_cast<double>(px));
                    rowacc += wx * row[px];
                }
                acc += wy * rowacc;
            }
            dst[static_cast<size_t>(oy) * out_w + ox] = acc / (sy * sx);
        }
    }
}

namespace ref {

void matmul(const double* a, const double* b, double* c, int m, int k, int n) {
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int kk = 0; kk < k; ++kk) s += a[static_cast<size_t>(i) * k + kk] * b[static_cast<size_t>(kk) * n + j];
            c[static_cast<size_t>(i) * n + j] = s;
        }
    }
}

void matmul_at_b(const double* a, const double* b, double* c, int m, int k, int n) {
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int r = 0; r < m; ++r) s += a[static_cast<size_t>(r) * k + i] * b[static_cast<size_t>(r) * n + j];
            c[static_cast<size_t>(i) * n + j] = s;
        }
    }
}

void matmul_a_bt(const double* a, const double* b, double* c, int m, int k, int n) {
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < k; ++j) {
            double s = 0.0;
            for (int t = 0; t < n; ++t) s += a[static_cast<size_t>(i) * n + t] * b[static_cast<size_t>(j) * n + t];
            c[static_cast<size_t>(i) * k + j] = s;
        }
    }
}

std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x) {
    const size_t n = x.size();
    std::vector<std::complex<double>> out(n);
    for (size_t kk = 0; kk < n; ++kk) {
        std::complex<double> s(0, 0);
        for (size_t t = 0; t < n; ++t) {
            const double ang = -2.0 * std::numbers::pi * static_cast<double>((kk * t) % n) / static_cast<double>(n);
            s += x[t] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        out[kk] = s;
    }
    return out;
}

void area_downsample(const double* src, int h, int w, double* dst, int out_h, int out_w) {
    require(h >= out_h && w >= out_w, "area_downsample: plane smaller than output grid");
    const double sy = static_cast<double>(h) / out_h;
    const double sx = static_cast<double>(w) / out_w;
    for (int oy = 0; oy < out_h; ++oy) {
        for (int ox = 0; ox < out_w; ++ox) {
            const double y0 = oy * sy, y1 = y0 + sy;
            const double x0 = ox * sx, x1 = x0 + sx;
            double acc = 0.0;
            for (int py = 0; py < h; ++py) {
                const double oy_amt = std::max(0.0, std::min(y1, static_cast<double>(py + 1)) - std::max(y0, static_cast<double>(py)));
                if (oy_amt == 0.0) continue;
                for (int px = 0; px < w; ++px) {
                    const double ox_amt =
                        std::max(0.0, std::min(x1, static_cast<double>(px + 1)) - std::max(x0, static_cast<double>(px)));
                    if (ox_amt == 0.0) continue;
                    acc += oy_amt * ox_amt * src[static_cast<size_t>(py) * w + px];
                }
            }
            dst[static_cast<size_t>(oy) * out_w + ox] = acc / (sy * sx);
        }
    }
}

}  // namespace ref

}  // namespace rppg::kernels
