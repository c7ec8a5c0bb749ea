#pragma once

#include <complex>
#include <vector>

namespace dysco {

using cvec = std::vector<std::complex<double>>;

// Forward transform: X[f] = sum_t x[t] * exp(-2*pi*i*f*t/n). Radix-2
// iterative for power-of-two lengths, table-driven O(n^2) otherwise.
cvec dft(const cvec& x);

// Inverse transform with 1/n scaling.
cvec idft(const cvec& x);

// Direct O(n^2) evaluation of the definition; doubles as the test oracle.
cvec dft_naive(const cvec& x, bool inverse = false);

// Real-input forward transform returning the full mirrored spectrum.
cvec dft_real(const std::vector<double>& x);

// Inverse of a Hermitian spectrum, returning the real signal.
std::vector<double> idft_real(const cvec& spectrum);

bool is_power_of_two(size_t n);

}  // namespace dysco
