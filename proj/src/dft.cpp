#include "dysco/dft.hpp"

#include <cmath>
#include <stdexcept>

namespace dysco {

bool is_power_of_two(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

namespace {

// twiddle table w[k] = exp(sign * 2*pi*i*k/n)
cvec twiddles(size_t n, double sign) {
    cvec w(n);
    for (size_t k = 0; k < n; ++k) {
        const double a = sign * 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
        w[k] = {std::cos(a), std::sin(a)};
    }
    return w;
}

// iterative Cooley-Tukey, n a power of two
cvec fft_radix2(cvec x, bool inverse) {
    const size_t n = x.size();
    for (size_t i = 1, rev = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; rev & bit; bit >>= 1) rev ^= bit;
        rev ^= bit;
        if (i < rev) std::swap(x[i], x[rev]);
    }
    const double sign = inverse ? 1.0 : -1.0;
    for (size_t len = 2; len <= n; len <<= 1) {
        const double a = sign * 2.0 * M_PI / static_cast<double>(len);
        const std::complex<double> step{std::cos(a), std::sin(a)};
        for (size_t blk = 0; blk < n; blk += len) {
            std::complex<double> w{1.0, 0.0};
            for (size_t k = 0; k < len / 2; ++k) {
                const auto even = x[blk + k];
                const auto odd = x[blk + k + len / 2] * w;
                x[blk + k] = even + odd;
                x[blk + k + len / 2] = even - odd;
                w *= step;
            }
        }
    }
    return x;
}

cvec dft_table(const cvec& x, bool inverse) {
    const size_t n = x.size();
    const cvec w = twiddles(n, inverse ? 1.0 : -1.0);
    cvec out(n);
    for (size_t f = 0; f < n; ++f) {
        std::complex<double> acc{0.0, 0.0};
        size_t idx = 0;  // (f*t) mod n, stepped to avoid a modulo per element
        for (size_t t = 0; t < n; ++t) {
            acc += x[t] * w[idx];
            idx += f;
            if (idx >= n) idx -= n;
        }
        out[f] = acc;
    }
    return out;
}

}  // namespace

cvec dft(const cvec& x) {
    if (x.empty()) throw std::invalid_argument("dft: empty input");
    return is_power_of_two(x.size()) ? fft_radix2(x, false) : dft_table(x, false);
}

cvec idft(const cvec& x) {
    if (x.empty()) throw std::invalid_argument("idft: empty input");
    cvec out = is_power_of_two(x.size()) ? fft_radix2(x, true) : dft_table(x, true);
    const double inv_n = 1.0 / static_cast<double>(x.size());
    for (auto& v : out) v *= inv_n;
    return out;
}

cvec dft_naive(const cvec& x, bool inverse) {
    const size_t n = x.size();
    const double sign = inverse ? 1.0 : -1.0;
    cvec out(n);
    for (size_t f = 0; f < n; ++f) {
        std::complex<double> acc{0.0, 0.0};
        for (size_t t = 0; t < n; ++t) {
            const double a = sign * 2.0 * M_PI * static_cast<double>(f) * static_cast<double>(t) /
                             static_cast<double>(n);
            acc += x[t] * std::complex<double>{std::cos(a), std::sin(a)};
        }
        if (inverse) acc /= static_cast<double>(n);
        out[f] = acc;
    }
    return out;
}

cvec dft_real(const std::vector<double>& x) {
    const size_t n = x.size();
    if (n == 0) throw std::invalid_argument("dft_real: empty input");
    if (is_power_of_two(n)) {
        cvec cx(n);
        for (size_t t = 0; t < n; ++t) cx[t] = {x[t], 0.0};
        return fft_radix2(std::move(cx), false);
    }
    // evaluate half the bins, mirror the rest (Hermitian symmetry)
    const cvec w = twiddles(n, -1.0);
    cvec out(n);
    for (size_t f = 0; f <= n / 2; ++f) {
        double re = 0.0, im = 0.0;
        size_t idx = 0;
        for (size_t t = 0; t < n; ++t) {
            re += x[t] * w[idx].real();
            im += x[t] * w[idx].imag();
            idx += f;
            if (idx >= n) idx -= n;
        }
        out[f] = {re, im};
        if (f != 0 && f != n - f) out[n - f] = {re, -im};
    }
    return out;
}

std::vector<double> idft_real(const cvec& spectrum) {
    const size_t n = spectrum.size();
    if (n == 0) throw std::invalid_argument("idft_real: empty input");
    if (is_power_of_two(n)) {
        const cvec full = idft(spectrum);
        std::vector<double> out(n);
        for (size_t t = 0; t < n; ++t) out[t] = full[t].real();
        return out;
    }
    // x[t] = (1/n) * (X0 + 2*sum_{f<n/2} Re(X_f w^{ft}) [+ (-1)^t X_{n/2}])
    const cvec w = twiddles(n, 1.0);
    std::vector<double> out(n);
    const size_t half = n / 2;
    const bool even = (n % 2 == 0);
    for (size_t t = 0; t < n; ++t) {
        double acc = spectrum[0].real();
        size_t idx = 0;
        for (size_t f = 1; f <= (even ? half - 1 : half); ++f) {
            idx += t;
            if (idx >= n) idx -= n;
            acc += 2.0 * (spectrum[f].real() * w[idx].real() - spectrum[f].imag() * w[idx].imag());
        }
        if (even) acc += (t % 2 == 0 ? 1.0 : -1.0) * spectrum[half].real();
        out[t] = acc / static_cast<double>(n);
    }
    return out;
}

}  // namespace dysco
