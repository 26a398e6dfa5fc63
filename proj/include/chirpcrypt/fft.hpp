#pragma once

#include <complex>
#include <vector>

namespace chirpcrypt::fft {

/// Unnormalized DFT of arbitrary length: out[k] = sum_n a[n] exp(-2*pi*i*k*n/n).
/// inverse=true flips the exponent sign; no 1/n scaling is applied either way.
/// Powers of two run radix-2 in place; other lengths go through Bluestein's
/// chirp-z reduction to a power-of-two convolution.
void transform(std::vector<std::complex<double>>& a, bool inverse);

}  // namespace chirpcrypt::fft
