#pragma once

#include <complex>
#include <span>
#include <vector>

#include "chirpcrypt/types.hpp"

namespace chirpcrypt::dlct {

/// One entry of the 1D kernel: exp(-i*(2*pi/size)*(k*n + beta*n^2)).
std::complex<double> kernel_value(int n, int k, int size, double beta);

/// X[k] = sum_n v[n] * kernel_value(n, k, N, beta). With beta = 0 this is the
/// unnormalized DFT. Computed as a chirp pre-modulation followed by an FFT.
std::vector<std::complex<double>> dlct1_forward(std::span<const std::complex<double>> v,
                                                double beta);

/// Inverse of dlct1_forward, including the 1/N factor.
std::vector<std::complex<double>> dlct1_inverse(std::span<const std::complex<double>> X,
                                                double beta);

/// Separable fast path: rows transformed with beta_y, then columns with beta_x.
ComplexMatrix dlct2_forward(const ComplexMatrix& img, const ChirpRates& rates);

/// Literal quadruple-sum evaluation; the serial reference kept for testing.
/// Refuses inputs with more than max_elems entries (O((N*M)^2) work).
ComplexMatrix dlct2_forward_direct(const ComplexMatrix& img, const ChirpRates& rates,
                                   std::size_t max_elems = 4096);

/// x(n,m) = (1/(N*M)) * sum_{k,l} X(k,l) * conj(kernel). Exact inverse of
/// dlct2_forward up to roundoff.
ComplexMatrix dlct2_inverse(const ComplexMatrix& X, const ChirpRates& rates);

}  // namespace chirpcrypt::dlct
