#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chirpcrypt {

/// Errors attributable to file contents or I/O rather than parameter domains.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// 8-bit grayscale image, row-major.
struct GrayImage {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int r, int c, std::uint8_t fill = 0)
        : rows(r), cols(c), pixels(static_cast<std::size_t>(r) * c, fill) {
        if (r < 1 || c < 1) throw std::invalid_argument("GrayImage: dimensions must be positive");
    }

    std::uint8_t& at(int i, int j) { return pixels[static_cast<std::size_t>(i) * cols + j]; }
    std::uint8_t at(int i, int j) const { return pixels[static_cast<std::size_t>(i) * cols + j]; }
    std::size_t size() const { return pixels.size(); }

    bool operator==(const GrayImage&) const = default;
};

/// Complex double-precision matrix, row-major. Transform output and ciphertext.
struct ComplexMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::complex<double>> data;

    ComplexMatrix() = default;
    ComplexMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {
        if (r < 1 || c < 1) throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
    }

    std::complex<double>& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    const std::complex<double>& at(int i, int j) const {
        return data[static_cast<std::size_t>(i) * cols + j];
    }
    std::size_t size() const { return data.size(); }

    bool operator==(const ComplexMatrix&) const = default;
};

/// A ciphertext is a complex matrix with the plain image's dimensions.
using CipherMatrix = ComplexMatrix;

/// Chirp rates for the two axes: beta_x along the rows axis (size N),
/// beta_y along the columns axis (size M). Any finite real is allowed.
struct ChirpRates {
    double beta_x = 0.0;
    double beta_y = 0.0;

    void validate() const;
};

/// Logistic map parameters. mu must lie in the chaotic regime.
struct LogisticParams {
    double x0 = 0.0;
    double mu = 0.0;
    long discard = 0;

    static constexpr double kMuChaoticMin = 3.5699456;
    static constexpr double kMuChaoticMax = 4.0;

    void validate() const;
};

/// Bijection on {0,...,n-1} obtained by argsorting a chaotic sequence.
struct Permutation {
    std::vector<std::size_t> index;

    std::size_t size() const { return index.size(); }
    bool operator==(const Permutation&) const = default;
};

/// The full secret: key1 = {x0, mu1, p1}, key2 = {beta_x, beta_y}, key3 = {y0, mu2, p2}.
struct KeyBundle {
    LogisticParams key1;
    ChirpRates key2;
    LogisticParams key3;

    void validate() const {
        key1.validate();
        key2.validate();
        key3.validate();
    }
};

}  // namespace chirpcrypt
