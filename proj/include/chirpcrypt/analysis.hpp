#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chirpcrypt/types.hpp"

namespace chirpcrypt::analysis {

/// Raised when a correlation sample has no variance (r would be 0/0).
struct zero_variance_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Direction { horizontal, vertical, diagonal };

const char* to_string(Direction d);

/// (1/(N*M)) * sum |a - b|^2.
double mse(const GrayImage& a, const GrayImage& b);

/// 10*log10(255^2 / mse); +infinity for identical images.
double psnr(const GrayImage& a, const GrayImage& b);

struct CorrelationResult {
    double r = 0.0;
    /// The sampled (pixel, adjacent pixel) values, for scatter output.
    std::vector<std::pair<std::uint8_t, std::uint8_t>> samples;
};

/// Pearson correlation of `pairs` randomly sampled adjacent-pixel pairs.
/// Sampling is seeded and reproducible across platforms.
CorrelationResult adjacent_correlation(const GrayImage& img, Direction direction, int pairs,
                                       std::uint64_t seed);

std::array<std::uint64_t, 256> histogram256(const GrayImage& img);

/// Display form of a ciphertext: affine min-max map of the real part onto
/// [0,255], rounded half up. Throws on a constant real part.
GrayImage quantize_complex(const CipherMatrix& c);

struct KeyRange {
    std::string name;
    double range = 0.0;
    double precision = 0.0;
};

/// log2 of prod(range_i / precision_i), accumulated in log space.
double key_space_log2(std::span<const KeyRange> keys);
double key_space_log2(std::span<const double> ranges, double precision);

/// Per-key state counts that reproduce the reported ~2^245 (~10^74) total at
/// 1e-14 precision. The continuous keys' effective ranges are calibrated to
/// that total; taking their full printed domains instead would give ~10^112.
std::vector<KeyRange> reference_key_space_config();

/// Zeroes a deterministic region: 0.25 -> top-left quadrant, 0.50 -> top
/// half, 0.75 -> everything except the bottom-right quadrant.
CipherMatrix occlude(const CipherMatrix& c, double fraction);

/// General form: zeroes the rect [row0, row0+rows) x [col0, col0+cols).
CipherMatrix occlude_rect(const CipherMatrix& c, int row0, int col0, int rows, int cols);

/// Adds zero-mean Gaussian noise with std sigma * (max - min) of each part,
/// independently to real and imaginary parts. Seeded, bit-reproducible.
CipherMatrix add_gaussian_noise(const CipherMatrix& c, double sigma, std::uint64_t seed);

enum class KeyParam { x0, mu1, p1, beta_x, beta_y, y0, mu2, p2 };

KeyParam parse_key_param(const std::string& name);
const char* to_string(KeyParam p);

struct SensitivityCurve {
    std::string parameter;
    std::vector<double> deviations;
    std::vector<double> mse_values;
};

/// Encrypts once with the correct keys, then decrypts with the named
/// parameter offset by each deviation and records MSE against the plain
/// image. Deviations that push the parameter out of domain are skipped.
SensitivityCurve sensitivity_sweep(const GrayImage& img, const KeyBundle& keys, KeyParam parameter,
                                   std::span<const double> deviations);

}  // namespace chirpcrypt::analysis
