#pragma once

// Test-only helpers: synthetic inputs with natural-image statistics (smooth,
// strongly correlated neighbours) standing in for standard test photographs,
// which cannot be redistributed here.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chirpcrypt/rng.hpp"
#include "chirpcrypt/types.hpp"

namespace chirpcrypt::testsupport {

inline GrayImage make_natural_image(int rows, int cols, std::uint64_t seed = 1) {
    SplitMix64 rng(seed);
    const double tau = 2.0 * std::numbers::pi;
    const double f1 = 1.0 + 2.0 * rng.next_double();
    const double f2 = 0.5 + 1.5 * rng.next_double();
    const double f3 = 1.0 + 2.5 * rng.next_double();
    const double f4 = 0.5 + 2.0 * rng.next_double();
    const double f5 = 5.0 + 4.0 * rng.next_double();  // mid-frequency texture
    const double f6 = 4.0 + 5.0 * rng.next_double();
    const double ph1 = tau * rng.next_double();
    const double ph2 = tau * rng.next_double();
    const double ph3 = tau * rng.next_double();
    const double ph4 = tau * rng.next_double();

    GrayImage img(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            double u = static_cast<double>(i) / rows;
            double v = static_cast<double>(j) / cols;
            double val = 118.0 + 52.0 * std::sin(tau * (f1 * u + f2 * v) + ph1) +
                         32.0 * std::cos(tau * (f3 * u - f4 * v) + ph2) +
                         20.0 * std::sin(tau * f2 * u + ph3) * std::cos(tau * f1 * v) +
                         26.0 * std::sin(tau * (f5 * u + f6 * v) + ph4) +
                         18.0 * (rng.next_double() - 0.5);
            img.at(i, j) = static_cast<std::uint8_t>(std::clamp(val, 0.0, 255.0));
        }
    }
    return img;
}

inline GrayImage make_random_image(int rows, int cols, std::uint64_t seed) {
    SplitMix64 rng(seed);
    GrayImage img(rows, cols);
    for (auto& p : img.pixels) p = static_cast<std::uint8_t>(rng.next() & 0xff);
    return img;
}

inline ComplexMatrix make_random_matrix(int rows, int cols, std::uint64_t seed) {
    SplitMix64 rng(seed);
    ComplexMatrix m(rows, cols);
    for (auto& z : m.data)
        z = {2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0};
    return m;
}

/// The reference key set used throughout the tests, with caller-chosen discard counts.
inline KeyBundle reference_keys(long p1 = 0, long p2 = 0) {
    KeyBundle k;
    k.key1 = {0.31, 3.8, p1};
    k.key2 = {1.5, -3.5};
    k.key3 = {0.25, 3.7, p2};
    return k;
}

}  // namespace chirpcrypt::testsupport
