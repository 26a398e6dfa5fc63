#include "chirpcrypt/fft.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace chirpcrypt::fft {
namespace {

using cd = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Forward twiddles exp(-2*pi*i*j/n) for j in [0, n/2), cached per size.
const std::vector<cd>& twiddles(std::size_t n) {
    static std::mutex mu;
    static std::map<std::size_t, std::vector<cd>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<cd> w(n / 2);
    for (std::size_t j = 0; j < n / 2; ++j) {
        double ang = -kTwoPi * static_cast<double>(j) / static_cast<double>(n);
        w[j] = {std::cos(ang), std::sin(ang)};
    }
    return cache.emplace(n, std::move(w)).first->second;
}

void fft_pow2(std::vector<cd>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n < 2) return;

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    const auto& w = twiddles(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                cd tw = w[j * stride];
                if (inverse) tw = std::conj(tw);
                cd u = a[i + j];
                cd v = a[i + j + len / 2] * tw;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
            }
        }
    }
}

// Bluestein: x[n]*w[n] convolved with conj(w), w[n] = exp(-i*pi*n^2/n_total).
void bluestein(std::vector<cd>& a, bool inverse) {
    const std::size_t n = a.size();
    std::size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;

    std::vector<cd> w(n);
    for (std::size_t j = 0; j < n; ++j) {
        // j^2 mod 2n keeps the angle small for accurate range reduction
        double q = std::fmod(static_cast<double>(j) * static_cast<double>(j),
                             2.0 * static_cast<double>(n));
        double ang = -std::numbers::pi * q / static_cast<double>(n);
        if (inverse) ang = -ang;
        w[j] = {std::cos(ang), std::sin(ang)};
    }

    std::vector<cd> x(m), y(m);
    for (std::size_t j = 0; j < n; ++j) x[j] = a[j] * w[j];
    y[0] = std::conj(w[0]);
    for (std::size_t j = 1; j < n; ++j) y[j] = y[m - j] = std::conj(w[j]);

    fft_pow2(x, false);
    fft_pow2(y, false);
    for (std::size_t j = 0; j < m; ++j) x[j] *= y[j];
    fft_pow2(x, true);

    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t j = 0; j < n; ++j) a[j] = x[j] * w[j] * scale;
}

}  // namespace

void transform(std::vector<cd>& a, bool inverse) {
    if (a.empty()) throw std::invalid_argument("fft::transform: empty input");
    if (is_pow2(a.size()))
        fft_pow2(a, inverse);
    else
        bluestein(a, inverse);
}

}  // namespace chirpcrypt::fft
