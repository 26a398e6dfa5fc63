#include "chirpcrypt/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chirpcrypt/cipher.hpp"
#include "chirpcrypt/rng.hpp"

namespace chirpcrypt::analysis {
namespace {

void check_same_dims(const GrayImage& a, const GrayImage& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("analysis: image dimensions differ");
}

std::pair<int, int> direction_offset(Direction d) {
    switch (d) {
        case Direction::horizontal: return {0, 1};
        case Direction::vertical: return {1, 0};
        case Direction::diagonal: return {1, 1};
    }
    throw std::invalid_argument("analysis: unknown direction");
}

std::pair<double, double> part_range(const CipherMatrix& c, bool imag) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& z : c.data) {
        double v = imag ? z.imag() : z.real();
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {lo, hi};
}

KeyBundle perturb(const KeyBundle& keys, KeyParam p, double delta) {
    KeyBundle k = keys;
    switch (p) {
        case KeyParam::x0: k.key1.x0 += delta; break;
        case KeyParam::mu1: k.key1.mu += delta; break;
        case KeyParam::p1: k.key1.discard += std::lround(delta); break;
        case KeyParam::beta_x: k.key2.beta_x += delta; break;
        case KeyParam::beta_y: k.key2.beta_y += delta; break;
        case KeyParam::y0: k.key3.x0 += delta; break;
        case KeyParam::mu2: k.key3.mu += delta; break;
        case KeyParam::p2: k.key3.discard += std::lround(delta); break;
    }
    return k;
}

}  // namespace

const char* to_string(Direction d) {
    switch (d) {
        case Direction::horizontal: return "horizontal";
        case Direction::vertical: return "vertical";
        case Direction::diagonal: return "diagonal";
    }
    return "?";
}

double mse(const GrayImage& a, const GrayImage& b) {
    check_same_dims(a, b);
    double acc = 0.0;
    for (std::size_t i = 0; i < a.pixels.size(); ++i) {
        double d = static_cast<double>(a.pixels[i]) - static_cast<double>(b.pixels[i]);
        acc += d * d;
    }
    return acc / static_cast<double>(a.pixels.size());
}

double psnr(const GrayImage& a, const GrayImage& b) {
    double e = mse(a, b);
    if (e == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / e);
}

CorrelationResult adjacent_correlation(const GrayImage& img, Direction direction, int pairs,
                                       std::uint64_t seed) {
    if (pairs < 2) throw std::invalid_argument("adjacent_correlation: need at least 2 pairs");
    auto [di, dj] = direction_offset(direction);
    const int ni = img.rows - di;
    const int nj = img.cols - dj;
    if (ni < 1 || nj < 1)
        throw std::invalid_argument("adjacent_correlation: image too small for direction");

    SplitMix64 rng(seed);
    CorrelationResult res;
    res.samples.reserve(pairs);
    double sx = 0.0, sy = 0.0;
    for (int t = 0; t < pairs; ++t) {
        int i = static_cast<int>(rng.next() % static_cast<std::uint64_t>(ni));
        int j = static_cast<int>(rng.next() % static_cast<std::uint64_t>(nj));
        std::uint8_t x = img.at(i, j);
        std::uint8_t y = img.at(i + di, j + dj);
        res.samples.emplace_back(x, y);
        sx += x;
        sy += y;
    }
    const double mx = sx / pairs;
    const double my = sy / pairs;
    double cov = 0.0, vx = 0.0, vy = 0.0;
    for (auto [x, y] : res.samples) {
        double dx = x - mx;
        double dy = y - my;
        cov += dx * dy;
        vx += dx * dx;
        vy += dy * dy;
    }
    if (vx == 0.0 || vy == 0.0)
        throw zero_variance_error("adjacent_correlation: sampled values have zero variance");
    res.r = cov / std::sqrt(vx * vy);
    return res;
}

std::array<std::uint64_t, 256> histogram256(const GrayImage& img) {
    std::array<std::uint64_t, 256> counts{};
    for (std::uint8_t v : img.pixels) ++counts[v];
    return counts;
}

GrayImage quantize_complex(const CipherMatrix& c) {
    if (c.data.empty()) throw std::invalid_argument("quantize_complex: empty matrix");
    auto [lo, hi] = part_range(c, false);
    if (!(hi > lo)) throw std::invalid_argument("quantize_complex: real part is constant");
    GrayImage out(c.rows, c.cols);
    const double scale = 255.0 / (hi - lo);
    for (std::size_t i = 0; i < c.data.size(); ++i) {
        double v = std::floor((c.data[i].real() - lo) * scale + 0.5);  // round half up
        out.pixels[i] = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
    }
    return out;
}

double key_space_log2(std::span<const KeyRange> keys) {
    double bits = 0.0;
    for (const auto& k : keys) {
        if (!(k.range > 0.0) || !(k.precision > 0.0))
            throw std::invalid_argument("key_space_log2: ranges and precisions must be positive");
        bits += std::log2(k.range / k.precision);
    }
    return bits;
}

double key_space_log2(std::span<const double> ranges, double precision) {
    std::vector<KeyRange> keys;
    keys.reserve(ranges.size());
    for (double r : ranges) keys.push_back({"", r, precision});
    return key_space_log2(keys);
}

std::vector<KeyRange> reference_key_space_config() {
    // 6 continuous keys at 1e11 effective states plus the two discrete
    // discard counts: log2(1e66 * 9999 * 9990) = 245.8 bits = 10^74.0.
    const double cont = 1e-3;
    const double prec = 1e-14;
    return {
        {"x0", cont, prec},     {"mu1", cont, prec},
        {"p1", static_cast<double>(cipher::kP1Modulus), 1.0},
        {"beta_x", cont, prec}, {"beta_y", cont, prec},
        {"y0", cont, prec},     {"mu2", cont, prec},
        {"p2", static_cast<double>(cipher::kP2Modulus), 1.0},
    };
}

CipherMatrix occlude_rect(const CipherMatrix& c, int row0, int col0, int rows, int cols) {
    if (row0 < 0 || col0 < 0 || rows < 0 || cols < 0 || row0 + rows > c.rows ||
        col0 + cols > c.cols)
        throw std::invalid_argument("occlude_rect: rectangle out of bounds");
    CipherMatrix out = c;
    for (int i = row0; i < row0 + rows; ++i)
        for (int j = col0; j < col0 + cols; ++j) out.at(i, j) = 0.0;
    return out;
}

CipherMatrix occlude(const CipherMatrix& c, double fraction) {
    const int half_r = (c.rows + 1) / 2;
    const int half_c = (c.cols + 1) / 2;
    if (fraction == 0.25) return occlude_rect(c, 0, 0, half_r, half_c);
    if (fraction == 0.50) return occlude_rect(c, 0, 0, half_r, c.cols);
    if (fraction == 0.75) {
        CipherMatrix out = occlude_rect(c, 0, 0, half_r, c.cols);
        return occlude_rect(out, half_r, 0, c.rows - half_r, half_c);
    }
    throw std::invalid_argument("occlude: fraction must be 0.25, 0.5, or 0.75");
}

CipherMatrix add_gaussian_noise(const CipherMatrix& c, double sigma, std::uint64_t seed) {
    if (sigma < 0.0) throw std::invalid_argument("add_gaussian_noise: sigma must be >= 0");
    if (sigma == 0.0) return c;
    auto [re_lo, re_hi] = part_range(c, false);
    auto [im_lo, im_hi] = part_range(c, true);
    const double s_re = sigma * (re_hi - re_lo);
    const double s_im = sigma * (im_hi - im_lo);
    SplitMix64 rng(seed);
    CipherMatrix out = c;
    for (auto& z : out.data) {
        double dre = s_re * rng.next_gaussian();
        double dim = s_im * rng.next_gaussian();
        z += std::complex<double>(dre, dim);
    }
    return out;
}

KeyParam parse_key_param(const std::string& name) {
    if (name == "x0") return KeyParam::x0;
    if (name == "mu1") return KeyParam::mu1;
    if (name == "p1") return KeyParam::p1;
    if (name == "beta_x") return KeyParam::beta_x;
    if (name == "beta_y") return KeyParam::beta_y;
    if (name == "y0") return KeyParam::y0;
    if (name == "mu2") return KeyParam::mu2;
    if (name == "p2") return KeyParam::p2;
    throw std::invalid_argument("unknown key parameter: " + name);
}

const char* to_string(KeyParam p) {
    switch (p) {
        case KeyParam::x0: return "x0";
        case KeyParam::mu1: return "mu1";
        case KeyParam::p1: return "p1";
        case KeyParam::beta_x: return "beta_x";
        case KeyParam::beta_y: return "beta_y";
        case KeyParam::y0: return "y0";
        case KeyParam::mu2: return "mu2";
        case KeyParam::p2: return "p2";
    }
    return "?";
}

SensitivityCurve sensitivity_sweep(const GrayImage& img, const KeyBundle& keys, KeyParam parameter,
                                   std::span<const double> deviations) {
    const CipherMatrix c = cipher::encrypt(img, keys);
    const int n = static_cast<int>(deviations.size());
    std::vector<double> mses(n, -1.0);  // -1 marks a skipped (out-of-domain) point

#ifdef CHIRPCRYPT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < n; ++i) {
        try {
            GrayImage d = cipher::decrypt(c, perturb(keys, parameter, deviations[i]));
            mses[i] = mse(img, d);
        } catch (const std::invalid_argument&) {
            // parameter left its valid domain; point skipped
        }
    }

    SensitivityCurve curve;
    curve.parameter = to_string(parameter);
    for (int i = 0; i < n; ++i) {
        if (mses[i] < 0.0) continue;
        curve.deviations.push_back(deviations[i]);
        curve.mse_values.push_back(mses[i]);
    }
    return curve;
}

}  // namespace chirpcrypt::analysis
