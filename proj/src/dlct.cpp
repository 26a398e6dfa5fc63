#include "chirpcrypt/dlct.hpp"

#include <cmath>
#include <numbers>

#include "chirpcrypt/fft.hpp"

namespace chirpcrypt::dlct {
namespace {

using cd = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// exp(-i*2*pi*beta*n^2/size) for n in [0, size); the quadratic-phase
// pre-modulation that turns the DLCT into a plain DFT.
std::vector<cd> chirp_table(int size, double beta) {
    std::vector<cd> w(size);
    for (int n = 0; n < size; ++n) {
        double q = std::fmod(beta * static_cast<double>(n) * static_cast<double>(n),
                             static_cast<double>(size));
        double ang = -kTwoPi * q / static_cast<double>(size);
        w[n] = {std::cos(ang), std::sin(ang)};
    }
    return w;
}

void forward_1d_inplace(std::vector<cd>& v, const std::vector<cd>& chirp) {
    for (std::size_t n = 0; n < v.size(); ++n) v[n] *= chirp[n];
    fft::transform(v, false);
}

void inverse_1d_inplace(std::vector<cd>& v, const std::vector<cd>& chirp) {
    fft::transform(v, true);
    const double scale = 1.0 / static_cast<double>(v.size());
    for (std::size_t n = 0; n < v.size(); ++n) v[n] = v[n] * std::conj(chirp[n]) * scale;
}

template <typename Pass>
void over_rows(ComplexMatrix& m, Pass pass) {
#ifdef CHIRPCRYPT_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < m.rows; ++i) {
        std::vector<cd> buf(m.data.begin() + static_cast<std::size_t>(i) * m.cols,
                            m.data.begin() + static_cast<std::size_t>(i + 1) * m.cols);
        pass(buf);
        std::copy(buf.begin(), buf.end(), m.data.begin() + static_cast<std::size_t>(i) * m.cols);
    }
}

template <typename Pass>
void over_cols(ComplexMatrix& m, Pass pass) {
#ifdef CHIRPCRYPT_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int j = 0; j < m.cols; ++j) {
        std::vector<cd> buf(m.rows);
        for (int i = 0; i < m.rows; ++i) buf[i] = m.at(i, j);
        pass(buf);
        for (int i = 0; i < m.rows; ++i) m.at(i, j) = buf[i];
    }
}

}  // namespace

cd kernel_value(int n, int k, int size, double beta) {
    if (size < 1) throw std::invalid_argument("kernel_value: size must be positive");
    if (n < 0 || n >= size || k < 0 || k >= size)
        throw std::out_of_range("kernel_value: index out of range");
    double q = std::fmod(static_cast<double>(k) * n + beta * static_cast<double>(n) * n,
                         static_cast<double>(size));
    double ang = -kTwoPi * q / static_cast<double>(size);
    return {std::cos(ang), std::sin(ang)};
}

std::vector<cd> dlct1_forward(std::span<const cd> v, double beta) {
    if (v.empty()) throw std::invalid_argument("dlct1_forward: empty input");
    std::vector<cd> out(v.begin(), v.end());
    forward_1d_inplace(out, chirp_table(static_cast<int>(v.size()), beta));
    return out;
}

std::vector<cd> dlct1_inverse(std::span<const cd> X, double beta) {
    if (X.empty()) throw std::invalid_argument("dlct1_inverse: empty input");
    std::vector<cd> out(X.begin(), X.end());
    inverse_1d_inplace(out, chirp_table(static_cast<int>(X.size()), beta));
    return out;
}

ComplexMatrix dlct2_forward(const ComplexMatrix& img, const ChirpRates& rates) {
    rates.validate();
    ComplexMatrix out = img;
    const auto chirp_row = chirp_table(img.cols, rates.beta_y);
    const auto chirp_col = chirp_table(img.rows, rates.beta_x);
    over_rows(out, [&](std::vector<cd>& v) { forward_1d_inplace(v, chirp_row); });
    over_cols(out, [&](std::vector<cd>& v) { forward_1d_inplace(v, chirp_col); });
    return out;
}

ComplexMatrix dlct2_forward_direct(const ComplexMatrix& img, const ChirpRates& rates,
                                   std::size_t max_elems) {
    rates.validate();
    if (img.size() > max_elems)
        throw std::invalid_argument("dlct2_forward_direct: input exceeds size cap");
    ComplexMatrix out(img.rows, img.cols);
    for (int k = 0; k < img.rows; ++k) {
        for (int l = 0; l < img.cols; ++l) {
            cd acc = 0.0;
            for (int n = 0; n < img.rows; ++n) {
                const cd kx = kernel_value(n, k, img.rows, rates.beta_x);
                for (int m = 0; m < img.cols; ++m)
                    acc += img.at(n, m) * kx * kernel_value(m, l, img.cols, rates.beta_y);
            }
            out.at(k, l) = acc;
        }
    }
    return out;
}

ComplexMatrix dlct2_inverse(const ComplexMatrix& X, const ChirpRates& rates) {
    rates.validate();
    ComplexMatrix out = X;
    const auto chirp_row = chirp_table(X.cols, rates.beta_y);
    const auto chirp_col = chirp_table(X.rows, rates.beta_x);
    over_cols(out, [&](std::vector<cd>& v) { inverse_1d_inplace(v, chirp_col); });
    over_rows(out, [&](std::vector<cd>& v) { inverse_1d_inplace(v, chirp_row); });
    return out;
}

}  // namespace chirpcrypt::dlct
