#include "chirpcrypt/cipher.hpp"

#include <cmath>

#include "chirpcrypt/chaos.hpp"
#include "chirpcrypt/dlct.hpp"

namespace chirpcrypt::cipher {
namespace {

using cd = std::complex<double>;

void check_image(const GrayImage& img) {
    if (img.rows < 2 || img.cols < 2)
        throw std::invalid_argument("cipher: image must be at least 2x2");
    if (img.pixels.size() != static_cast<std::size_t>(img.rows) * img.cols)
        throw std::invalid_argument("cipher: pixel buffer does not match dimensions");
}

Permutation scramble_permutation(const LogisticParams& params, std::size_t n) {
    return chaos::permutation_from_sequence(chaos::logistic_sequence(params, n));
}

}  // namespace

std::pair<long, long> derive_discards(const GrayImage& img) {
    check_image(img);
    std::uint64_t sum = 0;
    for (std::uint8_t v : img.pixels) sum += v;
    return {static_cast<long>(sum % kP1Modulus), static_cast<long>(sum % kP2Modulus)};
}

CipherMatrix encrypt_with_permutations(const GrayImage& img, const Permutation& p1,
                                       const ChirpRates& rates, const Permutation& p2) {
    check_image(img);
    const std::size_t n = img.size();
    if (p1.size() != n || p2.size() != n)
        throw std::invalid_argument("encrypt: permutation size does not match image");

    std::vector<cd> flat(n);
    for (std::size_t i = 0; i < n; ++i) flat[i] = static_cast<double>(img.pixels[i]);

    ComplexMatrix scrambled(img.rows, img.cols);
    scrambled.data = chaos::apply_permutation(flat, p1);

    ComplexMatrix transformed = dlct::dlct2_forward(scrambled, rates);

    CipherMatrix out(img.rows, img.cols);
    out.data = chaos::apply_permutation(transformed.data, p2);
    return out;
}

CipherMatrix encrypt(const GrayImage& img, const KeyBundle& keys) {
    keys.validate();
    check_image(img);
    const std::size_t n = img.size();
    return encrypt_with_permutations(img, scramble_permutation(keys.key1, n), keys.key2,
                                     scramble_permutation(keys.key3, n));
}

GrayImage decrypt(const CipherMatrix& c, const KeyBundle& keys) {
    keys.validate();
    if (c.rows < 2 || c.cols < 2)
        throw std::invalid_argument("decrypt: ciphertext must be at least 2x2");
    if (c.data.size() != static_cast<std::size_t>(c.rows) * c.cols)
        throw std::invalid_argument("decrypt: data length does not match header dimensions");

    const std::size_t n = c.size();
    const Permutation p1_inv = chaos::invert_permutation(scramble_permutation(keys.key1, n));
    const Permutation p2_inv = chaos::invert_permutation(scramble_permutation(keys.key3, n));

    ComplexMatrix transformed(c.rows, c.cols);
    transformed.data = chaos::apply_permutation(c.data, p2_inv);

    ComplexMatrix scrambled = dlct::dlct2_inverse(transformed, keys.key2);
    std::vector<cd> flat = chaos::apply_permutation(scrambled.data, p1_inv);

    GrayImage out(c.rows, c.cols);
    for (std::size_t i = 0; i < n; ++i) {
        double v = std::round(flat[i].real());
        if (v < 0.0) v = 0.0;
        if (v > 255.0) v = 255.0;
        out.pixels[i] = static_cast<std::uint8_t>(v);
    }
    return out;
}

}  // namespace chirpcrypt::cipher
