#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chirpcrypt/chaos.hpp"
#include "chirpcrypt/cipher.hpp"
#include "chirpcrypt/dlct.hpp"
#include "support/synth.hpp"

using namespace chirpcrypt;
using namespace chirpcrypt::cipher;
using namespace chirpcrypt::testsupport;
using cd = std::complex<double>;

namespace {

KeyBundle keys_for(const GrayImage& img) {
    auto [p1, p2] = derive_discards(img);
    return reference_keys(p1, p2);
}

// Local oracle so these tests do not lean on the analysis module.
double pixel_mse(const GrayImage& a, const GrayImage& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.pixels.size(); ++i) {
        double d = double(a.pixels[i]) - double(b.pixels[i]);
        acc += d * d;
    }
    return acc / double(a.pixels.size());
}

Permutation identity_perm(std::size_t n) {
    Permutation p;
    p.index.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.index[i] = i;
    return p;
}

}  // namespace

TEST_CASE("derive_discards examples") {
    CHECK(derive_discards(GrayImage(2, 2, 0)) == std::pair<long, long>{0, 0});

    // pixel sum 10000: 40 pixels of 250
    GrayImage a(5, 8, 250);
    CHECK(derive_discards(a) == std::pair<long, long>{1, 10});

    // pixel sum 9999: 99 pixels of 101
    GrayImage b(9, 11, 101);
    CHECK(derive_discards(b) == std::pair<long, long>{0, 9});
}

TEST_CASE("decrypt(encrypt(I)) = I exactly") {
    for (auto [n, m] : {std::pair{32, 32}, {8, 8}, {17, 23}, {2, 2}}) {
        auto img = make_random_image(n, m, 1000 + n * m);
        auto k = keys_for(img);
        CHECK(decrypt(encrypt(img, k), k) == img);
    }
}

TEST_CASE("round trip holds for natural images too") {
    auto img = make_natural_image(64, 48, 3);
    auto k = keys_for(img);
    CHECK(decrypt(encrypt(img, k), k) == img);
}

TEST_CASE("identity permutations and zero rates degenerate to the 2D DFT") {
    auto img = make_random_image(8, 8, 5);
    auto c = encrypt_with_permutations(img, identity_perm(img.size()), {0.0, 0.0},
                                       identity_perm(img.size()));
    ComplexMatrix plain(img.rows, img.cols);
    for (std::size_t i = 0; i < img.size(); ++i) plain.data[i] = double(img.pixels[i]);
    auto dft = dlct::dlct2_forward(plain, {0.0, 0.0});
    for (std::size_t i = 0; i < c.data.size(); ++i)
        CHECK(std::abs(c.data[i] - dft.data[i]) < 1e-9);
}

TEST_CASE("encrypt is deterministic") {
    auto img = make_natural_image(32, 32, 8);
    auto k = keys_for(img);
    CHECK(encrypt(img, k) == encrypt(img, k));
}

TEST_CASE("wrong keys break decryption on natural images") {
    auto img = make_natural_image(64, 64, 4);
    auto k = keys_for(img);
    auto c = encrypt(img, k);
    CHECK(pixel_mse(img, decrypt(c, k)) == 0.0);

    auto check_broken = [&](KeyBundle bad) {
        CHECK(pixel_mse(img, decrypt(c, bad)) > 1e3);
    };
    KeyBundle bad = k;
    bad.key1.x0 += 1e-10;
    check_broken(bad);
    bad = k;
    bad.key1.mu += 1e-10;
    check_broken(bad);
    bad = k;
    bad.key1.discard += 1;
    check_broken(bad);
    bad = k;
    bad.key3.x0 += 1e-10;
    check_broken(bad);
    bad = k;
    bad.key3.discard += 1;
    check_broken(bad);
}

TEST_CASE("flipping one pixel changes most ciphertext entries") {
    int hits = 0;
    for (int t = 0; t < 5; ++t) {
        auto img = make_random_image(32, 32, 900 + t);
        auto c1 = encrypt(img, keys_for(img));
        auto img2 = img;
        img2.pixels[(t * 131) % img2.size()] ^= 0x5a;
        auto c2 = encrypt(img2, keys_for(img2));
        std::size_t diff = 0;
        for (std::size_t i = 0; i < c1.data.size(); ++i)
            if (c1.data[i] != c2.data[i]) ++diff;
        if (diff >= static_cast<std::size_t>(0.99 * c1.data.size())) ++hits;
    }
    CHECK(hits >= 4);
}

TEST_CASE("cipher rejects degenerate inputs") {
    CHECK_THROWS_AS(encrypt(GrayImage(1, 5, 0), reference_keys()), std::invalid_argument);
    CHECK_THROWS_AS(decrypt(CipherMatrix(1, 1), reference_keys()), std::invalid_argument);
}
