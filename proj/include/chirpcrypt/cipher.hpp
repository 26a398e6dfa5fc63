#pragma once

#include <utility>

#include "chirpcrypt/types.hpp"

namespace chirpcrypt::cipher {

/// Plaintext-dependent discard counts: p1 = pixel_sum mod 9999, p2 = pixel_sum mod 9990.
std::pair<long, long> derive_discards(const GrayImage& img);

constexpr long kP1Modulus = 9999;
constexpr long kP2Modulus = 9990;

/// scramble(key1) -> 2D-DLCT(key2) -> scramble(key3), all row-major flattened.
/// keys.key1.discard / keys.key3.discard must already be populated.
CipherMatrix encrypt(const GrayImage& img, const KeyBundle& keys);

/// Pipeline core with explicit permutations; encrypt() derives them from the keys.
CipherMatrix encrypt_with_permutations(const GrayImage& img, const Permutation& p1,
                                       const ChirpRates& rates, const Permutation& p2);

/// Inverse pipeline, then round(Re(.)) clamped to [0,255].
GrayImage decrypt(const CipherMatrix& c, const KeyBundle& keys);

}  // namespace chirpcrypt::cipher
