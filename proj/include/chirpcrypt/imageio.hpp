#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chirpcrypt/types.hpp"

namespace chirpcrypt::io {

/// Binary PGM (P5) with maxval 255. Comments and arbitrary header whitespace
/// are accepted on load; save emits the canonical "P5\n<w> <h>\n255\n" form.
GrayImage load_pgm(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> save_pgm(const GrayImage& img);

/// Ciphertext container: "DLC1" magic, u16 version, u32 rows, u32 cols (all
/// little-endian), then row-major (real, imag) f64 pairs.
std::vector<std::uint8_t> write_cipher_file(const CipherMatrix& c);
CipherMatrix read_cipher_file(const std::vector<std::uint8_t>& bytes);

/// Line-oriented key file: exactly the 8 fields x0, mu1, p1, beta_x, beta_y,
/// y0, mu2, p2 as name=value; reals carry 17 significant digits.
std::string write_key_file(const KeyBundle& k);
KeyBundle read_key_file(const std::string& text);

// File-system conveniences; throw io_error on failure.
std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes);
void write_file(const std::string& path, const std::string& text);

}  // namespace chirpcrypt::io
