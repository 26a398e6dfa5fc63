#include "chirpcrypt/imageio.hpp"

#include <bit>
#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

namespace chirpcrypt::io {
namespace {

static_assert(std::endian::native == std::endian::little,
              "file formats are defined little-endian; big-endian hosts unsupported");

constexpr char kCipherMagic[4] = {'D', 'L', 'C', '1'};
constexpr std::uint16_t kCipherVersion = 1;
constexpr std::size_t kCipherHeaderSize = 14;

struct ByteReader {
    const std::vector<std::uint8_t>& b;
    std::size_t pos = 0;

    bool eof() const { return pos >= b.size(); }
    std::uint8_t peek() const { return b[pos]; }
    std::uint8_t get() { return b[pos++]; }
};

// PGM header token reading: whitespace separates tokens, '#' comments run to
// end of line.
void skip_ws_and_comments(ByteReader& r) {
    while (!r.eof()) {
        if (std::isspace(r.peek())) {
            r.get();
        } else if (r.peek() == '#') {
            while (!r.eof() && r.get() != '\n') {
            }
        } else {
            break;
        }
    }
}

unsigned parse_pgm_int(ByteReader& r, const char* what) {
    skip_ws_and_comments(r);
    if (r.eof() || !std::isdigit(r.peek()))
        throw io_error(std::string("PGM: expected integer for ") + what);
    unsigned v = 0;
    while (!r.eof() && std::isdigit(r.peek())) v = v * 10 + (r.get() - '0');
    return v;
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_f64(std::vector<std::uint8_t>& out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
}

std::uint16_t get_u16(const std::uint8_t* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t get_u32(const std::uint8_t* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

double get_f64(const std::uint8_t* p) {
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

// Shortest decimal that parses back to the same double, 17 digits worst case.
std::string fmt_double(double v) {
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

}  // namespace

GrayImage load_pgm(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P')
        throw io_error("PGM: not a PNM file");
    if (bytes[1] != '5')
        throw io_error(std::string("PGM: unsupported format P") +
                       static_cast<char>(bytes[1]) + " (only binary P5)");
    ByteReader r{bytes, 2};
    unsigned w = parse_pgm_int(r, "width");
    unsigned h = parse_pgm_int(r, "height");
    unsigned maxval = parse_pgm_int(r, "maxval");
    if (maxval != 255) throw io_error("PGM: maxval must be 255, got " + std::to_string(maxval));
    if (r.eof() || !std::isspace(r.get())) throw io_error("PGM: missing whitespace after maxval");
    if (w < 1 || h < 1) throw io_error("PGM: dimensions must be positive");

    const std::size_t need = static_cast<std::size_t>(w) * h;
    if (bytes.size() - r.pos < need)
        throw io_error("PGM: truncated pixel data, expected " + std::to_string(need) +
                       " bytes, got " + std::to_string(bytes.size() - r.pos));
    GrayImage img(static_cast<int>(h), static_cast<int>(w));
    std::copy(bytes.begin() + r.pos, bytes.begin() + r.pos + need, img.pixels.begin());
    return img;
}

std::vector<std::uint8_t> save_pgm(const GrayImage& img) {
    std::string header =
        "P5\n" + std::to_string(img.cols) + " " + std::to_string(img.rows) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), img.pixels.begin(), img.pixels.end());
    return out;
}

std::vector<std::uint8_t> write_cipher_file(const CipherMatrix& c) {
    std::vector<std::uint8_t> out;
    out.reserve(kCipherHeaderSize + c.data.size() * 16);
    out.insert(out.end(), kCipherMagic, kCipherMagic + 4);
    put_u16(out, kCipherVersion);
    put_u32(out, static_cast<std::uint32_t>(c.rows));
    put_u32(out, static_cast<std::uint32_t>(c.cols));
    for (const auto& z : c.data) {
        put_f64(out, z.real());
        put_f64(out, z.imag());
    }
    return out;
}

CipherMatrix read_cipher_file(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < kCipherHeaderSize) throw io_error("cipher file: truncated header");
    if (std::memcmp(bytes.data(), kCipherMagic, 4) != 0)
        throw io_error("cipher file: bad magic, expected DLC1");
    std::uint16_t version = get_u16(bytes.data() + 4);
    if (version != kCipherVersion)
        throw io_error("cipher file: unsupported version " + std::to_string(version));
    std::uint32_t rows = get_u32(bytes.data() + 6);
    std::uint32_t cols = get_u32(bytes.data() + 10);
    if (rows < 1 || cols < 1) throw io_error("cipher file: dimensions must be positive");

    const std::size_t expect = kCipherHeaderSize + static_cast<std::size_t>(rows) * cols * 16;
    if (bytes.size() != expect)
        throw io_error("cipher file: payload length mismatch, expected " +
                       std::to_string(expect) + " bytes, got " + std::to_string(bytes.size()));
    CipherMatrix c(static_cast<int>(rows), static_cast<int>(cols));
    const std::uint8_t* p = bytes.data() + kCipherHeaderSize;
    for (auto& z : c.data) {
        z = {get_f64(p), get_f64(p + 8)};
        p += 16;
    }
    return c;
}

std::string write_key_file(const KeyBundle& k) {
    std::ostringstream out;
    out << "x0=" << fmt_double(k.key1.x0) << "\n";
    out << "mu1=" << fmt_double(k.key1.mu) << "\n";
    out << "p1=" << k.key1.discard << "\n";
    out << "beta_x=" << fmt_double(k.key2.beta_x) << "\n";
    out << "beta_y=" << fmt_double(k.key2.beta_y) << "\n";
    out << "y0=" << fmt_double(k.key3.x0) << "\n";
    out << "mu2=" << fmt_double(k.key3.mu) << "\n";
    out << "p2=" << k.key3.discard << "\n";
    return out.str();
}

KeyBundle read_key_file(const std::string& text) {
    static const char* kFields[] = {"x0", "mu1", "p1", "beta_x", "beta_y", "y0", "mu2", "p2"};
    std::map<std::string, std::string> fields;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw io_error("key file: malformed line: " + line);
        std::string name = line.substr(0, eq);
        if (fields.count(name)) throw io_error("key file: duplicate field " + name);
        fields[name] = line.substr(eq + 1);
    }
    for (const char* f : kFields)
        if (!fields.count(f)) throw io_error(std::string("key file: missing field ") + f);
    for (const auto& [name, _] : fields) {
        bool known = false;
        for (const char* f : kFields) known = known || name == f;
        if (!known) throw io_error("key file: unknown field " + name);
    }

    auto real = [&](const char* f) {
        std::size_t used = 0;
        double v = std::stod(fields[f], &used);
        if (used != fields[f].size())
            throw io_error(std::string("key file: bad numeric value for ") + f);
        return v;
    };
    auto integer = [&](const char* f) {
        std::size_t used = 0;
        long v = std::stol(fields[f], &used);
        if (used != fields[f].size())
            throw io_error(std::string("key file: bad integer value for ") + f);
        return v;
    };

    KeyBundle k;
    k.key1 = {real("x0"), real("mu1"), integer("p1")};
    k.key2 = {real("beta_x"), real("beta_y")};
    k.key3 = {real("y0"), real("mu2"), integer("p2")};
    k.validate();
    return k;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                    std::istreambuf_iterator<char>());
    if (f.bad()) throw io_error("read failed on " + path);
    return bytes;
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open " + path + " for writing");
    f.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
    if (!f) throw io_error("write failed on " + path);
}

void write_file(const std::string& path, const std::string& text) {
    write_file(path, std::vector<std::uint8_t>(text.begin(), text.end()));
}

}  // namespace chirpcrypt::io
