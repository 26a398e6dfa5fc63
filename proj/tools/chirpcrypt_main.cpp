#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "chirpcrypt/analysis.hpp"
#include "chirpcrypt/chaos.hpp"
#include "chirpcrypt/cipher.hpp"
#include "chirpcrypt/dlct.hpp"
#include "chirpcrypt/imageio.hpp"

#ifdef CHIRPCRYPT_HAVE_OPENMP
#include <omp.h>
#endif

namespace {

using json = nlohmann::json;
using namespace chirpcrypt;

constexpr const char* kVersion = "1.0.0";
constexpr std::uint64_t kDefaultAnalysisSeed = 42;
constexpr std::uint64_t kDefaultNoiseSeed = 7;
constexpr int kDefaultPairs = 6000;

GrayImage load_image(const std::string& path) { return io::load_pgm(io::read_file(path)); }

KeyBundle load_keys(const std::string& path) {
    auto bytes = io::read_file(path);
    return io::read_key_file(std::string(bytes.begin(), bytes.end()));
}

double elapsed_ms(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

json correlation_block(const GrayImage& img, int pairs, std::uint64_t seed) {
    json out;
    for (auto dir : {analysis::Direction::horizontal, analysis::Direction::vertical,
                     analysis::Direction::diagonal}) {
        auto res = analysis::adjacent_correlation(img, dir, pairs, seed);
        out[analysis::to_string(dir)] = res.r;
    }
    return out;
}

void write_scatter(const std::string& dir, const std::string& stem, const GrayImage& img,
                   int pairs, std::uint64_t seed) {
    std::filesystem::create_directories(dir);
    for (auto d : {analysis::Direction::horizontal, analysis::Direction::vertical,
                   analysis::Direction::diagonal}) {
        auto res = analysis::adjacent_correlation(img, d, pairs, seed);
        std::ostringstream csv;
        csv << "x,y\n";
        for (auto [x, y] : res.samples) csv << int(x) << "," << int(y) << "\n";
        io::write_file(dir + "/" + stem + "_" + analysis::to_string(d) + ".csv", csv.str());
    }
}

std::vector<analysis::KeyRange> load_key_space_config(const std::string& path) {
    if (path.empty()) return analysis::reference_key_space_config();
    auto bytes = io::read_file(path);
    json j;
    try {
        j = json::parse(bytes.begin(), bytes.end());
    } catch (const json::parse_error& e) {
        throw io_error("key-space config: " + std::string(e.what()));
    }
    std::vector<analysis::KeyRange> out;
    for (const auto& item : j) {
        out.push_back({item.value("name", std::string()), item.at("range").get<double>(),
                       item.at("precision").get<double>()});
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Chaotic scrambling + 2D discrete linear chirp transform image cipher"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    int threads = 0;
    app.add_option("--threads", threads, "Worker thread count (default: hardware)");

    // keygen
    auto* keygen = app.add_subcommand("keygen", "Write a key file");
    double x0 = 0, mu1 = 0, beta_x = 0, beta_y = 0, y0 = 0, mu2 = 0;
    long p1 = -1, p2 = -1;
    std::string kg_image, kg_out;
    keygen->add_option("--x0", x0)->required();
    keygen->add_option("--mu1", mu1)->required();
    keygen->add_option("--beta-x", beta_x)->required();
    keygen->add_option("--beta-y", beta_y)->required();
    keygen->add_option("--y0", y0)->required();
    keygen->add_option("--mu2", mu2)->required();
    keygen->add_option("--p1", p1, "Discard count for key1 (ignored with --image)");
    keygen->add_option("--p2", p2, "Discard count for key3 (ignored with --image)");
    keygen->add_option("--image", kg_image, "Plain image; derives p1/p2 from its pixel sum");
    keygen->add_option("--out", kg_out)->required();

    // encrypt / decrypt
    std::string in_path, key_path, out_path;
    auto* encrypt = app.add_subcommand("encrypt", "Encrypt a PGM image to a cipher file");
    encrypt->add_option("--in", in_path)->required();
    encrypt->add_option("--key", key_path)->required();
    encrypt->add_option("--out", out_path)->required();
    auto* decrypt = app.add_subcommand("decrypt", "Decrypt a cipher file to a PGM image");
    decrypt->add_option("--in", in_path)->required();
    decrypt->add_option("--key", key_path)->required();
    decrypt->add_option("--out", out_path)->required();

    // transform
    auto* transform = app.add_subcommand("transform", "Standalone 2D-DLCT");
    std::string tf_in, tf_out;
    double tf_bx = 0, tf_by = 0;
    bool tf_inverse = false;
    transform->add_option("--in", tf_in, "PGM input (cipher file with --inverse)")->required();
    transform->add_option("--beta-x", tf_bx)->required();
    transform->add_option("--beta-y", tf_by)->required();
    transform->add_option("--out", tf_out, "Output cipher-format file")->required();
    transform->add_flag("--inverse", tf_inverse);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Security metrics report");
    std::string an_plain, an_cipher, an_report, an_scatter, an_keyspace;
    int an_pairs = kDefaultPairs;
    std::uint64_t an_seed = kDefaultAnalysisSeed;
    analyze->add_option("--plain", an_plain)->required();
    analyze->add_option("--cipher", an_cipher);
    analyze->add_option("--report", an_report, "Output JSON path")->required();
    analyze->add_option("--scatter", an_scatter, "Directory for x,y scatter CSVs");
    analyze->add_option("--pairs", an_pairs, "Sampled adjacent pairs");
    analyze->add_option("--seed", an_seed, "Sampling seed");
    analyze->add_option("--keyspace-config", an_keyspace,
                        "JSON list of {name, range, precision}; default: shipped config");

    // attack
    auto* attack = app.add_subcommand("attack", "Attack the ciphertext, decrypt, report PSNR");
    attack->require_subcommand(1);
    std::string at_in, at_key, at_out_cipher, at_out_image;
    double at_fraction = 0.25, at_sigma = 0.01;
    std::uint64_t at_seed = kDefaultNoiseSeed;
    auto add_attack_common = [&](CLI::App* sc) {
        sc->add_option("--in", at_in, "Plain PGM image")->required();
        sc->add_option("--key", at_key)->required();
        sc->add_option("--out-cipher", at_out_cipher, "Save the attacked ciphertext");
        sc->add_option("--out-image", at_out_image, "Save the recovered image");
    };
    auto* occ = attack->add_subcommand("occlude", "Zero a region of the ciphertext");
    occ->add_option("--fraction", at_fraction, "0.25, 0.5, or 0.75")->required();
    add_attack_common(occ);
    auto* noise = attack->add_subcommand("noise", "Add Gaussian noise to the ciphertext");
    noise->add_option("--sigma", at_sigma, "Noise std as a fraction of dynamic range")
        ->required();
    noise->add_option("--seed", at_seed);
    add_attack_common(noise);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Key-sensitivity MSE curve");
    std::string sw_in, sw_key, sw_param, sw_out;
    double sw_min = 1e-8, sw_max = 1e-1;
    int sw_points = 40;
    sweep->add_option("--in", sw_in)->required();
    sweep->add_option("--key", sw_key)->required();
    sweep->add_option("--param", sw_param, "x0|mu1|p1|beta_x|beta_y|y0|mu2|p2")->required();
    sweep->add_option("--log-min", sw_min, "Smallest |deviation|");
    sweep->add_option("--log-max", sw_max, "Largest |deviation|");
    sweep->add_option("--points", sw_points, "Magnitudes per sign");
    sweep->add_option("--out", sw_out, "CSV output (deviation,mse)")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "Time fast vs direct transform");
    int bn_size = 256, bn_iters = 10;
    bench->add_option("--size", bn_size);
    bench->add_option("--iters", bn_iters);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors are exit 1
    }

#ifdef CHIRPCRYPT_HAVE_OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    if (*keygen) {
        KeyBundle k;
        k.key1 = {x0, mu1, 0};
        k.key2 = {beta_x, beta_y};
        k.key3 = {y0, mu2, 0};
        if (!kg_image.empty()) {
            auto [d1, d2] = cipher::derive_discards(load_image(kg_image));
            k.key1.discard = d1;
            k.key3.discard = d2;
        } else {
            if (p1 < 0 || p2 < 0)
                throw std::invalid_argument("keygen: --p1 and --p2 required without --image");
            k.key1.discard = p1;
            k.key3.discard = p2;
        }
        k.validate();
        io::write_file(kg_out, io::write_key_file(k));
    } else if (*encrypt) {
        auto c = cipher::encrypt(load_image(in_path), load_keys(key_path));
        io::write_file(out_path, io::write_cipher_file(c));
    } else if (*decrypt) {
        auto img = cipher::decrypt(io::read_cipher_file(io::read_file(in_path)),
                                   load_keys(key_path));
        io::write_file(out_path, io::save_pgm(img));
    } else if (*transform) {
        ChirpRates rates{tf_bx, tf_by};
        CipherMatrix out;
        if (tf_inverse) {
            out = dlct::dlct2_inverse(io::read_cipher_file(io::read_file(tf_in)), rates);
        } else {
            GrayImage img = load_image(tf_in);
            ComplexMatrix m(img.rows, img.cols);
            for (std::size_t i = 0; i < img.size(); ++i)
                m.data[i] = static_cast<double>(img.pixels[i]);
            out = dlct::dlct2_forward(m, rates);
        }
        io::write_file(tf_out, io::write_cipher_file(out));
    } else if (*analyze) {
        GrayImage plain = load_image(an_plain);
        json report;
        report["seed"] = an_seed;
        report["pairs"] = an_pairs;
        report["plain"]["correlations"] = correlation_block(plain, an_pairs, an_seed);
        report["plain"]["histogram"] = analysis::histogram256(plain);
        auto ks = load_key_space_config(an_keyspace);
        report["key_space_bits"] = analysis::key_space_log2(ks);
        if (!an_scatter.empty()) write_scatter(an_scatter, "plain", plain, an_pairs, an_seed);
        if (!an_cipher.empty()) {
            CipherMatrix c = io::read_cipher_file(io::read_file(an_cipher));
            GrayImage q = analysis::quantize_complex(c);
            report["cipher"]["correlations"] = correlation_block(q, an_pairs, an_seed);
            report["cipher"]["histogram"] = analysis::histogram256(q);
            if (q.rows == plain.rows && q.cols == plain.cols) {
                report["cipher"]["mse_vs_plain"] = analysis::mse(plain, q);
                double p = analysis::psnr(plain, q);
                report["cipher"]["psnr_db_vs_plain"] = std::isfinite(p) ? json(p) : json();
            }
            if (!an_scatter.empty()) write_scatter(an_scatter, "cipher", q, an_pairs, an_seed);
        }
        std::ofstream out(an_report);
        if (!out) throw io_error("cannot open " + an_report + " for writing");
        out << report.dump(2) << "\n";
        std::cout << "report written to " << an_report << "\n";
    } else if (*attack) {
        GrayImage plain = load_image(at_in);
        KeyBundle keys = load_keys(at_key);
        CipherMatrix c = cipher::encrypt(plain, keys);
        CipherMatrix attacked;
        std::string label;
        if (*occ) {
            attacked = analysis::occlude(c, at_fraction);
            label = "occlude fraction=" + std::to_string(at_fraction);
        } else {
            attacked = analysis::add_gaussian_noise(c, at_sigma, at_seed);
            label = "noise sigma=" + std::to_string(at_sigma) +
                    " seed=" + std::to_string(at_seed);
        }
        GrayImage recovered = cipher::decrypt(attacked, keys);
        if (!at_out_cipher.empty()) io::write_file(at_out_cipher, io::write_cipher_file(attacked));
        if (!at_out_image.empty()) io::write_file(at_out_image, io::save_pgm(recovered));
        std::printf("attack %s psnr_db=%.4f mse=%.4f\n", label.c_str(),
                    analysis::psnr(plain, recovered), analysis::mse(plain, recovered));
    } else if (*sweep) {
        if (sw_points < 1 || sw_min <= 0 || sw_max < sw_min)
            throw std::invalid_argument("sweep: need --points >= 1 and 0 < --log-min <= --log-max");
        std::vector<double> deviations{0.0};
        for (int i = 0; i < sw_points; ++i) {
            double t = sw_points == 1
                           ? 0.0
                           : static_cast<double>(i) / static_cast<double>(sw_points - 1);
            double mag = sw_min * std::pow(sw_max / sw_min, t);
            deviations.push_back(mag);
            deviations.push_back(-mag);
        }
        std::sort(deviations.begin(), deviations.end());
        auto curve = analysis::sensitivity_sweep(load_image(sw_in), load_keys(sw_key),
                                                 analysis::parse_key_param(sw_param), deviations);
        std::ostringstream csv;
        csv << "deviation,mse\n";
        for (std::size_t i = 0; i < curve.deviations.size(); ++i) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", curve.deviations[i],
                          curve.mse_values[i]);
            csv << buf;
        }
        io::write_file(sw_out, csv.str());
    } else if (*bench) {
        if (bn_size < 2 || bn_iters < 1)
            throw std::invalid_argument("bench: need --size >= 2 and --iters >= 1");
        ComplexMatrix m(bn_size, bn_size);
        std::mt19937_64 gen(1234);
        std::uniform_real_distribution<double> u(0.0, 255.0);
        for (auto& z : m.data) z = {u(gen), u(gen)};
        ChirpRates rates{1.5, -3.5};

        auto time_forward = [&](const char* label) {
            auto t0 = std::chrono::steady_clock::now();
            for (int i = 0; i < bn_iters; ++i) (void)dlct::dlct2_forward(m, rates);
            std::printf("%-22s %4dx%-4d %8.3f ms/iter\n", label, bn_size, bn_size,
                        elapsed_ms(t0) / bn_iters);
        };
#ifdef CHIRPCRYPT_HAVE_OPENMP
        int saved = omp_get_max_threads();
        time_forward("fast (parallel)");
        omp_set_num_threads(1);
        time_forward("fast (serial)");
        omp_set_num_threads(saved);
#else
        time_forward("fast (serial)");
#endif
        if (static_cast<std::size_t>(bn_size) * bn_size <= 4096) {
            auto t0 = std::chrono::steady_clock::now();
            for (int i = 0; i < bn_iters; ++i) (void)dlct::dlct2_forward_direct(m, rates);
            std::printf("%-22s %4dx%-4d %8.3f ms/iter\n", "direct reference", bn_size, bn_size,
                        elapsed_ms(t0) / bn_iters);
        } else {
            std::printf("direct reference skipped: %dx%d exceeds the size cap\n", bn_size,
                        bn_size);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const chirpcrypt::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
