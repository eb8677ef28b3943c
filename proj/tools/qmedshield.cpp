// qmedshield: chaos-based grayscale image encryption CLI.
//
// Exit codes: 0 success, 2 usage/invalid input, 3 I/O error, 4 key error,
// 5 image format error.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmedshield/analysis.hpp"
#include "qmedshield/chaos.hpp"
#include "qmedshield/cipher.hpp"
#include "qmedshield/pgm.hpp"

namespace qms = qmedshield;
using qms::cipher::KeySet;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitKey = 4;
constexpr int kExitFormat = 5;

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::array<std::uint8_t, 32> parse_seed_hex(const std::string& hex) {
    if (hex.size() != 64)
        throw CLI::ValidationError("--seed", "seed must be 64 hex characters (32 bytes)");
    std::array<std::uint8_t, 32> out{};
    for (std::size_t i = 0; i < 32; ++i) {
        const std::string byte = hex.substr(2 * i, 2);
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(byte, &pos, 16);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != 2) throw CLI::ValidationError("--seed", "invalid hex byte: " + byte);
        out[i] = static_cast<std::uint8_t>(v);
    }
    return out;
}

KeySet load_key(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw qms::IoError("cannot open key file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return qms::cipher::parse_key(buf.str());
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw qms::IoError("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw qms::IoError("failed writing " + path.string());
}

void check_max_dim(const qms::GrayImage& img, int max_dim) {
    if (img.width > max_dim || img.height > max_dim)
        throw std::invalid_argument("image exceeds the configured maximum of " +
                                    std::to_string(max_dim) + "x" + std::to_string(max_dim));
}

// --range a:b[:steps] for parameter sweeps
struct SweepRange {
    double lo = 0.0;
    double hi = 0.0;
    int steps = 400;
};

SweepRange parse_sweep(const std::string& text, double def_lo, double def_hi) {
    SweepRange r{def_lo, def_hi, 400};
    if (text.empty()) return r;
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    try {
        if (parts.size() < 2 || parts.size() > 3) throw std::invalid_argument(text);
        r.lo = std::stod(parts[0]);
        r.hi = std::stod(parts[1]);
        if (parts.size() == 3) r.steps = std::stoi(parts[2]);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid --range, expected a:b[:steps]: " + text);
    }
    if (!(r.hi > r.lo) || r.steps < 1)
        throw std::invalid_argument("empty parameter range: " + text);
    return r;
}

int run_keygen(const std::string& out_path, const std::string& seed_hex) {
    const KeySet key = seed_hex.empty()
                           ? qms::cipher::keygen()
                           : qms::cipher::keygen(parse_seed_hex(seed_hex));
    write_text(out_path, qms::cipher::serialize_key(key));
    std::cout << "key written to " << out_path << "\n";
    std::cout << "fingerprint: " << qms::cipher::key_fingerprint(key) << "\n";
    return 0;
}

int run_encrypt(const std::string& in_path, const std::string& key_path,
                const std::string& out_path, int max_dim, bool decrypting) {
    const KeySet key = load_key(key_path);
    const qms::GrayImage input = qms::pgm::read(in_path);
    check_max_dim(input, max_dim);
    const qms::GrayImage output =
        decrypting ? qms::cipher::decrypt(input, key) : qms::cipher::encrypt(input, key);
    qms::pgm::write(out_path, output);
    if (decrypting)
        std::cerr << "note: the ciphertext carries no authentication tag; a wrong key "
                     "produces noise without any error\n";
    std::cout << (decrypting ? "decrypted " : "encrypted ") << in_path << " -> " << out_path
              << " (" << output.width << "x" << output.height << ")\n";
    return 0;
}

void print_summary_line(const char* name, double value, bool pass) {
    std::printf("  %-28s %14.4f   %s\n", name, value, pass ? "pass" : "FAIL");
}

int run_analyze(const std::string& plain_path, const std::string& cipher_path,
                const std::string& key_path, const std::string& report_path) {
    const KeySet key = load_key(key_path);
    const qms::GrayImage plain = qms::pgm::read(plain_path);
    const qms::GrayImage cipher_img =
        cipher_path.empty() ? qms::cipher::encrypt(plain, key) : qms::pgm::read(cipher_path);

    const auto rep = qms::analysis::analyze(plain, cipher_img, key);
    write_text(report_path, qms::analysis::report_to_json(rep));

    std::printf("analysis of %dx%d image (report: %s)\n", rep.width, rep.height,
                report_path.c_str());
    print_summary_line("cipher chi-square", rep.cipher_chi_square.statistic,
                       rep.cipher_chi_square.pass);
    print_summary_line("cipher corr horizontal", rep.cipher_correlation.horizontal,
                       std::abs(rep.cipher_correlation.horizontal) < 0.05);
    print_summary_line("cipher corr vertical", rep.cipher_correlation.vertical,
                       std::abs(rep.cipher_correlation.vertical) < 0.05);
    print_summary_line("cipher corr diagonal", rep.cipher_correlation.diagonal,
                       std::abs(rep.cipher_correlation.diagonal) < 0.05);
    print_summary_line("cipher entropy", rep.cipher_entropy, rep.cipher_entropy > 7.99);
    std::printf("  %-28s %14.5f   (measured)\n", "differential NPCR %", rep.npcr_percent);
    std::printf("  %-28s %14.5f   (measured)\n", "differential UACI %", rep.uaci_percent);
    std::printf("  %-28s %14.4f\n", "MAE", rep.errors.mae);
    std::printf("  %-28s %14.4f\n", "RMSE", rep.errors.rmse);
    if (std::isfinite(rep.errors.psnr))
        std::printf("  %-28s %14.4f\n", "PSNR (dB)", rep.errors.psnr);
    else
        std::printf("  %-28s %14s\n", "PSNR (dB)", "inf");
    print_summary_line("KP attack (black/white)",
                       std::min(rep.kp.black_entropy, rep.kp.white_entropy), rep.kp.pass);
    print_summary_line("CP attack violation %", rep.cp.violation_percent, rep.cp.pass);
    print_summary_line("key sensitivity NPCR %", rep.key_sensitivity_npcr,
                       rep.key_sensitivity_npcr > 99.0);
    return 0;
}

int run_attack_sim(const std::string& key_path, const std::string& seed_hex,
                   const std::string& report_path) {
    const KeySet key = load_key(key_path);

    const auto kp = qms::analysis::kp_attack_test(key);
    std::printf("[%s] known-plaintext: black entropy %.4f chi2 %.2f, white entropy %.4f chi2 %.2f\n",
                kp.pass ? "PASS" : "FAIL", kp.black_entropy, kp.black_chi_square, kp.white_entropy,
                kp.white_chi_square);

    std::uint32_t cp_seed = 0x51F15EEDu;
    if (!seed_hex.empty()) {
        const auto bytes = parse_seed_hex(seed_hex);
        cp_seed = (std::uint32_t(bytes[0]) << 24) | (std::uint32_t(bytes[1]) << 16) |
                  (std::uint32_t(bytes[2]) << 8) | bytes[3];
    }
    std::mt19937 rng(cp_seed);
    qms::GrayImage m1(256, 256), m2(256, 256);
    for (auto& px : m1.pixels) px = std::uint8_t(rng() & 0xFF);
    for (auto& px : m2.pixels) px = std::uint8_t(rng() & 0xFF);
    const auto cp = qms::analysis::cp_attack_test(m1, m2, key);
    std::printf("[%s] chosen-plaintext: XOR equality violated on %.3f%% of pixels\n",
                cp.pass ? "PASS" : "FAIL", cp.violation_percent);

    if (!report_path.empty()) {
        nlohmann::ordered_json j;
        j["kp_attack"] = {{"pass", kp.pass},
                          {"black", {{"entropy", kp.black_entropy}, {"chi_square", kp.black_chi_square}}},
                          {"white", {{"entropy", kp.white_entropy}, {"chi_square", kp.white_chi_square}}}};
        j["cp_attack"] = {{"pass", cp.pass},
                          {"degenerate", cp.degenerate},
                          {"violation_percent", cp.violation_percent}};
        write_text(report_path, j.dump(2) + "\n");
    }
    return kp.pass && cp.pass ? 0 : 1;
}

int run_chaos_plot(const std::string& map, const std::string& range,
                   const std::string& out_path) {
    std::ostringstream csv;
    if (map == "henon") {
        const SweepRange r = parse_sweep(range, 1.0, 1.4);
        csv << "alpha,x\n";
        for (int i = 0; i < r.steps; ++i) {
            const double alpha =
                r.lo + (r.hi - r.lo) * double(i) / double(std::max(1, r.steps - 1));
            qms::chaos::HenonParams p{.x0 = 0.1, .y0 = 0.1, .alpha = alpha, .beta = 0.3,
                                      .burn_in = 200};
            try {
                for (const auto& [x, y] : qms::chaos::henon_sequence(p, 100))
                    csv << format_real(alpha) << "," << format_real(x) << "\n";
            } catch (const qms::DivergenceError&) {
                // escaping parameter values contribute no points
            } catch (const std::invalid_argument&) {
            }
        }
    } else if (map == "hybrid") {
        const SweepRange r = parse_sweep(range, 0.6, 1.2);
        csv << "r,x\n";
        for (int i = 0; i < r.steps; ++i) {
            const double rv = r.lo + (r.hi - r.lo) * double(i) / double(std::max(1, r.steps - 1));
            qms::chaos::HybridParams p{.x0 = 0.37, .r = rv, .burn_in = 200};
            try {
                for (double x : qms::chaos::hybrid_sequence(p, 100))
                    csv << format_real(rv) << "," << format_real(x) << "\n";
            } catch (const std::invalid_argument&) {
                // values outside the chaotic band contribute no points
            }
        }
    } else if (map == "qlogistic") {
        int n = 5000;
        if (!range.empty()) {
            try {
                std::size_t pos = 0;
                n = std::stoi(range, &pos);
                if (pos != range.size()) throw std::invalid_argument(range);
            } catch (const std::exception&) {
                throw std::invalid_argument("qlogistic --range takes an iterate count: " + range);
            }
            if (n < 1) throw std::invalid_argument("empty parameter range: " + range);
        }
        csv << "x,y,z\n";
        qms::chaos::QuantumLogisticParams p;  // published phase-portrait seeds
        for (const auto& t : qms::chaos::quantum_logistic_sequence(p, std::size_t(n)))
            csv << format_real(t.x) << "," << format_real(t.y) << "," << format_real(t.z) << "\n";
    } else {
        throw std::invalid_argument("unknown map: " + map + " (henon|hybrid|qlogistic)");
    }
    write_text(out_path, csv.str());
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"QMedShield chaos-based grayscale image encryption"};
    app.require_subcommand(1);

    std::string in_path, in2_path, key_path, out_path, report_path, seed_hex, map_name, range;
    int max_dim = 4096;

    auto* keygen_cmd = app.add_subcommand("keygen", "generate a key file");
    keygen_cmd->add_option("--out", out_path, "output key file")->required();
    keygen_cmd->add_option("--seed", seed_hex, "32-byte hex seed for reproducible keys");

    auto* encrypt_cmd = app.add_subcommand("encrypt", "encrypt a PGM image");
    encrypt_cmd->add_option("--in", in_path, "plain image (PGM P5)")->required();
    encrypt_cmd->add_option("--key", key_path, "key file")->required();
    encrypt_cmd->add_option("--out", out_path, "cipher image output")->required();
    encrypt_cmd->add_option("--max-dim", max_dim, "maximum accepted width/height");

    auto* decrypt_cmd = app.add_subcommand("decrypt", "decrypt a PGM image");
    decrypt_cmd->add_option("--in", in_path, "cipher image (PGM P5)")->required();
    decrypt_cmd->add_option("--key", key_path, "key file")->required();
    decrypt_cmd->add_option("--out", out_path, "plain image output")->required();
    decrypt_cmd->add_option("--max-dim", max_dim, "maximum accepted width/height");

    auto* analyze_cmd = app.add_subcommand("analyze", "run the security-analysis battery");
    analyze_cmd->add_option("--in", in_path, "plain image (PGM P5)")->required();
    analyze_cmd->add_option("--cipher", in2_path,
                            "cipher image; recomputed from the key when omitted");
    analyze_cmd->add_option("--key", key_path, "key file")->required();
    analyze_cmd->add_option("--report", report_path, "JSON report output")->required();

    auto* attack_cmd = app.add_subcommand("attack-sim", "known/chosen-plaintext attack simulation");
    attack_cmd->add_option("--key", key_path, "key file")->required();
    attack_cmd->add_option("--seed", seed_hex, "hex seed for the chosen-plaintext pair");
    attack_cmd->add_option("--report", report_path, "optional JSON report output");

    auto* plot_cmd = app.add_subcommand("chaos-plot", "emit bifurcation/phase-portrait CSV data");
    plot_cmd->add_option("--map", map_name, "henon | hybrid | qlogistic")->required();
    plot_cmd->add_option("--range", range,
                         "a:b[:steps] parameter sweep (sweeps) or iterate count (qlogistic)");
    plot_cmd->add_option("--out", out_path, "CSV output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (keygen_cmd->parsed()) return run_keygen(out_path, seed_hex);
        if (encrypt_cmd->parsed()) return run_encrypt(in_path, key_path, out_path, max_dim, false);
        if (decrypt_cmd->parsed()) return run_encrypt(in_path, key_path, out_path, max_dim, true);
        if (analyze_cmd->parsed()) return run_analyze(in_path, in2_path, key_path, report_path);
        if (attack_cmd->parsed()) return run_attack_sim(key_path, seed_hex, report_path);
        if (plot_cmd->parsed()) return run_chaos_plot(map_name, range, out_path);
    } catch (const qms::KeyError& e) {
        std::cerr << "key error: " << e.what() << "\n";
        return kExitKey;
    } catch (const qms::FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const qms::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qms::DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
