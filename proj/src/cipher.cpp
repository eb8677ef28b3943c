#include "qmedshield/cipher.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>

#include "qmedshield/bitplane.hpp"
#include "qmedshield/qsim.hpp"

namespace qmedshield::cipher {

namespace {

double frac(double v) { return v - std::floor(v); }

void check_unit_interval(double v, const char* name) {
    if (!(v > 0.0 && v < 1.0))
        throw KeyError(name, std::string(name) + " must be in (0, 1)");
}

// rule index = 1 + floor(frac(k) * 8), clamped to [1, 8]
const dna::DnaRule& rule_for(double k) {
    const int idx = 1 + static_cast<int>(std::floor(frac(k) * 8.0));
    return dna::DnaRule::table(std::min(std::max(idx, 1), 8));
}

dna::RuleSet rules_from(const std::array<double, 18>& k, int first) {
    dna::RuleSet rules{};
    for (int j = 0; j < 4; ++j) rules[j] = rule_for(k[first + j]);
    return rules;
}

double to_double(std::uint64_t bits) {
    // 53 random bits, forced odd: uniform on (0, 1), never 0 or 1
    return static_cast<double>((bits >> 11) | 1ull) * 0x1p-53;
}

}  // namespace

void KeySet::validate() const {
    for (int i = 0; i < 18; ++i) {
        char name[8];
        std::snprintf(name, sizeof(name), "k%d", i + 1);
        if (!(k[i] > 0.0 && k[i] < 1.0))
            throw KeyError(name, std::string(name) + " must be in (0, 1)");
    }
    check_unit_interval(r, "r");
    if (!chaos::is_prime(eps1)) throw KeyError("eps1", "eps1 must be prime");
    if (!chaos::is_prime(eps2)) throw KeyError("eps2", "eps2 must be prime");
    if (!(alpha > 0.0 && alpha <= 1.5)) throw KeyError("alpha", "alpha must be in (0, 1.5]");
    if (!(beta > 0.0 && beta <= 0.5)) throw KeyError("beta", "beta must be in (0, 0.5]");
    if (!(eta > 0.0 && std::isfinite(eta))) throw KeyError("eta", "eta must be positive");
    if (!(gamma >= 6.0)) throw KeyError("gamma", "gamma must be >= 6");
    if (burn_in < 0) throw KeyError("burn_in", "burn_in must be >= 0");
}

chaos::HenonParams KeySet::henon_params() const {
    chaos::HenonParams p;
    p.x0 = 0.5 * frac(k[0] + r);
    p.y0 = 0.2 * k[1];
    p.alpha = alpha;
    p.beta = beta;
    p.burn_in = burn_in;
    return p;
}

chaos::QuantumLogisticParams KeySet::quantum_params() const {
    chaos::QuantumLogisticParams p;
    p.x0 = k[2];
    p.y0 = 0.1 * k[3];
    p.z0 = 0.2 * k[4];
    p.eta = eta;
    p.gamma = gamma;
    p.burn_in = burn_in;
    return p;
}

chaos::HybridParams KeySet::hybrid_params() const {
    chaos::HybridParams p;
    p.x0 = k[9];
    p.r = 0.6 + 0.6 * r;
    p.burn_in = burn_in;
    return p;
}

CipherContext derive_context(const KeySet& key, int w, int h) {
    key.validate();
    if (w < 1 || h < 1) throw DimensionError("context dimensions must be >= 1");

    CipherContext ctx;
    ctx.width = w;
    ctx.height = h;

    const auto henon = key.henon_params();
    ctx.bp_key = chaos::derive_bitplane_key(henon);
    ctx.selector = chaos::derive_selector_key(henon);

    const std::size_t n = static_cast<std::size_t>(w) * h;
    const auto triples = chaos::quantum_logistic_sequence(key.quantum_params(), n);
    std::vector<double> xs(n), ys(n), zs(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = triples[i].x;
        ys[i] = triples[i].y;
        zs[i] = triples[i].z;
    }
    ctx.key_matrices[0] = chaos::derive_key_matrix(xs, key.eps1, key.eps2, w, h);
    ctx.key_matrices[1] = chaos::derive_key_matrix(ys, key.eps1, key.eps2, w, h);
    ctx.key_matrices[2] = chaos::derive_key_matrix(zs, key.eps1, key.eps2, w, h);

    const auto hybrid = chaos::hybrid_sequence(key.hybrid_params(), n);
    ctx.hybrid_key = chaos::derive_key_matrix(hybrid, key.eps1, key.eps2, w, h);

    ctx.data_rules = rules_from(key.k, 5);   // k6..k9
    ctx.key_rules = rules_from(key.k, 10);   // k11..k14
    ctx.out_rules = rules_from(key.k, 14);   // k15..k18
    return ctx;
}

GrayImage encrypt(const GrayImage& img, const CipherContext& ctx) {
    if (img.width != ctx.width || img.height != ctx.height)
        throw DimensionError("image dimensions do not match the cipher context");

    const auto scrambled = bitplane::scramble(bitplane::decompose(img), ctx.bp_key);
    const GrayImage diffused =
        qsim::diffuse(bitplane::reassemble(scrambled), ctx.key_matrices[ctx.selector]);

    const auto data_planes = dna::encode(diffused, ctx.data_rules);
    const auto key_planes = dna::encode(ctx.hybrid_key.as_image(), ctx.key_rules);
    const auto mixed = dna::xor_planes(data_planes, key_planes);
    return dna::decode(mixed, ctx.out_rules);
}

GrayImage decrypt(const GrayImage& cimg, const CipherContext& ctx) {
    if (cimg.width != ctx.width || cimg.height != ctx.height)
        throw DimensionError("image dimensions do not match the cipher context");

    const auto mixed = dna::encode(cimg, ctx.out_rules);
    const auto key_planes = dna::encode(ctx.hybrid_key.as_image(), ctx.key_rules);
    const auto data_planes = dna::xor_planes(mixed, key_planes);
    const GrayImage diffused = dna::decode(data_planes, ctx.data_rules);

    const GrayImage undiffused = qsim::diffuse(diffused, ctx.key_matrices[ctx.selector]);
    const auto planes = bitplane::decompose(undiffused);
    return bitplane::reassemble(bitplane::scramble(planes, bitplane::inverse(ctx.bp_key)));
}

GrayImage encrypt(const GrayImage& img, const KeySet& key) {
    return encrypt(img, derive_context(key, img.width, img.height));
}

GrayImage decrypt(const GrayImage& cimg, const KeySet& key) {
    return decrypt(cimg, derive_context(key, cimg.width, cimg.height));
}

KeySet keygen(std::span<const std::uint8_t, 32> seed) {
    std::array<std::uint32_t, 8> words{};
    for (int w = 0; w < 8; ++w)
        for (int b = 0; b < 4; ++b)
            words[w] = (words[w] << 8) | seed[static_cast<std::size_t>(w) * 4 + b];
    std::seed_seq seq(words.begin(), words.end());
    std::mt19937_64 rng(seq);

    KeySet key;
    for (double& ki : key.k) ki = to_double(rng());
    key.r = to_double(rng());
    return key;
}

KeySet keygen() {
    std::random_device rd;
    std::array<std::uint8_t, 32> seed{};
    for (std::size_t i = 0; i < seed.size(); i += 4) {
        const std::uint32_t v = rd();
        seed[i] = static_cast<std::uint8_t>(v >> 24);
        seed[i + 1] = static_cast<std::uint8_t>(v >> 16);
        seed[i + 2] = static_cast<std::uint8_t>(v >> 8);
        seed[i + 3] = static_cast<std::uint8_t>(v);
    }
    return keygen(std::span<const std::uint8_t, 32>(seed));
}

namespace {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

const char* const kRealFields[] = {"r", "alpha", "beta", "eta", "gamma"};

}  // namespace

std::string serialize_key(const KeySet& key) {
    std::ostringstream out;
    out << "# QMedShield key file\n";
    out << "version = " << kKeyFileVersion << "\n";
    for (int i = 0; i < 18; ++i) out << "k" << (i + 1) << " = " << format_real(key.k[i]) << "\n";
    out << "r = " << format_real(key.r) << "\n";
    out << "eps1 = " << key.eps1 << "\n";
    out << "eps2 = " << key.eps2 << "\n";
    out << "alpha = " << format_real(key.alpha) << "\n";
    out << "beta = " << format_real(key.beta) << "\n";
    out << "eta = " << format_real(key.eta) << "\n";
    out << "gamma = " << format_real(key.gamma) << "\n";
    out << "burn_in = " << key.burn_in << "\n";
    return out.str();
}

KeySet parse_key(const std::string& text) {
    std::map<std::string, std::string> fields;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw KeyError("", "line " + std::to_string(lineno) + ": expected `name = value`");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string name = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (name.empty() || value.empty())
            throw KeyError(name, "line " + std::to_string(lineno) + ": empty name or value");
        if (!fields.emplace(name, value).second)
            throw KeyError(name, "duplicate field " + name);
    }

    auto take = [&fields](const std::string& name) {
        const auto it = fields.find(name);
        if (it == fields.end()) throw KeyError(name, "missing field " + name);
        const std::string v = it->second;
        fields.erase(it);
        return v;
    };
    auto parse_real = [](const std::string& name, const std::string& v) {
        std::size_t pos = 0;
        double d = 0.0;
        try {
            d = std::stod(v, &pos);
        } catch (const std::exception&) {
            throw KeyError(name, "field " + name + " is not a number: " + v);
        }
        if (pos != v.size()) throw KeyError(name, "field " + name + " has trailing characters");
        return d;
    };
    auto parse_uint = [](const std::string& name, const std::string& v) {
        std::size_t pos = 0;
        unsigned long long u = 0;
        try {
            u = std::stoull(v, &pos);
        } catch (const std::exception&) {
            throw KeyError(name, "field " + name + " is not an integer: " + v);
        }
        if (pos != v.size()) throw KeyError(name, "field " + name + " has trailing characters");
        return static_cast<std::uint64_t>(u);
    };

    const std::string version = take("version");
    if (version != std::to_string(kKeyFileVersion))
        throw KeyError("version", "unsupported key file version " + version);

    KeySet key;
    for (int i = 0; i < 18; ++i) {
        const std::string name = "k" + std::to_string(i + 1);
        key.k[i] = parse_real(name, take(name));
    }
    key.r = parse_real("r", take("r"));
    key.eps1 = parse_uint("eps1", take("eps1"));
    key.eps2 = parse_uint("eps2", take("eps2"));
    key.alpha = parse_real("alpha", take("alpha"));
    key.beta = parse_real("beta", take("beta"));
    key.eta = parse_real("eta", take("eta"));
    key.gamma = parse_real("gamma", take("gamma"));
    key.burn_in = static_cast<long>(parse_uint("burn_in", take("burn_in")));

    if (!fields.empty())
        throw KeyError(fields.begin()->first, "unknown field " + fields.begin()->first);

    key.validate();
    return key;
}

std::string key_fingerprint(const KeySet& key) {
    const std::string text = serialize_key(key);
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
    return buf;
}

}  // namespace qmedshield::cipher
