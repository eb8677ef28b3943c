#include "qmedshield/dna.hpp"

#include <stdexcept>

namespace qmedshield {

char base_to_char(Base b) {
    switch (b) {
        case Base::A: return 'A';
        case Base::C: return 'C';
        case Base::G: return 'G';
        case Base::T: return 'T';
    }
    throw std::invalid_argument("invalid base");
}

Base base_from_char(char c) {
    switch (c) {
        case 'A': return Base::A;
        case 'C': return Base::C;
        case 'G': return Base::G;
        case 'T': return Base::T;
    }
    throw std::invalid_argument("invalid base character");
}

namespace dna {

namespace {

constexpr Base A = Base::A;
constexpr Base C = Base::C;
constexpr Base G = Base::G;
constexpr Base T = Base::T;

// The published encoding rules, one column per rule, rows 00,01,10,11.
constexpr std::array<DnaRule, 8> kRules{{
    {1, {A, G, C, T}},
    {2, {C, A, T, G}},
    {3, {T, G, C, A}},
    {4, {A, C, G, T}},
    {5, {G, T, A, C}},
    {6, {C, T, A, G}},
    {7, {T, G, C, A}},
    {8, {G, A, T, C}},
}};

// Published XOR truth table, indexed by (a, b) in canonical A,C,G,T order.
constexpr Base kXor[4][4] = {
    {A, C, G, T},
    {C, A, T, G},
    {G, T, A, C},
    {T, G, C, A},
};

}  // namespace

int DnaRule::decode(Base b) const {
    for (int d = 0; d < 4; ++d)
        if (to_base[d] == b) return d;
    throw std::invalid_argument("base not produced by this rule");
}

const DnaRule& DnaRule::table(int index) {
    if (index < 1 || index > 8) throw std::invalid_argument("DNA rule index must be in [1, 8]");
    return kRules[index - 1];
}

DnaPlanes encode(const GrayImage& img, const RuleSet& rules) {
    for (const DnaRule& r : rules)
        if (r.index < 1 || r.index > 8 || DnaRule::table(r.index).to_base != r.to_base)
            throw std::invalid_argument("rule does not match the published table");

    DnaPlanes out;
    out.width = img.width;
    out.height = img.height;
    for (auto& plane : out.planes) plane.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) {
        const std::uint8_t px = img.pixels[i];
        for (int j = 0; j < 4; ++j) {
            const int dibit = (px >> (2 * j)) & 3;
            out.planes[j][i] = rules[j].encode(dibit);
        }
    }
    return out;
}

GrayImage decode(const DnaPlanes& planes, const RuleSet& rules) {
    for (const DnaRule& r : rules)
        if (r.index < 1 || r.index > 8 || DnaRule::table(r.index).to_base != r.to_base)
            throw std::invalid_argument("rule does not match the published table");

    GrayImage img(planes.width, planes.height);
    for (std::size_t i = 0; i < img.size(); ++i) {
        std::uint8_t px = 0;
        for (int j = 0; j < 4; ++j)
            px |= static_cast<std::uint8_t>(rules[j].decode(planes.planes[j][i]) << (2 * j));
        img.pixels[i] = px;
    }
    return img;
}

Base dna_xor(Base a, Base b) {
    return kXor[static_cast<int>(a)][static_cast<int>(b)];
}

DnaPlanes xor_planes(const DnaPlanes& a, const DnaPlanes& b) {
    if (a.width != b.width || a.height != b.height)
        throw DimensionError("DNA plane dimensions differ");
    DnaPlanes out;
    out.width = a.width;
    out.height = a.height;
    for (int j = 0; j < 4; ++j) {
        out.planes[j].resize(a.planes[j].size());
        for (std::size_t i = 0; i < a.planes[j].size(); ++i)
            out.planes[j][i] = dna_xor(a.planes[j][i], b.planes[j][i]);
    }
    return out;
}

}  // namespace dna
}  // namespace qmedshield
