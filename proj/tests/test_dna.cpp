#include <doctest.h>

#include <random>

#include "qmedshield/dna.hpp"
#include "oracles.hpp"

using namespace qmedshield;
using namespace qmedshield::dna;

namespace {

RuleSet same_rule(int index) {
    const DnaRule& r = DnaRule::table(index);
    return {r, r, r, r};
}

RuleSet random_rules(std::mt19937& rng) {
    RuleSet rs;
    for (auto& r : rs) r = DnaRule::table(1 + int(rng() % 8));
    return rs;
}

// rule i assigns A=00, G=01, C=10, T=11
int rule_i_code(Base b) {
    switch (b) {
        case Base::A: return 0;
        case Base::G: return 1;
        case Base::C: return 2;
        case Base::T: return 3;
    }
    return -1;
}

}  // namespace

TEST_CASE("published rule columns spot checks") {
    // rule i: 00->A, 01->G, 10->C, 11->T
    CHECK(DnaRule::table(1).encode(0b00) == Base::A);
    CHECK(DnaRule::table(1).encode(0b01) == Base::G);
    CHECK(DnaRule::table(1).encode(0b10) == Base::C);
    CHECK(DnaRule::table(1).encode(0b11) == Base::T);
    // rule ii maps 00 to C; rule iii maps 00 to T
    CHECK(DnaRule::table(2).encode(0b00) == Base::C);
    CHECK(DnaRule::table(3).encode(0b00) == Base::T);
    CHECK_THROWS_AS(DnaRule::table(0), std::invalid_argument);
    CHECK_THROWS_AS(DnaRule::table(9), std::invalid_argument);
}

TEST_CASE("every rule is a bijection") {
    for (int idx = 1; idx <= 8; ++idx) {
        const DnaRule& r = DnaRule::table(idx);
        bool seen[4] = {false, false, false, false};
        for (int d = 0; d < 4; ++d) {
            const int b = int(r.encode(d));
            CHECK_FALSE(seen[b]);
            seen[b] = true;
            CHECK(r.decode(r.encode(d)) == d);
        }
    }
}

TEST_CASE("byte 27 under rule i lands as A,G,C,T on planes 3..0") {
    GrayImage img(1, 1, 0b00011011);  // dibits 00 01 10 11 from MSB
    const auto planes = encode(img, same_rule(1));
    CHECK(planes.planes[3][0] == Base::A);
    CHECK(planes.planes[2][0] == Base::G);
    CHECK(planes.planes[1][0] == Base::C);
    CHECK(planes.planes[0][0] == Base::T);
}

TEST_CASE("byte 0 under rule ii is all C") {
    GrayImage img(2, 2, 0);
    const auto planes = encode(img, same_rule(2));
    for (const auto& plane : planes.planes)
        for (Base b : plane) CHECK(b == Base::C);
}

TEST_CASE("all-A planes under rule i and all-T planes under rule iii decode to byte 0") {
    DnaPlanes planes;
    planes.width = planes.height = 2;
    for (auto& p : planes.planes) p.assign(4, Base::A);
    CHECK(decode(planes, same_rule(1)).pixels == std::vector<std::uint8_t>(4, 0));
    for (auto& p : planes.planes) p.assign(4, Base::T);
    CHECK(decode(planes, same_rule(3)).pixels == std::vector<std::uint8_t>(4, 0));
}

TEST_CASE("exhaustive round trip: 256 bytes x 8 uniform rules") {
    for (int idx = 1; idx <= 8; ++idx) {
        const RuleSet rules = same_rule(idx);
        GrayImage img(16, 16);
        for (int v = 0; v < 256; ++v) img.pixels[v] = std::uint8_t(v);
        CHECK(decode(encode(img, rules), rules) == img);
    }
}

TEST_CASE("round trip under random mixed rule sets") {
    std::mt19937 rng(4);
    const auto img = oracle::random_image(31, 17, 99);
    for (int t = 0; t < 30; ++t) {
        const RuleSet rules = random_rules(rng);
        CHECK(decode(encode(img, rules), rules) == img);
    }
}

TEST_CASE("dna_xor matches the published truth table") {
    // spot values straight from the table
    CHECK(dna_xor(Base::T, Base::G) == Base::C);
    CHECK(dna_xor(Base::T, Base::T) == Base::A);
    CHECK(dna_xor(Base::C, Base::G) == Base::T);
    // row A is the identity: A G T C against columns A G T C
    for (Base b : {Base::A, Base::C, Base::G, Base::T}) CHECK(dna_xor(Base::A, b) == b);
}

TEST_CASE("dna_xor is commutative, has identity A, and is self-inverse") {
    for (Base a : {Base::A, Base::C, Base::G, Base::T}) {
        CHECK(dna_xor(a, a) == Base::A);
        for (Base b : {Base::A, Base::C, Base::G, Base::T}) {
            CHECK(dna_xor(a, b) == dna_xor(b, a));
            CHECK(dna_xor(dna_xor(a, b), b) == a);
        }
    }
}

TEST_CASE("dna_xor equals bitwise XOR under rule-i encoding for all 16 pairs") {
    const Base bases[] = {Base::A, Base::C, Base::G, Base::T};
    for (Base a : bases) {
        for (Base b : bases) {
            const int expected = rule_i_code(a) ^ rule_i_code(b);
            CHECK(rule_i_code(dna_xor(a, b)) == expected);
        }
    }
}

TEST_CASE("xor_planes identities and involution") {
    std::mt19937 rng(8);
    const auto img_a = oracle::random_image(12, 9, 21);
    const auto img_b = oracle::random_image(12, 9, 22);
    const RuleSet rules = random_rules(rng);
    const auto a = encode(img_a, rules);
    const auto b = encode(img_b, rules);

    DnaPlanes all_a;
    all_a.width = 12;
    all_a.height = 9;
    for (auto& p : all_a.planes) p.assign(12 * 9, Base::A);

    CHECK(xor_planes(a, all_a) == a);
    CHECK(xor_planes(a, a) == all_a);
    CHECK(xor_planes(xor_planes(a, b), b) == a);
}

TEST_CASE("xor_planes rejects mismatched shapes") {
    DnaPlanes a, b;
    a.width = a.height = 2;
    b.width = 2;
    b.height = 3;
    for (auto& p : a.planes) p.assign(4, Base::A);
    for (auto& p : b.planes) p.assign(6, Base::A);
    CHECK_THROWS_AS(xor_planes(a, b), DimensionError);
}

TEST_CASE("composite confusion step is invertible given both rule sets") {
    std::mt19937 rng(15);
    const auto img = oracle::random_image(10, 10, 55);
    const auto key_img = oracle::random_image(10, 10, 56);
    for (int t = 0; t < 10; ++t) {
        const RuleSet data_rules = random_rules(rng);
        const RuleSet key_rules = random_rules(rng);
        const RuleSet out_rules = random_rules(rng);
        const auto dk = encode(key_img, key_rules);
        const auto cipher = decode(xor_planes(encode(img, data_rules), dk), out_rules);
        const auto restored = decode(xor_planes(encode(cipher, out_rules), dk), data_rules);
        CHECK(restored == img);
    }
}

TEST_CASE("base characters round trip") {
    for (Base b : {Base::A, Base::C, Base::G, Base::T}) CHECK(base_from_char(base_to_char(b)) == b);
    CHECK_THROWS_AS(base_from_char('X'), std::invalid_argument);
}
