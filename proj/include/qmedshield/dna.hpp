#pragma once

#include <array>

#include "qmedshield/image.hpp"

namespace qmedshield::dna {

// One of the 8 dibit <-> base encoding rules.
struct DnaRule {
    int index = 1;                     // 1..8 (printed as i..viii)
    std::array<Base, 4> to_base{};     // dibit value -> base

    Base encode(int dibit) const { return to_base[dibit & 3]; }
    int decode(Base b) const;

    // Throws std::invalid_argument for an index outside [1,8].
    static const DnaRule& table(int index);
};

using RuleSet = std::array<DnaRule, 4>;  // one rule per dibit plane

// Splits each pixel byte into dibits (plane 3 = bits 7..6, ..., plane 0 =
// bits 1..0) and encodes plane j under rules[j].
DnaPlanes encode(const GrayImage& img, const RuleSet& rules);

// Exact inverse of encode under the same rules.
GrayImage decode(const DnaPlanes& planes, const RuleSet& rules);

// Base-level XOR: commutative, identity A, every element self-inverse.
Base dna_xor(Base a, Base b);

// Element-wise dna_xor per plane; self-inverse in the second argument.
// Throws DimensionError on shape mismatch.
DnaPlanes xor_planes(const DnaPlanes& a, const DnaPlanes& b);

}  // namespace qmedshield::dna
