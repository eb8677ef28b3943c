#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qmedshield/errors.hpp"

namespace qmedshield {

// 8-bit grayscale image, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {
        if (w < 1 || h < 1) throw DimensionError("image dimensions must be at least 1x1");
    }

    std::size_t size() const { return pixels.size(); }
    std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }

    bool same_shape(const GrayImage& o) const { return width == o.width && height == o.height; }
    bool operator==(const GrayImage&) const = default;
};

// Byte-valued key material with image shape (K_X, K_Y, K_Z, K_H).
struct KeyMatrix {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bytes;

    KeyMatrix() = default;
    KeyMatrix(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), bytes(static_cast<std::size_t>(w) * h, fill) {
        if (w < 1 || h < 1) throw DimensionError("key matrix dimensions must be at least 1x1");
    }

    std::uint8_t at(int x, int y) const { return bytes[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return bytes[static_cast<std::size_t>(y) * width + x]; }

    GrayImage as_image() const {
        GrayImage img(width, height);
        img.pixels = bytes;
        return img;
    }

    bool operator==(const KeyMatrix&) const = default;
};

// The 8 binary planes of a GrayImage, plane 0 = least significant bit.
struct BitPlanes {
    int width = 0;
    int height = 0;
    std::array<std::vector<std::uint8_t>, 8> planes;  // entries in {0,1}

    bool operator==(const BitPlanes&) const = default;
};

// DNA bases in the canonical serialization order.
enum class Base : std::uint8_t { A = 0, C = 1, G = 2, T = 3 };

char base_to_char(Base b);
Base base_from_char(char c);

// Four per-dibit planes of bases; plane 0 holds the least significant dibit
// (bits 1..0), plane 3 the most significant (bits 7..6).
struct DnaPlanes {
    int width = 0;
    int height = 0;
    std::array<std::vector<Base>, 4> planes;

    bool operator==(const DnaPlanes&) const = default;
};

// A bijection on {0..7} describing how bit planes move: output plane j is
// input plane perm[j].
using PlanePermutation = std::array<int, 8>;

}  // namespace qmedshield
