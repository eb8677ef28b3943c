#pragma once

#include <filesystem>

#include "qmedshield/image.hpp"

namespace qmedshield::pgm {

// Reads a binary PGM (P5) file with maxval 255.
// Throws IoError when the file cannot be read, FormatError for anything that
// is not an 8-bit P5 image.
GrayImage read(const std::filesystem::path& path);

// Writes a binary PGM (P5) file; output re-parses to the identical pixels.
// Throws IoError on write failure.
void write(const std::filesystem::path& path, const GrayImage& img);

}  // namespace qmedshield::pgm
