#include "qmedshield/pgm.hpp"

#include <cctype>
#include <fstream>
#include <string>

namespace qmedshield::pgm {

namespace {

// Reads the next whitespace-delimited token, skipping '#' comment lines.
std::string next_token(std::istream& in) {
    std::string tok;
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    while (c != EOF && !std::isspace(c)) {
        tok.push_back(static_cast<char>(c));
        c = in.get();
    }
    return tok;
}

long parse_header_int(std::istream& in, const char* what) {
    const std::string tok = next_token(in);
    if (tok.empty()) throw FormatError(std::string("truncated PGM header: missing ") + what);
    try {
        std::size_t pos = 0;
        const long v = std::stol(tok, &pos);
        if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw FormatError(std::string("invalid PGM header value for ") + what + ": " + tok);
    }
}

}  // namespace

GrayImage read(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());

    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (in.gcount() != 2 || magic[0] != 'P' || magic[1] != '5')
        throw FormatError(path.string() + ": not a binary PGM (P5) file");

    const long width = parse_header_int(in, "width");
    const long height = parse_header_int(in, "height");
    const long maxval = parse_header_int(in, "maxval");
    if (width < 1 || height < 1)
        throw FormatError(path.string() + ": invalid dimensions");
    if (maxval != 255)
        throw FormatError(path.string() + ": unsupported maxval " + std::to_string(maxval) +
                          " (only 8-bit images are supported)");

    GrayImage img(static_cast<int>(width), static_cast<int>(height));
    in.read(reinterpret_cast<char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.pixels.size()))
        throw FormatError(path.string() + ": truncated pixel data");
    return img;
}

void write(const std::filesystem::path& path, const GrayImage& img) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace qmedshield::pgm
