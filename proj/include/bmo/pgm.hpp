#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmo {

/// Grayscale image in netpbm PGM form (P2 ascii or P5 raw, maxval <= 65535).
struct PgmImage {
    int width = 0;
    int height = 0;
    int maxval = 255;
    std::vector<std::uint16_t> pixels;  // row-major, row 0 at the top

    std::uint16_t at(int row, int col) const { return pixels[static_cast<std::size_t>(row) * width + col]; }
};

/// Parse failure with the byte offset where the input stopped making sense.
struct PgmError : std::runtime_error {
    std::size_t byte_offset;
    PgmError(std::size_t offset, const std::string& what);
};

PgmImage load_pgm(const std::string& path);
PgmImage parse_pgm(const std::vector<unsigned char>& bytes);

/// Writes P5 (raw); 16-bit samples are big-endian per the netpbm spec.
void save_pgm(const PgmImage& img, const std::string& path);

}  // namespace bmo
