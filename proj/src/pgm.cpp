#include "bmo/pgm.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace bmo {

PgmError::PgmError(std::size_t offset, const std::string& what)
    : std::runtime_error("pgm parse error at byte " + std::to_string(offset) + ": " + what),
      byte_offset(offset) {}

namespace {

struct Cursor {
    const std::vector<unsigned char>& b;
    std::size_t pos = 0;

    bool eof() const { return pos >= b.size(); }
    unsigned char peek() const { return b[pos]; }

    void skip_ws_and_comments() {
        while (!eof()) {
            if (std::isspace(peek())) {
                ++pos;
            } else if (peek() == '#') {
                while (!eof() && peek() != '\n') ++pos;
            } else {
                break;
            }
        }
    }

    long read_int(const char* what) {
        skip_ws_and_comments();
        if (eof()) throw PgmError(pos, std::string("unexpected end of file reading ") + what);
        if (!std::isdigit(peek()))
            throw PgmError(pos, std::string("expected digit for ") + what + ", got byte 0x" +
                                    std::to_string(static_cast<int>(peek())));
        long v = 0;
        while (!eof() && std::isdigit(peek())) {
            v = v * 10 + (peek() - '0');
            if (v > 1'000'000'000) throw PgmError(pos, std::string(what) + " out of range");
            ++pos;
        }
        return v;
    }
};

}  // namespace

PgmImage parse_pgm(const std::vector<unsigned char>& bytes) {
    Cursor c{bytes};
    if (bytes.size() < 2) throw PgmError(0, "file too short for a magic number");
    const char m0 = static_cast<char>(bytes[0]);
    const char m1 = static_cast<char>(bytes[1]);
    if (m0 != 'P' || (m1 != '2' && m1 != '5')) {
        throw PgmError(0, std::string("magic number '") + m0 + m1 + "' is not a grayscale PGM (P2/P5)");
    }
    const bool raw = m1 == '5';
    c.pos = 2;

    PgmImage img;
    img.width = static_cast<int>(c.read_int("width"));
    img.height = static_cast<int>(c.read_int("height"));
    img.maxval = static_cast<int>(c.read_int("maxval"));
    if (img.width <= 0 || img.height <= 0) throw PgmError(c.pos, "non-positive image dimensions");
    if (img.maxval <= 0 || img.maxval > 65535) throw PgmError(c.pos, "maxval must be in [1, 65535]");

    const std::size_t count = static_cast<std::size_t>(img.width) * img.height;
    img.pixels.resize(count);

    if (raw) {
        if (c.eof() || !std::isspace(c.peek()))
            throw PgmError(c.pos, "expected single whitespace before raw samples");
        ++c.pos;
        const int bpp = img.maxval > 255 ? 2 : 1;
        if (bytes.size() - c.pos < count * bpp)
            throw PgmError(bytes.size(), "truncated raw sample data (need " +
                                             std::to_string(count * bpp) + " bytes after header)");
        for (std::size_t i = 0; i < count; ++i) {
            std::uint16_t v;
            if (bpp == 1) {
                v = bytes[c.pos++];
            } else {
                v = static_cast<std::uint16_t>((bytes[c.pos] << 8) | bytes[c.pos + 1]);
                c.pos += 2;
            }
            if (v > img.maxval) throw PgmError(c.pos - bpp, "sample exceeds maxval");
            img.pixels[i] = v;
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const long v = c.read_int("sample");
            if (v > img.maxval) throw PgmError(c.pos, "sample exceeds maxval");
            img.pixels[i] = static_cast<std::uint16_t>(v);
        }
    }
    return img;
}

PgmImage load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open PGM file: " + path);
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_pgm(bytes);
}

void save_pgm(const PgmImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "P5\n" << img.width << " " << img.height << "\n" << img.maxval << "\n";
    const int bpp = img.maxval > 255 ? 2 : 1;
    for (std::uint16_t v : img.pixels) {
        if (bpp == 2) {
            out.put(static_cast<char>(v >> 8));
            out.put(static_cast<char>(v & 0xff));
        } else {
            out.put(static_cast<char>(v & 0xff));
        }
    }
    if (!out) throw std::runtime_error("short write: " + path);
}

}  // namespace bmo
