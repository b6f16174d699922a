#include "bmo/trace.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bmo {

namespace {

const char* header2 = "iter,agent_id,x,y,uv,fitness,lmate_id";
const char* header3 = "iter,agent_id,x,y,z,uv,fitness,lmate_id";

void append_double(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

struct RowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_double(const std::string& tok, int row, int col) {
    double v;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        throw RowError("trace row " + std::to_string(row) + ", column " + std::to_string(col) +
                       ": not a number: '" + tok + "'");
    return v;
}

int parse_int(const std::string& tok, int row, int col) {
    int v;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        throw RowError("trace row " + std::to_string(row) + ", column " + std::to_string(col) +
                       ": not an integer: '" + tok + "'");
    return v;
}

}  // namespace

std::string trace_to_string(const std::vector<TraceRecord>& records, int dims) {
    if (dims != 2 && dims != 3) throw std::invalid_argument("trace: dims must be 2 or 3");
    std::string out = dims == 2 ? header2 : header3;
    out += '\n';
    for (const TraceRecord& r : records) {
        out += std::to_string(r.iter);
        out += ',';
        out += std::to_string(r.agent_id);
        out += ',';
        append_double(out, r.position.x);
        out += ',';
        append_double(out, r.position.y);
        if (dims == 3) {
            out += ',';
            append_double(out, r.position.z);
        }
        out += ',';
        append_double(out, r.uv);
        out += ',';
        append_double(out, r.fitness);
        out += ',';
        out += std::to_string(r.lmate_id);
        out += '\n';
    }
    return out;
}

void write_trace(const std::vector<TraceRecord>& records, const std::string& path, int dims) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open trace file for writing: " + path);
    out << trace_to_string(records, dims);
    if (!out) throw std::runtime_error("short write: " + path);
}

std::vector<TraceRecord> trace_from_string(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("trace: empty input, missing header");
    int dims;
    if (line == header2) {
        dims = 2;
    } else if (line == header3) {
        dims = 3;
    } else {
        throw std::runtime_error("trace: header mismatch, got '" + line + "', expected '" + header2 +
                                 "' or '" + header3 + "'");
    }
    const int ncols = dims == 2 ? 7 : 8;

    std::vector<TraceRecord> records;
    int row = 0;
    int last_iter = -1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        std::vector<std::string> toks;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            toks.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (static_cast<int>(toks.size()) != ncols)
            throw RowError("trace row " + std::to_string(row) + ": expected " + std::to_string(ncols) +
                           " columns, got " + std::to_string(toks.size()));
        TraceRecord r;
        int col = 0;
        r.iter = parse_int(toks[col], row, col + 1); ++col;
        r.agent_id = parse_int(toks[col], row, col + 1); ++col;
        r.position.x = parse_double(toks[col], row, col + 1); ++col;
        r.position.y = parse_double(toks[col], row, col + 1); ++col;
        if (dims == 3) { r.position.z = parse_double(toks[col], row, col + 1); ++col; }
        r.uv = parse_double(toks[col], row, col + 1); ++col;
        r.fitness = parse_double(toks[col], row, col + 1); ++col;
        r.lmate_id = parse_int(toks[col], row, col + 1);
        if (r.iter < last_iter)
            throw RowError("trace row " + std::to_string(row) + ": iter " + std::to_string(r.iter) +
                           " is not monotone");
        last_iter = r.iter;
        records.push_back(r);
    }
    return records;
}

std::vector<TraceRecord> read_trace(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open trace file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return trace_from_string(ss.str());
}

}  // namespace bmo
