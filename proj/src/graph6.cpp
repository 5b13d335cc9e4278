#include "irrt/graph6.hpp"

#include "irrt/error.hpp"

namespace irrt {

namespace {

constexpr int kBias = 63;

std::size_t bit_count(int n) { return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2; }

}  // namespace

std::string to_string(Graph6ErrorKind kind) {
    switch (kind) {
        case Graph6ErrorKind::empty_record: return "empty-record";
        case Graph6ErrorKind::bad_header: return "bad-header";
        case Graph6ErrorKind::invalid_byte: return "invalid-byte";
        case Graph6ErrorKind::truncated: return "truncated";
        case Graph6ErrorKind::trailing_garbage: return "trailing-garbage";
        case Graph6ErrorKind::nonzero_padding: return "nonzero-padding";
    }
    return "invalid-byte";
}

Graph6Error::Graph6Error(Graph6ErrorKind kind, std::size_t position, const std::string& detail)
    : std::runtime_error("graph6 " + to_string(kind) + " at byte " + std::to_string(position) + ": " + detail),
      kind_(kind),
      position_(position),
      detail_(detail) {}

Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw Graph6Error(Graph6ErrorKind::empty_record, 0, "record is empty");
    const int header = static_cast<unsigned char>(line[0]);
    if (header < kBias || header > kBias + kMaxGraph6Order) {
        const std::string why = header == 126 ? "multi-byte order headers (n > 62) are not supported"
                                              : "header byte " + std::to_string(header) + " outside [63, 125]";
        throw Graph6Error(Graph6ErrorKind::bad_header, 0, why);
    }
    const int n = header - kBias;
    const std::size_t bits = bit_count(n);
    const std::size_t data_bytes = (bits + 5) / 6;

    for (std::size_t i = 1; i < line.size() && i <= data_bytes; ++i) {
        const int c = static_cast<unsigned char>(line[i]);
        if (c < kBias || c > kBias + 63) {
            throw Graph6Error(Graph6ErrorKind::invalid_byte, i, "byte " + std::to_string(c) + " outside [63, 126]");
        }
    }
    if (line.size() < data_bytes + 1) {
        throw Graph6Error(Graph6ErrorKind::truncated, line.size(),
                          "expected " + std::to_string(data_bytes) + " data bytes for n = " + std::to_string(n) +
                              ", found " + std::to_string(line.size() - 1));
    }
    if (line.size() > data_bytes + 1) {
        throw Graph6Error(Graph6ErrorKind::trailing_garbage, data_bytes + 1,
                          std::to_string(line.size() - data_bytes - 1) + " unexpected bytes after the bit region");
    }

    std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = static_cast<unsigned char>(line[1 + k / 6]) - kBias;
            if (byte & (1 << (5 - k % 6))) {
                rows[static_cast<std::size_t>(i)] |= bit(j);
                rows[static_cast<std::size_t>(j)] |= bit(i);
            }
        }
    }
    if (bits % 6 != 0) {
        const int last = static_cast<unsigned char>(line[data_bytes]) - kBias;
        const int pad_mask = (1 << (6 - bits % 6)) - 1;
        if (last & pad_mask) throw Graph6Error(Graph6ErrorKind::nonzero_padding, data_bytes, "padding bits are not zero");
    }
    return Graph::from_rows(rows);
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kMaxGraph6Order) throw LimitError("graph6 output supports n <= 62, got " + std::to_string(n));
    const std::size_t bits = bit_count(n);
    std::string out(1 + (bits + 5) / 6, static_cast<char>(kBias));
    out[0] = static_cast<char>(kBias + n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (g.has_edge(i, j)) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
        }
    }
    return out;
}

std::vector<Graph> read_graph6(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    long number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const Graph6Error& e) {
            throw Graph6Error(e.kind(), e.position(), "line " + std::to_string(number) + ": " + e.detail());
        }
    }
    return out;
}

}  // namespace irrt
