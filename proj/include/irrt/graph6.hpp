#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "irrt/graph.hpp"

namespace irrt {

/// Largest order representable with the one-byte graph6 header.
inline constexpr int kMaxGraph6Order = 62;

enum class Graph6ErrorKind {
    empty_record,
    bad_header,
    invalid_byte,
    truncated,
    trailing_garbage,
    nonzero_padding,
};

std::string to_string(Graph6ErrorKind kind);

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(Graph6ErrorKind kind, std::size_t position, const std::string& detail);

    Graph6ErrorKind kind() const { return kind_; }
    /// Zero-based byte offset within the record.
    std::size_t position() const { return position_; }
    const std::string& detail() const { return detail_; }

private:
    Graph6ErrorKind kind_;
    std::size_t position_;
    std::string detail_;
};

Graph parse_graph6(std::string_view line);
/// Throws LimitError for graphs with more than 62 vertices.
std::string write_graph6(const Graph& g);

/// Reads one record per line; blank lines are skipped and a trailing '\r' is
/// dropped. Errors carry the 1-based line number in their message.
std::vector<Graph> read_graph6(std::istream& in);

}  // namespace irrt
