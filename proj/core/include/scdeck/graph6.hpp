#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scdeck/graph.hpp"

namespace scdeck {

/// Raised when a graph6 string cannot be decoded; byte_offset points at the
/// offending byte within the line.
class G6DecodeError : public std::runtime_error {
 public:
  G6DecodeError(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Raised on malformed .g6 file contents; carries the 1-based line number.
class G6FileError : public std::runtime_error {
 public:
  G6FileError(const std::string& what, std::size_t line_number)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
        line_number_(line_number) {}

  std::size_t line_number() const { return line_number_; }

 private:
  std::size_t line_number_;
};

/// Decodes one graph6 line (without trailing newline). Accepts the one-byte
/// size form for n <= 62 and the 126-prefixed three-byte form for 63 and 64.
Graph g6_decode(std::string_view line);

/// Encodes a graph to graph6; short size form for n <= 62, extended form
/// above. Padding bits are zero, so this is the exact inverse of g6_decode.
std::string g6_encode(const Graph& g);

struct G6Record {
  Graph graph;
  std::size_t line_number;  // 1-based position in the file
};

/// Reads a .g6 stream: one graph per LF-terminated line, an optional leading
/// ">>graph6<<" header line is skipped. Blank lines are rejected.
std::vector<G6Record> read_g6_records(std::istream& in);

std::vector<Graph> read_g6_file(const std::filesystem::path& path);

/// Writes one graph6 string per line, LF line endings, no header.
void write_g6_file(const std::filesystem::path& path, std::span<const Graph> graphs);

}  // namespace scdeck
