#include "scdeck/graph6.hpp"

#include <fstream>
#include <istream>

namespace scdeck {

// graph6 layout: N(n) followed by R(x), where x is the upper triangle of the
// adjacency matrix as a bit vector in column-major order
// (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),... padded with zeros to a multiple of
// six, each 6-bit group stored big-endian in one byte offset by 63.
// N(n) is the single byte n+63 for n <= 62, or 126 followed by the 18-bit
// big-endian value of n in three bytes for larger n.

namespace {

constexpr int kCharLo = 63;
constexpr int kCharHi = 126;

int data_value(std::string_view line, std::size_t at) {
  const unsigned char c = static_cast<unsigned char>(line[at]);
  if (c < kCharLo || c > kCharHi)
    throw G6DecodeError("character outside graph6 range [63,126]", at);
  return c - kCharLo;
}

}  // namespace

Graph g6_decode(std::string_view line) {
  if (line.empty()) throw G6DecodeError("empty line", 0);

  std::size_t pos = 0;
  long n;
  if (data_value(line, 0) < 63) {
    n = data_value(line, 0);
    pos = 1;
  } else {
    // 126-prefixed extended size form. A second 126 would start the 8-byte
    // form, whose smallest value already exceeds the 64-vertex cap.
    if (line.size() < 4)
      throw G6DecodeError("truncated extended size form", line.size());
    if (static_cast<unsigned char>(line[1]) == kCharHi)
      throw G6DecodeError("vertex count above 64 unsupported", 1);
    n = (static_cast<long>(data_value(line, 1)) << 12) |
        (static_cast<long>(data_value(line, 2)) << 6) |
        static_cast<long>(data_value(line, 3));
    pos = 4;
  }
  if (n < 1) throw G6DecodeError("vertex count must be at least 1", 0);
  if (n > Graph::kMaxVertices)
    throw G6DecodeError("vertex count above 64 unsupported", 0);

  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (line.size() < pos + nbytes)
    throw G6DecodeError("line shorter than the encoded bit count", line.size());
  if (line.size() > pos + nbytes)
    throw G6DecodeError("trailing bytes after the encoded graph", pos + nbytes);

  Graph g(static_cast<int>(n));
  std::size_t bit = 0;
  int i = 0, j = 1;
  for (std::size_t b = 0; b < nbytes; ++b) {
    const int v = data_value(line, pos + b);
    for (int k = 5; k >= 0; --k, ++bit) {
      const bool set = (v >> k) & 1;
      if (bit >= nbits) {
        if (set)
          throw G6DecodeError("nonzero padding bits", pos + b);
        continue;
      }
      if (set) g.add_edge(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return g;
}

std::string g6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kCharLo));
  } else {
    out.push_back(static_cast<char>(kCharHi));
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kCharLo));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kCharLo));
    out.push_back(static_cast<char>((n & 0x3f) + kCharLo));
  }
  int acc = 0, nfill = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nfill == 6) {
        out.push_back(static_cast<char>(acc + kCharLo));
        acc = 0;
        nfill = 0;
      }
    }
  }
  if (nfill > 0)
    out.push_back(static_cast<char>((acc << (6 - nfill)) + kCharLo));
  return out;
}

std::vector<G6Record> read_g6_records(std::istream& in) {
  std::vector<G6Record> records;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_number == 1 && line.rfind(">>graph6<<", 0) == 0) {
      line = line.substr(10);
      if (line.empty()) continue;
    }
    if (line.empty())
      throw G6FileError("blank line in .g6 file", line_number);
    try {
      records.push_back({g6_decode(line), line_number});
    } catch (const G6DecodeError& e) {
      throw G6FileError(e.what(), line_number);
    }
  }
  return records;
}

std::vector<Graph> read_g6_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<Graph> graphs;
  for (auto& rec : read_g6_records(in)) graphs.push_back(std::move(rec.graph));
  return graphs;
}

void write_g6_file(const std::filesystem::path& path, std::span<const Graph> graphs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  for (const Graph& g : graphs) out << g6_encode(g) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace scdeck
