#include "trd/graph6.hpp"

#include <istream>
#include <stdexcept>

namespace trd {

namespace {

[[noreturn]] void malformed(const std::string& why) {
  throw std::invalid_argument("malformed graph6: " + why);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) malformed("empty input");
  for (char c : text)
    if (c < 63 || c > 126) malformed("byte out of printable range");

  size_t pos = 0;
  long n;
  if (text[0] == 126) {
    // extended order header: '~' then three 6-bit digits
    if (text.size() < 4) malformed("truncated order header");
    if (text[1] == 126) malformed("order too large");
    n = ((long)(text[1] - 63) << 12) | ((long)(text[2] - 63) << 6) |
        (long)(text[3] - 63);
    pos = 4;
  } else {
    n = text[0] - 63;
    pos = 1;
  }
  if (n < 1 || n > kMaxVertices)
    malformed("order " + std::to_string(n) + " outside 1..64");

  long bits = n * (n - 1) / 2;
  size_t body = (bits + 5) / 6;
  if (text.size() - pos != body) malformed("body length mismatch");

  Graph g((int)n);
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.connect(i, j);
    }
  }
  // padding bits of the last group must be zero
  for (; k < (long)body * 6; ++k) {
    int byte = text[pos + k / 6] - 63;
    if ((byte >> (5 - k % 6)) & 1) malformed("nonzero padding bits");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back((char)(n + 63));
  } else {
    out.push_back((char)126);
    out.push_back((char)(((n >> 12) & 63) + 63));
    out.push_back((char)(((n >> 6) & 63) + 63));
    out.push_back((char)((n & 63) + 63));
  }
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back((char)(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back((char)((acc << (6 - nbits)) + 63));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace trd
