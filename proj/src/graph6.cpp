#include "graph6.hpp"

namespace specgap {

namespace {

void append_bits(std::string& out, std::vector<bool>& bits) {
  while (bits.size() % 6 != 0) bits.push_back(false);
  for (size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (int k = 0; k < 6; ++k) v = (v << 1) | (bits[i + k] ? 1 : 0);
    out.push_back(char(v + 63));
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  if (g.n > 258047) fail(Err::InvalidArgument, "graph6 supports n <= 258047 here");
  std::string out;
  if (g.n <= 62) {
    out.push_back(char(g.n + 63));
  } else {
    out.push_back(char(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(char(((g.n >> shift) & 63) + 63));
  }
  std::vector<bool> bits;
  bits.reserve(size_t(g.n) * (g.n - 1) / 2);
  for (int v = 1; v < g.n; ++v)
    for (int u = 0; u < v; ++u) bits.push_back(has_edge(g, u, v));
  append_bits(out, bits);
  return out;
}

Graph from_graph6(const std::string& text) {
  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) fail(Err::ParseError, "graph6 string truncated");
    int c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) fail(Err::ParseError, "graph6 byte out of range");
    return c;
  };
  int n;
  int c0 = next();
  if (c0 == 126) {
    int c1 = next();
    if (c1 == 126) fail(Err::ParseError, "graph6 order beyond supported range");
    n = ((c1 - 63) << 12) | ((next() - 63) << 6) | (next() - 63);
  } else {
    n = c0 - 63;
  }
  size_t nbits = size_t(n) * (n - 1) / 2;
  size_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos != nbytes)
    fail(Err::ParseError, "graph6 body length mismatch for n=" + std::to_string(n));
  std::vector<Edge> edges;
  size_t bit = 0;
  int u = 0, v = 1;
  for (size_t i = 0; i < nbytes; ++i) {
    int byte = next() - 63;
    for (int k = 5; k >= 0 && bit < nbits; --k, ++bit) {
      if ((byte >> k) & 1) edges.emplace_back(u, v);
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
    // padding bits must be zero
    if (bit == nbits) {
      int pad = int((6 - (nbits % 6)) % 6);
      if (byte & ((1 << pad) - 1)) fail(Err::ParseError, "graph6 nonzero padding");
    }
  }
  return make_graph(n, std::move(edges));
}

}  // namespace specgap
