#include "nplab/graph6.hpp"

#include <cstdint>
#include <vector>

#include "nplab/error.hpp"

namespace nplab {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;
constexpr int kMaxByte = 126;

std::uint64_t pair_bits(std::uint64_t n) { return n * (n - 1) / 2; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    base = kHeader.size();
    text.remove_prefix(kHeader.size());
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) {
    throw ParseError("empty graph6 record", base);
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > kMaxByte) {
      throw ParseError("byte " + std::to_string(c) + " outside graph6 range 63..126", base + i);
    }
  }

  auto digit = [&](std::size_t i) -> std::uint64_t {
    return static_cast<std::uint64_t>(static_cast<unsigned char>(text[i]) - kBias);
  };

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (digit(0) < 63) {
    n = digit(0);
    pos = 1;
  } else {
    std::size_t width = 3;
    pos = 1;
    if (text.size() > 1 && digit(1) == 63) {
      width = 6;
      pos = 2;
    }
    if (text.size() < pos + width) {
      throw ParseError("truncated graph6 length prefix", base + text.size());
    }
    for (std::size_t i = 0; i < width; ++i) n = (n << 6) | digit(pos + i);
    pos += width;
  }
  if (n == 0) {
    throw ParseError("graph6 order must be at least 1", base);
  }

  const std::uint64_t bits = pair_bits(n);
  const std::uint64_t need = (bits + 5) / 6;
  const std::uint64_t have = text.size() - pos;
  if (have < need) {
    throw ParseError("graph6 data too short: expected " + std::to_string(need) + " bytes, got " +
                         std::to_string(have),
                     base + text.size());
  }
  if (have > need) {
    throw ParseError("unexpected trailing graph6 data", base + pos + need);
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      const std::uint64_t byte = digit(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1U) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  if (need > 0 && bits % 6 != 0) {
    const std::uint64_t pad_mask = (std::uint64_t{1} << (6 - bits % 6)) - 1;
    if (digit(pos + need - 1) & pad_mask) {
      throw ParseError("nonzero graph6 padding bits", base + pos + need - 1);
    }
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(kMaxByte));
    int width = 3;
    if (n > 258047) {
      out.push_back(static_cast<char>(kMaxByte));
      width = 6;
    }
    for (int i = width - 1; i >= 0; --i) {
      out.push_back(static_cast<char>(((n >> (6 * i)) & 63U) + kBias));
    }
  }

  unsigned acc = 0;
  int filled = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  }
  return out;
}

}  // namespace nplab
