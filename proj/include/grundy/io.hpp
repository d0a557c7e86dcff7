// Copyright 2026 The grundy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "grundy/error.hpp"
#include "grundy/graph.hpp"

namespace grundy {

// graph6: N(n) followed by the upper triangle of the adjacency matrix in
// column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte,
// each byte offset by 63.

inline std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 0x3F)));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 0x3F)));
  }
  unsigned acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

inline Graph decode_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(">>graph6<<")) {
    text.remove_prefix(10);
    base = 10;
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError(base, "empty graph6 string");
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError(base + i, "byte outside graph6 range 63..126");
  }
  auto value = [&](std::size_t i) { return static_cast<std::size_t>(text[i]) - 63; };

  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = value(0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    if (text.size() < 8) throw ParseError(base + text.size(), "truncated 8-byte order field");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value(i);
    pos = 8;
  } else {
    if (text.size() < 4) throw ParseError(base + text.size(), "truncated 4-byte order field");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | value(i);
    pos = 4;
  }

  const std::size_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::size_t want = (bits + 5) / 6;
  if (text.size() - pos != want)
    throw ParseError(base + std::min(text.size(), pos + want),
                     "expected " + std::to_string(want) + " adjacency bytes for order " +
                         std::to_string(n) + ", found " + std::to_string(text.size() - pos));

  GraphBuilder b(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      std::size_t byte = pos + k / 6;
      if ((value(byte) >> (5 - k % 6)) & 1U) b.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    std::size_t pad = 6 - bits % 6;
    if (value(text.size() - 1) & ((std::size_t{1} << pad) - 1))
      throw ParseError(base + text.size() - 1, "nonzero padding bits");
  }
  return std::move(b).build();
}

/// Plain edge list: "n m" then m lines "u v", 0-based. '#' starts a comment.
inline std::string encode_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

namespace detail {

class EdgeListLexer {
 public:
  explicit EdgeListLexer(std::string_view text) : text_(text) {}

  bool next(std::size_t& out, std::size_t& offset) {
    skip();
    if (pos_ >= text_.size()) return false;
    offset = pos_;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), out);
    if (ec != std::errc() || (ptr < text_.data() + text_.size() && !std::isspace(*ptr) && *ptr != '#'))
      throw ParseError(pos_, "expected a non-negative integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return true;
  }

  std::size_t position() const { return pos_; }

 private:
  void skip() {
    while (pos_ < text_.size()) {
      if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Graph decode_edge_list(std::string_view text) {
  detail::EdgeListLexer lex(text);
  std::size_t n = 0, m = 0, off = 0;
  if (!lex.next(n, off)) throw ParseError(0, "missing vertex count");
  if (!lex.next(m, off)) throw ParseError(lex.position(), "missing edge count");
  GraphBuilder b(n);
  for (std::size_t e = 0; e < m; ++e) {
    std::size_t u = 0, v = 0, ou = 0, ov = 0;
    if (!lex.next(u, ou) || !lex.next(v, ov))
      throw ParseError(lex.position(), "expected " + std::to_string(m) + " edges, found " +
                                           std::to_string(e));
    if (u >= n || v >= n) throw ParseError(u >= n ? ou : ov, "endpoint out of range");
    if (u == v) throw ParseError(ou, "self-loop");
    b.add_edge(u, v);
  }
  std::size_t extra = 0;
  if (lex.next(extra, off)) throw ParseError(off, "trailing data after edge list");
  return std::move(b).build();
}

enum class GraphFormat { kAuto, kGraph6, kEdgeList };

/// Edge lists start with a line of two integers; anything else is graph6.
inline GraphFormat sniff_format(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '#')) {
    if (text[i] == '#')
      while (i < text.size() && text[i] != '\n') ++i;
    else
      ++i;
  }
  std::size_t eol = text.find('\n', i);
  std::string_view line = text.substr(i, eol == std::string_view::npos ? text.size() - i : eol - i);
  std::istringstream is{std::string(line)};
  long long a = 0, b = 0;
  std::string rest;
  if (is >> a >> b && !(is >> rest)) return GraphFormat::kEdgeList;
  return GraphFormat::kGraph6;
}

inline Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::kAuto) {
  if (format == GraphFormat::kAuto) format = sniff_format(text);
  if (format == GraphFormat::kEdgeList) return decode_edge_list(text);
  // graph6 files may hold several graphs; only the first line is read.
  std::size_t start = 0;
  while (start < text.size() && (text[start] == '\n' || text[start] == '\r')) ++start;
  std::size_t eol = text.find('\n', start);
  return decode_graph6(text.substr(start, eol == std::string_view::npos ? text.size() - start : eol - start));
}

inline Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string ext = path.extension().string();
  GraphFormat fmt = GraphFormat::kAuto;
  if (ext == ".g6" || ext == ".graph6") fmt = GraphFormat::kGraph6;
  if (ext == ".el" || ext == ".edges" || ext == ".txt") fmt = GraphFormat::kEdgeList;
  return parse_graph(buf.str(), fmt);
}

}  // namespace grundy
