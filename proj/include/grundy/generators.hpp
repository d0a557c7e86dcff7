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

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "grundy/error.hpp"
#include "grundy/graph.hpp"
#include "grundy/modular_decomposition.hpp"
#include "grundy/recognition.hpp"

namespace grundy {

inline Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(v - 1, v);
  return std::move(b).build();
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::kInvalidParam, "cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

inline Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  b.make_clique(VertexSet::full(n));
  return std::move(b).build();
}

inline Graph empty_graph(std::size_t n) { return Graph(n); }

inline Graph petersen_graph() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return std::move(b).build();
}

/// Spider with legs S = 0..k-1, body K = k..2k-1 and head R = 2k.. wired as
/// a copy of `head`.
inline Graph spider_graph(std::size_t k, bool fat, const Graph& head = Graph()) {
  if (k < 2) throw Error(ErrorCode::kInvalidParam, "spider needs k >= 2");
  const std::size_t n = 2 * k + head.order();
  GraphBuilder b(n);
  for (Vertex i = 0; i < k; ++i)
    for (Vertex j = 0; j < k; ++j) {
      if (i < j) b.add_edge(k + i, k + j);
      if (fat ? i != j : i == j) b.add_edge(i, k + j);
    }
  for (Vertex r = 0; r < head.order(); ++r)
    for (Vertex j = 0; j < k; ++j) b.add_edge(2 * k + r, k + j);
  for (auto [u, v] : head.edges()) b.add_edge(2 * k + u, 2 * k + v);
  return std::move(b).build();
}

using Rng = std::mt19937_64;

namespace detail {

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

/// Splits n into `parts` positive sizes.
inline std::vector<std::size_t> random_composition(Rng& rng, std::size_t n, std::size_t parts) {
  std::vector<std::size_t> sizes(parts, 1);
  for (std::size_t extra = n - parts; extra > 0; --extra) ++sizes[uniform(rng, 0, parts - 1)];
  return sizes;
}

inline Graph random_cograph(Rng& rng, std::size_t n, bool join_next) {
  if (n == 1) return Graph(1);
  const std::size_t parts = uniform(rng, 2, std::min<std::size_t>(n, 4));
  std::vector<Graph> children;
  for (std::size_t s : random_composition(rng, n, parts))
    children.push_back(random_cograph(rng, s, !join_next));
  Graph shape = join_next ? complete_graph(parts) : empty_graph(parts);
  return substitute(shape, children);
}

}  // namespace detail

inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::kInvalidParam, "edge probability outside [0,1]");
  Rng rng(seed);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (detail::coin(rng, p)) b.add_edge(u, v);
  return std::move(b).build();
}

/// Random split graph: a clique of random size, a stable remainder, and
/// each clique-stable pair joined with probability 1/2.
inline Graph random_split_graph(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t k = n == 0 ? 0 : detail::uniform(rng, 0, n);
  GraphBuilder b(n);
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v) b.add_edge(u, v);
  for (Vertex s = k; s < n; ++s)
    for (Vertex c = 0; c < k; ++c)
      if (detail::coin(rng, 0.5)) b.add_edge(s, c);
  return std::move(b).build();
}

inline Graph random_cograph(std::size_t n, std::uint64_t seed) {
  if (n == 0) return Graph();
  Rng rng(seed);
  return detail::random_cograph(rng, n, detail::coin(rng, 0.5));
}

namespace detail {

inline Graph random_prime_split_quotient(Rng& rng, std::size_t stable, std::size_t clique) {
  // Retry until prime; small sizes make this quick.
  for (int attempt = 0; attempt < 1000; ++attempt) {
    GraphBuilder b(stable + clique);
    for (Vertex u = stable; u < stable + clique; ++u)
      for (Vertex v = u + 1; v < stable + clique; ++v) b.add_edge(u, v);
    for (Vertex s = 0; s < stable; ++s)
      for (Vertex c = stable; c < stable + clique; ++c)
        if (coin(rng, 0.5)) b.add_edge(s, c);
    Graph h = std::move(b).build();
    if (is_prime(h)) return h;
  }
  return spider_graph(2, false);
}

/// In-class graph on exactly n vertices, grown top-down as a random
/// decomposition tree whose neighborhood nodes follow the fat-extended
/// P4-laden rules.
inline Graph random_fat_extended(Rng& rng, std::size_t n, std::size_t max_quotient) {
  if (n == 1) return Graph(1);
  enum { kParallel, kSeries, kShape, kSpider, kSplit };
  std::vector<int> options{kParallel, kSeries};
  if (n >= 5) options.push_back(kShape);
  if (n >= 4) options.push_back(kSpider);
  if (n >= 4) options.push_back(kSplit);
  switch (options[uniform(rng, 0, options.size() - 1)]) {
    case kParallel:
    case kSeries: {
      const bool join_them = coin(rng, 0.5);
      const std::size_t parts = uniform(rng, 2, std::min<std::size_t>(n, 4));
      std::vector<Graph> children;
      for (std::size_t s : random_composition(rng, n, parts))
        children.push_back(random_fat_extended(rng, s, max_quotient));
      return substitute(join_them ? complete_graph(parts) : empty_graph(parts), children);
    }
    case kShape: {
      static const Graph shapes[3] = {
          path_graph(5), cycle_graph(5), complement(path_graph(5))};
      std::vector<Graph> children;
      for (std::size_t s : random_composition(rng, n, 5))
        children.push_back(random_fat_extended(rng, s, max_quotient));
      return substitute(shapes[uniform(rng, 0, 2)], children);
    }
    case kSpider: {
      // Singleton legs and body, optionally one 2-vertex module, and the
      // head module taking whatever is left.
      std::size_t k_max = std::min(n / 2, max_quotient);
      const std::size_t k = uniform(rng, 2, std::max<std::size_t>(2, k_max));
      const bool fat = coin(rng, 0.5);
      std::size_t left = n - 2 * k;
      const bool doubled = left >= 1 && coin(rng, 0.3);
      if (doubled) --left;
      Graph quotient = spider_graph(k, fat, left > 0 ? Graph(1) : Graph());
      std::vector<Graph> children(quotient.order(), Graph(1));
      if (doubled) {
        const Vertex at = uniform(rng, 0, 2 * k - 1);
        children[at] = coin(rng, 0.5) ? complete_graph(2) : empty_graph(2);
      }
      if (left > 0) children.back() = random_fat_extended(rng, left, max_quotient);
      return substitute(quotient, children);
    }
    case kSplit:
    default: {
      const std::size_t s = uniform(rng, 2, std::max<std::size_t>(2, std::min(n / 2, max_quotient)));
      const std::size_t c = uniform(rng, 2, std::max<std::size_t>(2, std::min(n - s, max_quotient)));
      Graph h = random_prime_split_quotient(rng, s, c);
      const std::size_t q = h.order();
      // Stable modules on the stable side, clique modules on the clique side,
      // and an arbitrary module at a clique vertex without stable neighbours.
      const SplitQuotientParts parts = refine_split(h, *is_split(h));
      std::vector<Graph> children(q, Graph(1));
      std::vector<std::size_t> size(q, 1);
      for (std::size_t left = n - q; left > 0; --left) ++size[uniform(rng, 0, q - 1)];
      for (Vertex v : parts.stable)
        if (size[v] > 1) children[v] = empty_graph(size[v]);
      for (Vertex v : parts.clique)
        if (size[v] > 1) children[v] = complete_graph(size[v]);
      for (Vertex v : parts.rest)
        if (size[v] > 1) children[v] = random_fat_extended(rng, size[v], max_quotient);
      return substitute(h, children);
    }
  }
}

}  // namespace detail

/// Random fat-extended P4-laden graph on n vertices. `max_quotient` bounds
/// spider legs and split sides.
inline Graph random_fat_extended(std::size_t n, std::uint64_t seed, std::size_t max_quotient = 6) {
  if (n == 0) return Graph();
  Rng rng(seed);
  return detail::random_fat_extended(rng, n, std::max<std::size_t>(2, max_quotient));
}

/// Generator descriptors, colon separated:
///   path:N  cycle:N  complete:N  empty:N  petersen
///   spider:thin|fat:K[:<descriptor for the head>]
///   random:N:P  random-split:N  random-cograph:N  random-fat:N
struct GeneratorSpec {
  std::string kind;
  std::size_t n = 0;
  std::size_t k = 0;
  double p = 0.5;
  bool fat = false;
  std::shared_ptr<GeneratorSpec> head;
};

namespace detail {

inline std::size_t parse_count(std::string_view s, std::string_view what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::kInvalidParam, "bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

}  // namespace detail

inline GeneratorSpec parse_generator(std::string_view text) {
  auto take = [&]() {
    const std::size_t c = text.find(':');
    std::string_view tok = text.substr(0, c);
    text = c == std::string_view::npos ? std::string_view{} : text.substr(c + 1);
    return tok;
  };
  GeneratorSpec spec;
  spec.kind = std::string(take());
  const std::string& kind = spec.kind;
  if (kind == "path" || kind == "cycle" || kind == "complete" || kind == "empty" ||
      kind == "random-split" || kind == "random-cograph" || kind == "random-fat") {
    spec.n = detail::parse_count(take(), "vertex count");
  } else if (kind == "random") {
    spec.n = detail::parse_count(take(), "vertex count");
    const std::string p(take());
    try {
      std::size_t used = 0;
      spec.p = std::stod(p, &used);
      if (used != p.size()) throw std::invalid_argument(p);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidParam, "bad edge probability '" + p + "'");
    }
  } else if (kind == "spider") {
    const std::string_view flavor = take();
    if (flavor != "thin" && flavor != "fat")
      throw Error(ErrorCode::kInvalidParam, "spider flavor must be thin or fat");
    spec.fat = flavor == "fat";
    spec.k = detail::parse_count(take(), "spider size");
    if (!text.empty()) spec.head = std::make_shared<GeneratorSpec>(parse_generator(text));
    text = {};
  } else if (kind != "petersen") {
    throw Error(ErrorCode::kInvalidParam, "unknown generator '" + kind + "'");
  }
  if (!text.empty()) throw Error(ErrorCode::kInvalidParam, "trailing generator arguments");
  return spec;
}

inline Graph generate(const GeneratorSpec& spec, std::uint64_t seed) {
  const std::string& k = spec.kind;
  if (k == "path") return path_graph(spec.n);
  if (k == "cycle") return cycle_graph(spec.n);
  if (k == "complete") return complete_graph(spec.n);
  if (k == "empty") return empty_graph(spec.n);
  if (k == "petersen") return petersen_graph();
  if (k == "random") return random_graph(spec.n, spec.p, seed);
  if (k == "random-split") return random_split_graph(spec.n, seed);
  if (k == "random-cograph") return random_cograph(spec.n, seed);
  if (k == "random-fat") return random_fat_extended(spec.n, seed);
  if (k == "spider")
    return spider_graph(spec.k, spec.fat, spec.head ? generate(*spec.head, seed) : Graph());
  throw Error(ErrorCode::kInvalidParam, "unknown generator '" + k + "'");
}

inline Graph generate(std::string_view descriptor, std::uint64_t seed) {
  return generate(parse_generator(descriptor), seed);
}

}  // namespace grundy
