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

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "grundy/error.hpp"
#include "grundy/graph.hpp"
#include "grundy/grundy.hpp"
#include "grundy/modular_decomposition.hpp"
#include "grundy/recognition.hpp"

namespace grundy {

using Json = nlohmann::ordered_json;

// Tree schema:
//   { "order": n,
//     "root": node,
//     "postorder": [ { "id", "kind", "module", "children": [id...] } ] }
//   node = { "kind": "leaf|parallel|series|neighborhood", "module": [v...],
//            "children": [node...], "quotient": {"order", "edges"} }
// "quotient" appears on neighborhood nodes only.

inline Json to_json(const VertexSet& s) { return Json(s.to_vector()); }

inline Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"order", g.order()}, {"edges", std::move(edges)}};
}

inline Json to_json(const MDNode& node) {
  Json j{{"kind", std::string(to_string(node.kind))}, {"module", to_json(node.module)}};
  Json children = Json::array();
  for (const MDNode& c : node.children) children.push_back(to_json(c));
  j["children"] = std::move(children);
  if (node.kind == NodeKind::kNeighborhood) j["quotient"] = to_json(node.quotient);
  return j;
}

inline Json to_json(const MDTree& t) {
  Json post = Json::array();
  std::size_t next_id = 0;
  std::function<std::size_t(const MDNode&)> walk = [&](const MDNode& node) {
    std::vector<std::size_t> ids;
    for (const MDNode& c : node.children) ids.push_back(walk(c));
    const std::size_t id = next_id++;
    post.push_back({{"id", id},
                    {"kind", std::string(to_string(node.kind))},
                    {"module", to_json(node.module)},
                    {"children", ids}});
    return id;
  };
  walk(t.root);
  return {{"order", t.host.order()}, {"root", to_json(t.root)}, {"postorder", std::move(post)}};
}

inline Graph graph_from_json(const Json& j) {
  try {
    GraphBuilder b(j.at("order").get<std::size_t>());
    for (const Json& e : j.at("edges")) b.add_edge(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    return std::move(b).build();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("graph JSON: ") + e.what());
  }
}

namespace detail {

inline NodeKind node_kind_from(const std::string& s) {
  for (NodeKind k : {NodeKind::kLeaf, NodeKind::kParallel, NodeKind::kSeries, NodeKind::kNeighborhood})
    if (to_string(k) == s) return k;
  throw Error(ErrorCode::kParseError, "unknown node kind '" + s + "'");
}

inline MDNode node_from_json(const Json& j, std::size_t n) {
  MDNode node;
  node.kind = node_kind_from(j.at("kind").get<std::string>());
  node.module = VertexSet(n);
  for (const Json& v : j.at("module")) {
    const auto x = v.get<Vertex>();
    if (x >= n) throw Error(ErrorCode::kParseError, "module vertex out of range");
    node.module.insert(x);
  }
  for (const Json& c : j.at("children")) node.children.push_back(node_from_json(c, n));
  if (node.kind == NodeKind::kNeighborhood) node.quotient = graph_from_json(j.at("quotient"));
  return node;
}

}  // namespace detail

/// Reads the nested "root" form back. The host graph is rebuilt from the tree.
inline MDTree tree_from_json(const Json& j) {
  try {
    MDTree t;
    t.root = detail::node_from_json(j.at("root"), j.at("order").get<std::size_t>());
    t.host = reconstruct(t);
    return t;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("tree JSON: ") + e.what());
  }
}

inline std::string to_dot(const MDTree& t) {
  std::ostringstream os;
  os << "digraph md {\n  node [shape=box, fontname=\"monospace\"];\n";
  std::size_t next_id = 0;
  std::function<std::size_t(const MDNode&)> walk = [&](const MDNode& node) {
    const std::size_t id = next_id++;
    os << "  n" << id << " [label=\"" << to_string(node.kind) << "\\n{";
    bool first = true;
    for (Vertex v : node.module) {
      os << (first ? "" : ",") << v;
      first = false;
    }
    os << "}";
    if (node.kind == NodeKind::kNeighborhood) {
      os << "\\nquotient:";
      for (auto [u, v] : node.quotient.edges()) os << ' ' << u << '-' << v;
    }
    os << "\"];\n";
    for (const MDNode& c : node.children) {
      const std::size_t cid = walk(c);
      os << "  n" << id << " -> n" << cid << ";\n";
    }
    return id;
  };
  walk(t.root);
  os << "}\n";
  return os.str();
}

// Report schema:
//   { "order", "split", "pseudo_split", "spider", "extended_p4_laden",
//     "fat_extended_p4_laden",
//     "nodes": [ { "module", "tag", "shape"?, "spider"?, "reason"?, "extended_ok" } ] }

inline Json to_json(const ClassReport& r, std::size_t order) {
  Json nodes = Json::array();
  for (const NodeClassification& nc : r.nodes) {
    Json j{{"module", to_json(nc.module)}, {"tag", std::string(to_string(nc.fat.tag))}};
    if (nc.fat.shape) j["shape"] = std::string(to_string(nc.fat.shape->shape));
    if (nc.fat.spider) j["spider"] = std::string(to_string(nc.fat.spider->flavor));
    if (!nc.fat.reason.empty()) j["reason"] = nc.fat.reason;
    j["extended_ok"] = nc.extended_ok;
    nodes.push_back(std::move(j));
  }
  return {{"order", order},
          {"split", r.split},
          {"pseudo_split", r.pseudo_split},
          {"spider", r.spider},
          {"extended_p4_laden", r.extended_p4_laden},
          {"fat_extended_p4_laden", r.fat_extended_p4_laden},
          {"nodes", std::move(nodes)}};
}

inline Json to_json(const PolyResult& p) {
  Json trace = Json::array();
  for (const TraceStep& s : p.trace) {
    Json j{{"module", to_json(s.module)}, {"rule", std::string(to_string(s.rule))}, {"gamma", s.gamma}};
    if (!s.child_gammas.empty()) j["children"] = s.child_gammas;
    if (!s.detail.empty()) j["detail"] = s.detail;
    trace.push_back(std::move(j));
  }
  return {{"value", p.value}, {"trace", std::move(trace)}};
}

}  // namespace grundy
