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

#include "grundy/cli.hpp"

#include <chrono>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grundy/coloring.hpp"
#include "grundy/generators.hpp"
#include "grundy/grundy.hpp"
#include "grundy/io.hpp"
#include "grundy/modular_decomposition.hpp"
#include "grundy/recognition.hpp"
#include "grundy/serialize.hpp"
#include "grundy/verify.hpp"

namespace grundy::cli {
namespace {

struct Input {
  std::string path;
  std::string gen;
  std::string input_format = "auto";
  std::uint64_t seed = 1;
};

void add_input_options(CLI::App* cmd, Input& in) {
  auto* path = cmd->add_option("input", in.path, "graph file (graph6 or edge list)");
  auto* gen = cmd->add_option("--gen", in.gen, "generator descriptor, e.g. spider:thin:3 or random:8:0.5");
  path->excludes(gen);
  gen->excludes(path);
  cmd->add_option("--input-format", in.input_format, "auto, graph6 or edges")
      ->check(CLI::IsMember({"auto", "graph6", "edges"}));
  cmd->add_option("--seed", in.seed, "seed for random generators");
}

Graph load(const Input& in) {
  if (in.path.empty() == in.gen.empty())
    throw Error(ErrorCode::kInvalidParam, "give exactly one of an input file or --gen");
  if (!in.gen.empty()) return generate(in.gen, in.seed);
  if (in.input_format == "auto") return read_graph_file(in.path);
  std::ifstream f(in.path, std::ios::binary);
  if (!f) throw ParseError(0, "cannot open " + in.path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_graph(buf.str(), in.input_format == "graph6" ? GraphFormat::kGraph6 : GraphFormat::kEdgeList);
}

std::string join_vertices(const std::vector<Vertex>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

std::vector<Vertex> parse_order(const std::string& text) {
  std::vector<Vertex> out;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(static_cast<Vertex>(v));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidParam, "bad vertex '" + tok + "' in --order");
    }
  }
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

struct ComputeOptions {
  std::string algo = "poly";
  std::string format = "text";
  std::string order;
  bool order_out = false;
  std::size_t max_vertices = 16;
};

int cmd_compute(const Input& in, const ComputeOptions& opt, std::ostream& out) {
  const Graph g = load(in);
  const auto start = std::chrono::steady_clock::now();
  Json report{{"algo", opt.algo}, {"order", g.order()}};
  std::string text;
  if (opt.algo == "poly") {
    const PolyResult r = grundy_poly(g);
    report["value"] = r.value;
    report["trace"] = to_json(r)["trace"];
    text = "value " + std::to_string(r.value) + "\n";
    for (const TraceStep& s : r.trace) {
      if (s.rule == Rule::kLeaf) continue;
      text += "  " + std::string(to_string(s.rule)) + " " + NotInClassError::describe(s.module) + " -> " +
              std::to_string(s.gamma) + (s.detail.empty() ? "" : " (" + s.detail + ")") + "\n";
    }
  } else if (opt.algo == "exact") {
    const GrundyResult r = grundy_exact(g, {opt.max_vertices, false});
    report["value"] = r.value;
    text = "value " + std::to_string(r.value) + "\n";
    if (opt.order_out) {
      report["witness"] = r.witness;
      text += "order " + join_vertices(r.witness) + "\n";
    }
  } else {
    std::vector<Vertex> order = opt.order.empty() ? std::vector<Vertex>(g.order()) : parse_order(opt.order);
    if (opt.order.empty()) std::iota(order.begin(), order.end(), Vertex{0});
    const Coloring c = greedy_color(g, order);
    report["value"] = c.k();
    report["colors"] = c.colors;
    text = "value " + std::to_string(c.k()) + "\n";
    if (opt.order_out) {
      report["witness"] = order;
      text += "order " + join_vertices(order) + "\n";
    }
  }
  const double ms = elapsed_ms(start);
  report["time_ms"] = ms;
  if (opt.format == "json")
    out << report.dump(2) << '\n';
  else
    out << text << "time_ms " << ms << '\n';
  return kOk;
}

int cmd_recognize(const Input& in, std::ostream& out) {
  const Graph g = load(in);
  out << to_json(recognize(g), g.order()).dump(2) << '\n';
  return kOk;
}

int cmd_decompose(const Input& in, const std::string& format, std::ostream& out) {
  const Graph g = load(in);
  if (g.order() == 0) throw Error(ErrorCode::kEmptyGraph, "cannot decompose a graph with no vertices");
  const MDTree t = decompose(g);
  const std::vector<std::string> violations = validate_tree(g, t);
  if (!violations.empty()) throw Error(ErrorCode::kNotAModule, "invalid decomposition: " + violations.front());
  if (format == "dot")
    out << to_dot(t);
  else
    out << to_json(t).dump(2) << '\n';
  return kOk;
}

int cmd_generate(const Input& in, const std::string& format, std::ostream& out) {
  const Graph g = load(in);
  if (format == "edges")
    out << encode_edge_list(g);
  else
    out << encode_graph6(g) << '\n';
  return kOk;
}

struct VerifyOptions {
  std::size_t exhaustive = 0;
  std::size_t random = 0;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  bool audit = false;
  unsigned max_gamma = 3;
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  if (opt.exhaustive == 0 && opt.random == 0 && !opt.audit)
    throw Error(ErrorCode::kInvalidParam, "choose --exhaustive, --random or --audit");
  Json report = Json::object();
  bool ok = true;
  auto summarize = [](const VerifySummary& s) {
    return Json{{"graphs", s.graphs},
                {"in_class", s.in_class},
                {"tree_violations", s.tree_violations},
                {"mismatches", s.mismatches}};
  };
  if (opt.exhaustive > 0) {
    const VerifySummary s = verify_exhaustive(opt.exhaustive);
    report["exhaustive"] = summarize(s);
    ok &= s.ok();
  }
  if (opt.random > 0) {
    const VerifySummary s = verify_random(opt.random, opt.samples, opt.seed);
    report["random"] = summarize(s);
    ok &= s.ok();
  }
  if (opt.audit) {
    const AuditReport a = case_table_audit({opt.max_gamma, 3, 200, opt.seed});
    Json mism = Json::array();
    for (const AuditMismatch& m : a.mismatches)
      mism.push_back({{"shape", std::string(to_string(m.shape))},
                      {"gammas", m.gammas},
                      {"table", m.table},
                      {"oracle", m.oracle},
                      {"graph6", m.graph6}});
    report["audit"] = {{"clique_instances", a.clique_instances},
                       {"random_instances", a.random_instances},
                       {"mismatches", std::move(mism)}};
    ok &= a.ok();
  }
  report["ok"] = ok;
  out << report.dump(2) << '\n';
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grundy numbers of fat-extended P4-laden graphs", "grundy"};
  app.require_subcommand(1);

  Input in;
  ComputeOptions compute;
  auto* c = app.add_subcommand("compute", "Grundy number of the input graph");
  add_input_options(c, in);
  c->add_option("--algo", compute.algo, "poly, exact or greedy")
      ->check(CLI::IsMember({"poly", "exact", "greedy"}));
  c->add_option("--format", compute.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  c->add_option("--order", compute.order, "comma separated vertex order for --algo greedy");
  c->add_flag("--order-out", compute.order_out, "print the witness order");
  c->add_option("--max-vertices", compute.max_vertices, "size limit for --algo exact")
      ->check(CLI::PositiveNumber);

  auto* r = app.add_subcommand("recognize", "class membership report as JSON");
  add_input_options(r, in);

  std::string tree_format = "json";
  auto* d = app.add_subcommand("decompose", "modular decomposition tree as JSON or DOT");
  add_input_options(d, in);
  d->add_option("--format", tree_format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  std::string graph_format = "graph6";
  auto* g = app.add_subcommand("generate", "write a generated graph");
  add_input_options(g, in);
  g->add_option("--format", graph_format, "graph6 or edges")->check(CLI::IsMember({"graph6", "edges"}));

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "compare the polynomial algorithm with the exact oracle");
  v->add_option("--exhaustive", verify.exhaustive, "all labelled graphs up to this order");
  v->add_option("--random", verify.random, "order of random graphs");
  v->add_option("--samples", verify.samples, "number of random graphs")->check(CLI::PositiveNumber);
  v->add_option("--seed", verify.seed, "first seed");
  v->add_flag("--audit", verify.audit, "run the case table audit");
  v->add_option("--max-gamma", verify.max_gamma, "largest module size in the audit")
      ->check(CLI::Range(1U, 4U));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  try {
    if (c->parsed()) return cmd_compute(in, compute, out);
    if (r->parsed()) return cmd_recognize(in, out);
    if (d->parsed()) return cmd_decompose(in, tree_format, out);
    if (g->parsed()) return cmd_generate(in, graph_format, out);
    return cmd_verify(verify, out);
  } catch (const NotInClassError& e) {
    err << "error: " << e.what() << '\n';
    return kNotInClass;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace grundy::cli
