// Copyright 2026 The Authors.
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

#include "msnim/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_map>

namespace msnim {
namespace {

struct Record {
  std::size_t line;
  std::int64_t u;
  std::int64_t v;
  bool has_v;
  bool has_p;
  double p;
};

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t parse_label(std::string_view tok, std::size_t line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected integer node label, got '" + std::string(tok) + "'");
  }
  return value;
}

double parse_probability(std::string_view tok, std::size_t line, bool check_range) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected decimal probability, got '" + std::string(tok) + "'");
  }
  if (check_range && !(value >= 0.0 && value <= 1.0)) {
    throw DomainError("line " + std::to_string(line) + ": probability " + std::string(tok) +
                      " outside [0, 1]");
  }
  return value;
}

std::vector<Record> read_records(std::istream& in, std::size_t max_columns, bool check_p = true) {
  std::vector<Record> records;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    auto toks = split_ws(text);
    if (toks.empty() || toks[0].front() == '#') continue;
    if (toks.size() > max_columns) {
      throw ParseError(line, "expected at most " + std::to_string(max_columns) + " fields, got " +
                                 std::to_string(toks.size()));
    }
    Record r{line, parse_label(toks[0], line), 0, false, false, 0.0};
    if (toks.size() >= 2) {
      r.v = parse_label(toks[1], line);
      r.has_v = true;
    }
    if (toks.size() == 3) {
      r.p = parse_probability(toks[2], line, check_p);
      r.has_p = true;
    }
    records.push_back(r);
  }
  if (in.bad()) throw ParseError(line, "read failure");
  return records;
}

struct Compaction {
  std::vector<std::int64_t> labels;
  std::unordered_map<std::int64_t, NodeId> index;
};

Compaction compact(const std::vector<Record>& records) {
  Compaction c;
  for (const auto& r : records) {
    c.labels.push_back(r.u);
    if (r.has_v) c.labels.push_back(r.v);
  }
  std::sort(c.labels.begin(), c.labels.end());
  c.labels.erase(std::unique(c.labels.begin(), c.labels.end()), c.labels.end());
  if (c.labels.size() >= kNoNode) throw DomainError("too many distinct node labels");
  c.index.reserve(c.labels.size());
  for (NodeId i = 0; i < c.labels.size(); ++i) c.index.emplace(c.labels[i], i);
  return c;
}

std::unordered_map<std::int64_t, NodeId> label_index(std::span<const std::int64_t> labels) {
  std::unordered_map<std::int64_t, NodeId> index;
  index.reserve(labels.size());
  for (NodeId i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  return index;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

SocialGraph load_social(std::istream& in, const SocialFormat& format, LoadStats* stats) {
  const auto records = read_records(in, 3, format.probability != SocialFormat::Probability::kIgnore);
  const auto c = compact(records);

  std::size_t edge_records = 0, weighted = 0;
  for (const auto& r : records) {
    if (!r.has_v) continue;
    ++edge_records;
    if (r.has_p) ++weighted;
  }
  bool use_p = false;
  switch (format.probability) {
    case SocialFormat::Probability::kIgnore:
      break;
    case SocialFormat::Probability::kRequired:
      for (const auto& r : records) {
        if (r.has_v && !r.has_p) throw ParseError(r.line, "missing probability column");
      }
      use_p = true;
      break;
    case SocialFormat::Probability::kAuto:
      if (weighted != 0 && weighted != edge_records) {
        for (const auto& r : records) {
          if (r.has_v && !r.has_p) {
            throw ParseError(r.line, "probability column present on some records but not this one");
          }
        }
      }
      use_p = edge_records > 0 && weighted == edge_records;
      break;
  }

  LoadStats local;
  local.records = records.size();
  std::vector<SocialEdge> edges;
  edges.reserve(edge_records);
  for (const auto& r : records) {
    if (!r.has_v) continue;
    if (r.u == r.v) {
      if (!format.drop_self_loops) {
        throw DomainError("line " + std::to_string(r.line) + ": self-loop on node " +
                          std::to_string(r.u));
      }
      ++local.self_loops_dropped;
      continue;
    }
    edges.push_back({c.index.at(r.u), c.index.at(r.v), use_p ? r.p : 0.0});
  }
  auto g = SocialGraph::from_edges(c.labels.size(), edges, use_p || edge_records == 0);
  local.duplicates = edges.size() - g.num_edges();
  g.set_labels(c.labels);
  if (stats) *stats = local;
  return g;
}

AdhocGraph load_adhoc(std::istream& in, LoadStats* stats) {
  const auto records = read_records(in, 2);
  const auto c = compact(records);
  std::vector<AdhocGraph::Link> links;
  links.reserve(records.size());
  for (const auto& r : records) {
    if (!r.has_v) continue;
    if (r.u == r.v) {
      throw DomainError("line " + std::to_string(r.line) + ": self-loop on ad-hoc node " +
                        std::to_string(r.u));
    }
    links.emplace_back(c.index.at(r.u), c.index.at(r.v));
  }
  auto g = AdhocGraph::from_links(c.labels.size(), links);
  if (stats) {
    stats->records = records.size();
    stats->duplicates = links.size() - g.num_links();
    stats->self_loops_dropped = 0;
  }
  g.set_labels(c.labels);
  return g;
}

SocialGraph load_social_file(const std::string& path, const SocialFormat& format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open social graph file " + path);
  return load_social(in, format);
}

AdhocGraph load_adhoc_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ad-hoc graph file " + path);
  return load_adhoc(in);
}

void write_social(std::ostream& out, const SocialGraph& g) {
  const auto labels = g.labels();
  out << "# Nodes: " << g.num_nodes() << " Edges: " << g.num_edges() << '\n';
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (g.out_degree(v) == 0 && g.in_degree(v) == 0) out << labels[v] << '\n';
  }
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (const auto& a : g.out_edges(u)) {
      out << labels[u] << ' ' << labels[a.node];
      if (g.has_probabilities()) out << ' ' << format_double(a.p);
      out << '\n';
    }
  }
}

void write_adhoc(std::ostream& out, const AdhocGraph& g) {
  const auto labels = g.labels();
  out << "# Nodes: " << g.num_nodes() << " Edges: " << g.num_links() << '\n';
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (g.degree(v) == 0) out << labels[v] << '\n';
  }
  for (auto [a, b] : g.links()) out << labels[a] << ' ' << labels[b] << '\n';
}

void write_mapping(std::ostream& out, const LayerMapping& mapping, const SocialGraph& social,
                   const AdhocGraph& adhoc) {
  out << "social,adhoc\n";
  for (NodeId s = 0; s < mapping.size(); ++s) {
    out << social.labels()[s] << ',' << adhoc.labels()[mapping.to_adhoc(s)] << '\n';
  }
}

LayerMapping read_mapping(std::istream& in, const SocialGraph& social, const AdhocGraph& adhoc) {
  const auto social_index = label_index(social.labels());
  const auto adhoc_index = label_index(adhoc.labels());
  std::vector<NodeId> forward(social.num_nodes(), kNoNode);
  std::string text;
  std::size_t line = 0;
  std::size_t rows = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty() || text.front() == '#') continue;
    if (line == 1 && text == "social,adhoc") continue;
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseError(line, "expected 'social,adhoc'");
    const auto s = parse_label(std::string_view(text).substr(0, comma), line);
    const auto a = parse_label(std::string_view(text).substr(comma + 1), line);
    auto si = social_index.find(s);
    auto ai = adhoc_index.find(a);
    if (si == social_index.end()) throw ParseError(line, "unknown social label " + std::to_string(s));
    if (ai == adhoc_index.end()) throw ParseError(line, "unknown ad-hoc label " + std::to_string(a));
    if (forward[si->second] != kNoNode) {
      throw ParseError(line, "social label " + std::to_string(s) + " mapped twice");
    }
    forward[si->second] = ai->second;
    ++rows;
  }
  if (rows != social.num_nodes()) {
    throw DomainError("mapping covers " + std::to_string(rows) + " of " +
                      std::to_string(social.num_nodes()) + " social nodes");
  }
  if (social.num_nodes() != adhoc.num_nodes()) {
    throw DomainError("layer node counts differ");
  }
  return LayerMapping::from_permutation(std::move(forward));
}

}  // namespace msnim
