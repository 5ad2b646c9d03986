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

// Text formats for both layers.
//
// Edge lists follow SNAP exports: one record per line, whitespace separated,
// `#` lines are comments. Social records are `u v` or `u v p`; ad-hoc records
// are `u v`. A record with a single label declares a node without edges, which
// is how the writers keep isolated nodes across a round trip.
//
// Labels are arbitrary 64-bit integers. On load they are compacted to dense
// ids in ascending label order and kept as the graph's label table.

#ifndef MSNIM_EDGE_LIST_HPP_
#define MSNIM_EDGE_LIST_HPP_

#include <iosfwd>
#include <string>

#include "msnim/adhoc_graph.hpp"
#include "msnim/layer_mapping.hpp"
#include "msnim/social_graph.hpp"

namespace msnim {

struct SocialFormat {
  enum class Probability {
    kAuto,      // use the third column when every edge record has one
    kRequired,  // every edge record must carry p
    kIgnore,    // drop any third column; the graph is marked unweighted
  };
  Probability probability = Probability::kAuto;
  // SNAP dumps occasionally contain `u u`. Such records are counted and
  // dropped; set false to reject them instead.
  bool drop_self_loops = true;
};

struct LoadStats {
  std::size_t records = 0;
  std::size_t duplicates = 0;
  std::size_t self_loops_dropped = 0;
};

// Throws ParseError (with line number) on malformed records and DomainError
// on probabilities outside [0, 1] or rejected self-loops.
SocialGraph load_social(std::istream& in, const SocialFormat& format = {},
                        LoadStats* stats = nullptr);
// Throws ParseError on malformed records and DomainError on self-loops.
AdhocGraph load_adhoc(std::istream& in, LoadStats* stats = nullptr);

SocialGraph load_social_file(const std::string& path, const SocialFormat& format = {});
AdhocGraph load_adhoc_file(const std::string& path);

void write_social(std::ostream& out, const SocialGraph& g);
void write_adhoc(std::ostream& out, const AdhocGraph& g);

// CSV `social,adhoc` keyed by each layer's labels.
void write_mapping(std::ostream& out, const LayerMapping& mapping, const SocialGraph& social,
                   const AdhocGraph& adhoc);
LayerMapping read_mapping(std::istream& in, const SocialGraph& social, const AdhocGraph& adhoc);

// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

}  // namespace msnim

#endif  // MSNIM_EDGE_LIST_HPP_
