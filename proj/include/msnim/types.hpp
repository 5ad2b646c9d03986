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

#ifndef MSNIM_TYPES_HPP_
#define MSNIM_TYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace msnim {

// Dense node index in [0, n). The same id space addresses both layers; the
// LayerMapping translates a social node to its position in the ad-hoc layer.
using NodeId = std::uint32_t;
// Position of an arc in a SocialGraph's out-adjacency.
using EdgeId = std::uint32_t;
// Hop count in the ad-hoc layer.
using Hops = std::uint32_t;

inline constexpr Hops kUnreachable = std::numeric_limits<Hops>::max();
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

// Malformed input text. `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A value or argument outside the domain an operation accepts.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An overhead term needed a hop distance between disconnected ad-hoc nodes.
class InvalidLedgerError : public std::runtime_error {
 public:
  InvalidLedgerError(NodeId from, NodeId to)
      : std::runtime_error("no ad-hoc path between agents " + std::to_string(from) + " and " +
                           std::to_string(to)),
        from_(from),
        to_(to) {}
  NodeId from() const noexcept { return from_; }
  NodeId to() const noexcept { return to_; }

 private:
  NodeId from_;
  NodeId to_;
};

}  // namespace msnim

#endif  // MSNIM_TYPES_HPP_
