// Copyright 2026 The tmes Authors
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

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace tmes {

/// Undirected simple graph over vertices 0..n-1 stored as bitset rows.
class Graph {
 public:
  explicit Graph(std::size_t num_vertices);

  std::size_t size() const { return n_; }
  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;
  const std::vector<std::uint64_t>& row(std::size_t v) const { return rows_[v]; }

 private:
  std::size_t n_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

/// Exact maximum clique by branch and bound with greedy colouring bounds.
/// Vertices are scanned in index order, so the returned clique (sorted
/// ascending) is the same on every run. The search stops early once a
/// clique of size `stop_at` is found.
std::vector<std::size_t> maximum_clique(
    const Graph& graph, std::size_t stop_at = std::numeric_limits<std::size_t>::max());

}  // namespace tmes
