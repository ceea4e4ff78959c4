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

#include "tmes/clique.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tmes {

namespace {

using Bits = std::vector<std::uint64_t>;

bool test(const Bits& b, std::size_t v) { return (b[v / 64] >> (v % 64)) & 1U; }
void set(Bits& b, std::size_t v) { b[v / 64] |= std::uint64_t{1} << (v % 64); }
void reset(Bits& b, std::size_t v) { b[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

class Search {
 public:
  Search(const Graph& g, std::size_t stop_at) : g_(g), stop_at_(stop_at) {}

  std::vector<std::size_t> run() {
    Bits all((g_.size() + 63) / 64, 0);
    for (std::size_t v = 0; v < g_.size(); ++v) set(all, v);
    if (g_.size() > 0) expand(all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  // Greedy sequential colouring of `p` in index order. Returns vertices
  // ordered by colour class with the colour count reached at each.
  void colour(const Bits& p, std::vector<std::size_t>& order,
              std::vector<std::size_t>& bound) const {
    Bits uncoloured = p;
    std::size_t colour_count = 0;
    while (any(uncoloured)) {
      ++colour_count;
      Bits candidates = uncoloured;
      while (any(candidates)) {
        std::size_t v = 0;
        for (std::size_t w = 0; w < candidates.size(); ++w) {
          if (candidates[w]) {
            v = w * 64 + static_cast<std::size_t>(std::countr_zero(candidates[w]));
            break;
          }
        }
        reset(uncoloured, v);
        reset(candidates, v);
        const Bits& nb = g_.row(v);
        for (std::size_t w = 0; w < candidates.size(); ++w) candidates[w] &= ~nb[w];
        order.push_back(v);
        bound.push_back(colour_count);
      }
    }
  }

  void expand(Bits p) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    colour(p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (done_) return;
      if (current_.size() + bound[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current_.push_back(v);
      Bits next = p;
      const Bits& nb = g_.row(v);
      for (std::size_t w = 0; w < next.size(); ++w) next[w] &= nb[w];
      if (any(next)) {
        expand(std::move(next));
      } else if (current_.size() > best_.size()) {
        best_ = current_;
        if (best_.size() >= stop_at_) done_ = true;
      }
      current_.pop_back();
      reset(p, v);
    }
  }

  const Graph& g_;
  std::size_t stop_at_;
  bool done_ = false;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace

Graph::Graph(std::size_t num_vertices)
    : n_(num_vertices), rows_(num_vertices, Bits((num_vertices + 63) / 64, 0)) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw std::out_of_range("graph vertex out of range");
  if (u == v) return;
  set(rows_[u], v);
  set(rows_[v], u);
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  return u < n_ && v < n_ && test(rows_[u], v);
}

std::vector<std::size_t> maximum_clique(const Graph& graph, std::size_t stop_at) {
  return Search(graph, stop_at).run();
}

}  // namespace tmes
