// Slow reference implementations used as oracles. They share no code with
// the library beyond the Digraph container.

#ifndef ARCWORDS_TESTS_ORACLE_HPP_
#define ARCWORDS_TESTS_ORACLE_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "arcwords/digraph.hpp"

namespace oracle {

  using Map   = std::vector<std::size_t>;  // 0-based images
  using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

  inline Edges edges_of(arcwords::Digraph const& d) {
    Edges out;
    for (std::size_t u = 1; u <= d.size(); ++u) {
      for (std::size_t v = 1; v <= d.size(); ++v) {
        if (u != v && d.has_edge(u, v)) {
          out.emplace_back(u - 1, v - 1);
        }
      }
    }
    return out;
  }

  inline Map arc_map(std::size_t n, std::size_t a, std::size_t b) {
    Map m(n);
    std::iota(m.begin(), m.end(), std::size_t(0));
    m[a] = b;
    return m;
  }

  // Every element of the semigroup with its word length, by breadth-first
  // search over the right Cayley graph.
  inline std::map<Map, std::size_t> semigroup(arcwords::Digraph const& d) {
    std::size_t const          n = d.size();
    Edges const                e = edges_of(d);
    std::map<Map, std::size_t> dist;
    std::deque<Map>            queue;
    for (auto [a, b] : e) {
      auto m = arc_map(n, a, b);
      if (dist.emplace(m, 1).second) {
        queue.push_back(m);
      }
    }
    while (!queue.empty()) {
      Map const x = queue.front();
      queue.pop_front();
      for (auto [a, b] : e) {
        Map y = x;
        for (auto& v : y) {
          if (v == a) {
            v = b;
          }
        }
        if (dist.emplace(y, dist[x] + 1).second) {
          queue.push_back(std::move(y));
        }
      }
    }
    return dist;
  }

  inline std::size_t rank(Map const& m) {
    return std::set<std::size_t>(m.begin(), m.end()).size();
  }

  inline std::size_t fix(Map const& m) {
    std::size_t f = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      f += m[i] == i;
    }
    return f;
  }

  // Components of the functional graph that are cycles of length >= 2 with
  // nothing else attached.
  inline std::size_t cycl(Map const& m) {
    std::size_t const n = m.size();
    std::vector<int>  indeg(n, 0);
    for (auto v : m) {
      ++indeg[v];
    }
    std::vector<bool> seen(n, false);
    std::size_t       count = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s] || m[s] == s) {
        continue;
      }
      // Walk until a repeat; s lies on a cycle iff the walk returns to s.
      std::size_t x = m[s], steps = 1;
      while (x != s && steps <= n) {
        x = m[x];
        ++steps;
      }
      if (x != s) {
        continue;
      }
      bool        pure = true;
      std::size_t y    = s;
      do {
        seen[y] = true;
        pure    = pure && indeg[y] == 1;
        y       = m[y];
      } while (y != s);
      count += pure;
    }
    return count;
  }

  inline std::vector<std::vector<std::size_t>> all_pairs(arcwords::Digraph const& d) {
    std::size_t const n   = d.size();
    std::size_t const inf = std::numeric_limits<std::size_t>::max() / 4;
    std::vector       dist(n, std::vector<std::size_t>(n, inf));
    for (std::size_t i = 0; i < n; ++i) {
      dist[i][i] = 0;
    }
    for (auto [a, b] : edges_of(d)) {
      dist[a][b] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
        }
      }
    }
    return dist;
  }

  inline bool reachable(std::vector<std::vector<std::size_t>> const& dist, std::size_t a,
                        std::size_t b) {
    return dist[a][b] < std::numeric_limits<std::size_t>::max() / 4;
  }

  // Smallest sorted edge list over all relabellings.
  inline Edges canonical(arcwords::Digraph const& d) {
    std::size_t const        n = d.size();
    Edges const              e = edges_of(d);
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t(0));
    Edges best;
    bool  first = true;
    do {
      Edges r;
      for (auto [a, b] : e) {
        r.emplace_back(p[a], p[b]);
      }
      std::sort(r.begin(), r.end());
      if (first || r < best) {
        best  = r;
        first = false;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
  }

  // Every labelled digraph on [n], n <= 4.
  inline std::vector<arcwords::Digraph> labelled_digraphs(std::size_t n) {
    Edges pairs;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (u != v) {
          pairs.emplace_back(u, v);
        }
      }
    }
    std::vector<arcwords::Digraph> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << pairs.size()); ++mask) {
      arcwords::Digraph d(n);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask >> i & 1) {
          d.add_edge(pairs[i].first + 1, pairs[i].second + 1);
        }
      }
      out.push_back(d);
    }
    return out;
  }

  // Max of sum d(u_i, v_i) over r distinct sources and r distinct targets.
  inline std::size_t delta_brute(arcwords::Digraph const& t, std::size_t r) {
    auto const               dist = all_pairs(t);
    std::size_t const        n    = t.size();
    std::vector<std::size_t> targets(n);
    std::iota(targets.begin(), targets.end(), std::size_t(0));
    std::size_t best = 0;
    // The first r entries of each target permutation are matched with
    // sources 0..r-1 of each r-subset of sources.
    std::vector<bool> choose(n, false);
    std::fill(choose.begin(), choose.begin() + r, true);
    do {
      std::vector<std::size_t> sources;
      for (std::size_t i = 0; i < n; ++i) {
        if (choose[i]) {
          sources.push_back(i);
        }
      }
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), std::size_t(0));
      do {
        std::size_t s = 0;
        for (std::size_t i = 0; i < r; ++i) {
          s += dist[sources[i]][perm[i]];
        }
        best = std::max(best, s);
      } while (std::next_permutation(perm.begin(), perm.end()));
    } while (std::prev_permutation(choose.begin(), choose.end()));
    return best;
  }

  inline arcwords::Digraph random_digraph(std::size_t n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    arcwords::Digraph           d(n);
    for (std::size_t u = 1; u <= n; ++u) {
      for (std::size_t v = 1; v <= n; ++v) {
        if (u != v && coin(rng)) {
          d.add_edge(u, v);
        }
      }
    }
    return d;
  }

  inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937& rng) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t(1));
    std::shuffle(p.begin(), p.end(), rng);
    return p;
  }

}  // namespace oracle

#endif  // ARCWORDS_TESTS_ORACLE_HPP_
