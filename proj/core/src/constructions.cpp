#include "arcwords/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "arcwords/error.hpp"

namespace arcwords {

  bool ConstructedWord::verified() const {
    if (word.empty() || word.size() != claimed_length || !uses_edges_of(word, digraph)) {
      return false;
    }
    return evaluate(word, digraph.size()) == target;
  }

  namespace {

    ConstructedWord finish(Digraph const&  d,
                           Word            word,
                           Transformation  target,
                           bool            optimal,
                           char const*     what) {
      ConstructedWord out{d, std::move(word), std::move(target), 0, optimal};
      out.claimed_length = out.word.size();
      if (!out.verified()) {
        throw Error(std::string(what) + ": construction did not produce a valid word for "
                    + to_string(out.target));
      }
      return out;
    }

    void check_degree(Digraph const& d, Transformation const& alpha) {
      if (d.size() != alpha.degree()) {
        throw PreconditionError("transformation degree " + std::to_string(alpha.degree())
                                + " does not match the digraph size "
                                + std::to_string(d.size()));
      }
    }

    // An optimal word over the complete digraph on `domain` for the map
    // x |-> f[x - 1], which must send domain into itself and not be a
    // permutation of it. Non-cyclic orbits come first (tree vertices after
    // their images); pure cycles are rotated through an unused vertex last.
    // A nonzero `buffer` is a fixed vertex whose position is already empty;
    // with it f may permute the domain.
    Word hi_word(std::vector<vertex_type> const& f,
                 std::vector<vertex_type>        domain,
                 vertex_type                     buffer = 0) {
      std::sort(domain.begin(), domain.end());
      std::size_t const n = f.size();
      std::vector<bool> in_domain(n + 1, false), in_image(n + 1, false);
      for (auto x : domain) {
        in_domain[x] = true;
      }
      for (auto x : domain) {
        if (!in_domain[f[x - 1]]) {
          throw PreconditionError("map does not preserve its domain");
        }
        in_image[f[x - 1]] = true;
      }
      auto fx = [&](vertex_type x) { return f[x - 1]; };

      std::vector<bool> on_cycle(n + 1, false);
      for (auto x : domain) {
        vertex_type y = fx(x);
        for (std::size_t i = 0; i < domain.size() && y != x; ++i) {
          y = fx(y);
        }
        on_cycle[x] = y == x;
      }
      std::vector<std::vector<vertex_type>> pre(n + 1);
      for (auto x : domain) {
        if (fx(x) != x) {
          pre[fx(x)].push_back(x);
        }
      }

      // Orbits via union-find over x -- f(x).
      std::vector<vertex_type> parent(n + 1);
      std::iota(parent.begin(), parent.end(), vertex_type(0));
      auto find = [&](vertex_type x) {
        while (parent[x] != x) {
          x = parent[x] = parent[parent[x]];
        }
        return x;
      };
      for (auto x : domain) {
        vertex_type a = find(x), b = find(fx(x));
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
      std::vector<std::vector<vertex_type>> orbits;
      std::vector<std::size_t>              orbit_of(n + 1, SIZE_MAX);
      for (auto x : domain) {
        vertex_type r = find(x);
        if (orbit_of[r] == SIZE_MAX) {
          orbit_of[r] = orbits.size();
          orbits.emplace_back();
        }
        orbits[orbit_of[r]].push_back(x);
      }

      auto cycle_from = [&](vertex_type c1) {
        std::vector<vertex_type> c{c1};
        for (vertex_type y = fx(c1); y != c1; y = fx(y)) {
          c.push_back(y);
        }
        return c;
      };

      Word                     w;
      std::vector<vertex_type> pure;
      for (auto const& orbit : orbits) {
        std::vector<vertex_type> cyc;
        for (auto x : orbit) {
          if (on_cycle[x]) {
            cyc.push_back(x);
          }
        }
        std::vector<vertex_type> queue;
        vertex_type              skip = 0;
        if (cyc.size() == 1) {
          queue = pre[cyc[0]];
        } else if (cyc.size() == orbit.size()) {
          pure.push_back(cyc[0]);
          continue;
        } else {
          vertex_type t = 0;
          for (auto x : orbit) {
            if (!on_cycle[x] && on_cycle[fx(x)]) {
              t = x;
              break;
            }
          }
          auto c = cycle_from(fx(t));
          w.push_back({c.back(), t});
          for (std::size_t j = c.size() - 1; j-- > 0;) {
            w.push_back({c[j], c[j + 1]});
          }
          w.push_back({t, c.front()});
          skip = t;
          for (auto x : cyc) {
            for (auto y : pre[x]) {
              if (!on_cycle[y]) {
                queue.push_back(y);
              }
            }
          }
          std::sort(queue.begin(), queue.end());
        }
        for (std::size_t head = 0; head < queue.size(); ++head) {
          vertex_type x = queue[head];
          if (x != skip) {
            w.push_back({x, fx(x)});
          }
          queue.insert(queue.end(), pre[x].begin(), pre[x].end());
        }
      }
      if (!pure.empty()) {
        vertex_type h = buffer;
        if (h == 0) {
          auto it = std::find_if(domain.begin(), domain.end(), [&](auto x) { return !in_image[x]; });
          if (it == domain.end()) {
            throw PreconditionError("map is a permutation of its domain");
          }
          h = *it;
        }
        for (auto c1 : pure) {
          auto c = cycle_from(c1);
          w.push_back({c.back(), h});
          for (std::size_t j = c.size() - 1; j-- > 0;) {
            w.push_back({c[j], c[j + 1]});
          }
          w.push_back({h, c.front()});
        }
      }
      return w;
    }

    Digraph complete(std::size_t n) {
      return family(Family::complete, n);
    }

    Word constant_word(Digraph const& d, vertex_type v0, DistanceMatrix const& dm) {
      std::size_t const n = d.size();
      std::size_t       m = 0;
      for (vertex_type v = 1; v <= n; ++v) {
        if (dm(v, v0) == kUnreachable) {
          throw PreconditionError("vertex " + std::to_string(v) + " cannot reach "
                                  + std::to_string(v0));
        }
        m = std::max(m, dm(v, v0));
      }
      Word w;
      for (std::size_t layer = m; layer >= 1; --layer) {
        for (vertex_type v = 1; v <= n; ++v) {
          if (dm(v, v0) != layer) {
            continue;
          }
          for (auto x : d.out_neighbours(v)) {
            if (dm(x, v0) == layer - 1) {
              w.push_back({v, x});
              break;
            }
          }
        }
      }
      return w;
    }

    std::vector<vertex_type> shortest_path(Digraph const&        d,
                                           DistanceMatrix const& dm,
                                           vertex_type           u,
                                           vertex_type           v) {
      std::vector<vertex_type> path{u};
      while (path.back() != v) {
        vertex_type cur = path.back();
        for (auto x : d.out_neighbours(cur)) {
          if (dm(x, v) + 1 == dm(cur, v)) {
            path.push_back(x);
            break;
          }
        }
      }
      return path;
    }

    Word arc_word(std::vector<vertex_type> const& p) {
      std::size_t const d = p.size() - 1;
      Word              w{{p[d], p[0]}};
      for (std::size_t i = d; i-- > 0;) {
        w.push_back({p[i], p[i + 1]});
      }
      for (std::size_t i = 2; i <= d; ++i) {
        w.push_back({p[i], p[i - 2]});
        w.push_back({p[i - 1], p[i]});
      }
      for (std::size_t i = d - 1; i-- > 0;) {
        w.push_back({p[i], p[i + 1]});
      }
      return w;
    }

    void check_partition(std::size_t n, Partition const& blocks) {
      std::vector<int> seen(n + 1, 0);
      for (auto const& b : blocks) {
        if (b.empty()) {
          throw PreconditionError("partition has an empty block");
        }
        for (auto v : b) {
          if (v < 1 || v > n || seen[v]++ > 0) {
            throw PreconditionError("blocks do not partition [" + std::to_string(n) + "]");
          }
        }
      }
      if (std::count(seen.begin() + 1, seen.end(), 1) != static_cast<long>(n)) {
        throw PreconditionError("blocks do not partition [" + std::to_string(n) + "]");
      }
    }

  }  // namespace

  ConstructedWord express_constant(Digraph const& d, vertex_type v0) {
    std::size_t const n = d.size();
    if (v0 < 1 || v0 > n || n < 2) {
      throw PreconditionError("express_constant needs n >= 2 and v0 in [n]");
    }
    auto w = constant_word(d, v0, distances(d));
    return finish(d, std::move(w), Transformation::constant(n, v0), true, "express_constant");
  }

  ConstructedWord express_band(Digraph const& d, Transformation const& alpha) {
    check_degree(d, alpha);
    if (!band_bipartition(d)) {
      throw PreconditionError("digraph has a vertex with both in- and out-edges");
    }
    Word w;
    for (vertex_type v = 1; v <= d.size(); ++v) {
      vertex_type const x = alpha[v];
      if (x == v) {
        continue;
      }
      if (!d.has_edge(v, x) || alpha[x] != x) {
        throw NotMemberError(to_string(alpha) + " is not in the semigroup");
      }
      w.push_back({v, x});
    }
    if (w.empty()) {
      throw NotMemberError("the identity is not in the semigroup");
    }
    return finish(d, std::move(w), alpha, true, "express_band");
  }

  ConstructedWord express_complete_optimal(Transformation const& alpha) {
    std::size_t const n = alpha.degree();
    if (alpha.is_permutation()) {
      throw PreconditionError("express_complete_optimal needs a singular transformation");
    }
    std::vector<vertex_type> domain(n);
    std::iota(domain.begin(), domain.end(), vertex_type(1));
    auto w = hi_word(alpha.images(), domain);
    return finish(complete(n), std::move(w), alpha, true, "express_complete_optimal");
  }

  ConstructedWord express_star_optimal(Digraph const& d, Transformation const& alpha) {
    check_degree(d, alpha);
    if (!is_closed(d)) {
      throw PreconditionError("digraph is not closed");
    }
    if (!is_connected_unilateral(d)) {
      throw PreconditionError("digraph is not connected");
    }
    if (auto star = satisfies_star(d); !star.holds) {
      auto const& s = *star.witness;
      throw PreconditionError("property (*) fails on the path " + std::to_string(s.v0) + ", "
                              + std::to_string(s.v1) + ", " + std::to_string(s.v2));
    }
    if (alpha.is_permutation()) {
      throw NotMemberError("permutations are not in the semigroup");
    }
    std::size_t const n  = d.size();
    auto const        dm = distances(d);
    auto not_member      = [&] { return NotMemberError(to_string(alpha) + " is not in the semigroup"); };

    // Vertices sent to distance 2 travel through a relay w with w alpha = u alpha.
    std::vector<vertex_type> relay(n + 1, 0);
    std::vector<bool>        moved(n + 1, false);
    for (vertex_type u = 1; u <= n; ++u) {
      std::size_t du = dm(u, alpha[u]);
      if (du == kUnreachable || du > 2) {
        throw not_member();
      }
      if (du != 2) {
        continue;
      }
      for (auto w : d.out_neighbours(u)) {
        if (d.has_edge(w, alpha[u]) && alpha[w] == alpha[u]) {
          relay[u] = w;
          break;
        }
      }
      if (relay[u] == 0) {
        throw not_member();
      }
      moved[u] = moved[relay[u]] = true;
    }
    Word w;
    for (vertex_type r = 1; r <= n; ++r) {
      bool used = false;
      for (vertex_type u = 1; u <= n; ++u) {
        if (relay[u] == r) {
          w.push_back({u, r});
          used = true;
        }
      }
      if (used) {
        w.push_back({r, alpha[r]});
      }
    }

    auto const sd = strong_components(d);
    for (auto it = sd.condensation_order.rbegin(); it != sd.condensation_order.rend(); ++it) {
      auto const&       comp = sd.components[*it];
      std::size_t const c    = *it;
      auto in_comp = [&](vertex_type x) { return sd.component_of[x - 1] == c; };

      std::vector<vertex_type> beta(n);
      std::iota(beta.begin(), beta.end(), vertex_type(1));
      std::vector<vertex_type> s;
      for (auto x : comp) {
        if (!moved[x] && in_comp(alpha[x])) {
          beta[x - 1] = alpha[x];
          s.push_back(x);
        }
      }
      bool identity = true, permutation = true;
      std::vector<bool> hit(n + 1, false);
      for (auto x : comp) {
        identity = identity && beta[x - 1] == x;
        permutation = permutation && !hit[beta[x - 1]];
        hit[beta[x - 1]] = true;
      }
      if (!identity) {
        // A vertex of comp outside comp alpha is not in s, so it has already
        // left and its position can hold a cycle in transit.
        vertex_type h = 0;
        if (permutation) {
          std::vector<bool> image(n + 1, false);
          for (auto x : comp) {
            image[alpha[x]] = true;
          }
          auto it = std::find_if(comp.begin(), comp.end(), [&](auto x) { return !image[x]; });
          if (it == comp.end()) {
            throw not_member();
          }
          h = *it;
        }
        auto part = hi_word(beta, comp, h);
        w.insert(w.end(), part.begin(), part.end());
      }
      for (vertex_type a = 1; a <= n; ++a) {
        if (!moved[a] && !in_comp(a) && in_comp(alpha[a])) {
          if (!d.has_edge(a, alpha[a])) {
            throw not_member();
          }
          w.push_back({a, alpha[a]});
        }
      }
    }
    if (w.empty() || !uses_edges_of(w, d) || evaluate(w, n) != alpha) {
      throw not_member();
    }
    // A tail vertex feeding a cycle of some beta_i costs one arc more than
    // n + cycl - fix; such words are returned without the optimality claim.
    bool const at_bound = w.size() == hi_bound(alpha);
    return finish(d, std::move(w), alpha, at_bound, "express_star_optimal");
  }

  ConstructedWord tournament_arc_word(Digraph const& t, vertex_type u, vertex_type v) {
    if (!is_strong_tournament(t)) {
      throw PreconditionError("tournament_arc_word needs a strong tournament");
    }
    if (u < 1 || v < 1 || u > t.size() || v > t.size() || u == v) {
      throw PreconditionError("tournament_arc_word needs distinct vertices in [n]");
    }
    if (t.has_edge(u, v)) {
      throw PreconditionError("(" + std::to_string(u) + ", " + std::to_string(v)
                              + ") is already an edge");
    }
    auto const dm   = distances(t);
    auto const path = shortest_path(t, dm, u, v);
    return finish(t,
                  arc_word(path),
                  Arc{u, v}.as_transformation(t.size()),
                  true,
                  "tournament_arc_word");
  }

  ConstructedWord idempotent_with_kernel(Digraph const& t, Partition const& blocks) {
    std::size_t const n = t.size();
    if (!is_tournament(t)) {
      throw PreconditionError("idempotent_with_kernel needs a tournament");
    }
    check_partition(n, blocks);
    if (blocks.size() == n) {
      throw PreconditionError("a partition into singletons gives the identity");
    }
    std::vector<vertex_type> target(n);
    Word                     w;
    for (auto block : blocks) {
      std::sort(block.begin(), block.end());
      if (block.size() == 1) {
        target[block[0] - 1] = block[0];
        continue;
      }
      Digraph const sub = t.induced(block);
      auto const    sd  = strong_components(sub);
      vertex_type   sink = 0;
      for (std::size_t c = 0; c < sd.components.size(); ++c) {
        if (sd.terminal[c]) {
          sink = sd.components[c].front();
          break;
        }
      }
      for (auto const& e : constant_word(sub, sink, distances(sub))) {
        w.push_back({block[e.from - 1], block[e.to - 1]});
      }
      for (auto v : block) {
        target[v - 1] = block[sink - 1];
      }
    }
    return finish(t, std::move(w), Transformation(std::move(target)), true,
                  "idempotent_with_kernel");
  }

  ConstructedWord idempotent_with_image(Digraph const& t, std::vector<vertex_type> const& s) {
    std::size_t const n = t.size();
    if (!is_strong_tournament(t)) {
      throw PreconditionError("idempotent_with_image needs a strong tournament");
    }
    std::vector<bool> in_s(n + 1, false);
    for (auto x : s) {
      if (x < 1 || x > n || in_s[x]) {
        throw PreconditionError("image set must consist of distinct vertices in [n]");
      }
      in_s[x] = true;
    }
    if (s.empty() || s.size() == n) {
      throw PreconditionError("image set must be nonempty and proper");
    }
    auto const               dm = distances(t);
    std::vector<vertex_type> target(n), next(n + 1, 0);
    std::vector<std::size_t> depth(n + 1, 0);
    std::vector<vertex_type> order;
    for (vertex_type v = 1; v <= n; ++v) {
      vertex_type best = 0;
      for (vertex_type x = 1; x <= n; ++x) {
        if (in_s[x] && (best == 0 || dm(v, x) < dm(v, best))) {
          best = x;
        }
      }
      target[v - 1] = best;
      depth[v]      = dm(v, best);
      if (v != best) {
        order.push_back(v);
        for (auto x : t.out_neighbours(v)) {
          if (dm(x, best) + 1 == depth[v]) {
            next[v] = x;
            break;
          }
        }
      }
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return depth[a] > depth[b]; });
    Word w;
    for (auto v : order) {
      w.push_back({v, next[v]});
    }
    return finish(t, std::move(w), Transformation(std::move(target)), true,
                  "idempotent_with_image");
  }

  ConstructedWord tournament_express(Digraph const& t, Transformation const& alpha) {
    check_degree(t, alpha);
    if (!is_strong_tournament(t)) {
      throw PreconditionError("tournament_express needs a strong tournament");
    }
    if (alpha.is_permutation()) {
      throw PreconditionError("tournament_express needs a singular transformation");
    }
    std::size_t const n    = t.size();
    auto const        beta = idempotent_with_kernel(t, kernel_partition(alpha));

    // gamma sends the image of beta where alpha sends the matching block.
    std::vector<vertex_type> gamma(n);
    std::iota(gamma.begin(), gamma.end(), vertex_type(1));
    std::vector<bool> hit(n + 1, false);
    bool              identity = true, permutation = true;
    for (vertex_type x = 1; x <= n; ++x) {
      vertex_type const u = beta.target[x];
      gamma[u - 1]        = alpha[x];
    }
    for (vertex_type x = 1; x <= n; ++x) {
      identity    = identity && gamma[x - 1] == x;
      permutation = permutation && !hit[gamma[x - 1]];
      hit[gamma[x - 1]] = true;
    }
    Word w = beta.word;
    if (!identity) {
      if (permutation) {
        auto const image = beta.target.image_set();
        vertex_type h    = 1;
        while (std::binary_search(image.begin(), image.end(), h)) {
          ++h;
        }
        gamma[h - 1] = gamma[image.front() - 1];
      }
      auto const dm = distances(t);
      for (auto const& e : express_complete_optimal(Transformation(gamma)).word) {
        if (t.has_edge(e.from, e.to)) {
          w.push_back(e);
        } else {
          auto part = arc_word(shortest_path(t, dm, e.from, e.to));
          w.insert(w.end(), part.begin(), part.end());
        }
      }
    }
    auto out = finish(t, std::move(w), alpha, false, "tournament_express");
    std::size_t const r = alpha.rank();
    if (out.claimed_length > n + 6 * r * diameter(t) - 4 * r) {
      throw Error("tournament_express: word exceeds n + 6 r diam - 4 r");
    }
    return out;
  }

  AcyclicWitness acyclic_witness(std::size_t n, std::size_t r) {
    if (n < 3 || r < 2 || r > n - 1) {
      throw PreconditionError("acyclic_witness needs n >= 3 and 2 <= r <= n - 1");
    }
    std::vector<vertex_type> beta(n);
    for (vertex_type v = 1; v <= n; ++v) {
      if (v + 2 <= r) {
        beta[v - 1] = n - r + v;
      } else if (v == n) {
        beta[v - 1] = n;
      } else {
        beta[v - 1] = (n - v) % 2 == 0 ? n - 1 : n;
      }
    }
    return {family(Family::q, n), Transformation(std::move(beta)),
            (n - r) * (n + r - 3) / 2 + 1};
  }

  CycleWitness cycle_witness(PatternKind kind, std::size_t k) {
    Word w;
    switch (kind) {
      case PatternKind::gamma1:
        w = {{3, 4}, {4, 5}, {1, 4}, {4, 3}, {2, 4}, {4, 1}, {3, 4}, {4, 2}};
        break;
      case PatternKind::gamma2:
        w = {{3, 4}, {4, 5}, {1, 3}, {3, 4}, {2, 3}, {3, 1}, {4, 3}, {3, 2}};
        break;
      case PatternKind::gamma3:
        w = {{3, 4}, {2, 3}, {1, 2}, {3, 1}};
        break;
      case PatternKind::gamma4:
        w = {{3, 4}, {4, 5}, {2, 3}, {3, 4}, {1, 2}, {4, 1}};
        break;
      case PatternKind::theta: {
        if (k < 5) {
          throw PreconditionError("theta witnesses need k >= 5");
        }
        if (k == 5) {
          // The general six-segment word collapses at k = 5; this one has
          // value 4 4 5 1 3.
          w = {{1, 2}, {5, 1}, {4, 5}, {3, 4}, {2, 3}, {1, 2}, {5, 1}, {4, 5}, {3, 4}, {2, 3}};
          break;
        }
        auto walk = [&](vertex_type u, vertex_type v) {
          while (u != v) {
            vertex_type next = u % k + 1;
            w.push_back({u, next});
            u = next;
          }
        };
        walk(1, k - 3);
        walk(k, k - 4);
        walk(k - 1, 1);
        walk(k - 2, k);
        walk(k - 3, k - 1);
        walk(k - 4, k - 2);
        break;
      }
    }
    Digraph d   = pattern_digraph(kind, k);
    auto    val = evaluate(w, d.size());
    if (!uses_edges_of(w, d) || orbit_stats(val).cycl == 0) {
      throw Error("cycle_witness: word has no cyclic orbit");
    }
    return {std::move(d), std::move(w), std::move(val)};
  }

}  // namespace arcwords
