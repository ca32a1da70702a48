#include "arcwords/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <numeric>

#include "arcwords/detail/adjacency_code.hpp"
#include "arcwords/error.hpp"
#include "arcwords/semigroup.hpp"
#include "enumerate.hpp"
#include "parallel.hpp"

namespace arcwords {

  ExtremalRow const* ExtremalResult::row(std::size_t r) const {
    for (auto const& x : rows) {
      if (x.r == r) {
        return &x;
      }
    }
    return nullptr;
  }

  bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](Check const& c) { return c.passed; });
  }

  void SuiteReport::add(std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }

  ////////////////////////////////////////////////////////////////////////
  // Extremal tables
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Best {
      bool          set       = false;
      std::size_t   value     = 0;
      std::uint64_t canon     = 0;
      std::size_t   attainers = 0;
    };

    struct Partial {
      explicit Partial(std::size_t n) : engine(n), max(n), min(n) {}

      Explorer          engine;
      std::vector<Best> max;
      std::vector<Best> min;
    };

    // Keeps the extreme value; ties go to the smallest canonical code.
    template <typename Better>
    void offer(Best& b, std::size_t value, std::uint64_t canon, Better better) {
      if (!b.set || better(value, b.value)) {
        b = {true, value, canon, 1};
      } else if (value == b.value) {
        ++b.attainers;
        b.canon = std::min(b.canon, canon);
      }
    }

    template <typename Better>
    void merge(Best& b, Best const& other, Better better) {
      if (!other.set) {
        return;
      }
      if (!b.set || better(other.value, b.value)) {
        b = other;
      } else if (other.value == b.value) {
        b.attainers += other.attainers;
        b.canon = std::min(b.canon, other.canon);
      }
    }

    ExtremalResult extremal_codes(ClassSpec const&                  spec,
                                  std::vector<std::uint64_t> const& codes,
                                  RunOptions const&                 options) {
      using clock      = std::chrono::steady_clock;
      auto const start = clock::now();
      std::size_t const n       = spec.n;
      bool const        want_min = spec.kind == ClassKind::strong_tournaments;
      auto const&       table   = detail::RelabelTable::get(n);
      auto greater = [](std::size_t a, std::size_t b) { return a > b; };
      auto less    = [](std::size_t a, std::size_t b) { return a < b; };

      auto partials = detail::parallel_shards(
          codes.size(),
          options.jobs,
          [n] { return Partial(n); },
          [&](Partial& p, std::size_t i) {
            Digraph const d = detail::from_adjacency_code(n, codes[i]);
            p.engine.run(d);
            auto const&   prof  = p.engine.profile();
            std::uint64_t canon = std::numeric_limits<std::uint64_t>::max();
            auto          get_canon = [&] {
              if (canon == std::numeric_limits<std::uint64_t>::max()) {
                canon = table.orbit_minimum(codes[i]);
              }
              return canon;
            };
            for (std::size_t r = 1; r < n; ++r) {
              auto l = prof.length(r);
              if (!l) {
                continue;
              }
              Best& mx = p.max[r];
              if (!mx.set || *l >= mx.value) {
                offer(mx, *l, get_canon(), greater);
              }
              if (want_min) {
                Best& mn = p.min[r];
                if (!mn.set || *l <= mn.value) {
                  offer(mn, *l, get_canon(), less);
                }
              }
            }
          });

      std::vector<Best> max(n), min(n);
      for (auto const& p : partials) {
        for (std::size_t r = 1; r < n; ++r) {
          merge(max[r], p.max[r], greater);
          merge(min[r], p.min[r], less);
        }
      }

      ExtremalResult result;
      result.spec       = spec;
      result.enumerated = codes.size();
      result.verified   = true;
      std::map<std::uint64_t, RankProfile> reexplored;
      auto profile_of = [&](std::uint64_t canon) -> RankProfile const& {
        auto it = reexplored.find(canon);
        if (it == reexplored.end()) {
          it = reexplored.emplace(canon, explore(detail::from_adjacency_code(n, canon)).profile())
                   .first;
        }
        return it->second;
      };
      for (std::size_t r = 1; r < n; ++r) {
        ExtremalRow row{r, {}, {}, {}, {}, {}, {}, 0};
        if (max[r].set) {
          auto const& prof = profile_of(max[r].canon);
          row.max          = max[r].value;
          row.max_witness  = canonical_form(detail::from_adjacency_code(n, max[r].canon));
          row.max_alpha    = prof.witness(r);
          row.max_attainers = max[r].attainers;
          result.verified  = result.verified && prof.length(r) == max[r].value;
        }
        if (min[r].set) {
          auto const& prof = profile_of(min[r].canon);
          row.min          = min[r].value;
          row.min_witness  = canonical_form(detail::from_adjacency_code(n, min[r].canon));
          row.min_alpha    = prof.witness(r);
          result.verified  = result.verified && prof.length(r) == min[r].value;
        }
        result.rows.push_back(std::move(row));
      }
      result.seconds = std::chrono::duration<double>(clock::now() - start).count();
      return result;
    }

  }  // namespace

  ExtremalResult extremal_table(ClassSpec const& spec, RunOptions const& options) {
    auto const start  = std::chrono::steady_clock::now();
    auto const codes  = detail::enumerate_codes(spec, options.long_run);
    auto       result = extremal_codes(spec, codes, options);
    result.seconds
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  }

  ExtremalResult extremal_table(ClassSpec const&         spec,
                                std::span<Digraph const> members,
                                RunOptions const&        options) {
    if (spec.n < 2 || spec.n > detail::kRelabelTableLimit) {
      throw SizeLimitError("extremal tables support 2 <= n <= 7");
    }
    std::vector<std::uint64_t> codes;
    for (auto const& d : members) {
      if (d.size() != spec.n || !detail::in_class(spec, d)) {
        throw PreconditionError(std::string("input digraph is not in class '")
                                + to_string(spec.kind) + "' on " + std::to_string(spec.n)
                                + " vertices");
      }
      codes.push_back(detail::adjacency_code(d));
    }
    return extremal_codes(spec, codes, options);
  }

  ////////////////////////////////////////////////////////////////////////
  // Delta(T, r)
  ////////////////////////////////////////////////////////////////////////

  std::size_t delta_tournament(Digraph const& t, std::size_t r) {
    std::size_t const n = t.size();
    if (!is_strong_tournament(t)) {
      throw PreconditionError("delta_tournament needs a strong tournament");
    }
    if (r < 1 || r > n) {
      throw PreconditionError("delta_tournament needs 1 <= r <= n");
    }
    auto const dm = distances(t);
    // Min-cost flow on source, n sources, n targets, sink with costs -d.
    std::size_t const S = 0, T = 2 * n + 1, V = 2 * n + 2;
    struct E {
      std::size_t to;
      int         cap;
      long        cost;
    };
    std::vector<E>                        edges;
    std::vector<std::vector<std::size_t>> adj(V);
    auto add = [&](std::size_t a, std::size_t b, long cost) {
      adj[a].push_back(edges.size());
      edges.push_back({b, 1, cost});
      adj[b].push_back(edges.size());
      edges.push_back({a, 0, -cost});
    };
    for (std::size_t i = 1; i <= n; ++i) {
      add(S, i, 0);
      add(n + i, T, 0);
      for (std::size_t j = 1; j <= n; ++j) {
        add(i, n + j, -static_cast<long>(dm(i, j)));
      }
    }
    long total = 0;
    for (std::size_t unit = 0; unit < r; ++unit) {
      // Bellman-Ford; the residual graph has no negative cycles.
      std::vector<long>        dist(V, std::numeric_limits<long>::max());
      std::vector<std::size_t> via(V, SIZE_MAX);
      dist[S] = 0;
      for (std::size_t round = 0; round + 1 < V; ++round) {
        bool changed = false;
        for (std::size_t a = 0; a < V; ++a) {
          if (dist[a] == std::numeric_limits<long>::max()) {
            continue;
          }
          for (auto ei : adj[a]) {
            E const& e = edges[ei];
            if (e.cap > 0 && dist[a] + e.cost < dist[e.to]) {
              dist[e.to] = dist[a] + e.cost;
              via[e.to]  = ei;
              changed    = true;
            }
          }
        }
        if (!changed) {
          break;
        }
      }
      for (std::size_t v = T; v != S;) {
        std::size_t ei = via[v];
        edges[ei].cap -= 1;
        edges[ei ^ 1].cap += 1;
        v = edges[ei ^ 1].to;
      }
      total += dist[T];
    }
    return static_cast<std::size_t>(-total);
  }

  ////////////////////////////////////////////////////////////////////////
  // Published values
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::size_t> reference_lmax(std::size_t n, std::size_t r) {
    static std::map<std::size_t, std::vector<std::size_t>> const rows = {
        {2, {1}},
        {3, {2, 6}},
        {4, {3, 11, 13}},
        {5, {4, 18, 24, 33}},
        {6, {5, 26, 42, 51, 66}},
    };
    auto it = rows.find(n);
    if (it == rows.end() || r < 1 || r > it->second.size()) {
      return std::nullopt;
    }
    return it->second[r - 1];
  }

  std::optional<std::pair<std::size_t, std::size_t>> reference_tournament(std::size_t n,
                                                                         std::size_t r) {
    using P = std::pair<std::size_t, std::size_t>;
    static std::map<std::size_t, std::vector<P>> const rows = {
        {3, {{6, 6}}},
        {4, {{8, 8}, {11, 11}}},
        {5, {{6, 11}, {8, 14}, {10, 17}}},
        {6, {{8, 13}, {10, 18}, {11, 21}, {13, 24}}},
        {7, {{8, 16}, {10, 22}, {11, 26}, {13, 29}, {15, 32}}},
    };
    auto it = rows.find(n);
    if (it == rows.end() || r < 2 || r - 2 >= it->second.size()) {
      return std::nullopt;
    }
    return it->second[r - 2];
  }

  ////////////////////////////////////////////////////////////////////////
  // Conjectures and bounds
  ////////////////////////////////////////////////////////////////////////

  std::size_t conjectured_pi_length(std::size_t n) {
    return (n * n + 3 * n - 6) / 2;
  }

  Transformation pi_witness(std::size_t n) {
    std::vector<vertex_type> images(n);
    for (vertex_type v = 1; v < n; ++v) {
      images[v - 1] = n + 1 - v;
    }
    images[n - 1] = n;
    return Transformation(std::move(images));
  }

  namespace {
    std::string join_values(std::vector<std::string> const& parts) {
      std::string out;
      for (auto const& p : parts) {
        out += (out.empty() ? "" : ", ") + p;
      }
      return out;
    }

    std::string opt(std::optional<std::size_t> x) {
      return x ? std::to_string(*x) : std::string("-");
    }
  }  // namespace

  SuiteReport check_conjectures(std::size_t n, RunOptions const& options) {
    if (n < 3 || n > (options.long_run ? 7u : 6u)) {
      throw SizeLimitError("conjecture checks support 3 <= n <= 6 (7 with --long)");
    }
    SuiteReport rep{"conjectures", n};
    auto const  table = extremal_table({ClassKind::strong_tournaments, n}, options);
    rep.items         = table.enumerated;

    auto const pi   = explore(family(Family::pi, n));
    auto const prof = pi.profile();
    std::size_t const expected = conjectured_pi_length(n);
    rep.add("l(pi_n) = (n^2 + 3n - 6)/2",
            prof.overall() == expected,
            "l(pi_" + std::to_string(n) + ") = " + opt(prof.overall()) + ", formula "
                + std::to_string(expected));

    bool                     attains = true;
    std::vector<std::string> parts, unique;
    for (std::size_t r = 1; r < n; ++r) {
      auto const* row = table.row(r);
      attains         = attains && row != nullptr && prof.length(r) == row->max;
      parts.push_back("r=" + std::to_string(r) + ": " + opt(prof.length(r)) + "/"
                      + opt(row ? row->max : std::nullopt));
      if (r >= 2 && row != nullptr) {
        unique.push_back("r=" + std::to_string(r) + ": " + std::to_string(row->max_attainers));
      }
    }
    rep.add("pi_n attains every per-rank maximum", attains, join_values(parts));

    auto const witness_len = length_of(pi, pi_witness(n));
    rep.add("n (n-1) ... 2 n attains l(pi_n)",
            witness_len.has_value() && witness_len == prof.overall(),
            to_string(pi_witness(n)) + " has length " + opt(witness_len));

    bool published = true;
    for (std::size_t r = 2; r < n; ++r) {
      auto ref = reference_tournament(n, r);
      auto const* row = table.row(r);
      if (ref && row) {
        published = published && row->min == ref->first && row->max == ref->second;
      }
    }
    rep.add("class extremes match the published values", published);

    // Every strong tournament has l(T, 1) = n - 1, so uniqueness is only
    // meaningful from r = 2 on.
    bool only_pi = true;
    for (std::size_t r = 2; r < n; ++r) {
      auto const* row = table.row(r);
      only_pi         = only_pi && row != nullptr && row->max_attainers == 1;
    }
    rep.add("pi_n is the only class attaining the maximum, r >= 2", only_pi,
            "classes per rank: " + join_values(unique));

    if (n % 2 == 1) {
      auto const  kappa = explore(family(Family::circulant, n)).profile();
      bool        mins  = true;
      parts.clear();
      for (std::size_t r = 1; r < n; ++r) {
        auto const* row = table.row(r);
        mins            = mins && row != nullptr && kappa.length(r) == row->min;
        parts.push_back("r=" + std::to_string(r) + ": " + opt(kappa.length(r)) + "/"
                        + opt(row ? row->min : std::nullopt));
      }
      rep.add("kappa_n attains every per-rank minimum", mins, join_values(parts));
      auto const* row2 = table.row(2);
      rep.add("l_min(n, 2) = n + 1",
              row2 != nullptr && row2->min == n + 1,
              "l_min(" + std::to_string(n) + ", 2) = " + opt(row2 ? row2->min : std::nullopt));
      bool linear = true;
      parts.clear();
      for (std::size_t r = 3; 2 * r <= n + 1; ++r) {
        auto const* row = table.row(r);
        linear          = linear && row != nullptr && row->min == n + r;
        parts.push_back("r=" + std::to_string(r) + ": " + opt(row ? row->min : std::nullopt));
      }
      rep.add("l_min(n, r) = n + r for 3 <= r <= (n+1)/2", linear,
              parts.empty() ? "no such r" : join_values(parts));
    }
    return rep;
  }

  SuiteReport bounds_audit(std::size_t n, RunOptions const& options) {
    if (n % 2 == 0 || n < 3 || n > (options.long_run ? 7u : 5u)) {
      throw SizeLimitError("bounds_audit supports odd 3 <= n <= 5 (7 with --long)");
    }
    SuiteReport rep{"bounds", n};
    auto const  table = extremal_table({ClassKind::strong_tournaments, n}, options);

    bool                     ok_min = true, ok_max = true;
    std::vector<std::string> bad;
    for (std::size_t r = 2; r < n; ++r) {
      auto const* row = table.row(r);
      std::size_t const rhat = std::min(r - 1, n / 2);
      std::size_t const lo_min = n + r - 2, hi_min = n + 8 * r;
      std::size_t const lo_max = (rhat + 1) * (n - rhat) - 1, hi_max = 6 * r * n + n - 10 * r;
      bool const        a = row->min && lo_min <= *row->min && *row->min <= hi_min;
      bool const        b = row->max && lo_max <= *row->max && *row->max <= hi_max;
      ok_min = ok_min && a;
      ok_max = ok_max && b;
      if (!a || !b) {
        bad.push_back("r=" + std::to_string(r));
      }
    }
    rep.add("n + r - 2 <= l_min(n, r) <= n + 8r", ok_min, join_values(bad));
    rep.add("(rhat+1)(n-rhat) - 1 <= l_max(n, r) <= 6rn + n - 10r", ok_max, join_values(bad));

    auto const reps = enumerate_class({ClassKind::strong_tournaments, n}, options.long_run);
    rep.items       = reps.size();
    bool        delta_claim = true, monotone = true, length_claim = true, min_delta = true;
    bool        brute_ok    = true;
    std::vector<std::size_t> smallest(n + 1, SIZE_MAX);
    std::vector<std::string> failures;
    Explorer                 engine(n);
    for (auto const& t : reps) {
      std::size_t const diam = diameter(t);
      std::vector<std::size_t> delta(n + 1, 0);
      for (std::size_t r = 1; r <= n; ++r) {
        delta[r]          = delta_tournament(t, r);
        smallest[r]       = std::min(smallest[r], delta[r]);
        std::size_t rp    = std::min(r, (diam + 1) / 2);
        bool        lower = rp * (diam - rp + 1) + r - rp <= delta[r];
        bool        upper = delta[r] <= r * diam;
        if (!(lower && upper)) {
          delta_claim = false;
          failures.push_back(canonical_form(t).to_hex() + " Delta r=" + std::to_string(r));
        }
        if (r > 1 && delta[r] < delta[r - 1]) {
          monotone = false;
        }
      }
      if (n <= 5) {
        auto const dm = distances(t);
        for (std::size_t r = 1; r <= n; ++r) {
          // Brute force over ordered r-tuples of sources; targets by
          // trying every injective assignment.
          std::vector<vertex_type> perm(n);
          std::iota(perm.begin(), perm.end(), vertex_type(1));
          std::size_t best = 0;
          std::vector<vertex_type> tgt(n);
          do {
            std::iota(tgt.begin(), tgt.end(), vertex_type(1));
            do {
              std::size_t s = 0;
              for (std::size_t i = 0; i < r; ++i) {
                s += dm(perm[i], tgt[i]);
              }
              best = std::max(best, s);
            } while (std::next_permutation(tgt.begin(), tgt.end()));
          } while (std::next_permutation(perm.begin(), perm.end()));
          brute_ok = brute_ok && best == delta[r];
        }
      }
      engine.run(t);
      auto const& prof = engine.profile();
      for (std::size_t r = 2; r < n; ++r) {
        auto l = prof.length(r);
        if (!l || n - r + delta[r - 1] > *l || *l > n + 6 * r * diam - 4 * r) {
          length_claim = false;
          failures.push_back(canonical_form(t).to_hex() + " l(T,r) r=" + std::to_string(r));
        }
      }
    }
    for (std::size_t r = 1; r <= n; ++r) {
      min_delta = min_delta && smallest[r] == 2 * r;
    }
    Digraph const kappa       = family(Family::circulant, n);
    bool          kappa_delta = true;
    for (std::size_t r = 1; r <= n; ++r) {
      kappa_delta = kappa_delta && delta_tournament(kappa, r) == 2 * r;
    }
    rep.add("r'(diam - r' + 1) + r - r' <= Delta(T, r) <= r diam", delta_claim,
            join_values(failures));
    rep.add("Delta(T, r) nondecreasing in r", monotone);
    rep.add("n - r + Delta(T, r-1) <= l(T, r) <= n + 6 r diam - 4r", length_claim);
    rep.add("Delta(kappa_n, r) = 2r", kappa_delta);
    rep.add("min over T of Delta(T, r) = 2r", min_delta);
    if (n <= 5) {
      rep.add("Delta agrees with brute force", brute_ok);
    }
    return rep;
  }

}  // namespace arcwords
