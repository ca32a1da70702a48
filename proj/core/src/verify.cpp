#include <algorithm>
#include <numeric>

#include "arcwords/constructions.hpp"
#include "arcwords/detail/adjacency_code.hpp"
#include "arcwords/error.hpp"
#include "arcwords/experiments.hpp"
#include "arcwords/semigroup.hpp"
#include "enumerate.hpp"
#include "parallel.hpp"

namespace arcwords {

  char const* to_string(Theorem t) noexcept {
    switch (t) {
      case Theorem::C1:
        return "C1";
      case Theorem::C2:
        return "C2";
      case Theorem::C3:
        return "C3";
      case Theorem::CyclFree:
        return "CyclFree";
    }
    return "?";
  }

  Theorem parse_theorem(std::string_view name) {
    for (auto t : {Theorem::C1, Theorem::C2, Theorem::C3, Theorem::CyclFree}) {
      std::string_view const s = to_string(t);
      if (name.size() == s.size()
          && std::equal(name.begin(), name.end(), s.begin(), [](char a, char b) {
               return std::tolower(static_cast<unsigned char>(a))
                      == std::tolower(static_cast<unsigned char>(b));
             })) {
        return t;
      }
    }
    throw PreconditionError("unknown theorem '" + std::string(name)
                            + "' (expected C1, C2, C3 or CyclFree)");
  }

  namespace {

    std::size_t factorial(std::size_t n) {
      std::size_t f = 1;
      for (std::size_t i = 2; i <= n; ++i) {
        f *= i;
      }
      return f;
    }

    std::size_t power(std::size_t b, std::size_t e) {
      std::size_t p = 1;
      while (e-- > 0) {
        p *= b;
      }
      return p;
    }

    void require_range(char const* what, std::size_t n, std::size_t lo, std::size_t hi) {
      if (n < lo || n > hi) {
        throw SizeLimitError(std::string(what) + " supports " + std::to_string(lo)
                             + " <= n <= " + std::to_string(hi) + ", found n = "
                             + std::to_string(n));
      }
    }

    bool structure_holds(Theorem t, Digraph const& d) {
      switch (t) {
        case Theorem::C1:
          return is_closed(d) && satisfies_star(d).holds;
        case Theorem::C2:
          return is_closed(d) && satisfies_star(d).holds && satisfies_star_star(d);
        case Theorem::C3:
          return band_bipartition(d).has_value();
        case Theorem::CyclFree:
          return !find_forbidden(d).has_value();
      }
      return false;
    }

    bool length_holds(Theorem t, StateTable const& st, std::size_t n, state_index i,
                      std::size_t dist) {
      switch (t) {
        case Theorem::C1:
          return dist == st.hi_bound(i);
        case Theorem::C2:
          return dist == n - st.fix(i);
        case Theorem::C3:
          return dist == n - st.rank(i);
        case Theorem::CyclFree:
          return st.cycl(i) == 0;
      }
      return false;
    }

    struct Finding {
      std::uint64_t                code;
      Direction                    direction;
      std::optional<state_index>   witness;
    };

    struct CharacterizationPartial {
      explicit CharacterizationPartial(std::size_t n) : engine(n) {}

      Explorer             engine;
      std::size_t          satisfying = 0;
      std::vector<Finding> findings;
    };

    std::string join(std::vector<std::string> const& parts) {
      std::string out;
      for (auto const& p : parts) {
        out += (out.empty() ? "" : "; ") + p;
      }
      return out;
    }

    // First few entries only, to keep reports readable.
    void note(std::vector<std::string>& log, std::string s) {
      if (log.size() < 5) {
        log.push_back(std::move(s));
      }
    }

    std::string edge_list(Digraph const& d) {
      std::string out = "{";
      for (auto const& e : d.edges()) {
        out += (out.size() > 1 ? "," : "") + std::to_string(e.from) + "->" + std::to_string(e.to);
      }
      return out + "}";
    }

    // Counts checked cases and keeps the first few failures.
    struct Tally {
      std::size_t              checked = 0, failed = 0;
      std::vector<std::string> examples;

      template <typename Describe>
      void record(bool ok, Describe describe) {
        ++checked;
        if (!ok) {
          ++failed;
          note(examples, describe());
        }
      }
      void merge(Tally const& other) {
        checked += other.checked;
        failed += other.failed;
        for (auto const& e : other.examples) {
          note(examples, e);
        }
      }
      bool ok() const {
        return failed == 0;
      }
      std::string summary() const {
        std::string s = std::to_string(checked) + " checked, " + std::to_string(failed) + " failed";
        return examples.empty() ? s : s + ": " + join(examples);
      }
    };

    bool order_preserving(Transformation const& a) {
      for (vertex_type v = 1; v < a.degree(); ++v) {
        if (a[v] > a[v + 1]) {
          return false;
        }
      }
      return true;
    }

    bool extensive(Transformation const& a) {
      for (vertex_type v = 1; v <= a.degree(); ++v) {
        if (a[v] < v) {
          return false;
        }
      }
      return true;
    }

    // All set partitions of [n], as restricted growth strings.
    std::vector<Partition> partitions(std::size_t n) {
      std::vector<Partition>   out;
      std::vector<std::size_t> block(n, 0);
      auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
        if (i == n) {
          Partition p(used);
          for (std::size_t v = 0; v < n; ++v) {
            p[block[v]].push_back(static_cast<vertex_type>(v + 1));
          }
          out.push_back(std::move(p));
          return;
        }
        for (std::size_t b = 0; b <= used; ++b) {
          block[i] = b;
          self(self, i + 1, std::max(used, b + 1));
        }
      };
      rec(rec, 0, 0);
      return out;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Characterisations
  ////////////////////////////////////////////////////////////////////////

  VerificationReport verify_characterization(Theorem           theorem,
                                             std::size_t       n,
                                             Connectivity      connectivity,
                                             RunOptions const& options) {
    require_range("verify_characterization", n, 2, 5);
    ClassSpec const spec{ClassKind::connected_digraphs, n, true, connectivity};
    auto const      codes = detail::enumerate_codes(spec, false);
    auto const&     st    = StateTable::get(n);

    auto partials = detail::parallel_shards(
        codes.size(),
        options.jobs,
        [n] { return CharacterizationPartial(n); },
        [&](CharacterizationPartial& p, std::size_t k) {
          Digraph const d = detail::from_adjacency_code(n, codes[k]);
          p.engine.run(d);
          auto const dist = p.engine.distances();
          std::optional<state_index> bad_length, bad_idempotent;
          for (state_index i : p.engine.members()) {
            if (!length_holds(theorem, st, n, i, dist[i]) && (!bad_length || i < *bad_length)) {
              bad_length = i;
            }
            if (theorem == Theorem::C3 && !st.is_idempotent(i)
                && (!bad_idempotent || i < *bad_idempotent)) {
              bad_idempotent = i;
            }
          }
          bool const length    = !bad_length.has_value();
          bool const structure = structure_holds(theorem, d);
          if (length && structure) {
            ++p.satisfying;
          } else if (length) {
            p.findings.push_back({codes[k], Direction::length_implies_structure, std::nullopt});
          } else if (structure) {
            p.findings.push_back({codes[k], Direction::structure_implies_length, bad_length});
          }
          // For bands, "every element idempotent" is a third equivalent form.
          if (theorem == Theorem::C3 && !bad_idempotent.has_value() && !structure) {
            p.findings.push_back({codes[k], Direction::length_implies_structure, std::nullopt});
          }
          if (theorem == Theorem::C3 && bad_idempotent.has_value() && structure) {
            p.findings.push_back(
                {codes[k], Direction::structure_implies_length, bad_idempotent});
          }
        });

    VerificationReport report{theorem, n};
    report.digraphs_checked = codes.size();
    std::vector<Finding> findings;
    for (auto& p : partials) {
      report.satisfying += p.satisfying;
      findings.insert(findings.end(), p.findings.begin(), p.findings.end());
    }
    std::sort(findings.begin(), findings.end(), [](Finding const& a, Finding const& b) {
      return std::tie(a.code, a.direction) < std::tie(b.code, b.direction);
    });
    findings.erase(std::unique(findings.begin(),
                               findings.end(),
                               [](Finding const& a, Finding const& b) {
                                 return a.code == b.code && a.direction == b.direction;
                               }),
                   findings.end());
    for (auto const& f : findings) {
      std::optional<Transformation> w;
      if (f.witness) {
        w = transformation_at(n, *f.witness);
      }
      report.counterexamples.push_back(
          {detail::from_adjacency_code(n, f.code), f.direction, std::move(w)});
    }
    report.holds = report.counterexamples.empty();
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Suites
  ////////////////////////////////////////////////////////////////////////

  SuiteReport verify_complete(std::size_t n) {
    require_range("verify_complete", n, 2, 6);
    SuiteReport rep{"complete", n};
    Explorer    engine(n);
    engine.run(family(Family::complete, n));
    auto const& st   = StateTable::get(n);
    auto const  dist = engine.distances();

    std::size_t const expected = power(n, n) - factorial(n);
    rep.add("|<K_n>| = n^n - n!",
            engine.profile().size() == expected,
            std::to_string(engine.profile().size()) + " elements, expected "
                + std::to_string(expected));
    bool                     members = true, formula = true;
    std::vector<std::string> log;
    for (state_index i = 0; i < state_count(n); ++i) {
      bool const singular = st.rank(i) < n;
      rep.items += singular;
      if (singular != (dist[i] != kNotMember)) {
        members = false;
        note(log, to_string(transformation_at(n, i)) + " membership");
      }
      if (singular && dist[i] != st.hi_bound(i)) {
        formula = false;
        note(log,
             to_string(transformation_at(n, i)) + ": " + std::to_string(dist[i]) + " vs "
                 + std::to_string(st.hi_bound(i)));
      }
    }
    rep.add("<K_n> is the set of singular maps", members, join(log));
    rep.add("l(K_n, alpha) = n + cycl - fix", formula, join(log));
    return rep;
  }

  SuiteReport verify_inequality_chain(std::size_t n, RunOptions const& options) {
    require_range("verify_inequality_chain", n, 2, 5);
    auto const  codes = detail::enumerate_codes({ClassKind::connected_digraphs, n}, false);
    auto const& st    = StateTable::get(n);
    struct Partial {
      explicit Partial(std::size_t n) : engine(n) {}
      Explorer                 engine;
      bool                     chain = true, constants = true;
      std::vector<std::string> log;
    };
    auto partials = detail::parallel_shards(
        codes.size(),
        options.jobs,
        [n] { return Partial(n); },
        [&](Partial& p, std::size_t k) {
          p.engine.run(detail::from_adjacency_code(n, codes[k]));
          auto const dist = p.engine.distances();
          for (state_index i : p.engine.members()) {
            std::size_t const hi = st.hi_bound(i);
            if (!(dist[i] >= hi && hi >= n - st.fix(i) && st.fix(i) <= st.rank(i))) {
              p.chain = false;
              note(p.log, to_string(transformation_at(n, i)));
            }
            if (st.rank(i) == 1 && dist[i] != n - 1) {
              p.constants = false;
              note(p.log, to_string(transformation_at(n, i)) + " constant");
            }
          }
        });
    SuiteReport              rep{"chain", n, codes.size()};
    bool                     chain = true, constants = true;
    std::vector<std::string> log;
    for (auto& p : partials) {
      chain     = chain && p.chain;
      constants = constants && p.constants;
      log.insert(log.end(), p.log.begin(), p.log.end());
    }
    rep.add("l >= n + cycl - fix >= n - fix >= n - rank", chain, join(log));
    rep.add("constant maps have length n - 1", constants, join(log));
    return rep;
  }

  SuiteReport verify_named_semigroups(std::size_t n) {
    require_range("verify_named_semigroups", n, 2, 5);
    SuiteReport rep{"named", n, 3};
    auto const& st = StateTable::get(n);

    auto compare = [&](Family f, auto predicate, char const* name) {
      Explorer engine(n);
      engine.run(family(f, n));
      auto const dist = engine.distances();
      bool       ok   = true;
      std::vector<std::string> log;
      for (state_index i = 0; i < state_count(n); ++i) {
        Transformation const a = transformation_at(n, i);
        bool const expected    = st.rank(i) < n && predicate(a);
        if (expected != (dist[i] != kNotMember)) {
          ok = false;
          note(log, to_string(a));
        }
      }
      rep.add(name, ok, join(log));
    };
    compare(Family::path, order_preserving, "<P_n> = order-preserving singular maps");
    compare(
        Family::directed_path,
        [](Transformation const& a) { return order_preserving(a) && extensive(a); },
        "<directed P_n> = order-preserving extensive singular maps");
    compare(Family::transitive_tournament, extensive,
            "<transitive tournament> = extensive singular maps");

    if (n >= 3) {
      auto const        all      = enumerate_class({ClassKind::all_digraphs, n});
      std::size_t const singular = power(n, n) - factorial(n);
      bool              ok       = true;
      std::vector<std::string> log;
      Explorer                 engine(n);
      for (auto const& d : all) {
        engine.run(d);
        bool const full = engine.profile().size() == singular;
        if (full != contains_strong_tournament(d)) {
          ok = false;
          note(log, edge_list(d));
        }
      }
      rep.items += all.size();
      rep.add("<D> = Sing_n iff D contains a strong tournament", ok, join(log));
    }
    return rep;
  }

  SuiteReport verify_constructions(std::size_t n, RunOptions const& options) {
    require_range("verify_constructions", n, 3, 5);
    SuiteReport rep{"constructions", n};
    auto const  codes = detail::enumerate_codes({ClassKind::all_digraphs, n}, false);
    auto const& st    = StateTable::get(n);
    rep.items         = codes.size();

    struct Partial {
      explicit Partial(std::size_t n) : engine(n) {}
      Explorer engine;
      Tally    constant, band, star, star_bound;
    };
    auto partials = detail::parallel_shards(
        codes.size(),
        options.jobs,
        [n] { return Partial(n); },
        [&](Partial& p, std::size_t k) {
          Digraph const d = detail::from_adjacency_code(n, codes[k]);
          p.engine.run(d);
          auto const dist = p.engine.distances();
          for (vertex_type v = 1; v <= n; ++v) {
            auto const idx = index_of(Transformation::constant(n, v));
            if (dist[idx] == kNotMember) {
              continue;
            }
            auto const w = express_constant(d, v);
            p.constant.record(w.verified() && w.word.size() == dist[idx],
                              [&] { return edge_list(d) + " onto " + std::to_string(v); });
          }
          bool const band = band_bipartition(d).has_value();
          bool const star
              = is_connected_unilateral(d) && is_closed(d) && satisfies_star(d).holds;
          if (!band && !star) {
            return;
          }
          for (state_index i : p.engine.members()) {
            Transformation const a    = transformation_at(n, i);
            auto const           what = [&] { return edge_list(d) + " " + to_string(a); };
            if (band) {
              auto const w = express_band(d, a);
              p.band.record(
                  w.verified() && w.word.size() == dist[i] && dist[i] == n - st.rank(i), what);
            }
            if (star) {
              auto const w = express_star_optimal(d, a);
              p.star.record(w.verified() && w.word.size() == dist[i], what);
              p.star_bound.record(w.optimal_claim && dist[i] == st.hi_bound(i), what);
            }
          }
        });
    Tally constant, band, star, star_bound;
    for (auto const& p : partials) {
      constant.merge(p.constant);
      band.merge(p.band);
      star.merge(p.star);
      star_bound.merge(p.star_bound);
    }
    rep.add("constant maps in n - 1 arcs", constant.ok(), constant.summary());
    rep.add("band words of length n - rank", band.ok(), band.summary());
    rep.add("closed (*) digraphs: component words are shortest", star.ok(), star.summary());
    rep.add("closed (*) digraphs: lengths equal n + cycl - fix", star_bound.ok(),
            star_bound.summary());

    {
      Explorer engine(n);
      engine.run(family(Family::complete, n));
      auto const dist = engine.distances();
      bool       ok   = true;
      for (state_index i : engine.members()) {
        auto const w = express_complete_optimal(transformation_at(n, i));
        ok           = ok && w.verified() && w.word.size() == dist[i];
      }
      rep.add("K_n words of length n + cycl - fix", ok);
    }

    auto const tournaments = enumerate_class({ClassKind::strong_tournaments, n});
    auto const parts       = partitions(n);
    bool       kernel_ok = true, image_ok = true, express_ok = true;
    std::vector<std::string> tlog;
    Explorer                 engine(n);
    for (auto const& t : tournaments) {
      engine.run(t);
      auto const        dist = engine.distances();
      std::size_t const diam = diameter(t);
      for (auto const& p : parts) {
        if (p.size() == n) {
          continue;
        }
        auto const w = idempotent_with_kernel(t, p);
        auto const i = index_of(w.target);
        if (!w.verified() || !w.target.is_idempotent() || kernel_partition(w.target) != p
            || w.word.size() != n - p.size() || dist[i] != w.word.size()) {
          kernel_ok = false;
          note(tlog, edge_list(t) + " kernel");
        }
      }
      for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<vertex_type> s;
        for (std::size_t v = 0; v < n; ++v) {
          if (mask >> v & 1) {
            s.push_back(static_cast<vertex_type>(v + 1));
          }
        }
        auto const w = idempotent_with_image(t, s);
        auto const i = index_of(w.target);
        if (!w.verified() || !w.target.is_idempotent() || w.target.image_set() != s
            || w.word.size() != n - s.size() || dist[i] != w.word.size()) {
          image_ok = false;
          note(tlog, edge_list(t) + " image");
        }
      }
      for (state_index i : engine.members()) {
        Transformation const a = transformation_at(n, i);
        auto const           w = tournament_express(t, a);
        std::size_t const    r = a.rank();
        if (!w.verified() || w.word.size() < dist[i]
            || w.word.size() > n + 6 * r * diam - 4 * r) {
          express_ok = false;
          note(tlog, edge_list(t) + " " + to_string(a));
        }
      }
    }
    rep.add("idempotents with any kernel in n - r arcs", kernel_ok, join(tlog));
    rep.add("idempotents with any image in n - r arcs", image_ok, join(tlog));
    rep.add("tournament words within n + 6 r diam - 4r", express_ok, join(tlog));

    bool cycles = true;
    std::vector<std::string> clog;
    for (auto kind : {PatternKind::gamma1, PatternKind::gamma2, PatternKind::gamma3,
                      PatternKind::gamma4}) {
      auto const c = cycle_witness(kind);
      if (orbit_stats(c.value).cycl == 0 || !uses_edges_of(c.word, c.digraph)
          || evaluate(c.word, c.digraph.size()) != c.value) {
        cycles = false;
        clog.push_back(to_string(kind));
      }
    }
    for (std::size_t k = 5; k <= 8; ++k) {
      auto const c = cycle_witness(PatternKind::theta, k);
      if (orbit_stats(c.value).cycl == 0 || !uses_edges_of(c.word, c.digraph)
          || evaluate(c.word, c.digraph.size()) != c.value) {
        cycles = false;
        clog.push_back("theta" + std::to_string(k));
      }
    }
    rep.add("forbidden patterns generate a cyclic orbit", cycles, join(clog));
    return rep;
  }

  SuiteReport verify_arc_lengths(std::size_t n) {
    require_range("verify_arc_lengths", n, 3, 6);
    auto const  tournaments = enumerate_class({ClassKind::strong_tournaments, n});
    SuiteReport rep{"arcs", n, tournaments.size()};
    bool        bfs = true, built = true;
    std::size_t arcs = 0;
    std::vector<std::string> log;
    Explorer                 engine(n);
    for (auto const& t : tournaments) {
      engine.run(t);
      auto const dist = engine.distances();
      auto const dm   = distances(t);
      for (vertex_type u = 1; u <= n; ++u) {
        for (vertex_type v = 1; v <= n; ++v) {
          if (u == v || t.has_edge(u, v)) {
            continue;
          }
          ++arcs;
          std::size_t const expected = tournament_arc_length(dm(u, v));
          auto const        i        = index_of(Arc{u, v}.as_transformation(n));
          if (dist[i] != expected) {
            bfs = false;
            note(log, edge_list(t) + " (" + std::to_string(u) + "->" + std::to_string(v) + ")");
          }
          auto const w = tournament_arc_word(t, u, v);
          if (!w.verified() || w.word.size() != expected) {
            built = false;
            note(log, edge_list(t) + " word (" + std::to_string(u) + "->" + std::to_string(v) + ")");
          }
        }
      }
    }
    rep.add("l(T, (u->v)) = 4 d(u, v) - 2", bfs, std::to_string(arcs) + " arcs; " + join(log));
    rep.add("explicit arc words have length 4 d(u, v) - 2", built, join(log));
    return rep;
  }

  SuiteReport verify_acyclic(std::size_t n, RunOptions const& options) {
    require_range("verify_acyclic", n, 3, 7);
    SuiteReport rep{"acyclic", n};
    auto formula = [n](std::size_t r) { return (n - r) * (n + r - 3) / 2 + 1; };

    if (n <= 6) {
      ClassSpec const spec{ClassKind::acyclic_digraphs, n};
      auto const      table = extremal_table(spec, options);
      rep.items             = table.enumerated;
      bool                     ok = true;
      std::vector<std::string> parts;
      for (std::size_t r = 2; r < n; ++r) {
        auto const* row = table.row(r);
        ok              = ok && row != nullptr && row->max == formula(r);
        parts.push_back("r=" + std::to_string(r) + ": "
                        + (row && row->max ? std::to_string(*row->max) : "-") + "/"
                        + std::to_string(formula(r)));
      }
      rep.add("l_max over acyclic digraphs = (n-r)(n+r-3)/2 + 1", ok, join(parts));
      std::size_t overall = 0;
      for (auto const& row : table.rows) {
        overall = std::max(overall, row.max.value_or(0));
      }
      rep.add("overall maximum = (n^2 - 3n + 4)/2",
              overall == (n * n - 3 * n + 4) / 2 && table.row(2)->max == overall,
              std::to_string(overall));

      auto const  codes = detail::enumerate_codes(spec, false);
      Explorer    engine(n);
      bool        longest = true;
      std::vector<std::string> log;
      for (auto c : codes) {
        Digraph const d = detail::from_adjacency_code(n, c);
        engine.run(d);
        std::size_t const lp = longest_paths(d).max_finite();
        std::size_t const l  = engine.profile().length(n - 1).value_or(0);
        if (l != lp) {
          longest = false;
          note(log, edge_list(d));
        }
      }
      rep.add("l(A, n-1) = longest path of A", longest, join(log));
    }

    auto const  q = explore(family(Family::q, n));
    bool        ok = true;
    std::vector<std::string> parts;
    for (std::size_t r = 2; r < n; ++r) {
      auto const w = acyclic_witness(n, r);
      auto const l = length_of(q, w.beta);
      ok = ok && w.beta.rank() == r && w.lower_bound == formula(r) && l == formula(r);
      parts.push_back("r=" + std::to_string(r) + ": " + (l ? std::to_string(*l) : "-"));
    }
    rep.add("l(Q_n, beta_r) = (n-r)(n+r-3)/2 + 1", ok, join(parts));
    return rep;
  }

}  // namespace arcwords
