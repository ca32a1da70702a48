#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "arcwords/digraph.hpp"
#include "arcwords/error.hpp"
#include "oracle.hpp"

using namespace arcwords;

namespace {

  Digraph theta3() {
    return Digraph(3, {{1, 2}, {2, 3}, {3, 1}});
  }

  std::set<std::pair<vertex_type, vertex_type>> edge_set(Digraph const& d) {
    std::set<std::pair<vertex_type, vertex_type>> s;
    for (auto const& e : d.edges()) {
      s.emplace(e.from, e.to);
    }
    return s;
  }

}  // namespace

TEST_CASE("parse_digraph reads the text format", "[digraph]") {
  auto d = parse_digraph("digraph 3\n1 2\n2 3\n3 1\n");
  CHECK(d == theta3());

  auto q = parse_digraph("# Q_5\ndigraph 5\n1 2\n2 3\n\n3 4\n4 5\n3 5\n");
  CHECK(q == family(Family::q, 5));
  CHECK(parse_digraph(to_text(q)) == q);
}

TEST_CASE("parse_digraph rejects bad input with a kind and a line", "[digraph]") {
  auto kind_of = [](std::string_view text) {
    try {
      parse_digraph(text);
    } catch (ParseError const& e) {
      return std::make_pair(e.kind(), e.line());
    }
    FAIL("no ParseError for " << text);
    return std::make_pair(ParseError::Kind::malformed, std::size_t(0));
  };
  CHECK(kind_of("digraph 2\n1 1") == std::make_pair(ParseError::Kind::loop, std::size_t(2)));
  CHECK(kind_of("digraph 2\n1 3").first == ParseError::Kind::out_of_range);
  CHECK(kind_of("digraph 3\n1 2\n2 3\n1 2").first == ParseError::Kind::duplicate_edge);
  CHECK(kind_of("graph 3\n1 2").first == ParseError::Kind::bad_header);
  CHECK(kind_of("digraph 3\n1 x").first == ParseError::Kind::malformed);
}

TEST_CASE("Digraph edge bookkeeping", "[digraph]") {
  Digraph d(4);
  d.add_edge(1, 2).add_edge(2, 3).add_edge(1, 3);
  CHECK(d.edge_count() == 3);
  CHECK(d.out_degree(1) == 2);
  CHECK(d.in_degree(3) == 2);
  CHECK(d.out_neighbours(1) == std::vector<vertex_type>{2, 3});
  CHECK_THROWS_AS(d.add_edge(1, 1), PreconditionError);
  CHECK_THROWS_AS(d.add_edge(1, 2), PreconditionError);
  CHECK_THROWS_AS(d.add_edge(1, 5), PreconditionError);
  d.remove_edge(1, 3);
  CHECK_FALSE(d.has_edge(1, 3));

  std::vector<vertex_type> sub{3, 2};
  CHECK(d.induced(sub) == Digraph(2, {{2, 1}}));
}

TEST_CASE("closure adds reverses of cycle edges", "[digraph]") {
  CHECK(closure(theta3()) == family(Family::complete, 3));
  CHECK(closure(family(Family::circulant, 5)) == family(Family::complete, 5));
  auto q = family(Family::q, 6);
  CHECK(closure(q) == q);
  CHECK(closure(family(Family::transitive_tournament, 5)) == family(Family::transitive_tournament, 5));
}

TEST_CASE("strong components and condensation order", "[digraph]") {
  auto const one = strong_components(theta3());
  REQUIRE(one.components.size() == 1);
  CHECK(one.terminal[0]);

  auto const g3 = strong_components(family_from_spec("gamma3"));
  REQUIRE(g3.components.size() == 2);
  auto const big   = g3.component_of[0];
  auto const small = g3.component_of[3];
  CHECK(g3.components[big] == std::vector<vertex_type>{1, 2, 3});
  CHECK(g3.components[small] == std::vector<vertex_type>{4});
  CHECK(g3.terminal[small]);
  CHECK_FALSE(g3.terminal[big]);

  auto const t4 = strong_components(family(Family::transitive_tournament, 4));
  CHECK(t4.components.size() == 4);
  for (std::size_t c = 0; c < 4; ++c) {
    CHECK(t4.terminal[c] == (t4.components[c] == std::vector<vertex_type>{4}));
  }
}

TEST_CASE("strong components agree with mutual reachability", "[digraph][property]") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto const  d    = oracle::random_digraph(6, 0.25, rng);
    auto const  dist = oracle::all_pairs(d);
    auto const  sc   = strong_components(d);
    for (std::size_t u = 0; u < 6; ++u) {
      for (std::size_t v = 0; v < 6; ++v) {
        bool const same = oracle::reachable(dist, u, v) && oracle::reachable(dist, v, u);
        CHECK(same == (sc.component_of[u] == sc.component_of[v]));
      }
    }
    // Edges between components respect the topological order.
    std::vector<std::size_t> pos(sc.components.size());
    for (std::size_t i = 0; i < sc.condensation_order.size(); ++i) {
      pos[sc.condensation_order[i]] = i;
    }
    for (auto const& e : d.edges()) {
      auto const a = sc.component_of[e.from - 1], b = sc.component_of[e.to - 1];
      if (a != b) {
        CHECK(pos[a] < pos[b]);
        CHECK_FALSE(sc.terminal[a]);
      }
    }
  }
}

TEST_CASE("distances and longest paths", "[digraph]") {
  auto const k5 = family(Family::circulant, 5);
  CHECK(diameter(k5) == 2);
  auto const q5 = family(Family::q, 5);
  auto const dq = distances(q5);
  CHECK(dq(1, 4) == 3);
  CHECK(dq(4, 1) == kUnreachable);
  auto const lp = longest_paths(q5);
  CHECK(lp(1, 4) == 3);
  CHECK(lp(1, 5) == 4);
  CHECK(lp(3, 5) == 2);
  CHECK_THROWS_AS(longest_paths(theta3()), PreconditionError);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto const d  = oracle::random_digraph(7, 0.3, rng);
    auto const fw = oracle::all_pairs(d);
    auto const m  = distances(d);
    for (std::size_t u = 1; u <= 7; ++u) {
      CHECK(m(u, u) == 0);
      for (std::size_t v = 1; v <= 7; ++v) {
        if (oracle::reachable(fw, u - 1, v - 1)) {
          CHECK(m(u, v) == fw[u - 1][v - 1]);
        } else {
          CHECK(m(u, v) == kUnreachable);
        }
      }
    }
  }
}

TEST_CASE("predicates on named digraphs", "[digraph]") {
  auto const t = predicates(theta3());
  CHECK_FALSE(t.is_closed);
  CHECK(t.is_strong_tournament);
  CHECK(is_strong_tournament(family(Family::pi, 5)));
  CHECK(is_strong_tournament(family(Family::circulant, 7)));
  CHECK_FALSE(is_strong_tournament(family(Family::transitive_tournament, 4)));
  auto const q = predicates(family(Family::q, 5));
  CHECK(q.is_acyclic);
  CHECK(q.is_connected_unilateral);
  CHECK(q.is_connected_weak);

  Digraph two_sinks(3, {{1, 2}, {1, 3}});
  CHECK(is_connected_weak(two_sinks));
  CHECK_FALSE(is_connected_unilateral(two_sinks));
  CHECK(is_closed(family(Family::complete, 4)));
}

TEST_CASE("contains_strong_tournament", "[digraph]") {
  CHECK(contains_strong_tournament(family(Family::complete, 4)));
  CHECK(contains_strong_tournament(family(Family::pi, 6)));
  CHECK_FALSE(contains_strong_tournament(family(Family::transitive_tournament, 4)));
  CHECK_FALSE(contains_strong_tournament(family(Family::path, 4)));
  // K_4 minus both edges between 1 and 2 has no tournament at all.
  auto d = family(Family::complete, 4);
  d.remove_edge(1, 2).remove_edge(2, 1);
  CHECK_FALSE(contains_strong_tournament(d));
}

TEST_CASE("property (*) and property (**)", "[digraph]") {
  CHECK(satisfies_star(family(Family::complete, 5)).holds);
  CHECK(satisfies_star(family(Family::directed_path, 3)).holds);

  auto const g1 = family_from_spec("gamma1");
  auto const s  = satisfies_star(g1);
  REQUIRE_FALSE(s.holds);
  REQUIRE(s.witness);
  auto const w  = *s.witness;
  auto const dd = distances(g1);
  CHECK(g1.has_edge(w.v0, w.v1));
  CHECK(g1.has_edge(w.v1, w.v2));
  CHECK(dd(w.v0, w.v2) == 2);
  CHECK((g1.has_edge(w.v1, w.offending) || g1.has_edge(w.v2, w.offending)));
  CHECK(w.offending != w.v0);
  CHECK(w.offending != w.v1);
  CHECK(w.offending != w.v2);

  CHECK(satisfies_star_star(family(Family::directed_path, 6)));
  CHECK(satisfies_star_star(closure(theta3())));
  CHECK_FALSE(satisfies_star_star(closure(family(Family::circulant, 5))));
}

TEST_CASE("find_forbidden locates patterns", "[digraph]") {
  auto const g3 = find_forbidden(family_from_spec("gamma3"));
  REQUIRE(g3);
  CHECK(g3->kind == PatternKind::gamma3);
  CHECK(g3->embedding == std::vector<vertex_type>{1, 2, 3, 4});

  auto const k5 = family(Family::circulant, 5);
  auto const c  = find_forbidden(k5);
  REQUIRE(c);
  CHECK(c->kind == PatternKind::theta);
  CHECK(c->order == 5);
  auto const& emb = c->embedding;
  REQUIRE(emb.size() == 5);
  CHECK(std::set<vertex_type>(emb.begin(), emb.end()).size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(k5.has_edge(emb[i], emb[(i + 1) % 5]));
  }

  CHECK_FALSE(find_forbidden(family(Family::directed_path, 6)));
  CHECK_FALSE(find_forbidden(family(Family::complete, 3)));
  CHECK(find_forbidden(family(Family::complete, 4))->kind == PatternKind::gamma3);
}

TEST_CASE("every embedding returned by find_forbidden is a subdigraph", "[digraph][property]") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    auto const d = oracle::random_digraph(6, 0.35, rng);
    auto const f = find_forbidden(d);
    if (!f) {
      continue;
    }
    auto const pattern = f->kind == PatternKind::theta ? pattern_digraph(PatternKind::theta, f->order)
                                                       : pattern_digraph(f->kind);
    REQUIRE(f->embedding.size() == pattern.size());
    for (auto const& e : pattern.edges()) {
      CHECK(d.has_edge(f->embedding[e.from - 1], f->embedding[e.to - 1]));
    }
  }
}

TEST_CASE("band_bipartition", "[digraph]") {
  Digraph star(4, {{1, 4}, {2, 4}, {3, 4}});
  auto    b = band_bipartition(star);
  REQUIRE(b);
  CHECK(b->sources == std::vector<vertex_type>{1, 2, 3});
  CHECK(b->sinks == std::vector<vertex_type>{4});

  auto k2 = band_bipartition(family(Family::complete, 2));
  REQUIRE(k2);
  CHECK(k2->k2_exception);

  CHECK_FALSE(band_bipartition(family(Family::directed_path, 3)));
}

TEST_CASE("named families match their definitions", "[digraph]") {
  CHECK(edge_set(family(Family::circulant, 5))
        == std::set<std::pair<vertex_type, vertex_type>>{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
                                                          {1, 3}, {2, 4}, {3, 5}, {4, 1}, {5, 2}});
  auto const pi5 = family(Family::pi, 5);
  std::set<std::pair<vertex_type, vertex_type>> expected;
  for (vertex_type i = 1; i <= 5; ++i) {
    expected.emplace(i, i % 5 + 1);
    for (vertex_type j = 1; j + 1 < i; ++j) {
      expected.emplace(i, j);
    }
  }
  CHECK(edge_set(pi5) == expected);
  CHECK(is_tournament(pi5));
  CHECK(edge_set(family(Family::q, 5))
        == std::set<std::pair<vertex_type, vertex_type>>{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(family_from_spec("K:4") == family(Family::complete, 4));
  CHECK(family_from_spec("theta:3") == theta3());
  CHECK_THROWS_AS(family(Family::circulant, 4), PreconditionError);
  CHECK_THROWS_AS(family_from_spec("nope:3"), PreconditionError);
  CHECK_THROWS_AS(family_from_spec("K:x"), PreconditionError);
}

TEST_CASE("canonical forms are isomorphism invariants", "[digraph]") {
  auto const     t  = theta3();
  auto const     c  = canonical_form(t);
  std::vector<vertex_type> perm{1, 2, 3};
  do {
    CHECK(canonical_form(t.relabelled(perm)) == c);
  } while (std::next_permutation(perm.begin(), perm.end()));

  CHECK(canonical_form(family(Family::directed_path, 3)) != canonical_form(family(Family::path, 3)));

  // The 8 labelled tournaments on [3] fall into 2 classes.
  std::set<CanonicalForm> forms;
  for (int mask = 0; mask < 8; ++mask) {
    Digraph d(3);
    d.add_edge(mask & 1 ? 1 : 2, mask & 1 ? 2 : 1);
    d.add_edge(mask & 2 ? 1 : 3, mask & 2 ? 3 : 1);
    d.add_edge(mask & 4 ? 2 : 3, mask & 4 ? 3 : 2);
    forms.insert(canonical_form(d));
  }
  CHECK(forms.size() == 2);
}

TEST_CASE("canonical forms separate exactly the oracle classes", "[digraph][property]") {
  for (std::size_t n = 2; n <= 4; ++n) {
    std::map<oracle::Edges, CanonicalForm> by_oracle;
    std::set<CanonicalForm>                forms;
    for (auto const& d : oracle::labelled_digraphs(n)) {
      auto const key  = oracle::canonical(d);
      auto const form = canonical_form(d);
      auto [it, inserted] = by_oracle.emplace(key, form);
      CHECK(it->second == form);
      forms.insert(form);
      // The representative is isomorphic to d and has the same encoding.
      auto const rep = from_canonical_form(form);
      CHECK(oracle::canonical(rep) == key);
      CHECK(canonical_form(rep) == form);
      CHECK(CanonicalForm::from_hex(form.to_hex()) == form);
    }
    CHECK(forms.size() == by_oracle.size());
  }
}

TEST_CASE("canonical forms of random relabellings agree", "[digraph][property]") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t const n = 3 + trial % 6;
    auto const        d = oracle::random_digraph(n, 0.4, rng);
    auto const        p = oracle::random_permutation(n, rng);
    CHECK(canonical_form(d.relabelled(p)) == canonical_form(d));
  }
  CHECK_THROWS_AS(canonical_form(Digraph(9)), SizeLimitError);
  CHECK_THROWS_AS(from_canonical_form(CanonicalForm::from_hex("03ff")), PreconditionError);
}
