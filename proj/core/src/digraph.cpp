#include "arcwords/digraph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>

#include "arcwords/error.hpp"

namespace arcwords {

  ParseError::ParseError(Kind kind, std::size_t line, std::string const& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        _kind(kind),
        _line(line) {}

  char const* to_string(ParseError::Kind kind) noexcept {
    switch (kind) {
      case ParseError::Kind::malformed:
        return "malformed";
      case ParseError::Kind::bad_header:
        return "bad_header";
      case ParseError::Kind::loop:
        return "loop";
      case ParseError::Kind::out_of_range:
        return "out_of_range";
      case ParseError::Kind::duplicate_edge:
        return "duplicate_edge";
    }
    return "unknown";
  }

  namespace {
    inline vertex_mask bit(vertex_type v) {
      return vertex_mask(1) << (v - 1);
    }

    inline vertex_mask full_mask(std::size_t n) {
      return n == 32 ? ~vertex_mask(0) : (vertex_mask(1) << n) - 1;
    }

    template <typename F>
    void for_each_bit(vertex_mask m, F&& f) {
      while (m != 0) {
        int b = std::countr_zero(m);
        f(static_cast<vertex_type>(b + 1));
        m &= m - 1;
      }
    }

    // reach[v - 1] = vertices reachable from v by a path of length >= 1.
    std::vector<vertex_mask> reachability(Digraph const& d) {
      std::size_t const        n = d.size();
      std::vector<vertex_mask> reach(n);
      for (vertex_type v = 1; v <= n; ++v) {
        reach[v - 1] = d.out_mask(v);
      }
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
          if (reach[i] & (vertex_mask(1) << k)) {
            reach[i] |= reach[k];
          }
        }
      }
      return reach;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Digraph
  ////////////////////////////////////////////////////////////////////////

  Digraph::Digraph(std::size_t n) : _n(n) {
    if (n == 0 || n > kMaxVertices) {
      throw PreconditionError("digraph size must be in [1, " + std::to_string(kMaxVertices)
                              + "], found " + std::to_string(n));
    }
  }

  Digraph::Digraph(std::size_t n, std::span<Edge const> edges) : Digraph(n) {
    for (auto const& e : edges) {
      add_edge(e.from, e.to);
    }
  }

  Digraph Digraph::from_out_masks(std::size_t n, std::span<vertex_mask const> rows) {
    Digraph d(n);
    if (rows.size() != n) {
      throw PreconditionError("expected one adjacency row per vertex");
    }
    for (vertex_type u = 1; u <= n; ++u) {
      vertex_mask row = rows[u - 1];
      if ((row & ~full_mask(n)) != 0 || (row & bit(u)) != 0) {
        throw PreconditionError("adjacency row " + std::to_string(u) + " is invalid");
      }
      d._out[u - 1] = row;
      for_each_bit(row, [&](vertex_type v) { d._in[v - 1] |= bit(u); });
    }
    return d;
  }

  std::size_t Digraph::index(vertex_type v) const {
    if (v < 1 || v > _n) {
      throw PreconditionError("vertex " + std::to_string(v) + " is not in [1, "
                              + std::to_string(_n) + "]");
    }
    return v - 1;
  }

  bool Digraph::has_edge(vertex_type u, vertex_type v) const {
    return (_out[index(u)] & (vertex_mask(1) << index(v))) != 0;
  }

  std::size_t Digraph::out_degree(vertex_type v) const {
    return std::popcount(out_mask(v));
  }

  std::size_t Digraph::in_degree(vertex_type v) const {
    return std::popcount(in_mask(v));
  }

  std::size_t Digraph::degree(vertex_type v) const {
    return std::popcount(out_mask(v) | in_mask(v));
  }

  std::size_t Digraph::edge_count() const noexcept {
    std::size_t m = 0;
    for (std::size_t i = 0; i < _n; ++i) {
      m += std::popcount(_out[i]);
    }
    return m;
  }

  std::vector<Edge> Digraph::edges() const {
    std::vector<Edge> result;
    result.reserve(edge_count());
    for (vertex_type u = 1; u <= _n; ++u) {
      for_each_bit(_out[u - 1], [&](vertex_type v) { result.push_back({u, v}); });
    }
    return result;
  }

  std::vector<vertex_type> Digraph::out_neighbours(vertex_type v) const {
    std::vector<vertex_type> result;
    for_each_bit(out_mask(v), [&](vertex_type w) { result.push_back(w); });
    return result;
  }

  std::vector<vertex_type> Digraph::in_neighbours(vertex_type v) const {
    std::vector<vertex_type> result;
    for_each_bit(in_mask(v), [&](vertex_type w) { result.push_back(w); });
    return result;
  }

  Digraph& Digraph::add_edge(vertex_type u, vertex_type v) {
    std::size_t i = index(u), j = index(v);
    if (i == j) {
      throw PreconditionError("loop at vertex " + std::to_string(u));
    }
    if (_out[i] & (vertex_mask(1) << j)) {
      throw PreconditionError("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v)
                              + ")");
    }
    _out[i] |= vertex_mask(1) << j;
    _in[j] |= vertex_mask(1) << i;
    return *this;
  }

  Digraph& Digraph::remove_edge(vertex_type u, vertex_type v) {
    std::size_t i = index(u), j = index(v);
    _out[i] &= ~(vertex_mask(1) << j);
    _in[j] &= ~(vertex_mask(1) << i);
    return *this;
  }

  Digraph Digraph::induced(std::span<vertex_type const> vertices) const {
    Digraph result(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (std::size_t j = 0; j < vertices.size(); ++j) {
        if (i != j && has_edge(vertices[i], vertices[j])) {
          result.add_edge(i + 1, j + 1);
        }
      }
    }
    return result;
  }

  Digraph Digraph::relabelled(std::span<vertex_type const> perm) const {
    if (perm.size() != _n) {
      throw PreconditionError("relabelling has the wrong length");
    }
    vertex_mask seen = 0;
    for (auto v : perm) {
      index(v);
      seen |= bit(v);
    }
    if (seen != full_mask(_n)) {
      throw PreconditionError("relabelling is not a permutation");
    }
    Digraph result(_n);
    for (auto const& e : edges()) {
      result.add_edge(perm[e.from - 1], perm[e.to - 1]);
    }
    return result;
  }

  bool operator==(Digraph const& x, Digraph const& y) noexcept {
    return x._n == y._n && std::equal(x._out.begin(), x._out.begin() + x._n, y._out.begin());
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::string_view> split_ws(std::string_view line) {
      std::vector<std::string_view> tokens;
      std::size_t                   i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
          ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
          ++j;
        }
        if (j > i) {
          tokens.push_back(line.substr(i, j - i));
        }
        i = j;
      }
      return tokens;
    }

    std::optional<std::size_t> parse_size(std::string_view token) {
      std::size_t value = 0;
      auto [ptr, ec]    = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        return std::nullopt;
      }
      return value;
    }
  }  // namespace

  Digraph parse_digraph(std::string_view text) {
    using Kind = ParseError::Kind;
    std::optional<Digraph> result;
    std::size_t            line_no = 0;
    std::size_t            pos     = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view line = text.substr(pos, end - pos);
      pos                   = end + 1;
      ++line_no;

      auto tokens = split_ws(line);
      if (tokens.empty() || tokens.front().starts_with('#')) {
        continue;
      }
      if (!result) {
        if (tokens.size() != 2 || tokens[0] != "digraph") {
          throw ParseError(Kind::bad_header, line_no, "expected `digraph <n>`");
        }
        auto n = parse_size(tokens[1]);
        if (!n || *n == 0 || *n > kMaxVertices) {
          throw ParseError(Kind::bad_header, line_no,
                           "vertex count must be an integer in [1, "
                               + std::to_string(kMaxVertices) + "]");
        }
        result.emplace(*n);
        continue;
      }
      if (tokens.size() != 2) {
        throw ParseError(Kind::malformed, line_no, "expected `<u> <v>`");
      }
      auto u = parse_size(tokens[0]);
      auto v = parse_size(tokens[1]);
      if (!u || !v) {
        throw ParseError(Kind::malformed, line_no, "vertices must be positive integers");
      }
      std::size_t const n = result->size();
      if (*u < 1 || *u > n || *v < 1 || *v > n) {
        throw ParseError(Kind::out_of_range, line_no,
                         "vertex out of range [1, " + std::to_string(n) + "]");
      }
      if (*u == *v) {
        throw ParseError(Kind::loop, line_no, "loop at vertex " + std::to_string(*u));
      }
      if (result->has_edge(*u, *v)) {
        throw ParseError(Kind::duplicate_edge, line_no,
                         "duplicate edge " + std::to_string(*u) + " " + std::to_string(*v));
      }
      result->add_edge(*u, *v);
    }
    if (!result) {
      throw ParseError(Kind::bad_header, 0, "missing `digraph <n>` header");
    }
    return *result;
  }

  std::string to_text(Digraph const& d) {
    std::ostringstream os;
    os << "digraph " << d.size() << '\n';
    for (auto const& e : d.edges()) {
      os << e.from << ' ' << e.to << '\n';
    }
    return os.str();
  }

  std::ostream& operator<<(std::ostream& os, Digraph const& d) {
    os << "Digraph(" << d.size() << ", {";
    bool first = true;
    for (auto const& e : d.edges()) {
      os << (first ? "" : ", ") << '(' << e.from << ',' << e.to << ')';
      first = false;
    }
    return os << "})";
  }

  ////////////////////////////////////////////////////////////////////////
  // Strong components and closure
  ////////////////////////////////////////////////////////////////////////

  StrongDecomposition strong_components(Digraph const& d) {
    std::size_t const n     = d.size();
    auto              reach = reachability(d);
    for (std::size_t v = 0; v < n; ++v) {
      reach[v] |= vertex_mask(1) << v;
    }

    StrongDecomposition result;
    result.component_of.assign(n, n);
    std::vector<vertex_mask> masks;
    for (std::size_t v = 0; v < n; ++v) {
      if (result.component_of[v] != n) {
        continue;
      }
      vertex_mask comp = 0;
      for (std::size_t w = 0; w < n; ++w) {
        if ((reach[v] >> w & 1) && (reach[w] >> v & 1)) {
          comp |= vertex_mask(1) << w;
        }
      }
      std::vector<vertex_type> members;
      for_each_bit(comp, [&](vertex_type w) {
        members.push_back(w);
        result.component_of[w - 1] = result.components.size();
      });
      result.components.push_back(std::move(members));
      masks.push_back(comp);
    }

    std::size_t const k = result.components.size();
    result.terminal.assign(k, true);
    std::vector<std::size_t> reach_count(k);
    for (std::size_t c = 0; c < k; ++c) {
      vertex_type rep = result.components[c].front();
      reach_count[c]  = std::popcount(reach[rep - 1]);
      vertex_mask out = 0;
      for (auto v : result.components[c]) {
        out |= d.out_mask(v);
      }
      result.terminal[c] = (out & ~masks[c]) == 0;
    }
    // A component reaching another reaches strictly more vertices.
    result.condensation_order.resize(k);
    std::iota(result.condensation_order.begin(), result.condensation_order.end(), 0);
    std::stable_sort(result.condensation_order.begin(),
                     result.condensation_order.end(),
                     [&](std::size_t a, std::size_t b) { return reach_count[a] > reach_count[b]; });
    return result;
  }

  Digraph closure(Digraph const& d) {
    auto    sc     = strong_components(d);
    Digraph result = d;
    for (auto const& e : d.edges()) {
      if (sc.component_of[e.from - 1] == sc.component_of[e.to - 1]
          && !result.has_edge(e.to, e.from)) {
        result.add_edge(e.to, e.from);
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Distances
  ////////////////////////////////////////////////////////////////////////

  std::size_t DistanceMatrix::max_finite() const noexcept {
    std::size_t best = 0;
    for (auto x : _d) {
      if (x != kUnreachable) {
        best = std::max(best, x);
      }
    }
    return best;
  }

  DistanceMatrix distances(Digraph const& d) {
    std::size_t const n = d.size();
    DistanceMatrix    result(n);
    for (vertex_type s = 1; s <= n; ++s) {
      vertex_mask seen     = bit(s);
      vertex_mask frontier = bit(s);
      std::size_t depth    = 0;
      while (frontier != 0) {
        vertex_mask next = 0;
        for_each_bit(frontier, [&](vertex_type v) {
          result.at(s, v) = depth;
          next |= d.out_mask(v);
        });
        next &= ~seen;
        seen |= next;
        frontier = next;
        ++depth;
      }
    }
    return result;
  }

  std::size_t diameter(Digraph const& d) {
    return distances(d).max_finite();
  }

  namespace {
    std::optional<std::vector<vertex_type>> topological_order(Digraph const& d) {
      std::size_t const        n = d.size();
      std::vector<std::size_t> indeg(n);
      for (vertex_type v = 1; v <= n; ++v) {
        indeg[v - 1] = d.in_degree(v);
      }
      std::vector<vertex_type> order;
      for (vertex_type v = 1; v <= n; ++v) {
        if (indeg[v - 1] == 0) {
          order.push_back(v);
        }
      }
      for (std::size_t i = 0; i < order.size(); ++i) {
        for_each_bit(d.out_mask(order[i]), [&](vertex_type w) {
          if (--indeg[w - 1] == 0) {
            order.push_back(w);
          }
        });
      }
      if (order.size() != n) {
        return std::nullopt;
      }
      return order;
    }
  }  // namespace

  DistanceMatrix longest_paths(Digraph const& d) {
    auto order = topological_order(d);
    if (!order) {
      throw PreconditionError("longest paths requested on a digraph with a directed cycle");
    }
    std::size_t const n = d.size();
    DistanceMatrix    result(n);
    for (vertex_type s = 1; s <= n; ++s) {
      result.at(s, s) = 0;
      for (auto v : *order) {
        if (result(s, v) == kUnreachable) {
          continue;
        }
        for_each_bit(d.out_mask(v), [&](vertex_type w) {
          std::size_t cand = result(s, v) + 1;
          if (result(s, w) == kUnreachable || result(s, w) < cand) {
            result.at(s, w) = cand;
          }
        });
      }
    }
    return result;
  }

  Metrics metrics(Digraph const& d, bool with_longest_path) {
    Metrics m{distances(d), 0, std::nullopt};
    m.diameter = m.distance.max_finite();
    if (with_longest_path) {
      m.longest_path = longest_paths(d);
    }
    return m;
  }

  ////////////////////////////////////////////////////////////////////////
  // Predicates
  ////////////////////////////////////////////////////////////////////////

  bool is_closed(Digraph const& d) {
    return closure(d) == d;
  }

  bool is_strong(Digraph const& d) {
    auto const        reach = reachability(d);
    std::size_t const n     = d.size();
    if (n == 1) {
      return true;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if ((reach[v] | (vertex_mask(1) << v)) != full_mask(n)) {
        return false;
      }
    }
    return true;
  }

  bool is_tournament(Digraph const& d) {
    for (vertex_type u = 1; u <= d.size(); ++u) {
      for (vertex_type v = u + 1; v <= d.size(); ++v) {
        if (d.has_edge(u, v) == d.has_edge(v, u)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_strong_tournament(Digraph const& d) {
    return is_tournament(d) && is_strong(d);
  }

  bool is_acyclic(Digraph const& d) {
    return topological_order(d).has_value();
  }

  bool is_connected_unilateral(Digraph const& d) {
    auto const reach = reachability(d);
    for (std::size_t u = 0; u < d.size(); ++u) {
      for (std::size_t v = u + 1; v < d.size(); ++v) {
        if (!(reach[u] >> v & 1) && !(reach[v] >> u & 1)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_connected_weak(Digraph const& d) {
    std::size_t const n        = d.size();
    vertex_mask       seen     = 1;
    vertex_mask       frontier = 1;
    while (frontier != 0) {
      vertex_mask next = 0;
      for_each_bit(frontier, [&](vertex_type v) { next |= d.out_mask(v) | d.in_mask(v); });
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == full_mask(n);
  }

  Predicates predicates(Digraph const& d) {
    Predicates p{};
    p.is_closed               = is_closed(d);
    p.is_strong               = is_strong(d);
    p.is_tournament           = is_tournament(d);
    p.is_strong_tournament    = p.is_tournament && p.is_strong;
    p.is_acyclic              = is_acyclic(d);
    p.is_connected_unilateral = is_connected_unilateral(d);
    p.is_connected_weak       = is_connected_weak(d);
    return p;
  }

  bool contains_strong_tournament(Digraph const& d) {
    std::size_t const n = d.size();
    if (n > 7) {
      throw SizeLimitError("contains_strong_tournament supports n <= 7");
    }
    std::vector<Edge>        symmetric;
    std::vector<vertex_mask> base(n, 0);
    for (vertex_type u = 1; u <= n; ++u) {
      for (vertex_type v = u + 1; v <= n; ++v) {
        bool fwd = d.has_edge(u, v), bwd = d.has_edge(v, u);
        if (!fwd && !bwd) {
          return false;
        } else if (fwd && bwd) {
          symmetric.push_back({u, v});
        } else if (fwd) {
          base[u - 1] |= bit(v);
        } else {
          base[v - 1] |= bit(u);
        }
      }
    }
    std::uint64_t const choices = std::uint64_t(1) << symmetric.size();
    for (std::uint64_t c = 0; c < choices; ++c) {
      std::vector<vertex_mask> rows = base;
      for (std::size_t i = 0; i < symmetric.size(); ++i) {
        auto [u, v] = symmetric[i];
        if (c >> i & 1) {
          rows[u - 1] |= bit(v);
        } else {
          rows[v - 1] |= bit(u);
        }
      }
      if (is_strong(Digraph::from_out_masks(n, rows))) {
        return true;
      }
    }
    return false;
  }

  StarCheck satisfies_star(Digraph const& d) {
    for (vertex_type v0 = 1; v0 <= d.size(); ++v0) {
      vertex_mask const near = d.out_mask(v0) | bit(v0);
      for (auto v1 : d.out_neighbours(v0)) {
        for (auto v2 : d.out_neighbours(v1)) {
          if (near & bit(v2)) {
            continue;  // d(v0, v2) < 2
          }
          vertex_mask allowed = bit(v0) | bit(v1) | bit(v2);
          vertex_mask outside = (d.out_mask(v1) | d.out_mask(v2)) & ~allowed;
          if (outside != 0) {
            vertex_type bad = static_cast<vertex_type>(std::countr_zero(outside) + 1);
            return {false, StarWitness{v0, v1, v2, bad}};
          }
        }
      }
    }
    return {true, std::nullopt};
  }

  bool satisfies_star_star(Digraph const& d) {
    auto sc = strong_components(d);
    for (std::size_t c = 0; c < sc.components.size(); ++c) {
      std::size_t limit = sc.terminal[c] ? 3 : 2;
      if (sc.components[c].size() > limit) {
        return false;
      }
    }
    return true;
  }

  std::optional<BandPartition> band_bipartition(Digraph const& d) {
    std::size_t const n = d.size();
    if (n == 2 && d.edge_count() == 2) {
      return BandPartition{{}, {}, true};
    }
    BandPartition result;
    for (vertex_type v = 1; v <= n; ++v) {
      bool has_out = d.out_mask(v) != 0, has_in = d.in_mask(v) != 0;
      if (has_out && has_in) {
        return std::nullopt;
      }
      (has_out ? result.sources : result.sinks).push_back(v);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Named families
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct FamilyName {
      Family      family;
      char const* name;
    };

    constexpr FamilyName kFamilyNames[] = {
        {Family::complete, "K"},
        {Family::path, "P"},
        {Family::directed_path, "dirpath"},
        {Family::transitive_tournament, "transitive"},
        {Family::circulant, "kappa"},
        {Family::pi, "pi"},
        {Family::q, "Q"},
        {Family::gamma1, "gamma1"},
        {Family::gamma2, "gamma2"},
        {Family::gamma3, "gamma3"},
        {Family::gamma4, "gamma4"},
        {Family::theta, "theta"},
    };

    constexpr std::pair<char const*, Family> kFamilyAliases[] = {
        {"complete", Family::complete},
        {"path", Family::path},
        {"Pdir", Family::directed_path},
        {"T", Family::transitive_tournament},
        {"circulant", Family::circulant},
        {"q", Family::q},
        {"cycle", Family::theta},
    };

    std::size_t pattern_order(PatternKind kind, std::size_t k) {
      switch (kind) {
        case PatternKind::gamma3:
          return 4;
        case PatternKind::theta:
          return k;
        default:
          return 5;
      }
    }
  }  // namespace

  char const* to_string(Family f) noexcept {
    for (auto const& [family, name] : kFamilyNames) {
      if (family == f) {
        return name;
      }
    }
    return "unknown";
  }

  Family parse_family_name(std::string_view name) {
    for (auto const& [family, fname] : kFamilyNames) {
      if (name == fname) {
        return family;
      }
    }
    for (auto const& [alias, family] : kFamilyAliases) {
      if (name == alias) {
        return family;
      }
    }
    throw PreconditionError("unknown digraph family `" + std::string(name) + "`");
  }

  char const* to_string(PatternKind kind) noexcept {
    switch (kind) {
      case PatternKind::gamma1:
        return "gamma1";
      case PatternKind::gamma2:
        return "gamma2";
      case PatternKind::gamma3:
        return "gamma3";
      case PatternKind::gamma4:
        return "gamma4";
      case PatternKind::theta:
        return "theta";
    }
    return "unknown";
  }

  Digraph pattern_digraph(PatternKind kind, std::size_t k) {
    switch (kind) {
      case PatternKind::gamma1:
        return Digraph(5, {{1, 4}, {4, 1}, {2, 4}, {4, 2}, {3, 4}, {4, 3}, {4, 5}});
      case PatternKind::gamma2:
        return Digraph(5, {{1, 3}, {3, 1}, {2, 3}, {3, 2}, {3, 4}, {4, 3}, {4, 5}});
      case PatternKind::gamma3:
        return Digraph(4, {{1, 2}, {2, 3}, {3, 1}, {3, 4}});
      case PatternKind::gamma4:
        return Digraph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {4, 5}});
      case PatternKind::theta: {
        if (k < 3 || k > kMaxVertices) {
          throw PreconditionError("directed cycle length must be in [3, 32]");
        }
        Digraph d(k);
        for (vertex_type v = 1; v <= k; ++v) {
          d.add_edge(v, v % k + 1);
        }
        return d;
      }
    }
    throw PreconditionError("unknown pattern kind");
  }

  Digraph family(Family f, std::size_t n) {
    auto require = [&](bool ok, char const* what) {
      if (!ok) {
        throw PreconditionError(std::string(to_string(f)) + ":" + std::to_string(n) + " " + what);
      }
    };
    auto gamma = [&](PatternKind kind) {
      std::size_t order = pattern_order(kind, 0);
      require(n == 0 || n == order, "has a fixed size");
      return pattern_digraph(kind);
    };
    if (f != Family::gamma1 && f != Family::gamma2 && f != Family::gamma3
        && f != Family::gamma4) {
      require(n >= 2 && n <= kMaxVertices, "requires 2 <= n <= 32");
    }

    switch (f) {
      case Family::complete: {
        Digraph d(n);
        for (vertex_type u = 1; u <= n; ++u) {
          for (vertex_type v = 1; v <= n; ++v) {
            if (u != v) {
              d.add_edge(u, v);
            }
          }
        }
        return d;
      }
      case Family::path: {
        Digraph d(n);
        for (vertex_type u = 1; u < n; ++u) {
          d.add_edge(u, u + 1).add_edge(u + 1, u);
        }
        return d;
      }
      case Family::directed_path: {
        Digraph d(n);
        for (vertex_type u = 1; u < n; ++u) {
          d.add_edge(u, u + 1);
        }
        return d;
      }
      case Family::transitive_tournament: {
        Digraph d(n);
        for (vertex_type u = 1; u <= n; ++u) {
          for (vertex_type v = u + 1; v <= n; ++v) {
            d.add_edge(u, v);
          }
        }
        return d;
      }
      case Family::circulant: {
        require(n >= 3 && n % 2 == 1, "requires odd n >= 3");
        Digraph d(n);
        for (vertex_type i = 1; i <= n; ++i) {
          for (std::size_t j = 1; j <= (n - 1) / 2; ++j) {
            d.add_edge(i, (i + j - 1) % n + 1);
          }
        }
        return d;
      }
      case Family::pi: {
        require(n >= 3, "requires n >= 3");
        Digraph d(n);
        for (vertex_type i = 1; i <= n; ++i) {
          d.add_edge(i, i % n + 1);
        }
        for (vertex_type i = 1; i <= n; ++i) {
          for (vertex_type j = 1; j + 1 < i; ++j) {
            if (!d.has_edge(i, j)) {
              d.add_edge(i, j);
            }
          }
        }
        return d;
      }
      case Family::q: {
        require(n >= 3, "requires n >= 3");
        Digraph d(n);
        for (vertex_type u = 1; u < n; ++u) {
          d.add_edge(u, u + 1);
        }
        d.add_edge(n - 2, n);
        return d;
      }
      case Family::gamma1:
        return gamma(PatternKind::gamma1);
      case Family::gamma2:
        return gamma(PatternKind::gamma2);
      case Family::gamma3:
        return gamma(PatternKind::gamma3);
      case Family::gamma4:
        return gamma(PatternKind::gamma4);
      case Family::theta:
        require(n >= 3, "requires k >= 3");
        return pattern_digraph(PatternKind::theta, n);
    }
    throw PreconditionError("unknown family");
  }

  Digraph family_from_spec(std::string_view spec) {
    auto        colon = spec.find(':');
    std::string name(spec.substr(0, colon));
    Family      f = parse_family_name(name);
    std::size_t n = 0;
    if (colon != std::string_view::npos) {
      auto parsed = parse_size(spec.substr(colon + 1));
      if (!parsed) {
        throw PreconditionError("bad family size in `" + std::string(spec) + "`");
      }
      n = *parsed;
    } else if (f != Family::gamma1 && f != Family::gamma2 && f != Family::gamma3
               && f != Family::gamma4) {
      throw PreconditionError("family `" + name + "` needs a size, e.g. " + name + ":5");
    }
    return family(f, n);
  }

}  // namespace arcwords
