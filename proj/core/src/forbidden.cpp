#include <array>
#include <bit>

#include "arcwords/digraph.hpp"
#include "arcwords/error.hpp"

namespace arcwords {

  namespace {

    class Embedder {
     public:
      Embedder(Digraph const& pattern, Digraph const& host)
          : _pattern(pattern), _host(host), _map(pattern.size(), 0) {}

      bool run() {
        return extend(0, 0);
      }

      std::vector<vertex_type> const& embedding() const {
        return _map;
      }

     private:
      bool extend(std::size_t i, vertex_mask used) {
        if (i == _pattern.size()) {
          return true;
        }
        vertex_type const p = i + 1;
        for (vertex_type h = 1; h <= _host.size(); ++h) {
          if (used >> (h - 1) & 1) {
            continue;
          }
          if (_host.out_degree(h) < _pattern.out_degree(p)
              || _host.in_degree(h) < _pattern.in_degree(p)) {
            continue;
          }
          bool ok = true;
          for (std::size_t j = 0; j < i && ok; ++j) {
            vertex_type q = j + 1;
            if (_pattern.has_edge(p, q) && !_host.has_edge(h, _map[j])) {
              ok = false;
            } else if (_pattern.has_edge(q, p) && !_host.has_edge(_map[j], h)) {
              ok = false;
            }
          }
          if (!ok) {
            continue;
          }
          _map[i] = h;
          if (extend(i + 1, used | vertex_mask(1) << (h - 1))) {
            return true;
          }
        }
        return false;
      }

      Digraph const&           _pattern;
      Digraph const&           _host;
      std::vector<vertex_type> _map;
    };

    // A simple directed cycle of length >= min_length whose smallest vertex
    // is `start`; the path is extended through larger vertices only.
    bool long_cycle_from(Digraph const&            d,
                         vertex_type               start,
                         std::size_t               min_length,
                         std::vector<vertex_type>& path,
                         vertex_mask               used) {
      vertex_type const last = path.back();
      if (path.size() >= min_length && d.has_edge(last, start)) {
        return true;
      }
      vertex_mask next = d.out_mask(last) & ~used;
      // Only vertices larger than start.
      next &= ~((vertex_mask(1) << start) - 1);
      while (next != 0) {
        vertex_type w = static_cast<vertex_type>(std::countr_zero(next) + 1);
        next &= next - 1;
        path.push_back(w);
        if (long_cycle_from(d, start, min_length, path, used | vertex_mask(1) << (w - 1))) {
          return true;
        }
        path.pop_back();
      }
      return false;
    }

  }  // namespace

  std::optional<ForbiddenPattern> find_forbidden(Digraph const& d) {
    if (d.size() > kForbiddenSearchLimit) {
      throw SizeLimitError("find_forbidden supports n <= 12, found n = "
                           + std::to_string(d.size()));
    }
    for (vertex_type s = 1; s <= d.size(); ++s) {
      std::vector<vertex_type> path{s};
      if (long_cycle_from(d, s, 5, path, vertex_mask(1) << (s - 1))) {
        return ForbiddenPattern{PatternKind::theta, path.size(), path};
      }
    }
    for (auto kind :
         {PatternKind::gamma1, PatternKind::gamma2, PatternKind::gamma3, PatternKind::gamma4}) {
      Digraph const pattern = pattern_digraph(kind);
      if (pattern.size() > d.size()) {
        continue;
      }
      Embedder e(pattern, d);
      if (e.run()) {
        return ForbiddenPattern{kind, pattern.size(), e.embedding()};
      }
    }
    return std::nullopt;
  }

}  // namespace arcwords
