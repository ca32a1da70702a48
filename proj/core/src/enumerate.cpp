#include "enumerate.hpp"

#include <algorithm>

#include "arcwords/detail/adjacency_code.hpp"
#include "arcwords/error.hpp"

namespace arcwords {

  char const* to_string(ClassKind kind) noexcept {
    switch (kind) {
      case ClassKind::all_digraphs:
        return "all";
      case ClassKind::connected_digraphs:
        return "connected";
      case ClassKind::acyclic_digraphs:
        return "acyclic";
      case ClassKind::strong_tournaments:
        return "tournaments";
    }
    return "?";
  }

  char const* to_string(Connectivity c) noexcept {
    return c == Connectivity::unilateral ? "unilateral" : "weak";
  }

  ClassKind parse_class_kind(std::string_view name) {
    if (name == "all" || name == "all_digraphs") {
      return ClassKind::all_digraphs;
    } else if (name == "connected" || name == "connected_digraphs") {
      return ClassKind::connected_digraphs;
    } else if (name == "acyclic" || name == "acyclic_digraphs") {
      return ClassKind::acyclic_digraphs;
    } else if (name == "tournaments" || name == "strong_tournaments") {
      return ClassKind::strong_tournaments;
    }
    throw PreconditionError("unknown class '" + std::string(name)
                            + "' (expected all, connected, acyclic or tournaments)");
  }

  Connectivity parse_connectivity(std::string_view name) {
    if (name == "unilateral") {
      return Connectivity::unilateral;
    } else if (name == "weak") {
      return Connectivity::weak;
    }
    throw PreconditionError("unknown connectivity '" + std::string(name)
                            + "' (expected unilateral or weak)");
  }

  void check_class_limits(ClassSpec const& spec, bool long_run) {
    std::size_t limit = 0;
    switch (spec.kind) {
      case ClassKind::all_digraphs:
      case ClassKind::connected_digraphs:
        limit = long_run ? 6 : 5;
        break;
      case ClassKind::acyclic_digraphs:
        limit = 6;
        break;
      case ClassKind::strong_tournaments:
        limit = long_run ? 7 : 6;
        break;
    }
    if (!spec.upto_iso) {
      limit = std::min<std::size_t>(limit, 5);
    }
    if (spec.n < 2 || spec.n > limit) {
      throw SizeLimitError(std::string("class '") + to_string(spec.kind) + "' supports 2 <= n <= "
                           + std::to_string(limit) + (long_run ? "" : " without --long")
                           + ", found n = " + std::to_string(spec.n));
    }
  }

  namespace detail {

    bool in_class(ClassSpec const& spec, Digraph const& d) {
      switch (spec.kind) {
        case ClassKind::all_digraphs:
          return true;
        case ClassKind::connected_digraphs:
          return spec.connectivity == Connectivity::unilateral ? is_connected_unilateral(d)
                                                               : is_connected_weak(d);
        case ClassKind::acyclic_digraphs:
          return is_acyclic(d);
        case ClassKind::strong_tournaments:
          return is_strong_tournament(d);
      }
      return false;
    }

    namespace {

      // Positions of the off-diagonal entries, most significant first.
      std::vector<std::uint64_t> off_diagonal_bits(std::size_t n) {
        std::vector<std::uint64_t> bits;
        for (std::size_t u = 0; u < n; ++u) {
          for (std::size_t v = 0; v < n; ++v) {
            if (u != v) {
              bits.push_back(adjacency_bit(n, u, v));
            }
          }
        }
        return bits;
      }

      bool creates_cycle(std::size_t n, std::uint64_t code, std::size_t u, std::size_t v) {
        // Adding u -> v closes a cycle iff v already reaches u.
        std::uint64_t seen = 1u << v, frontier = seen;
        while (frontier != 0) {
          std::uint64_t next = 0;
          for (std::size_t x = 0; x < n; ++x) {
            if (frontier >> x & 1) {
              for (std::size_t y = 0; y < n; ++y) {
                if (code & adjacency_bit(n, x, y)) {
                  next |= 1u << y;
                }
              }
            }
          }
          frontier = next & ~seen;
          seen |= next;
        }
        return seen >> u & 1;
      }

      // Orderly generation: a code is the largest in its orbit, and deleting
      // its least significant edge gives the largest code of the parent
      // class, so every class is reached exactly once by adding edges below
      // the current least significant one.
      void orderly(std::size_t                 n,
                   bool                        acyclic_only,
                   std::vector<std::uint64_t>& out) {
        auto const& table = RelabelTable::get(n);
        std::vector<std::pair<std::size_t, std::size_t>> positions;
        for (std::size_t u = 0; u < n; ++u) {
          for (std::size_t v = 0; v < n; ++v) {
            if (u != v) {
              positions.emplace_back(u, v);
            }
          }
        }
        // (code, index of the first position below its lowest edge)
        std::vector<std::pair<std::uint64_t, std::size_t>> stack{{0, 0}};
        while (!stack.empty()) {
          auto [code, first] = stack.back();
          stack.pop_back();
          out.push_back(code);
          for (std::size_t i = first; i < positions.size(); ++i) {
            auto [u, v]        = positions[i];
            std::uint64_t next = code | adjacency_bit(n, u, v);
            if (acyclic_only && creates_cycle(n, code, u, v)) {
              continue;
            }
            if (table.is_orbit_maximum(next)) {
              stack.emplace_back(next, i + 1);
            }
          }
        }
      }

      std::vector<std::uint64_t> labelled(ClassSpec const& spec) {
        std::size_t const n    = spec.n;
        auto const        bits = off_diagonal_bits(n);
        std::vector<std::uint64_t> out;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << bits.size()); ++mask) {
          std::uint64_t code = 0;
          for (std::size_t i = 0; i < bits.size(); ++i) {
            if (mask >> i & 1) {
              code |= bits[i];
            }
          }
          if (in_class(spec, from_adjacency_code(n, code))) {
            out.push_back(code);
          }
        }
        return out;
      }

      std::vector<std::uint64_t> tournaments(std::size_t n, bool upto_iso) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t u = 0; u < n; ++u) {
          for (std::size_t v = u + 1; v < n; ++v) {
            pairs.emplace_back(u, v);
          }
        }
        RelabelTable const* table = upto_iso ? &RelabelTable::get(n) : nullptr;
        std::vector<std::uint64_t> out;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs.size()); ++mask) {
          std::uint64_t code = 0;
          for (std::size_t i = 0; i < pairs.size(); ++i) {
            auto [u, v] = pairs[i];
            code |= (mask >> i & 1) ? adjacency_bit(n, u, v) : adjacency_bit(n, v, u);
          }
          if (table != nullptr && !table->is_orbit_minimum(code)) {
            continue;
          }
          if (is_strong(from_adjacency_code(n, code))) {
            out.push_back(code);
          }
        }
        return out;
      }

    }  // namespace

    std::vector<std::uint64_t> enumerate_codes(ClassSpec const& spec, bool long_run) {
      check_class_limits(spec, long_run);
      std::vector<std::uint64_t> out;
      if (spec.kind == ClassKind::strong_tournaments) {
        out = tournaments(spec.n, spec.upto_iso);
      } else if (!spec.upto_iso) {
        out = labelled(spec);
      } else {
        orderly(spec.n, spec.kind == ClassKind::acyclic_digraphs, out);
        if (spec.kind == ClassKind::connected_digraphs) {
          std::erase_if(out, [&](std::uint64_t c) {
            return !in_class(spec, from_adjacency_code(spec.n, c));
          });
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

  }  // namespace detail

  std::vector<Digraph> enumerate_class(ClassSpec const& spec, bool long_run) {
    auto const           codes = detail::enumerate_codes(spec, long_run);
    std::vector<Digraph> out;
    out.reserve(codes.size());
    for (auto c : codes) {
      out.push_back(detail::from_adjacency_code(spec.n, c));
    }
    return out;
  }

}  // namespace arcwords
