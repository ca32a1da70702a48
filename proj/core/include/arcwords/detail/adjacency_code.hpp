// Packed adjacency matrices for digraphs on at most 8 vertices, and
// per-permutation lookup tables for fast relabelling during enumeration.

#ifndef ARCWORDS_DETAIL_ADJACENCY_CODE_HPP_
#define ARCWORDS_DETAIL_ADJACENCY_CODE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "arcwords/digraph.hpp"

namespace arcwords::detail {

  // Entry (u, v) of the adjacency matrix sits at bit n*n - 1 - ((u-1)*n + (v-1)),
  // so comparing codes as integers compares the matrices row-major,
  // lexicographically.
  std::uint64_t adjacency_code(Digraph const& d);
  Digraph       from_adjacency_code(std::size_t n, std::uint64_t code);

  inline std::uint64_t adjacency_bit(std::size_t n, std::size_t u0, std::size_t v0) {
    return std::uint64_t(1) << (n * n - 1 - (u0 * n + v0));
  }

  // For n <= 7, table[p][i][row] is the contribution of row i (with out-set
  // `row`, column j at bit n - 1 - j) after relabelling by permutation p.
  class RelabelTable {
   public:
    explicit RelabelTable(std::size_t n);

    std::size_t degree() const noexcept {
      return _n;
    }
    std::size_t permutation_count() const noexcept {
      return _perm_count;
    }

    std::uint64_t relabel(std::uint64_t code, std::size_t perm) const noexcept {
      std::uint64_t const* t      = _table.data() + perm * _n * _row_values;
      std::uint64_t        result = 0;
      std::size_t          shift  = _n * _n;
      for (std::size_t i = 0; i < _n; ++i) {
        shift -= _n;
        result |= t[i * _row_values + ((code >> shift) & _row_mask)];
      }
      return result;
    }

    // True iff no relabelling yields a smaller code.
    bool is_orbit_minimum(std::uint64_t code) const noexcept {
      for (std::size_t p = 1; p < _perm_count; ++p) {
        if (relabel(code, p) < code) {
          return false;
        }
      }
      return true;
    }

    bool is_orbit_maximum(std::uint64_t code) const noexcept {
      for (std::size_t p = 1; p < _perm_count; ++p) {
        if (relabel(code, p) > code) {
          return false;
        }
      }
      return true;
    }

    std::uint64_t orbit_minimum(std::uint64_t code) const noexcept {
      std::uint64_t best = code;
      for (std::size_t p = 1; p < _perm_count; ++p) {
        std::uint64_t c = relabel(code, p);
        best            = c < best ? c : best;
      }
      return best;
    }

    // Shared instance per degree, built on first use (thread-safe).
    static RelabelTable const& get(std::size_t n);

   private:
    std::size_t                _n;
    std::size_t                _perm_count;
    std::size_t                _row_values;
    std::uint64_t              _row_mask;
    std::vector<std::uint64_t> _table;
  };

  inline constexpr std::size_t kRelabelTableLimit = 7;

}  // namespace arcwords::detail

#endif  // ARCWORDS_DETAIL_ADJACENCY_CODE_HPP_
