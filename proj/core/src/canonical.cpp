#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <numeric>

#include "arcwords/detail/adjacency_code.hpp"
#include "arcwords/digraph.hpp"
#include "arcwords/error.hpp"

namespace arcwords {

  namespace detail {

    std::uint64_t adjacency_code(Digraph const& d) {
      std::size_t const n = d.size();
      if (n > kCanonicalLimit) {
        throw SizeLimitError("adjacency codes support n <= 8");
      }
      std::uint64_t code = 0;
      for (auto const& e : d.edges()) {
        code |= adjacency_bit(n, e.from - 1, e.to - 1);
      }
      return code;
    }

    Digraph from_adjacency_code(std::size_t n, std::uint64_t code) {
      if (n == 0 || n > kCanonicalLimit) {
        throw SizeLimitError("adjacency codes support 1 <= n <= 8");
      }
      std::array<vertex_mask, kCanonicalLimit> rows{};
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
          if (code & adjacency_bit(n, u, v)) {
            rows[u] |= vertex_mask(1) << v;
          }
        }
      }
      return Digraph::from_out_masks(n, std::span<vertex_mask const>(rows.data(), n));
    }

    RelabelTable::RelabelTable(std::size_t n)
        : _n(n), _perm_count(1), _row_values(std::size_t(1) << n), _row_mask((1u << n) - 1) {
      if (n == 0 || n > kRelabelTableLimit) {
        throw SizeLimitError("relabel tables support 1 <= n <= 7");
      }
      for (std::size_t i = 2; i <= n; ++i) {
        _perm_count *= i;
      }
      _table.assign(_perm_count * n * _row_values, 0);
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::size_t p = 0;
      do {
        std::uint64_t* t = _table.data() + p * n * _row_values;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t row = 0; row < _row_values; ++row) {
            std::uint64_t out = 0;
            for (std::size_t j = 0; j < n; ++j) {
              if (row >> (n - 1 - j) & 1) {
                out |= adjacency_bit(n, perm[i], perm[j]);
              }
            }
            t[i * _row_values + row] = out;
          }
        }
        ++p;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }

    RelabelTable const& RelabelTable::get(std::size_t n) {
      static std::array<std::once_flag, kRelabelTableLimit + 1>                 flags;
      static std::array<std::unique_ptr<RelabelTable>, kRelabelTableLimit + 1> tables;
      if (n == 0 || n > kRelabelTableLimit) {
        throw SizeLimitError("relabel tables support 1 <= n <= 7");
      }
      std::call_once(flags[n], [n] { tables[n] = std::make_unique<RelabelTable>(n); });
      return *tables[n];
    }

  }  // namespace detail

  namespace {
    std::size_t code_bytes(std::size_t n) {
      return (n * n + 7) / 8;
    }

    char hex_digit(unsigned x) {
      return "0123456789abcdef"[x & 0xF];
    }
  }  // namespace

  std::string CanonicalForm::to_hex() const {
    std::string out;
    out.reserve(2 * _bytes.size());
    for (auto b : _bytes) {
      out.push_back(hex_digit(b >> 4));
      out.push_back(hex_digit(b));
    }
    return out;
  }

  CanonicalForm CanonicalForm::from_hex(std::string_view hex) {
    auto value = [&](char c) -> unsigned {
      if (c >= '0' && c <= '9') {
        return c - '0';
      } else if (c >= 'a' && c <= 'f') {
        return c - 'a' + 10;
      } else if (c >= 'A' && c <= 'F') {
        return c - 'A' + 10;
      }
      throw PreconditionError("invalid hex digit in canonical form");
    };
    if (hex.size() % 2 != 0 || hex.empty()) {
      throw PreconditionError("canonical form hex must have an even, nonzero length");
    }
    std::vector<std::uint8_t> bytes;
    for (std::size_t i = 0; i < hex.size(); i += 2) {
      bytes.push_back(static_cast<std::uint8_t>(value(hex[i]) << 4 | value(hex[i + 1])));
    }
    std::size_t const n = bytes.front();
    if (n == 0 || n > kCanonicalLimit || bytes.size() != 1 + code_bytes(n)) {
      throw PreconditionError("canonical form has an inconsistent length");
    }
    return CanonicalForm(std::move(bytes));
  }

  namespace {
    CanonicalForm encode(std::size_t n, std::uint64_t code) {
      std::size_t const         nbytes = code_bytes(n);
      std::uint64_t const       packed = code << (8 * nbytes - n * n);
      std::vector<std::uint8_t> bytes{static_cast<std::uint8_t>(n)};
      for (std::size_t i = 0; i < nbytes; ++i) {
        bytes.push_back(static_cast<std::uint8_t>(packed >> (8 * (nbytes - 1 - i))));
      }
      return CanonicalForm(std::move(bytes));
    }

    std::uint64_t minimum_code_slow(Digraph const& d) {
      std::size_t const        n     = d.size();
      auto const               edges = d.edges();
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::uint64_t best = ~std::uint64_t(0);
      do {
        std::uint64_t code = 0;
        for (auto const& e : edges) {
          code |= detail::adjacency_bit(n, perm[e.from - 1], perm[e.to - 1]);
        }
        best = std::min(best, code);
      } while (std::next_permutation(perm.begin(), perm.end()));
      return best;
    }
  }  // namespace

  CanonicalForm canonical_form(Digraph const& d) {
    std::size_t const n = d.size();
    if (n > kCanonicalLimit) {
      throw SizeLimitError("canonical_form supports n <= 8, found n = " + std::to_string(n));
    }
    std::uint64_t best;
    if (n <= detail::kRelabelTableLimit) {
      best = detail::RelabelTable::get(n).orbit_minimum(detail::adjacency_code(d));
    } else {
      best = minimum_code_slow(d);
    }
    return encode(n, best);
  }

  Digraph from_canonical_form(CanonicalForm const& form) {
    auto const& bytes = form.bytes();
    if (bytes.empty()) {
      throw PreconditionError("empty canonical form");
    }
    std::size_t const n      = bytes.front();
    std::size_t const nbytes = code_bytes(n);
    if (n == 0 || n > kCanonicalLimit || bytes.size() != 1 + nbytes) {
      throw PreconditionError("canonical form has an inconsistent length");
    }
    std::uint64_t packed = 0;
    for (std::size_t i = 0; i < nbytes; ++i) {
      packed = packed << 8 | bytes[1 + i];
    }
    std::size_t const pad = 8 * nbytes - n * n;
    if (pad > 0 && (packed & ((std::uint64_t(1) << pad) - 1)) != 0) {
      throw PreconditionError("canonical form has nonzero padding");
    }
    std::uint64_t const code = packed >> pad;
    for (std::size_t v = 0; v < n; ++v) {
      if (code & detail::adjacency_bit(n, v, v)) {
        throw PreconditionError("canonical form encodes a loop");
      }
    }
    return detail::from_adjacency_code(n, code);
  }

}  // namespace arcwords
