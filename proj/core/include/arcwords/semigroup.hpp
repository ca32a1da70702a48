// Exact minimal word lengths in the semigroup generated by the arcs of a
// digraph, by breadth-first search on the right Cayley graph.
//
// A transformation of [n] is packed as the mixed-radix integer
//   sum_{v=1}^{n} (v alpha - 1) * n^(n - v),
// so index order is the lexicographic order of one-line notation.

#ifndef ARCWORDS_SEMIGROUP_HPP_
#define ARCWORDS_SEMIGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "arcwords/digraph.hpp"
#include "arcwords/transform.hpp"

namespace arcwords {

  using state_index = std::uint32_t;
  using distance_type = std::uint16_t;

  inline constexpr distance_type kNotMember = 0xFFFF;
  inline constexpr std::size_t   kExploreLimit = 8;

  // n^n; throws SizeLimitError for n > 8.
  std::size_t state_count(std::size_t n);
  state_index index_of(Transformation const& alpha);
  Transformation transformation_at(std::size_t n, state_index idx);

  // Orbit statistics of every transformation of [n], indexed by
  // state_index; built once per n and shared.
  class StateTable {
   public:
    explicit StateTable(std::size_t n);

    std::size_t degree() const noexcept {
      return _n;
    }
    std::size_t rank(state_index i) const {
      return _rank[i];
    }
    std::size_t fix(state_index i) const {
      return _fix[i];
    }
    std::size_t cycl(state_index i) const {
      return _cycl[i];
    }
    bool is_idempotent(state_index i) const {
      return _idempotent[i] != 0;
    }
    // n + cycl - fix.
    std::size_t hi_bound(state_index i) const {
      return _n + _cycl[i] - _fix[i];
    }

    static StateTable const& get(std::size_t n);

   private:
    std::size_t               _n;
    std::vector<std::uint8_t> _rank;
    std::vector<std::uint8_t> _fix;
    std::vector<std::uint8_t> _cycl;
    std::vector<std::uint8_t> _idempotent;
  };

  struct RankStat {
    std::size_t count = 0;
    // Largest length among elements of this rank; meaningless when
    // count == 0.
    std::size_t max_length = 0;
    // Lexicographically smallest element attaining max_length.
    state_index witness = 0;
  };

  class RankProfile {
   public:
    RankProfile() = default;
    RankProfile(std::size_t n, std::vector<RankStat> stats);

    std::size_t degree() const noexcept {
      return _n;
    }
    // l(D, r) for 1 <= r < n; empty when no element has rank r.
    std::optional<std::size_t> length(std::size_t r) const;
    std::size_t                count(std::size_t r) const;
    std::optional<Transformation> witness(std::size_t r) const;
    // l(D): the largest length over all ranks; empty for an empty semigroup.
    std::optional<std::size_t> overall() const;
    std::size_t                size() const;

    RankStat const& stat(std::size_t r) const {
      return _stats.at(r);
    }

   private:
    std::size_t           _n = 0;
    std::vector<RankStat> _stats;  // indexed by rank, entry 0 unused
  };

  // Reusable breadth-first search engine for one degree n. Buffers are
  // kept between runs so that a worker exploring many digraphs allocates
  // once. Not thread-safe; use one engine per thread.
  class Explorer {
   public:
    explicit Explorer(std::size_t n);

    std::size_t degree() const noexcept {
      return _n;
    }

    // Throws PreconditionError when d.size() != degree().
    void run(Digraph const& d);

    std::span<distance_type const> distances() const noexcept {
      return _dist;
    }
    RankProfile const& profile() const noexcept {
      return _profile;
    }
    // Members in BFS order.
    std::span<state_index const> members() const noexcept {
      return _queue;
    }

    std::vector<distance_type> release_distances();

   private:
    std::size_t                _n;
    std::vector<std::size_t>   _weight;
    std::vector<distance_type> _dist;
    std::vector<state_index>   _queue;
    RankProfile                _profile;
  };

  class SemigroupIndex {
   public:
    SemigroupIndex() = default;
    SemigroupIndex(Digraph d, std::vector<distance_type> dist, RankProfile profile);

    std::size_t degree() const noexcept {
      return _digraph.size();
    }
    Digraph const& digraph() const noexcept {
      return _digraph;
    }
    // |<D>|.
    std::size_t size() const noexcept {
      return _profile.size();
    }
    std::span<distance_type const> distances() const noexcept {
      return _dist;
    }
    distance_type distance(state_index i) const {
      return _dist[i];
    }
    bool contains(Transformation const& alpha) const;

    RankProfile const& profile() const noexcept {
      return _profile;
    }

   private:
    Digraph                    _digraph;
    std::vector<distance_type> _dist;
    RankProfile                _profile;
  };

  // Throws SizeLimitError for n > 8.
  SemigroupIndex explore(Digraph const& d);

  // l(D, alpha), or empty when alpha is not in <D>. Throws
  // PreconditionError on a degree mismatch.
  std::optional<std::size_t> length_of(SemigroupIndex const& idx, Transformation const& alpha);

  RankProfile const& rank_profile(SemigroupIndex const& idx);

  // A word of minimal length over the edges of the digraph evaluating to
  // alpha. Throws NotMemberError.
  Word shortest_word(SemigroupIndex const& idx, Transformation const& alpha);
  Word shortest_word(Digraph const&                 d,
                     std::span<distance_type const> dist,
                     Transformation const&          alpha);

  // Binary dump: "ARCWIDX1", n (u8), edge count (u16 LE), edge endpoints
  // (u8 pairs), then n^n little-endian u16 distances.
  void           save(SemigroupIndex const& idx, std::ostream& os);
  SemigroupIndex load(std::istream& is);

}  // namespace arcwords

#endif  // ARCWORDS_SEMIGROUP_HPP_
