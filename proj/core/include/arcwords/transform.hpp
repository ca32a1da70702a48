// Transformations of {1, ..., n} in one-line notation, arcs, words over
// arcs, and orbit statistics.
//
// Maps act on the right: x(alpha beta) = (x alpha) beta, so a word is
// evaluated left to right.

#ifndef ARCWORDS_TRANSFORM_HPP_
#define ARCWORDS_TRANSFORM_HPP_

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "arcwords/digraph.hpp"

namespace arcwords {

  class Transformation {
   public:
    Transformation() = default;
    // images[v - 1] is the image of v; every entry must lie in [1, n].
    explicit Transformation(std::vector<vertex_type> images);

    static Transformation identity(std::size_t n);
    static Transformation constant(std::size_t n, vertex_type v);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    vertex_type operator[](vertex_type v) const {
      return _images[v - 1];
    }

    std::vector<vertex_type> const& images() const noexcept {
      return _images;
    }

    std::size_t rank() const;
    // Sorted image set.
    std::vector<vertex_type> image_set() const;
    bool                     is_permutation() const;
    bool                     is_identity() const;
    bool                     is_idempotent() const;

    friend auto operator<=>(Transformation const&, Transformation const&) = default;

   private:
    std::vector<vertex_type> _images;
  };

  // Space-separated images, e.g. "2 1 4 4". Throws ParseError.
  Transformation parse_transformation(std::string_view text);
  std::string    to_string(Transformation const& t);
  std::ostream&  operator<<(std::ostream& os, Transformation const& t);

  // The idempotent sending `from` to `to` and fixing everything else.
  struct Arc {
    vertex_type from;
    vertex_type to;

    Transformation as_transformation(std::size_t n) const;

    friend auto operator<=>(Arc const&, Arc const&) = default;
  };

  using Word = std::vector<Arc>;

  // Concatenated `(a->b)` tokens, e.g. "(1->2)(2->3)".
  std::string to_string(Word const& w);
  Word        parse_word(std::string_view text);

  // x |-> (x alpha) beta. Throws PreconditionError on a degree mismatch.
  Transformation compose(Transformation const& alpha, Transformation const& beta);

  // Right action of a single arc; cheaper than compose with arc(n).
  Transformation apply(Transformation const& alpha, Arc e);

  // Left-to-right product of the arcs of `w` on [n]. Throws
  // PreconditionError for an empty word or an arc outside [n].
  Transformation evaluate(Word const& w, std::size_t n);

  // True iff every arc of `w` is an edge of `d`.
  bool uses_edges_of(Word const& w, Digraph const& d);

  using Partition = std::vector<std::vector<vertex_type>>;

  struct OrbitStats {
    std::size_t rank;
    std::size_t fix;
    // Orbits that are exactly a directed cycle on at least two points.
    std::size_t cycl;
    // Weakly connected components of x -> x alpha, each sorted, ordered by
    // smallest element.
    Partition orbits;
    bool      idempotent;
  };

  OrbitStats orbit_stats(Transformation const& alpha);

  // Blocks x alpha^-1, each sorted, ordered by smallest element.
  Partition kernel_partition(Transformation const& alpha);

  // n + cycl(alpha) - fix(alpha), the length of alpha over the complete
  // digraph. Throws PreconditionError when alpha is a permutation.
  std::size_t hi_bound(Transformation const& alpha);

}  // namespace arcwords

#endif  // ARCWORDS_TRANSFORM_HPP_
