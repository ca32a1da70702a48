// Explicit words over the arcs of a digraph for the families of
// transformations whose lengths are known in closed form.
//
// Every builder checks its own output: the returned word evaluates to the
// target and uses only edges of the given digraph, otherwise an exception
// is thrown. Ties are always broken towards the smallest vertex.

#ifndef ARCWORDS_CONSTRUCTIONS_HPP_
#define ARCWORDS_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <vector>

#include "arcwords/digraph.hpp"
#include "arcwords/transform.hpp"

namespace arcwords {

  struct ConstructedWord {
    Digraph        digraph;
    Word           word;
    Transformation target;
    std::size_t    claimed_length;
    // True when the length is known to equal l(D, target).
    bool optimal_claim;

    // evaluate(word) == target, the length matches and every arc is an edge.
    bool verified() const;
  };

  // The constant map onto v0 with n - 1 arcs, moving the vertices at
  // distance d from v0 before those at distance d - 1. Throws
  // PreconditionError if some vertex cannot reach v0.
  ConstructedWord express_constant(Digraph const& d, vertex_type v0);

  // One arc (v -> v alpha) per non-fixed point, for digraphs whose edges all
  // go from one side of a bipartition to the other (or K2). Throws
  // PreconditionError if d is not of that type and NotMemberError if alpha
  // is not in <d>.
  ConstructedWord express_band(Digraph const& d, Transformation const& alpha);

  // A word of length n + cycl(alpha) - fix(alpha) over the complete digraph.
  // Throws PreconditionError when alpha is a permutation.
  ConstructedWord express_complete_optimal(Transformation const& alpha);

  // The component-by-component word over a closed, connected digraph with
  // property (*). Its length is n + cycl(alpha) - fix(alpha) unless a vertex
  // outside a strong component maps into a cycle inside it, in which case
  // each such cycle costs one more arc and optimal_claim is false. Throws
  // PreconditionError naming the failed hypothesis, or NotMemberError.
  ConstructedWord express_star_optimal(Digraph const& d, Transformation const& alpha);

  // The arc (u -> v) over a strong tournament with (u, v) not an edge, with
  // 4 d(u, v) - 2 arcs along the lexicographically smallest shortest path.
  ConstructedWord tournament_arc_word(Digraph const& t, vertex_type u, vertex_type v);

  // An idempotent with kernel `blocks` and n - |blocks| arcs: every block is
  // sent to the smallest vertex of the terminal strong component of the
  // tournament it induces. The blocks must partition [n] and must not all
  // be singletons.
  ConstructedWord idempotent_with_kernel(Digraph const& t, Partition const& blocks);

  // An idempotent with image `s` and n - |s| arcs: each vertex goes to the
  // smallest nearest member of s. `s` must be nonempty and proper.
  ConstructedWord idempotent_with_image(Digraph const& t, std::vector<vertex_type> const& s);

  // Any singular alpha over a strong tournament: a kernel idempotent
  // followed by a rearrangement of its image, expressed over K_n and then
  // rewritten with tournament_arc_word. Length at most
  // n + 6 rank(alpha) diam(t) - 4 rank(alpha).
  ConstructedWord tournament_express(Digraph const& t, Transformation const& alpha);

  struct AcyclicWitness {
    Digraph        digraph;  // Q_n
    Transformation beta;     // beta_r, of rank r
    // (n - r)(n + r - 3) / 2 + 1.
    std::size_t lower_bound;
  };

  // Requires n >= 3 and 2 <= r <= n - 1.
  AcyclicWitness acyclic_witness(std::size_t n, std::size_t r);

  struct CycleWitness {
    Digraph        digraph;
    Word           word;
    Transformation value;
  };

  // A word over the pattern digraph whose value has a cyclic orbit. `k` is
  // used only for theta and must be at least 5.
  CycleWitness cycle_witness(PatternKind kind, std::size_t k = 5);

  // Length of the arc (u -> v) over a strong tournament with d(u, v) = d >= 2.
  inline std::size_t tournament_arc_length(std::size_t d) {
    return 4 * d - 2;
  }

}  // namespace arcwords

#endif  // ARCWORDS_CONSTRUCTIONS_HPP_
