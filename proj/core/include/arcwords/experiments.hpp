// Exhaustive experiments over small classes of digraphs: enumeration up to
// isomorphism, extremal length tables, verification of the length
// characterisations, and checks of the tournament bounds and conjectures.

#ifndef ARCWORDS_EXPERIMENTS_HPP_
#define ARCWORDS_EXPERIMENTS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arcwords/digraph.hpp"
#include "arcwords/transform.hpp"

namespace arcwords {

  enum class ClassKind { all_digraphs, connected_digraphs, acyclic_digraphs, strong_tournaments };
  enum class Connectivity { unilateral, weak };

  char const*  to_string(ClassKind kind) noexcept;
  char const*  to_string(Connectivity c) noexcept;
  // Accepts "all", "connected", "acyclic", "tournaments" and the to_string
  // names. Throws PreconditionError.
  ClassKind    parse_class_kind(std::string_view name);
  Connectivity parse_connectivity(std::string_view name);

  struct ClassSpec {
    ClassKind    kind;
    std::size_t  n;
    bool         upto_iso     = true;
    Connectivity connectivity = Connectivity::unilateral;
  };

  struct RunOptions {
    std::size_t jobs     = 1;
    bool        long_run = false;
  };

  // Throws SizeLimitError when `spec` is outside the supported range:
  // all/connected n <= 5 (6 with long_run), acyclic n <= 6, tournaments
  // n <= 6 (7 with long_run). Labelled enumeration stops at n = 5.
  void check_class_limits(ClassSpec const& spec, bool long_run);

  // One digraph per isomorphism class (or every labelled digraph when
  // !spec.upto_iso), in a deterministic order.
  std::vector<Digraph> enumerate_class(ClassSpec const& spec, bool long_run = false);

  ////////////////////////////////////////////////////////////////////////
  // Extremal tables
  ////////////////////////////////////////////////////////////////////////

  struct ExtremalRow {
    std::size_t                r;
    std::optional<std::size_t> max;
    std::optional<std::size_t> min;  // strong tournaments only
    CanonicalForm              max_witness;
    CanonicalForm              min_witness;
    // Elements of the canonical witness digraphs attaining the values.
    std::optional<Transformation> max_alpha;
    std::optional<Transformation> min_alpha;
    // Number of members whose l(D, r) equals the maximum.
    std::size_t max_attainers = 0;
  };

  struct ExtremalResult {
    ClassSpec                spec;
    std::vector<ExtremalRow> rows;  // r = 1, ..., n - 1
    std::size_t              enumerated = 0;
    double                   seconds    = 0;
    // Every witness reproduced its value when explored again.
    bool verified = false;

    ExtremalRow const* row(std::size_t r) const;
  };

  // Extremes of l(D, r) over the class. Ties between witnesses go to the
  // smallest canonical form.
  ExtremalResult extremal_table(ClassSpec const& spec, RunOptions const& options = {});

  // The same over an explicit list of digraphs on [spec.n].
  ExtremalResult extremal_table(ClassSpec const&         spec,
                                std::span<Digraph const> members,
                                RunOptions const&        options = {});

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  enum class Theorem { C1, C2, C3, CyclFree };

  char const* to_string(Theorem t) noexcept;
  Theorem     parse_theorem(std::string_view name);

  enum class Direction {
    // The length condition holds but the structural condition fails.
    length_implies_structure,
    // The structural condition holds but some element violates the
    // length condition.
    structure_implies_length,
  };

  struct Counterexample {
    Digraph                       digraph;
    Direction                     direction;
    std::optional<Transformation> witness;
  };

  struct VerificationReport {
    Theorem                     theorem;
    std::size_t                 n;
    std::size_t                 digraphs_checked = 0;
    // Digraphs on which both conditions hold.
    std::size_t                 satisfying = 0;
    bool                        holds      = true;
    std::vector<Counterexample> counterexamples = {};
  };

  // Compares, for every connected digraph on [n] up to isomorphism, the
  // length condition (checked on every element by BFS) with the structural
  // condition of the theorem. n <= 5.
  VerificationReport verify_characterization(Theorem            theorem,
                                             std::size_t        n,
                                             Connectivity       connectivity = Connectivity::unilateral,
                                             RunOptions const&  options      = {});

  // max sum_i d(u_i, v_i) over r distinct sources and r distinct targets,
  // by successive longest augmenting paths. Requires a strong tournament and
  // 1 <= r <= n.
  std::size_t delta_tournament(Digraph const& t, std::size_t r);

  struct Check {
    std::string name;
    bool        passed;
    std::string detail;
  };

  struct SuiteReport {
    std::string        suite;
    std::size_t        n;
    std::size_t        items = 0;
    std::vector<Check> checks = {};

    bool passed() const;
    void add(std::string name, bool ok, std::string detail = {});
  };

  // (n^2 + 3n - 6) / 2.
  std::size_t conjectured_pi_length(std::size_t n);

  // The element n (n-1) ... 2 n of one-line notation.
  Transformation pi_witness(std::size_t n);

  // Conjecture checks against the strong tournament table on [n].
  // 3 <= n <= 6, n = 7 with long_run. Statements about the minimum apply to
  // odd n only.
  SuiteReport check_conjectures(std::size_t n, RunOptions const& options = {});

  // The bounds on l_min and l_max over strong tournaments and the per
  // tournament inequalities behind them. n odd, n <= 5 (7 with long_run).
  SuiteReport bounds_audit(std::size_t n, RunOptions const& options = {});

  // Length over K_n equals n + cycl - fix for every singular map; n <= 6.
  SuiteReport verify_complete(std::size_t n);

  // l >= n + cycl - fix >= n - fix >= n - rank over every connected digraph
  // on [n] up to isomorphism; n <= 5.
  SuiteReport verify_inequality_chain(std::size_t n, RunOptions const& options = {});

  // The semigroups of the undirected path, directed path and transitive
  // tournament, and full generation by digraphs containing a strong
  // tournament; n <= 5.
  SuiteReport verify_named_semigroups(std::size_t n);

  // Every construction with an optimality claim against BFS; n <= 5.
  SuiteReport verify_constructions(std::size_t n, RunOptions const& options = {});

  // l(T, (u -> v)) = 4 d(u, v) - 2 for every strong tournament on [n] and
  // every non-edge; n <= 6.
  SuiteReport verify_arc_lengths(std::size_t n);

  // l_max over acyclic digraphs on [n] and the Q_n witnesses; n <= 6 for
  // the class, n <= 7 for the witnesses.
  SuiteReport verify_acyclic(std::size_t n, RunOptions const& options = {});

  // Published values of l_max(n, r) for n <= 6 and of (l_min, l_max) over
  // strong tournaments for n <= 7; empty outside that range.
  std::optional<std::size_t> reference_lmax(std::size_t n, std::size_t r);
  std::optional<std::pair<std::size_t, std::size_t>> reference_tournament(std::size_t n,
                                                                         std::size_t r);

}  // namespace arcwords

#endif  // ARCWORDS_EXPERIMENTS_HPP_
