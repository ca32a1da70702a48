// Simple digraphs on the vertex set {1, ..., n}, their strong components,
// distances, and the structural predicates used to characterise the lengths
// of words in arc-generated semigroups.

#ifndef ARCWORDS_DIGRAPH_HPP_
#define ARCWORDS_DIGRAPH_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arcwords {

  // Vertices are 1-based throughout the public interface.
  using vertex_type = std::size_t;
  using vertex_mask = std::uint32_t;

  inline constexpr std::size_t kMaxVertices = 32;

  struct Edge {
    vertex_type from;
    vertex_type to;

    friend auto operator<=>(Edge const&, Edge const&) = default;
  };

  // A loop-free digraph without multiple edges. Adjacency is stored as one
  // bit row per vertex, bit (v - 1) standing for vertex v.
  class Digraph {
   public:
    Digraph() : Digraph(1) {}
    explicit Digraph(std::size_t n);
    Digraph(std::size_t n, std::span<Edge const> edges);
    Digraph(std::size_t n, std::initializer_list<Edge> edges)
        : Digraph(n, std::span<Edge const>(edges.begin(), edges.size())) {}

    // Row v - 1 of `rows` holds the out-neighbourhood of v. Bits at or above
    // n and the diagonal must be clear.
    static Digraph from_out_masks(std::size_t n, std::span<vertex_mask const> rows);

    std::size_t size() const noexcept {
      return _n;
    }

    bool has_edge(vertex_type u, vertex_type v) const;

    vertex_mask out_mask(vertex_type v) const {
      return _out[index(v)];
    }
    vertex_mask in_mask(vertex_type v) const {
      return _in[index(v)];
    }

    std::size_t out_degree(vertex_type v) const;
    std::size_t in_degree(vertex_type v) const;
    // Size of N-(v) union N+(v).
    std::size_t degree(vertex_type v) const;

    std::size_t edge_count() const noexcept;

    // Edges sorted lexicographically.
    std::vector<Edge> edges() const;

    std::vector<vertex_type> out_neighbours(vertex_type v) const;
    std::vector<vertex_type> in_neighbours(vertex_type v) const;

    // Throws PreconditionError on loops, out-of-range endpoints, or an edge
    // that is already present.
    Digraph& add_edge(vertex_type u, vertex_type v);
    Digraph& remove_edge(vertex_type u, vertex_type v);

    // The subdigraph induced by `vertices`, relabelled 1..k in the given
    // order.
    Digraph induced(std::span<vertex_type const> vertices) const;

    // Vertex v is renamed perm[v - 1]; `perm` must be a permutation of 1..n.
    Digraph relabelled(std::span<vertex_type const> perm) const;

    friend bool operator==(Digraph const& x, Digraph const& y) noexcept;

   private:
    std::size_t index(vertex_type v) const;

    std::size_t                            _n;
    std::array<vertex_mask, kMaxVertices> _out{};
    std::array<vertex_mask, kMaxVertices> _in{};
  };

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  // First line `digraph <n>`, then one `<u> <v>` per edge. Blank lines and
  // lines starting with `#` are ignored. Throws ParseError.
  Digraph parse_digraph(std::string_view text);

  std::string to_text(Digraph const& d);

  std::ostream& operator<<(std::ostream& os, Digraph const& d);

  ////////////////////////////////////////////////////////////////////////
  // Strong components and closure
  ////////////////////////////////////////////////////////////////////////

  struct StrongDecomposition {
    // Each component is sorted; components are indexed arbitrarily.
    std::vector<std::vector<vertex_type>> components;
    // Component indices in topological order: an edge between distinct
    // components always goes from an earlier to a later entry.
    std::vector<std::size_t> condensation_order;
    // terminal[c] is true iff no edge leaves component c.
    std::vector<bool> terminal;
    // component_of[v - 1] is the index of the component containing v.
    std::vector<std::size_t> component_of;
  };

  StrongDecomposition strong_components(Digraph const& d);

  // Adds the reverse of every edge lying on a directed cycle, i.e. of every
  // edge whose endpoints share a strong component.
  Digraph closure(Digraph const& d);

  ////////////////////////////////////////////////////////////////////////
  // Distances
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

  class DistanceMatrix {
   public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : _n(n), _d(n * n, kUnreachable) {}

    std::size_t size() const noexcept {
      return _n;
    }
    std::size_t operator()(vertex_type u, vertex_type v) const {
      return _d[(u - 1) * _n + (v - 1)];
    }
    std::size_t& at(vertex_type u, vertex_type v) {
      return _d[(u - 1) * _n + (v - 1)];
    }

    // Largest finite entry.
    std::size_t max_finite() const noexcept;

   private:
    std::size_t              _n = 0;
    std::vector<std::size_t> _d;
  };

  // All-pairs shortest path lengths; kUnreachable when no path exists.
  DistanceMatrix distances(Digraph const& d);

  // Largest finite distance between two vertices.
  std::size_t diameter(Digraph const& d);

  // Longest path lengths in an acyclic digraph; kUnreachable when v is not
  // reachable from u. Throws PreconditionError if `d` has a directed cycle.
  DistanceMatrix longest_paths(Digraph const& d);

  struct Metrics {
    DistanceMatrix                distance;
    std::size_t                   diameter;
    std::optional<DistanceMatrix> longest_path;
  };

  Metrics metrics(Digraph const& d, bool with_longest_path = false);

  ////////////////////////////////////////////////////////////////////////
  // Predicates
  ////////////////////////////////////////////////////////////////////////

  bool is_closed(Digraph const& d);
  bool is_strong(Digraph const& d);
  bool is_tournament(Digraph const& d);
  bool is_strong_tournament(Digraph const& d);
  bool is_acyclic(Digraph const& d);
  // For every pair u, v there is a path from u to v or from v to u.
  bool is_connected_unilateral(Digraph const& d);
  // The underlying undirected graph is connected.
  bool is_connected_weak(Digraph const& d);

  struct Predicates {
    bool is_closed;
    bool is_strong;
    bool is_tournament;
    bool is_strong_tournament;
    bool is_acyclic;
    bool is_connected_unilateral;
    bool is_connected_weak;
  };

  Predicates predicates(Digraph const& d);

  // True iff some spanning subdigraph of `d` is a strong tournament.
  // Brute force over the orientations of 2-cycles; n <= 6.
  bool contains_strong_tournament(Digraph const& d);

  struct StarWitness {
    vertex_type v0;
    vertex_type v1;
    vertex_type v2;
    // An out-neighbour of v1 or v2 outside {v0, v1, v2}.
    vertex_type offending;
  };

  struct StarCheck {
    bool                       holds;
    std::optional<StarWitness> witness;
  };

  // Property (*): whenever v0, v1, v2 is a directed path with
  // d(v0, v2) = 2, N+({v1, v2}) is contained in {v0, v1, v2}.
  StarCheck satisfies_star(Digraph const& d);

  // Property (**): nonterminal strong components have at most 2 vertices,
  // terminal ones at most 3.
  bool satisfies_star_star(Digraph const& d);

  ////////////////////////////////////////////////////////////////////////
  // Forbidden subdigraphs
  ////////////////////////////////////////////////////////////////////////

  enum class PatternKind { gamma1, gamma2, gamma3, gamma4, theta };

  char const* to_string(PatternKind kind) noexcept;

  struct ForbiddenPattern {
    PatternKind kind;
    // Number of pattern vertices (k for theta).
    std::size_t order;
    // embedding[i] is the host vertex of pattern vertex i + 1.
    std::vector<vertex_type> embedding;
  };

  // The pattern digraph with the vertex labels of the reference figures.
  // `k` is only used for theta and must be at least 3.
  Digraph pattern_digraph(PatternKind kind, std::size_t k = 5);

  // Some (not necessarily induced) subdigraph isomorphic to one of the
  // Gamma patterns or to a directed cycle of length at least 5, if any.
  // Throws SizeLimitError for n > 12.
  std::optional<ForbiddenPattern> find_forbidden(Digraph const& d);

  inline constexpr std::size_t kForbiddenSearchLimit = 12;

  ////////////////////////////////////////////////////////////////////////
  // Band digraphs
  ////////////////////////////////////////////////////////////////////////

  struct BandPartition {
    std::vector<vertex_type> sources;  // V1
    std::vector<vertex_type> sinks;    // V2
    // Set for n = 2 and d = K2, which is band-type although no bipartition
    // exists; `sources` and `sinks` are then empty.
    bool k2_exception = false;
  };

  // A partition V1, V2 of the vertices such that every edge goes from V1 to
  // V2. Isolated vertices go to V2.
  std::optional<BandPartition> band_bipartition(Digraph const& d);

  ////////////////////////////////////////////////////////////////////////
  // Named families
  ////////////////////////////////////////////////////////////////////////

  enum class Family {
    complete,               // K_n
    path,                   // undirected path P_n
    directed_path,          // 1 -> 2 -> ... -> n
    transitive_tournament,  // (u, v) for all u < v
    circulant,              // kappa_n, n odd
    pi,                     // pi_n
    q,                      // Q_n
    gamma1,
    gamma2,
    gamma3,
    gamma4,
    theta,                  // directed cycle of length n
  };

  // Throws PreconditionError on an invalid size or parity.
  Digraph family(Family f, std::size_t n);

  // Accepts the names printed by to_string, e.g. "K", "kappa", "theta".
  Family      parse_family_name(std::string_view name);
  char const* to_string(Family f) noexcept;

  // Parses `name:n` (or a bare gamma name) and builds the digraph.
  Digraph family_from_spec(std::string_view spec);

  ////////////////////////////////////////////////////////////////////////
  // Canonical forms
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t kCanonicalLimit = 8;

  // One byte holding n followed by the row-major adjacency matrix packed
  // most significant bit first. Equal iff the digraphs are isomorphic.
  class CanonicalForm {
   public:
    CanonicalForm() = default;
    explicit CanonicalForm(std::vector<std::uint8_t> bytes) : _bytes(std::move(bytes)) {}

    std::vector<std::uint8_t> const& bytes() const noexcept {
      return _bytes;
    }
    std::string to_hex() const;
    static CanonicalForm from_hex(std::string_view hex);

    friend auto operator<=>(CanonicalForm const&, CanonicalForm const&) = default;

   private:
    std::vector<std::uint8_t> _bytes;
  };

  // Lexicographic minimum of the encoding over all relabellings; n <= 8.
  CanonicalForm canonical_form(Digraph const& d);

  // The digraph whose encoding is `form` (its canonical representative when
  // `form` came from canonical_form).
  Digraph from_canonical_form(CanonicalForm const& form);

}  // namespace arcwords

#endif  // ARCWORDS_DIGRAPH_HPP_
