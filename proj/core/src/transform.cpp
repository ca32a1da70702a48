#include "arcwords/transform.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>

#include "arcwords/error.hpp"

namespace arcwords {

  Transformation::Transformation(std::vector<vertex_type> images) : _images(std::move(images)) {
    std::size_t const n = _images.size();
    for (auto x : _images) {
      if (x < 1 || x > n) {
        throw PreconditionError("image " + std::to_string(x) + " is not in [1, "
                                + std::to_string(n) + "]");
      }
    }
  }

  Transformation Transformation::identity(std::size_t n) {
    std::vector<vertex_type> images(n);
    std::iota(images.begin(), images.end(), vertex_type(1));
    return Transformation(std::move(images));
  }

  Transformation Transformation::constant(std::size_t n, vertex_type v) {
    return Transformation(std::vector<vertex_type>(n, v));
  }

  std::size_t Transformation::rank() const {
    return image_set().size();
  }

  std::vector<vertex_type> Transformation::image_set() const {
    std::vector<vertex_type> out = _images;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool Transformation::is_permutation() const {
    return rank() == degree();
  }

  bool Transformation::is_identity() const {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i + 1) {
        return false;
      }
    }
    return true;
  }

  bool Transformation::is_idempotent() const {
    for (auto x : _images) {
      if (_images[x - 1] != x) {
        return false;
      }
    }
    return true;
  }

  Transformation parse_transformation(std::string_view text) {
    std::vector<vertex_type> images;
    std::size_t              i = 0;
    while (i < text.size()) {
      if (text[i] == ' ' || text[i] == '\t' || text[i] == ',' || text[i] == '\n'
          || text[i] == '\r') {
        ++i;
        continue;
      }
      vertex_type value = 0;
      auto [ptr, ec]    = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc() || ptr == text.data() + i) {
        throw ParseError(ParseError::Kind::malformed, 0,
                         "transformation must be space-separated positive integers");
      }
      images.push_back(value);
      i = ptr - text.data();
    }
    if (images.empty()) {
      throw ParseError(ParseError::Kind::malformed, 0, "empty transformation");
    }
    for (auto x : images) {
      if (x < 1 || x > images.size()) {
        throw ParseError(ParseError::Kind::out_of_range, 0,
                         "image " + std::to_string(x) + " is not in [1, "
                             + std::to_string(images.size()) + "]");
      }
    }
    return Transformation(std::move(images));
  }

  std::string to_string(Transformation const& t) {
    std::string out;
    for (std::size_t i = 0; i < t.degree(); ++i) {
      if (i > 0) {
        out.push_back(' ');
      }
      out += std::to_string(t.images()[i]);
    }
    return out;
  }

  std::ostream& operator<<(std::ostream& os, Transformation const& t) {
    return os << to_string(t);
  }

  Transformation Arc::as_transformation(std::size_t n) const {
    if (from < 1 || from > n || to < 1 || to > n || from == to) {
      throw PreconditionError("arc (" + std::to_string(from) + "->" + std::to_string(to)
                              + ") is not valid on [" + std::to_string(n) + "]");
    }
    auto t = Transformation::identity(n).images();
    t[from - 1] = to;
    return Transformation(std::move(t));
  }

  std::string to_string(Word const& w) {
    std::string out;
    for (auto const& e : w) {
      out += "(" + std::to_string(e.from) + "->" + std::to_string(e.to) + ")";
    }
    return out;
  }

  Word parse_word(std::string_view text) {
    Word        w;
    std::size_t i    = 0;
    auto        fail = [] {
      throw ParseError(ParseError::Kind::malformed, 0, "word must be a sequence of (a->b) tokens");
    };
    auto skip_ws = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) {
        ++i;
      }
    };
    auto number = [&] {
      skip_ws();
      vertex_type value = 0;
      auto [ptr, ec]    = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc()) {
        fail();
      }
      i = ptr - text.data();
      skip_ws();
      return value;
    };
    skip_ws();
    while (i < text.size()) {
      if (text[i] != '(') {
        fail();
      }
      ++i;
      vertex_type a = number();
      if (text.substr(i, 2) != "->") {
        fail();
      }
      i += 2;
      vertex_type b = number();
      if (i >= text.size() || text[i] != ')') {
        fail();
      }
      ++i;
      w.push_back({a, b});
      skip_ws();
    }
    return w;
  }

  Transformation compose(Transformation const& alpha, Transformation const& beta) {
    if (alpha.degree() != beta.degree()) {
      throw PreconditionError("cannot compose transformations of degrees "
                              + std::to_string(alpha.degree()) + " and "
                              + std::to_string(beta.degree()));
    }
    std::vector<vertex_type> out(alpha.degree());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = beta[alpha.images()[i]];
    }
    return Transformation(std::move(out));
  }

  Transformation apply(Transformation const& alpha, Arc e) {
    std::vector<vertex_type> out = alpha.images();
    for (auto& x : out) {
      if (x == e.from) {
        x = e.to;
      }
    }
    return Transformation(std::move(out));
  }

  Transformation evaluate(Word const& w, std::size_t n) {
    if (w.empty()) {
      throw PreconditionError("the empty word evaluates to the identity, which is not singular");
    }
    std::vector<vertex_type> images(n);
    std::iota(images.begin(), images.end(), vertex_type(1));
    for (auto const& e : w) {
      if (e.from < 1 || e.from > n || e.to < 1 || e.to > n || e.from == e.to) {
        throw PreconditionError("arc (" + std::to_string(e.from) + "->" + std::to_string(e.to)
                                + ") is not valid on [" + std::to_string(n) + "]");
      }
      for (auto& x : images) {
        if (x == e.from) {
          x = e.to;
        }
      }
    }
    return Transformation(std::move(images));
  }

  bool uses_edges_of(Word const& w, Digraph const& d) {
    return std::all_of(w.begin(), w.end(), [&](Arc const& e) {
      return e.from >= 1 && e.from <= d.size() && e.to >= 1 && e.to <= d.size()
             && e.from != e.to && d.has_edge(e.from, e.to);
    });
  }

  namespace {
    std::vector<std::size_t> orbit_labels(Transformation const& alpha, std::size_t& count) {
      std::size_t const        n = alpha.degree();
      std::vector<std::size_t> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      };
      for (std::size_t x = 0; x < n; ++x) {
        std::size_t a = find(x), b = find(alpha.images()[x] - 1);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
      std::vector<std::size_t> label(n, n);
      count = 0;
      std::vector<std::size_t> root_label(n, n);
      for (std::size_t x = 0; x < n; ++x) {
        std::size_t r = find(x);
        if (root_label[r] == n) {
          root_label[r] = count++;
        }
        label[x] = root_label[r];
      }
      return label;
    }
  }  // namespace

  OrbitStats orbit_stats(Transformation const& alpha) {
    std::size_t const n = alpha.degree();
    OrbitStats        s{};
    s.rank       = alpha.rank();
    s.idempotent = alpha.is_idempotent();
    for (std::size_t x = 1; x <= n; ++x) {
      s.fix += alpha[x] == x;
    }
    std::size_t count = 0;
    auto        label = orbit_labels(alpha, count);
    s.orbits.assign(count, {});
    for (std::size_t x = 0; x < n; ++x) {
      s.orbits[label[x]].push_back(x + 1);
    }
    std::vector<std::size_t> indeg(n, 0);
    for (auto y : alpha.images()) {
      ++indeg[y - 1];
    }
    for (auto const& orbit : s.orbits) {
      // A pure cycle: every point has exactly one preimage inside the orbit.
      bool cyclic = orbit.size() >= 2 && std::all_of(orbit.begin(), orbit.end(), [&](auto x) {
                      return indeg[x - 1] == 1;
                    });
      s.cycl += cyclic;
    }
    return s;
  }

  Partition kernel_partition(Transformation const& alpha) {
    std::size_t const        n = alpha.degree();
    std::vector<std::size_t> block_of_image(n + 1, n);
    Partition                blocks;
    for (vertex_type x = 1; x <= n; ++x) {
      vertex_type y = alpha[x];
      if (block_of_image[y] == n) {
        block_of_image[y] = blocks.size();
        blocks.emplace_back();
      }
      blocks[block_of_image[y]].push_back(x);
    }
    return blocks;
  }

  std::size_t hi_bound(Transformation const& alpha) {
    if (alpha.is_permutation()) {
      throw PreconditionError("hi_bound is defined for singular transformations only");
    }
    auto s = orbit_stats(alpha);
    return alpha.degree() + s.cycl - s.fix;
  }

}  // namespace arcwords
