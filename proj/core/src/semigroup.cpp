#include "arcwords/semigroup.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <istream>
#include <memory>
#include <mutex>
#include <ostream>

#include "arcwords/error.hpp"

namespace arcwords {

  namespace {
    std::size_t ipow(std::size_t base, std::size_t exp) {
      std::size_t r = 1;
      while (exp-- > 0) {
        r *= base;
      }
      return r;
    }

    void check_degree(std::size_t n) {
      if (n == 0 || n > kExploreLimit) {
        throw SizeLimitError("semigroup exploration supports 1 <= n <= 8, found n = "
                             + std::to_string(n));
      }
    }

    // digits[i] = (i + 1) alpha - 1.
    void decode(std::size_t n, state_index idx, std::array<std::uint8_t, kExploreLimit>& digits) {
      for (std::size_t i = n; i-- > 0;) {
        digits[i] = static_cast<std::uint8_t>(idx % n);
        idx /= n;
      }
    }
  }  // namespace

  std::size_t state_count(std::size_t n) {
    check_degree(n);
    return ipow(n, n);
  }

  state_index index_of(Transformation const& alpha) {
    std::size_t const n = alpha.degree();
    check_degree(n);
    state_index idx = 0;
    for (auto x : alpha.images()) {
      idx = idx * n + (x - 1);
    }
    return idx;
  }

  Transformation transformation_at(std::size_t n, state_index idx) {
    if (idx >= state_count(n)) {
      throw PreconditionError("state index out of range");
    }
    std::array<std::uint8_t, kExploreLimit> digits;
    decode(n, idx, digits);
    std::vector<vertex_type> images(n);
    for (std::size_t i = 0; i < n; ++i) {
      images[i] = digits[i] + 1;
    }
    return Transformation(std::move(images));
  }

  ////////////////////////////////////////////////////////////////////////
  // StateTable
  ////////////////////////////////////////////////////////////////////////

  StateTable::StateTable(std::size_t n) : _n(n) {
    std::size_t const total = state_count(n);
    _rank.resize(total);
    _fix.resize(total);
    _cycl.resize(total);
    _idempotent.resize(total);
    std::array<std::uint8_t, kExploreLimit> f;
    for (std::size_t idx = 0; idx < total; ++idx) {
      decode(n, static_cast<state_index>(idx), f);
      std::array<std::uint8_t, kExploreLimit> indeg{};
      unsigned                                image = 0;
      std::uint8_t                            fix   = 0;
      bool                                    idem  = true;
      for (std::size_t x = 0; x < n; ++x) {
        ++indeg[f[x]];
        image |= 1u << f[x];
        fix += f[x] == x;
        idem = idem && f[f[x]] == f[x];
      }
      // A cycle of length >= 2 is a whole orbit iff no other point maps
      // into it; count each such cycle at its smallest point.
      std::uint8_t cycl = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if (f[x] == x) {
          continue;
        }
        std::size_t y = f[x], len = 1;
        bool        smallest = true, pure = indeg[x] == 1;
        while (y != x && len <= n) {
          smallest = smallest && y > x;
          pure     = pure && indeg[y] == 1;
          y        = f[y];
          ++len;
        }
        cycl += y == x && smallest && pure;
      }
      _rank[idx]       = static_cast<std::uint8_t>(std::popcount(image));
      _fix[idx]        = fix;
      _cycl[idx]       = cycl;
      _idempotent[idx] = idem;
    }
  }

  StateTable const& StateTable::get(std::size_t n) {
    static std::array<std::once_flag, kExploreLimit + 1>               flags;
    static std::array<std::unique_ptr<StateTable>, kExploreLimit + 1> tables;
    check_degree(n);
    std::call_once(flags[n], [n] { tables[n] = std::make_unique<StateTable>(n); });
    return *tables[n];
  }

  ////////////////////////////////////////////////////////////////////////
  // RankProfile
  ////////////////////////////////////////////////////////////////////////

  RankProfile::RankProfile(std::size_t n, std::vector<RankStat> stats)
      : _n(n), _stats(std::move(stats)) {}

  std::optional<std::size_t> RankProfile::length(std::size_t r) const {
    if (r == 0 || r >= _stats.size() || _stats[r].count == 0) {
      return std::nullopt;
    }
    return _stats[r].max_length;
  }

  std::size_t RankProfile::count(std::size_t r) const {
    return r < _stats.size() ? _stats[r].count : 0;
  }

  std::optional<Transformation> RankProfile::witness(std::size_t r) const {
    if (!length(r)) {
      return std::nullopt;
    }
    return transformation_at(_n, _stats[r].witness);
  }

  std::optional<std::size_t> RankProfile::overall() const {
    std::optional<std::size_t> best;
    for (std::size_t r = 1; r < _stats.size(); ++r) {
      if (auto l = length(r); l && (!best || *l > *best)) {
        best = l;
      }
    }
    return best;
  }

  std::size_t RankProfile::size() const {
    std::size_t total = 0;
    for (auto const& s : _stats) {
      total += s.count;
    }
    return total;
  }

  ////////////////////////////////////////////////////////////////////////
  // Explorer
  ////////////////////////////////////////////////////////////////////////

  Explorer::Explorer(std::size_t n) : _n(n), _weight(n) {
    std::size_t const total = state_count(n);
    for (std::size_t i = 0; i < n; ++i) {
      _weight[i] = ipow(n, n - 1 - i);
    }
    _dist.assign(total, kNotMember);
    _queue.reserve(std::min<std::size_t>(total, 1 << 16));
  }

  void Explorer::run(Digraph const& d) {
    std::size_t const n = _n;
    if (d.size() != n) {
      throw PreconditionError("digraph has " + std::to_string(d.size())
                              + " vertices but the engine has degree " + std::to_string(n));
    }
    if (_dist.empty()) {
      _dist.assign(state_count(n), kNotMember);
    } else {
      std::fill(_dist.begin(), _dist.end(), kNotMember);
    }
    _queue.clear();

    std::vector<std::pair<std::uint8_t, std::uint8_t>> edges;
    for (auto const& e : d.edges()) {
      edges.emplace_back(e.from - 1, e.to - 1);
    }

    std::size_t identity = 0;
    for (std::size_t i = 0; i < n; ++i) {
      identity += i * _weight[i];
    }
    for (auto [a, b] : edges) {
      state_index s = static_cast<state_index>(identity + b * _weight[a] - a * _weight[a]);
      _dist[s]      = 1;
      _queue.push_back(s);
    }

    std::vector<RankStat>                    stats(n + 1);
    std::array<std::uint8_t, kExploreLimit>  digits;
    std::array<std::int64_t, kExploreLimit> w;
    for (std::size_t head = 0; head < _queue.size(); ++head) {
      state_index const   s    = _queue[head];
      distance_type const dist = _dist[s];
      decode(n, s, digits);
      w.fill(0);
      unsigned image = 0;
      for (std::size_t i = 0; i < n; ++i) {
        w[digits[i]] += static_cast<std::int64_t>(_weight[i]);
        image |= 1u << digits[i];
      }
      RankStat& st = stats[std::popcount(image)];
      ++st.count;
      if (st.count == 1 || dist > st.max_length || (dist == st.max_length && s < st.witness)) {
        st.max_length = dist;
        st.witness    = s;
      }
      if (dist + 1 >= kNotMember) {
        throw Error("word length overflowed the distance table");
      }
      for (auto [a, b] : edges) {
        if (w[a] == 0) {
          continue;
        }
        auto const t = static_cast<state_index>(static_cast<std::int64_t>(s)
                                                + (std::int64_t(b) - a) * w[a]);
        if (_dist[t] == kNotMember) {
          _dist[t] = dist + 1;
          _queue.push_back(t);
        }
      }
    }
    _profile = RankProfile(n, std::move(stats));
  }

  std::vector<distance_type> Explorer::release_distances() {
    return std::move(_dist);
  }

  ////////////////////////////////////////////////////////////////////////
  // SemigroupIndex
  ////////////////////////////////////////////////////////////////////////

  SemigroupIndex::SemigroupIndex(Digraph d, std::vector<distance_type> dist, RankProfile profile)
      : _digraph(std::move(d)), _dist(std::move(dist)), _profile(std::move(profile)) {}

  bool SemigroupIndex::contains(Transformation const& alpha) const {
    return alpha.degree() == degree() && _dist[index_of(alpha)] != kNotMember;
  }

  SemigroupIndex explore(Digraph const& d) {
    Explorer e(d.size());
    e.run(d);
    RankProfile profile = e.profile();
    return SemigroupIndex(d, e.release_distances(), std::move(profile));
  }

  std::optional<std::size_t> length_of(SemigroupIndex const& idx, Transformation const& alpha) {
    if (alpha.degree() != idx.degree()) {
      throw PreconditionError("transformation degree " + std::to_string(alpha.degree())
                              + " does not match the semigroup degree "
                              + std::to_string(idx.degree()));
    }
    distance_type const d = idx.distance(index_of(alpha));
    if (d == kNotMember) {
      return std::nullopt;
    }
    return d;
  }

  RankProfile const& rank_profile(SemigroupIndex const& idx) {
    return idx.profile();
  }

  Word shortest_word(SemigroupIndex const& idx, Transformation const& alpha) {
    if (alpha.degree() != idx.degree()) {
      throw PreconditionError("transformation degree does not match the semigroup degree");
    }
    return shortest_word(idx.digraph(), idx.distances(), alpha);
  }

  Word shortest_word(Digraph const&                 d,
                     std::span<distance_type const> dist,
                     Transformation const&          alpha) {
    std::size_t const n = d.size();
    if (alpha.degree() != n || dist.size() != state_count(n)) {
      throw PreconditionError("distance table does not match the digraph");
    }
    std::vector<vertex_type> cur = alpha.images();
    state_index              s   = index_of(alpha);
    if (dist[s] == kNotMember) {
      throw NotMemberError(to_string(alpha) + " is not in the semigroup");
    }
    auto const edges = d.edges();
    Word       reversed;
    for (distance_type level = dist[s]; level > 1; --level) {
      bool found = false;
      for (auto const& e : edges) {
        bool a_in_image = false;
        std::vector<std::size_t> fibre;
        for (std::size_t i = 0; i < n; ++i) {
          a_in_image = a_in_image || cur[i] == e.from;
          if (cur[i] == e.to) {
            fibre.push_back(i);
          }
        }
        if (a_in_image || fibre.empty()) {
          continue;
        }
        for (std::size_t mask = 1; mask < (std::size_t(1) << fibre.size()) && !found; ++mask) {
          std::vector<vertex_type> prev = cur;
          for (std::size_t j = 0; j < fibre.size(); ++j) {
            if (mask >> j & 1) {
              prev[fibre[j]] = e.from;
            }
          }
          state_index p = index_of(Transformation(prev));
          if (dist[p] == level - 1) {
            reversed.push_back({e.from, e.to});
            cur   = std::move(prev);
            s     = p;
            found = true;
          }
        }
        if (found) {
          break;
        }
      }
      if (!found) {
        throw Error("inconsistent distance table: no predecessor found");
      }
    }
    // cur is now a single arc of D.
    bool found = false;
    for (auto const& e : edges) {
      Arc a{e.from, e.to};
      if (a.as_transformation(n).images() == cur) {
        reversed.push_back(a);
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error("inconsistent distance table: length-1 element is not an arc");
    }
    std::reverse(reversed.begin(), reversed.end());
    return reversed;
  }

  ////////////////////////////////////////////////////////////////////////
  // Binary dump
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr char kMagic[8] = {'A', 'R', 'C', 'W', 'I', 'D', 'X', '1'};

    void put_u16(std::ostream& os, std::uint16_t x) {
      char b[2] = {static_cast<char>(x & 0xFF), static_cast<char>(x >> 8)};
      os.write(b, 2);
    }

    std::uint16_t get_u16(std::istream& is) {
      unsigned char b[2];
      is.read(reinterpret_cast<char*>(b), 2);
      return static_cast<std::uint16_t>(b[0] | b[1] << 8);
    }
  }  // namespace

  void save(SemigroupIndex const& idx, std::ostream& os) {
    os.write(kMagic, sizeof(kMagic));
    os.put(static_cast<char>(idx.degree()));
    auto const edges = idx.digraph().edges();
    put_u16(os, static_cast<std::uint16_t>(edges.size()));
    for (auto const& e : edges) {
      os.put(static_cast<char>(e.from));
      os.put(static_cast<char>(e.to));
    }
    std::vector<char> body(2 * idx.distances().size());
    for (std::size_t i = 0; i < idx.distances().size(); ++i) {
      body[2 * i]     = static_cast<char>(idx.distances()[i] & 0xFF);
      body[2 * i + 1] = static_cast<char>(idx.distances()[i] >> 8);
    }
    os.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!os) {
      throw Error("failed to write semigroup index");
    }
  }

  SemigroupIndex load(std::istream& is) {
    char magic[8];
    is.read(magic, 8);
    if (!is || std::memcmp(magic, kMagic, 8) != 0) {
      throw ParseError(ParseError::Kind::bad_header, 0, "not a semigroup index dump");
    }
    std::size_t const n = static_cast<unsigned char>(is.get());
    check_degree(n);
    std::size_t const m = get_u16(is);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t u = static_cast<unsigned char>(is.get());
      std::size_t v = static_cast<unsigned char>(is.get());
      edges.push_back({u, v});
    }
    if (!is) {
      throw ParseError(ParseError::Kind::malformed, 0, "truncated semigroup index header");
    }
    Digraph                    d(n, edges);
    std::size_t const          total = state_count(n);
    std::vector<char>          body(2 * total);
    is.read(body.data(), static_cast<std::streamsize>(body.size()));
    if (!is) {
      throw ParseError(ParseError::Kind::malformed, 0, "truncated semigroup index body");
    }
    std::vector<distance_type> dist(total);
    std::vector<RankStat>      stats(n + 1);
    StateTable const*          table = nullptr;
    for (std::size_t i = 0; i < total; ++i) {
      dist[i] = static_cast<distance_type>(static_cast<unsigned char>(body[2 * i])
                                           | static_cast<unsigned char>(body[2 * i + 1]) << 8);
      if (dist[i] == kNotMember) {
        continue;
      }
      if (table == nullptr) {
        table = &StateTable::get(n);
      }
      RankStat& st = stats[table->rank(static_cast<state_index>(i))];
      ++st.count;
      if (st.count == 1 || dist[i] > st.max_length) {
        st.max_length = dist[i];
        st.witness    = static_cast<state_index>(i);
      }
    }
    return SemigroupIndex(std::move(d), std::move(dist), RankProfile(n, std::move(stats)));
  }

}  // namespace arcwords
