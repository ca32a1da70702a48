// Class enumeration on packed adjacency codes, shared by the experiment
// drivers.

#ifndef ARCWORDS_SRC_ENUMERATE_HPP_
#define ARCWORDS_SRC_ENUMERATE_HPP_

#include <cstdint>
#include <vector>

#include "arcwords/experiments.hpp"

namespace arcwords::detail {

  // Adjacency codes of the members of `spec`, sorted ascending. Up to
  // isomorphism each class is represented by its largest code (orderly
  // generation) or, for tournaments, its smallest.
  std::vector<std::uint64_t> enumerate_codes(ClassSpec const& spec, bool long_run);

  bool in_class(ClassSpec const& spec, Digraph const& d);

}  // namespace arcwords::detail

#endif  // ARCWORDS_SRC_ENUMERATE_HPP_
