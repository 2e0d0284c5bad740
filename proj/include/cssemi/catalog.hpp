#ifndef CSSEMI_CATALOG_HPP_
#define CSSEMI_CATALOG_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "cssemi/group.hpp"
#include "cssemi/rees.hpp"
#include "cssemi/semigroup.hpp"

// Small structures used by the tests, the sweep and the CLI corpus.
namespace cssemi::catalog {

  // Z_n with labels "0".."n-1", or the given labels for 0, 1, ... n-1.
  GroupPtr cyclic_group(std::size_t n, std::vector<std::string> labels = {});
  GroupPtr trivial_group();
  // Labels "(a,b)".
  GroupPtr direct_product(GroupPtr const& g, GroupPtr const& h);
  // Permutations of {1,2,3} in cycle notation, composed left to right.
  GroupPtr symmetric_group3();

  // Every group of order at most n that this catalog knows (orders up to 8),
  // one per isomorphism class, named.
  std::vector<std::pair<std::string, GroupPtr>> small_groups(std::size_t n);

  FiniteSemigroup rectangular_band(std::size_t rows, std::size_t cols);
  FiniteSemigroup left_zero(std::size_t n);
  FiniteSemigroup right_zero(std::size_t n);
  // <a | a^(index+period) = a^index>, labels "a", "a^2", ...
  FiniteSemigroup monogenic(std::size_t index, std::size_t period);

  // M[G; I, Lambda; P] with every entry the identity.
  Rms trivial_rms(GroupPtr const& g, std::size_t i_size, std::size_t l_size);

  // The three examples of homogeneous Rees matrix semigroups, over groups
  // labelled e, a (and b = a^-1 for Z3).
  Rms s2();
  Rms s3();
  Rms s4();

}  // namespace cssemi::catalog

#endif  // CSSEMI_CATALOG_HPP_
