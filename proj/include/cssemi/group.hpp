#ifndef CSSEMI_GROUP_HPP_
#define CSSEMI_GROUP_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cssemi/types.hpp"

namespace cssemi {

  class FiniteGroup;
  using GroupPtr = std::shared_ptr<FiniteGroup const>;

  // A finite group given by its Cayley table.  Products are read as
  // table[g][h] = g * h; morphisms act on the right as in g(theta).
  //
  // Instances are immutable and shared by pointer so that many Rees matrix
  // semigroups can reference the same table.
  class FiniteGroup {
   public:
    // Validates the table (Latin square, associative, two-sided identity) and
    // throws InvalidTable naming the first violation.
    static GroupPtr make(std::vector<std::string>              labels,
                         std::vector<std::vector<Index>> const& table);

    std::size_t size() const noexcept {
      return _labels.size();
    }
    Index product(Index g, Index h) const noexcept {
      return _table[g * _labels.size() + h];
    }
    Index identity() const noexcept {
      return _identity;
    }
    Index inverse(Index g) const noexcept {
      return _inverse[g];
    }
    Index order(Index g) const noexcept {
      return _order[g];
    }
    std::string const& label(Index g) const {
      return _labels.at(g);
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    // Throws UnknownElement.
    Index index_of(std::string_view label) const;
    std::optional<Index> find(std::string_view label) const;

    // Throws UnknownElement if g is out of range.
    void check_element(Index g) const;

    bool is_abelian() const;

    // Irredundant generating set chosen greedily by decreasing element order.
    ElementSet const& generators() const noexcept {
      return _generators;
    }

    std::vector<std::vector<Index>> table_rows() const;

   private:
    FiniteGroup() = default;

    std::vector<std::string> _labels;
    std::vector<Index>       _table;
    Index                    _identity = 0;
    std::vector<Index>       _inverse;
    std::vector<Index>       _order;
    ElementSet               _generators;
  };

  bool operator==(FiniteGroup const& a, FiniteGroup const& b);

  // A map between two groups.  Not validated on construction; see
  // is_group_morphism.
  struct GroupMorphism {
    GroupPtr source;
    GroupPtr target;
    ElementMap map;

    Index operator()(Index g) const {
      return map[g];
    }
  };

  bool operator==(GroupMorphism const& a, GroupMorphism const& b);

  bool is_group_morphism(GroupMorphism const& theta);
  bool is_bijective(GroupMorphism const& theta);

  GroupMorphism identity_morphism(GroupPtr const& g);
  // First theta, then phi.
  GroupMorphism compose(GroupMorphism const& theta, GroupMorphism const& phi);
  // Requires a bijection.
  GroupMorphism inverse(GroupMorphism const& theta);

  // Smallest subgroup containing x.  Throws UnknownElement.
  ElementSet subgroup_closure(FiniteGroup const& g, ElementSet const& x);

  bool is_subgroup(FiniteGroup const& g, ElementSet const& h);

  // Every subgroup exactly once, ordered by size and then lexicographically
  // on the sorted labels.
  std::vector<ElementSet> all_subgroups(FiniteGroup const& g);

  // Every group morphism g -> h (every isomorphism when bijective_only),
  // sorted by image vector.
  std::vector<GroupMorphism> enumerate_group_morphisms(GroupPtr const& g,
                                                       GroupPtr const& h,
                                                       bool bijective_only);

  std::vector<GroupMorphism> automorphisms(GroupPtr const& g);

  // The map x -> u x u^-1.  Throws UnknownElement.
  GroupMorphism inner_automorphism(GroupPtr const& g, Index u);

  struct CharacteristicResult {
    bool                         characteristic = true;
    std::optional<GroupMorphism> witness;  // an automorphism moving h

    explicit operator bool() const noexcept {
      return characteristic;
    }
  };

  // Throws NotASubgroup.
  CharacteristicResult is_characteristic(GroupPtr const&   g,
                                         ElementSet const& h);

  // Trivial, or cyclic of prime order.
  bool is_simple_abelian(FiniteGroup const& g);

  // The subgroup h of g as a group in its own right.  Labels are kept, so
  // the inclusion is recovered by label lookup; embedding[k] is the index in
  // g of element k of the result.
  struct Subgroup {
    GroupPtr   group;
    ElementMap embedding;
  };
  Subgroup subgroup_as_group(FiniteGroup const& g, ElementSet const& h);

  // True iff g is isomorphic to some subgroup of h.
  bool embeds_in(GroupPtr const& g, GroupPtr const& h);

  bool are_isomorphic(GroupPtr const& g, GroupPtr const& h);

}  // namespace cssemi

#endif  // CSSEMI_GROUP_HPP_
