#ifndef CSSEMI_SEMIGROUP_HPP_
#define CSSEMI_SEMIGROUP_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cssemi/group.hpp"
#include "cssemi/types.hpp"

namespace cssemi {

  // A finite semigroup given by its multiplication table.
  class FiniteSemigroup {
   public:
    // Throws InvalidTable naming the first non-associative triple.
    FiniteSemigroup(std::vector<std::string>              labels,
                    std::vector<std::vector<Index>> const& table);

    std::size_t size() const noexcept {
      return _labels.size();
    }
    Index product(Index a, Index b) const noexcept {
      return _table[a * _labels.size() + b];
    }
    std::string const& label(Index a) const {
      return _labels.at(a);
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    // Throws UnknownElement.
    Index index_of(std::string_view label) const;
    std::optional<Index> find(std::string_view label) const;
    void check_element(Index a) const;

    std::vector<std::vector<Index>> table_rows() const;

    bool is_idempotent(Index a) const noexcept {
      return product(a, a) == a;
    }

    friend bool operator==(FiniteSemigroup const&, FiniteSemigroup const&)
        = default;

   private:
    std::vector<std::string> _labels;
    std::vector<Index>       _table;
  };

  FiniteSemigroup as_semigroup(FiniteGroup const& g);

  // The subsemigroup on the (product-closed) set sub, relabelled 0..|sub|-1
  // in ascending order of sub.  Labels are kept.
  FiniteSemigroup induced(FiniteSemigroup const& s, ElementSet const& sub);

  // Smallest product-closed superset of x; empty for empty x.  Throws
  // UnknownElement.
  ElementSet closure(FiniteSemigroup const& s, ElementSet const& x);

  bool is_closed(FiniteSemigroup const& s, ElementSet const& x);

  struct IdempotentData {
    ElementSet idempotents;
    // Pairs (e, f) with e <= f in the natural order ef = fe = e.
    std::vector<std::pair<Index, Index>> natural_order;
    // Idempotents with nothing strictly below them.
    ElementSet primitive;
  };

  IdempotentData idempotent_structure(FiniteSemigroup const& s);

  struct GreenData {
    std::vector<ElementSet> r_classes;
    std::vector<ElementSet> l_classes;
    std::vector<ElementSet> h_classes;
    // Class of each element, indexing the vectors above.
    std::vector<std::size_t> r_index;
    std::vector<std::size_t> l_index;
    std::vector<std::size_t> h_index;
    // r_preorder[a][b] iff a <=_R b, that is a in bS or a == b.
    std::vector<std::vector<bool>> r_preorder;
  };

  GreenData green(FiniteSemigroup const& s);

  bool is_completely_simple(FiniteSemigroup const& s);
  bool is_regular(FiniteSemigroup const& s);
  bool is_orthodox(FiniteSemigroup const& s);

  // Every nonempty product-closed subset exactly once, ordered by size then
  // lexicographically.  Throws CapExceeded and TooLarge (more than 64
  // elements).
  std::vector<ElementSet> all_subsemigroups(FiniteSemigroup const& s,
                                            SearchOptions const& opts = {});

  ////////////////////////////////////////////////////////////////////////
  // Morphism search
  ////////////////////////////////////////////////////////////////////////

  // Visits every homomorphism from the closed subset `domain` of `source`
  // into `target` that agrees with `fixed` (pairs source -> target).  With
  // injective set, only embeddings are visited.  The visitor receives a map
  // of size source.size() with kUnmapped outside the domain and returns
  // false to stop.  Returns false iff stopped early.
  inline constexpr Index kUnmapped = static_cast<Index>(-1);

  using MorphismVisitor = std::function<bool(ElementMap const&)>;

  bool for_each_morphism(FiniteSemigroup const&                     source,
                         ElementSet const&                          domain,
                         FiniteSemigroup const&                     target,
                         bool                                       injective,
                         std::vector<std::pair<Index, Index>> const& fixed,
                         MorphismVisitor const&                     visit,
                         SearchOptions const&                       opts = {});

  // All homomorphisms a -> b, sorted.
  std::vector<ElementMap> enumerate_homomorphisms(FiniteSemigroup const& a,
                                                  FiniteSemigroup const& b);

  // First embedding of a into b, if any.
  std::optional<ElementMap> find_embedding(FiniteSemigroup const& a,
                                           FiniteSemigroup const& b);

  // All multiplication-preserving bijections a -> b, sorted.
  std::vector<ElementMap> enumerate_isomorphisms(FiniteSemigroup const& a,
                                                 FiniteSemigroup const& b);

  bool are_isomorphic(FiniteSemigroup const& a, FiniteSemigroup const& b);

  bool is_homomorphism(FiniteSemigroup const& a,
                       FiniteSemigroup const& b,
                       ElementMap const&      map);

  ////////////////////////////////////////////////////////////////////////
  // Brute-force homogeneity
  ////////////////////////////////////////////////////////////////////////

  // One orbit of Aut(S) on subsemigroups.  Homogeneity holds on the orbit
  // exactly when every embedding of the representative is the restriction
  // of an automorphism.
  struct OrbitWitness {
    ElementSet  representative;
    std::size_t orbit_size   = 0;
    std::size_t embeddings   = 0;
    std::size_t restrictions = 0;
  };

  // An isomorphism between subsemigroups with no extension to Aut(S).
  struct NonExtendable {
    ElementSet                           domain;
    ElementSet                           image;
    std::vector<std::pair<Index, Index>> map;
  };

  struct HomogeneityCertificate {
    bool                         homogeneous       = false;
    std::size_t                  automorphisms     = 0;
    std::size_t                  subsemigroups     = 0;
    std::vector<OrbitWitness>    orbits;
    std::optional<NonExtendable> counterexample;

    explicit operator bool() const noexcept {
      return homogeneous;
    }
  };

  // Decides whether every isomorphism between nonempty subsemigroups extends
  // to an automorphism.  Throws CapExceeded, TooLarge, DeadlineExceeded.
  HomogeneityCertificate is_homogeneous(FiniteSemigroup const& s,
                                        SearchOptions const&   opts = {});

  // Subsemigroups of a finite group are its subgroups, so the same checker
  // decides group homogeneity.
  bool is_homogeneous_group(FiniteGroup const& g,
                            SearchOptions const& opts = {});

}  // namespace cssemi

#endif  // CSSEMI_SEMIGROUP_HPP_
