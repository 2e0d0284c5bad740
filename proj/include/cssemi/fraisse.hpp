#ifndef CSSEMI_FRAISSE_HPP_
#define CSSEMI_FRAISSE_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cssemi/rees.hpp"
#include "cssemi/rms_morphism.hpp"
#include "cssemi/semigroup.hpp"

namespace cssemi {

  // Isomorphism class representatives, ordered by size and then by first
  // appearance among the subsemigroups.
  struct AgeSample {
    std::size_t                  bound = 0;
    std::vector<FiniteSemigroup> members;
  };

  // Throws CapExceeded, TooLarge.
  AgeSample age(FiniteSemigroup const& s,
                std::size_t            bound,
                SearchOptions const&   opts = {});

  // Drops members isomorphic to earlier ones and sorts by size (stable).
  std::vector<FiniteSemigroup> iso_class_representatives(
      std::vector<FiniteSemigroup> const& xs);

  // Every subsemigroup of every member of k is isomorphic to a member of k.
  struct HpResult {
    bool holds = true;
    // (member, subsemigroup) of the first failure.
    std::optional<std::pair<std::size_t, ElementSet>> failure;
  };

  HpResult check_hp(std::vector<FiniteSemigroup> const& k,
                    SearchOptions const&                opts = {});

  struct JepWitness {
    std::size_t first  = 0;
    std::size_t second = 0;
    std::size_t common = 0;  // index into within.members
    ElementMap  f1;
    ElementMap  f2;
  };

  struct JepResult {
    bool                                             holds = true;
    std::vector<JepWitness>                          witnesses;
    std::optional<std::pair<std::size_t, std::size_t>> failure;
  };

  // For every ordered pair (including equal members) finds a member of
  // `within` into which both embed.
  JepResult check_jep(std::vector<FiniteSemigroup> const& k,
                      AgeSample const&                    within);

  struct Amalgam {
    FiniteSemigroup core;
    FiniteSemigroup b1;
    FiniteSemigroup b2;
    ElementMap      f1;  // core -> b1
    ElementMap      f2;  // core -> b2
  };

  // Throws InvalidAmalgam unless f1 and f2 are embeddings.
  void check_amalgam(Amalgam const& a);

  struct ApWitness {
    std::size_t amalgam = 0;
    std::size_t d       = 0;  // index into within.members
    ElementMap  g1;           // b1 -> d
    ElementMap  g2;           // b2 -> d
  };

  struct ApResult {
    bool                       holds = true;
    std::vector<ApWitness>     witnesses;
    std::optional<std::size_t> failure;
  };

  // For each amalgam finds D in `within` and embeddings g1, g2 with
  // f1 g1 = f2 g2 on the core.  Throws InvalidAmalgam.
  ApResult check_ap(std::vector<Amalgam> const& amalgams,
                    AgeSample const&            within,
                    SearchOptions const&        opts = {});

  // Every amalgam (core, b1, b2, f1, f2) over the members of k, with f1 and
  // f2 ranging over all embeddings.
  std::vector<Amalgam> all_amalgams(std::vector<FiniteSemigroup> const& k);

  struct CsAmalgamation {
    Rms         t;
    RmsMorphism g1;  // wing 1 -> t
    RmsMorphism g2;  // wing 2 -> t
    GroupPtr    k;
    // <K^Q> is isomorphic to a subgroup of H.
    bool        entries_in_age_h = false;
  };

  // Amalgamates normalized wings m1, m2 over the core m0, identified by
  // labels as in the construction for CS(G;H): index sets and group
  // elements are shared by label, the three share one normalization cell
  // and agree on the core entries.  K is the first group, by size among the
  // subgroups of g of order at most group_amalgam_bound, into which both
  // wing groups embed compatibly.  Throws CoreMismatch, NotNormalized,
  // NoGroupAmalgamFound.
  CsAmalgamation amalgamate_cs(Rms const&        m0,
                               Rms const&        m1,
                               Rms const&        m2,
                               GroupPtr const&   g,
                               ElementSet const& h,
                               std::size_t       group_amalgam_bound);

  // A normalized M[G; I, Lambda; P] with G^P = H whose Gamma(S) has no
  // level-k defects over colour set H on the seed's vertices.  With a seed,
  // rows and columns are only appended.  Throws NotASubgroup, InvalidSeed.
  Rms grow_generic_rms(GroupPtr const&           g,
                       ElementSet const&         h,
                       std::size_t               k,
                       std::optional<Rms> const& seed = std::nullopt);

  // Level-k defects of Gamma(s) over colour set h on the first
  // scope.first rows and scope.second columns of Gamma(s).
  DefectList rms_defects(Rms const&                                       s,
                         ElementSet const&                                h,
                         std::size_t                                      k,
                         std::optional<std::pair<std::size_t, std::size_t>> scope
                         = std::nullopt);

}  // namespace cssemi

#endif  // CSSEMI_FRAISSE_HPP_
