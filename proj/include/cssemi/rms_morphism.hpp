#ifndef CSSEMI_RMS_MORPHISM_HPP_
#define CSSEMI_RMS_MORPHISM_HPP_

#include <optional>
#include <vector>

#include "cssemi/rees.hpp"

namespace cssemi {

  struct ValidationResult {
    bool                ok = true;
    std::optional<Cell> failing;  // first (i, lambda) violating the equation

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  // Checks p_{lambda,i} theta = v_lambda q_{lambda psi, i psi} u_i for all
  // cells.  Throws ComponentMismatch if the components do not fit s and t.
  ValidationResult validate(RmsMorphism const& phi, Rms const& s, Rms const& t);

  // A copy of phi marked validated.  Throws NotValidated naming the failing
  // cell, or ComponentMismatch.
  RmsMorphism validated(RmsMorphism phi, Rms const& s, Rms const& t);

  // Throws NotValidated unless phi is marked validated.
  RmsElement apply(RmsMorphism const& phi, RmsElement x);

  // The action on element indices of s and t.
  ElementMap element_map(RmsMorphism const& phi, Rms const& s, Rms const& t);

  // Equality of the induced maps, decided from the quadruples: psi agrees,
  // theta = theta' C_x with x = u_1^-1 u'_1, and u_i v_lambda = u'_i v'_lambda.
  // Throws ComponentMismatch if the shapes differ.
  bool equal(RmsMorphism const& a, RmsMorphism const& b);

  RmsMorphism identity_rms_morphism(Rms const& s);
  // First a, then b.
  RmsMorphism compose(RmsMorphism const& a, RmsMorphism const& b);
  // Requires theta and psi bijective.
  RmsMorphism inverse(RmsMorphism const& phi);

  // [theta C_u, psi, e, e] for phi between normalized s and t.  Throws
  // NormalizationNotFixed if psi moves the normalized row or column,
  // NotNormalized, and InternalError if u is not constant or v is not u^-1.
  RmsMorphism canonical_normalized_form(RmsMorphism const& phi,
                                        Rms const&         s,
                                        Rms const&         t);

  // One representative per morphism s -> t (isomorphisms only when
  // bijective_only), each validated, with u at the normalized column equal
  // to the identity when s is normalized.  Sorted.
  std::vector<RmsMorphism> enumerate_rms_morphisms(Rms const& s,
                                                   Rms const& t,
                                                   bool       bijective_only);

  struct IdempotentRestriction {
    // Equal to the input, with u and v in <H^Q> and theta mapping <G^P>
    // into <H^Q>.
    RmsMorphism representative;
    // The restriction <E(s)> -> <E(t)> over the subgroups.
    RmsMorphism restricted;
    Rms         source;
    Rms         target;
  };

  // Throws NotNormalized, and InternalError if no representative exists.
  IdempotentRestriction restrict_to_idempotent_generated(RmsMorphism const& phi,
                                                         Rms const&         s,
                                                         Rms const&         t);

}  // namespace cssemi

#endif  // CSSEMI_RMS_MORPHISM_HPP_
