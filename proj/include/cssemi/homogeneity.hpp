#ifndef CSSEMI_HOMOGENEITY_HPP_
#define CSSEMI_HOMOGENEITY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cssemi/graph.hpp"
#include "cssemi/rees.hpp"
#include "cssemi/semigroup.hpp"

namespace cssemi {

  struct ScreenViolation {
    enum class Kind { NotClosed, Column, Row, NotCharacteristic };
    Kind        kind;
    Index       index = 0;  // column or row index for Column and Row
    std::string message;
  };

  struct ScreenResult {
    std::vector<ScreenViolation> violations;

    bool pass() const noexcept {
      return violations.empty();
    }
  };

  // Necessary conditions on a normalized S: G^P closed, C(i) = R(lambda) =
  // G^P off the normalized row and column, and G^P characteristic.  Throws
  // NotNormalized.
  ScreenResult screen_necessary(Rms const& s, SearchOptions const& opts = {});

  enum class Reason {
    FailedScreen,
    GroupNotHomogeneous,
    GPNotCharacteristic,
    PatternMismatch
  };

  std::string to_string(Reason r);

  struct ClassificationOutcome {
    bool                  homogeneous = false;
    int                   case_number = 0;  // 1..4 when homogeneous
    std::optional<Reason> reason;
    // Normalization cell that was classified, with its I and Lambda labels.
    Cell                  normalization;
    std::string           normalization_i;
    std::string           normalization_lambda;
    // Table label of the idempotent at that cell, for table inputs.
    std::string           normalization_idempotent;
    std::vector<std::string> gp;  // G^P as group labels
    bool                  characteristic = false;
    GraphPattern          pattern        = GraphPattern::Monochromatic;
    std::string           detail;

    std::string verdict() const;
  };

  // Throws NotCompletelySimple for table inputs that are not completely
  // simple.
  ClassificationOutcome classify_homogeneous(Rms const&           s,
                                             SearchOptions const& opts = {});
  ClassificationOutcome classify_homogeneous(FiniteSemigroup const& s,
                                             SearchOptions const& opts = {});

  struct DecompositionReport {
    bool group_homogeneous                  = false;
    bool idempotent_generated_homogeneous   = false;
    bool characteristic                     = false;

    bool homogeneous() const noexcept {
      return group_homogeneous && idempotent_generated_homogeneous
             && characteristic;
    }
  };

  // Throws NotNormalized.
  DecompositionReport decompose_check(Rms const&           s,
                                      SearchOptions const& opts = {});

  struct SweepInstance {
    std::string group;
    Rms         semigroup;
  };

  // Every normalized matrix (row and column 1 identity) over each group
  // for 1 <= |I|, |Lambda| <= max_index.
  std::vector<SweepInstance> sweep_instances(
      std::vector<std::pair<std::string, GroupPtr>> const& groups,
      std::size_t                                          max_index);

  struct SweepReport {
    std::size_t              instances   = 0;
    std::size_t              homogeneous = 0;
    std::size_t              regular_homogeneous = 0;
    std::size_t              regular_homogeneous_not_cs = 0;
    std::vector<std::string> disagreements;
  };

  // Compares brute force, classification and decomposition on each
  // instance.
  SweepReport sweep(std::vector<SweepInstance> const& instances,
                    SearchOptions const&              opts = {});

  // A readable rendering of a matrix, rows separated by ';'.
  std::string matrix_string(Rms const& s);

}  // namespace cssemi

#endif  // CSSEMI_HOMOGENEITY_HPP_
