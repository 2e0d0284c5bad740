#ifndef CSSEMI_REES_HPP_
#define CSSEMI_REES_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cssemi/graph.hpp"
#include "cssemi/group.hpp"
#include "cssemi/semigroup.hpp"
#include "cssemi/types.hpp"

namespace cssemi {

  // (i, g, lambda) with i in I, g in G and lambda in Lambda, all as indices.
  struct RmsElement {
    Index i      = 0;
    Index g      = 0;
    Index lambda = 0;

    friend auto operator<=>(RmsElement const&, RmsElement const&) = default;
  };

  // A cell (column i, row lambda) of the sandwich matrix.
  struct Cell {
    Index i      = 0;
    Index lambda = 0;

    friend auto operator<=>(Cell const&, Cell const&) = default;
  };

  // M[G; I, Lambda; P] where P is a Lambda x I matrix over G, stored as
  // matrix[lambda][i].  Index labels default to "1", "2", ...
  class ReesMatrixSemigroup {
   public:
    // Throws InvalidTable on shape errors or duplicate labels and
    // UnknownElement on entries outside the group.
    ReesMatrixSemigroup(GroupPtr                        group,
                        std::vector<std::vector<Index>> matrix,
                        std::vector<std::string>        i_labels      = {},
                        std::vector<std::string>        lambda_labels = {});

    GroupPtr const& group_ptr() const noexcept {
      return _group;
    }
    FiniteGroup const& group() const noexcept {
      return *_group;
    }
    std::size_t i_size() const noexcept {
      return _i_labels.size();
    }
    std::size_t lambda_size() const noexcept {
      return _lambda_labels.size();
    }
    std::size_t size() const noexcept {
      return i_size() * group().size() * lambda_size();
    }
    Index entry(Index lambda, Index i) const {
      return _matrix[lambda][i];
    }
    std::vector<std::vector<Index>> const& matrix() const noexcept {
      return _matrix;
    }
    std::vector<std::string> const& i_labels() const noexcept {
      return _i_labels;
    }
    std::vector<std::string> const& lambda_labels() const noexcept {
      return _lambda_labels;
    }
    // Throws UnknownLabel.
    Index i_index(std::string_view label) const;
    Index lambda_index(std::string_view label) const;

    // The normalization marker, if one was set.
    std::optional<Cell> const& normalized_at() const noexcept {
      return _normalized_at;
    }
    // Sets the marker.  Throws NotNormalized unless row lambda and column i
    // of the matrix are identically the identity.
    ReesMatrixSemigroup& mark_normalized(Cell c);

    bool is_normal_cell(Cell c) const;
    // The marker, or else the first cell in declaration order whose row and
    // column are identically the identity.
    std::optional<Cell> find_normal_cell() const;
    // As find_normal_cell but throws NotNormalized.
    Cell normal_cell() const;
    bool is_normalized() const {
      return find_normal_cell().has_value();
    }

    // Elements are numbered ((i * |G|) + g) * |Lambda| + lambda.
    Index index(RmsElement x) const noexcept {
      return static_cast<Index>(
          (x.i * group().size() + x.g) * lambda_size() + x.lambda);
    }
    RmsElement element(Index k) const noexcept {
      Index lambda = static_cast<Index>(k % lambda_size());
      k /= static_cast<Index>(lambda_size());
      Index g = static_cast<Index>(k % group().size());
      return {static_cast<Index>(k / group().size()), g, lambda};
    }
    // Throws UnknownLabel.
    void check_element(RmsElement x) const;
    // "i:g:lambda" using labels.
    std::string element_label(RmsElement x) const;
    // Inverse of element_label.  Throws UnknownLabel.
    RmsElement parse_element(std::string_view text) const;

    friend bool operator==(ReesMatrixSemigroup const& a,
                           ReesMatrixSemigroup const& b);

   private:
    GroupPtr                        _group;
    std::vector<std::vector<Index>> _matrix;
    std::vector<std::string>        _i_labels;
    std::vector<std::string>        _lambda_labels;
    std::optional<Cell>             _normalized_at;
  };

  using Rms = ReesMatrixSemigroup;

  // The quadruple [theta, psi, u_i, v_lambda] acting by
  // (i, g, lambda) -> (i psi, u_i (g theta) v_lambda, lambda psi).
  // Nothing is checked on construction; see validate.
  struct RmsMorphism {
    GroupMorphism theta;
    ElementMap    psi_i;
    ElementMap    psi_lambda;
    std::vector<Index> u;
    std::vector<Index> v;
    // Set by validated() and by the operations that return checked
    // morphisms.  apply refuses unvalidated morphisms.
    bool validated = false;
  };

  RmsElement multiply(Rms const& s, RmsElement x, RmsElement y);

  // (i, p_{lambda,i}^-1, lambda).  Throws UnknownLabel.
  RmsElement idempotent_at(Rms const& s, Index i, Index lambda);

  struct Normalization {
    Rms         semigroup;
    RmsMorphism iso;  // from the input to `semigroup`
  };

  // Normalizes along row lambda and column i with
  // q_{mu,j} = p_{lambda,i} p_{mu,i}^-1 p_{mu,j} p_{lambda,j}^-1.  The
  // result is marked normalized at (i, lambda) and the returned isomorphism
  // is validated.  Throws UnknownLabel, InternalError if validation fails.
  Normalization normalize(Rms const& s, Index i, Index lambda);

  struct EntryGroupData {
    ElementSet              entries;    // G^P
    ElementSet              generated;  // <G^P>
    std::vector<ElementSet> columns;    // C(i), indexed by i
    std::vector<ElementSet> rows;       // R(lambda), indexed by lambda
  };

  EntryGroupData entry_group_data(Rms const& s);

  // M[<G^P>; I, Lambda; P] over the subgroup as a group in its own right
  // (labels kept).  Throws NotNormalized.
  Rms idempotent_generated(Rms const& s);

  // The graph on the rows (left) and columns (right) of the matrix, minus
  // the given row and column.  Colours are the occurring entries.
  ColouredGraph from_matrix(Rms const& s, std::optional<Cell> drop);

  struct InducedGraphs {
    ColouredGraph gamma_p;  // monochrome on Lambda x I
    ColouredGraph gamma_s;  // Gamma(S)
  };

  // Throws NotNormalized.
  InducedGraphs induced_graphs(Rms const& s);

  // The multiplication table, element k of the table being s.element(k).
  FiniteSemigroup to_table(Rms const& s);

  struct Coordinatization {
    Rms        semigroup;
    // iso[x] is the index in `semigroup` of table element x.
    ElementMap iso;
  };

  // I = R-classes, Lambda = L-classes, G = the H-class of the first
  // idempotent.  The result is normalized at (1, 1) and the isomorphism is
  // verified.  Throws NotCompletelySimple.
  Coordinatization rees_coordinatize(FiniteSemigroup const& s);

}  // namespace cssemi

#endif  // CSSEMI_REES_HPP_
