#ifndef CSSEMI_GRAPH_HPP_
#define CSSEMI_GRAPH_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cssemi/types.hpp"

namespace cssemi {

  // A complete bipartite graph whose edges carry colours.  Colours are
  // compared by label, so two graphs with differently ordered colour lists
  // are still comparable.
  class EdgeColouredBipartiteGraph {
   public:
    EdgeColouredBipartiteGraph() = default;
    // colouring[l][r] indexes into colours.  Throws InvalidTable on shape
    // errors, out-of-range colours and duplicate labels.
    EdgeColouredBipartiteGraph(std::vector<std::string>        left,
                               std::vector<std::string>        right,
                               std::vector<std::string>        colours,
                               std::vector<std::vector<Index>> colouring);

    std::size_t left_size() const noexcept {
      return _left.size();
    }
    std::size_t right_size() const noexcept {
      return _right.size();
    }
    std::vector<std::string> const& left() const noexcept {
      return _left;
    }
    std::vector<std::string> const& right() const noexcept {
      return _right;
    }
    std::vector<std::string> const& colours() const noexcept {
      return _colours;
    }
    std::vector<std::vector<Index>> const& colouring() const noexcept {
      return _colouring;
    }
    Index colour(Index l, Index r) const {
      return _colouring[l][r];
    }
    std::string const& colour_label(Index l, Index r) const {
      return _colours[_colouring[l][r]];
    }
    // Colour indices that label at least one edge, ascending.
    ElementSet occurring_colours() const;

    friend bool operator==(EdgeColouredBipartiteGraph const&,
                           EdgeColouredBipartiteGraph const&)
        = default;

   private:
    std::vector<std::string>        _left;
    std::vector<std::string>        _right;
    std::vector<std::string>        _colours;
    std::vector<std::vector<Index>> _colouring;
  };

  using ColouredGraph = EdgeColouredBipartiteGraph;

  struct GraphIsomorphism {
    ElementMap left;
    ElementMap right;

    friend auto operator<=>(GraphIsomorphism const&, GraphIsomorphism const&)
        = default;
  };

  // Every side-preserving bijection matching edge colours by label, sorted.
  std::vector<GraphIsomorphism> enumerate_graph_isomorphisms(
      ColouredGraph const& a,
      ColouredGraph const& b);

  enum class GraphPattern { Monochromatic, MatchingPlusComplement, Other };

  std::string to_string(GraphPattern p);

  GraphPattern classify_pattern(ColouredGraph const& g);

  // A partial isomorphism between induced subgraphs that is not the
  // restriction of any automorphism.  Pairs are (vertex, image).
  struct GraphCounterexample {
    std::vector<std::pair<Index, Index>> left;
    std::vector<std::pair<Index, Index>> right;
  };

  struct GraphHomogeneityCertificate {
    bool                               homogeneous   = false;
    std::size_t                        automorphisms = 0;
    std::size_t                        subgraphs     = 0;
    std::optional<GraphCounterexample> counterexample;

    explicit operator bool() const noexcept {
      return homogeneous;
    }
  };

  // Brute force over all nonempty induced subgraphs.  Throws TooLarge above
  // 12 vertices in total.
  GraphHomogeneityCertificate is_homogeneous_graph(ColouredGraph const& g);

  // A colour assignment to vertices on one side that no vertex on the other
  // side realises.
  struct Defect {
    bool                     left_side = true;
    ElementSet               vertices;
    std::vector<std::string> colours;
  };

  struct DefectList {
    std::vector<Defect> defects;
    bool                truncated = false;

    bool empty() const noexcept {
      return defects.empty();
    }
  };

  inline constexpr std::size_t kDefectCap = 10'000;

  // Defects for colour set `palette` at level k.  Only subsets of the first
  // scope->first left and scope->second right vertices are examined when a
  // scope is given; witnesses may be any vertex.
  DefectList k_generic_defects(
      ColouredGraph const&                               g,
      std::vector<std::string> const&                    palette,
      std::size_t                                        k,
      std::optional<std::pair<std::size_t, std::size_t>> scope = std::nullopt,
      std::size_t                                        cap   = kDefectCap);

  // One pass adding witness vertices for every defect over subsets of the
  // original vertex set.  New edges not forced by a defect get `fill`
  // (callers pass the group identity), defaulting to the first palette
  // colour.  Throws InvalidTable if a colour of g or the fill colour is not
  // in the palette.
  ColouredGraph extend_to_k_generic(
      ColouredGraph const&              g,
      std::vector<std::string> const&   palette,
      std::size_t                       k,
      std::optional<std::string> const& fill = std::nullopt);

}  // namespace cssemi

#endif  // CSSEMI_GRAPH_HPP_
