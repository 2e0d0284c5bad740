#include "cssemi/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace cssemi {

  namespace {
    void check_unique(std::vector<std::string> const& labels,
                      char const*                     what) {
      std::set<std::string> seen(labels.begin(), labels.end());
      if (seen.size() != labels.size()) {
        throw InvalidTable(std::string("duplicate ") + what + " label");
      }
    }

    std::optional<Index> find_label(std::vector<std::string> const& labels,
                                    std::string const&              x) {
      auto it = std::find(labels.begin(), labels.end(), x);
      if (it == labels.end()) {
        return std::nullopt;
      }
      return static_cast<Index>(it - labels.begin());
    }

    // Calls f on every subset of {0..n-1} with 1..k elements, by size and
    // then lexicographically.  f returns false to stop.
    bool for_each_subset(std::size_t                                   n,
                         std::size_t                                   k,
                         std::function<bool(ElementSet const&)> const& f) {
      ElementSet cur;
      std::function<bool(std::size_t, std::size_t)> rec
          = [&](std::size_t start, std::size_t want) -> bool {
        if (cur.size() == want) {
          return f(cur);
        }
        for (std::size_t x = start; x < n; ++x) {
          cur.push_back(static_cast<Index>(x));
          if (!rec(x + 1, want)) {
            return false;
          }
          cur.pop_back();
        }
        return true;
      };
      for (std::size_t size = 1; size <= std::min(k, n); ++size) {
        if (!rec(0, size)) {
          return false;
        }
      }
      return true;
    }

    // Calls f on every tuple in {0..base-1}^len in lexicographic order.
    bool for_each_tuple(std::size_t                                   len,
                        std::size_t                                   base,
                        std::function<bool(ElementSet const&)> const& f) {
      if (base == 0) {
        return true;
      }
      ElementSet t(len, 0);
      for (;;) {
        if (!f(t)) {
          return false;
        }
        std::size_t pos = len;
        while (pos > 0) {
          --pos;
          if (++t[pos] < base) {
            break;
          }
          t[pos] = 0;
          if (pos == 0) {
            return true;
          }
        }
        if (len == 0) {
          return true;
        }
      }
    }

    // Working copy of a graph where vertices can be added.
    struct Growing {
      std::vector<std::string>        left, right, colours;
      std::vector<std::vector<Index>> f;

      std::string fresh(std::vector<std::string> const& labels) const {
        for (std::size_t n = labels.size() + 1;; ++n) {
          std::string s = std::to_string(n);
          if (!find_label(labels, s)) {
            return s;
          }
        }
      }

      Index colour_index(std::string const& c) {
        if (auto k = find_label(colours, c)) {
          return *k;
        }
        colours.push_back(c);
        return static_cast<Index>(colours.size() - 1);
      }
    };
  }  // namespace

  EdgeColouredBipartiteGraph::EdgeColouredBipartiteGraph(
      std::vector<std::string>        left,
      std::vector<std::string>        right,
      std::vector<std::string>        colours,
      std::vector<std::vector<Index>> colouring)
      : _left(std::move(left)),
        _right(std::move(right)),
        _colours(std::move(colours)),
        _colouring(std::move(colouring)) {
    check_unique(_left, "left vertex");
    check_unique(_right, "right vertex");
    check_unique(_colours, "colour");
    if (_colouring.size() != _left.size()) {
      throw InvalidTable("colouring needs one row per left vertex");
    }
    for (auto const& row : _colouring) {
      if (row.size() != _right.size()) {
        throw InvalidTable("colouring rows need one entry per right vertex");
      }
      for (Index c : row) {
        if (c >= _colours.size()) {
          throw InvalidTable("colour index out of range");
        }
      }
    }
  }

  ElementSet EdgeColouredBipartiteGraph::occurring_colours() const {
    std::vector<Index> all;
    for (auto const& row : _colouring) {
      all.insert(all.end(), row.begin(), row.end());
    }
    return normalized_set(std::move(all));
  }

  std::vector<GraphIsomorphism> enumerate_graph_isomorphisms(
      ColouredGraph const& a,
      ColouredGraph const& b) {
    std::vector<GraphIsomorphism> out;
    if (a.left_size() != b.left_size() || a.right_size() != b.right_size()) {
      return out;
    }
    // Colour of a translated to b, or kNone if b lacks the label.
    Index const        kNone = static_cast<Index>(-1);
    std::vector<Index> tr(a.colours().size(), kNone);
    for (Index c = 0; c < a.colours().size(); ++c) {
      if (auto k = find_label(b.colours(), a.colours()[c])) {
        tr[c] = *k;
      }
    }
    std::size_t const nl = a.left_size(), nr = a.right_size();
    ElementMap        sigma(nl);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      // Candidate images of each right vertex given sigma.
      std::vector<ElementSet> cand(nr);
      bool                    dead = false;
      for (Index r = 0; r < nr && !dead; ++r) {
        for (Index r2 = 0; r2 < nr; ++r2) {
          bool ok = true;
          for (Index l = 0; l < nl && ok; ++l) {
            ok = tr[a.colour(l, r)] == b.colour(sigma[l], r2);
          }
          if (ok) {
            cand[r].push_back(r2);
          }
        }
        dead = cand[r].empty();
      }
      if (dead) {
        continue;
      }
      ElementMap        tau(nr);
      std::vector<bool> used(nr, false);
      std::function<void(Index)> rec = [&](Index r) {
        if (r == nr) {
          out.push_back({sigma, tau});
          return;
        }
        for (Index r2 : cand[r]) {
          if (!used[r2]) {
            used[r2] = true;
            tau[r]   = r2;
            rec(r + 1);
            used[r2] = false;
          }
        }
      };
      rec(0);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string to_string(GraphPattern p) {
    switch (p) {
      case GraphPattern::Monochromatic:
        return "Monochromatic";
      case GraphPattern::MatchingPlusComplement:
        return "MatchingPlusComplement";
      case GraphPattern::Other:
        return "Other";
    }
    return "Other";
  }

  GraphPattern classify_pattern(ColouredGraph const& g) {
    auto occ = g.occurring_colours();
    if (occ.size() <= 1) {
      return GraphPattern::Monochromatic;
    }
    if (occ.size() != 2 || g.left_size() != g.right_size()) {
      return GraphPattern::Other;
    }
    for (Index c : occ) {
      bool matching = true;
      for (Index l = 0; l < g.left_size() && matching; ++l) {
        matching = std::count(g.colouring()[l].begin(),
                              g.colouring()[l].end(),
                              c)
                   == 1;
      }
      for (Index r = 0; r < g.right_size() && matching; ++r) {
        std::size_t n = 0;
        for (Index l = 0; l < g.left_size(); ++l) {
          n += g.colour(l, r) == c;
        }
        matching = n == 1;
      }
      if (matching) {
        return GraphPattern::MatchingPlusComplement;
      }
    }
    return GraphPattern::Other;
  }

  GraphHomogeneityCertificate is_homogeneous_graph(ColouredGraph const& g) {
    std::size_t const nl = g.left_size(), nr = g.right_size();
    if (nl + nr > 12) {
      throw TooLarge("graph homogeneity supports at most 12 vertices");
    }
    GraphHomogeneityCertificate cert;
    auto                        auts = enumerate_graph_isomorphisms(g, g);
    cert.automorphisms               = auts.size();

    for (Mask ml = 0; ml < (Mask(1) << nl); ++ml) {
      for (Mask mr = 0; mr < (Mask(1) << nr); ++mr) {
        if (ml == 0 && mr == 0) {
          continue;
        }
        ++cert.subgraphs;
        ElementSet dl = mask::to_set(ml), dr = mask::to_set(mr);
        std::set<std::pair<ElementSet, ElementSet>> restrictions;
        for (auto const& a : auts) {
          ElementSet il, ir;
          for (Index l : dl) {
            il.push_back(a.left[l]);
          }
          for (Index r : dr) {
            ir.push_back(a.right[r]);
          }
          restrictions.emplace(std::move(il), std::move(ir));
        }
        ElementSet        il(dl.size()), ir(dr.size());
        std::vector<bool> usedl(nl, false), usedr(nr, false);
        bool              failed = false;
        std::function<void(std::size_t)> rec_right;
        std::function<void(std::size_t)> rec_left = [&](std::size_t k) {
          if (failed) {
            return;
          }
          if (k == dl.size()) {
            rec_right(0);
            return;
          }
          for (Index x = 0; x < nl; ++x) {
            if (!usedl[x]) {
              usedl[x] = true;
              il[k]    = x;
              rec_left(k + 1);
              usedl[x] = false;
            }
          }
        };
        rec_right = [&](std::size_t k) {
          if (failed) {
            return;
          }
          if (k == dr.size()) {
            if (restrictions.count({il, ir}) == 0) {
              failed = true;
              GraphCounterexample bad;
              for (std::size_t j = 0; j < dl.size(); ++j) {
                bad.left.emplace_back(dl[j], il[j]);
              }
              for (std::size_t j = 0; j < dr.size(); ++j) {
                bad.right.emplace_back(dr[j], ir[j]);
              }
              cert.counterexample = std::move(bad);
            }
            return;
          }
          for (Index y = 0; y < nr; ++y) {
            if (usedr[y]) {
              continue;
            }
            bool ok = true;
            for (std::size_t j = 0; j < dl.size() && ok; ++j) {
              ok = g.colour(dl[j], dr[k]) == g.colour(il[j], y);
            }
            if (ok) {
              usedr[y] = true;
              ir[k]    = y;
              rec_right(k + 1);
              usedr[y] = false;
            }
          }
        };
        rec_left(0);
        if (failed) {
          return cert;
        }
      }
    }
    cert.homogeneous = true;
    return cert;
  }

  DefectList k_generic_defects(
      ColouredGraph const&                               g,
      std::vector<std::string> const&                    palette,
      std::size_t                                        k,
      std::optional<std::pair<std::size_t, std::size_t>> scope,
      std::size_t                                        cap) {
    DefectList  out;
    std::size_t sl = scope ? std::min(scope->first, g.left_size())
                           : g.left_size();
    std::size_t sr = scope ? std::min(scope->second, g.right_size())
                           : g.right_size();
    // Palette position of each graph colour, or palette.size() if absent.
    std::vector<Index> pos(g.colours().size());
    for (Index c = 0; c < g.colours().size(); ++c) {
      auto k2 = find_label(palette, g.colours()[c]);
      pos[c]  = k2 ? *k2 : static_cast<Index>(palette.size());
    }
    for (bool left : {true, false}) {
      std::size_t const n     = left ? sl : sr;
      std::size_t const other = left ? g.right_size() : g.left_size();
      auto edge = [&](Index own, Index w) {
        return pos[left ? g.colour(own, w) : g.colour(w, own)];
      };
      bool more = for_each_subset(n, k, [&](ElementSet const& ys) {
        std::set<ElementSet> realised;
        for (Index w = 0; w < other; ++w) {
          ElementSet t;
          for (Index y : ys) {
            t.push_back(edge(y, w));
          }
          realised.insert(std::move(t));
        }
        return for_each_tuple(
            ys.size(), palette.size(), [&](ElementSet const& alpha) {
              if (realised.count(alpha) != 0) {
                return true;
              }
              if (out.defects.size() >= cap) {
                out.truncated = true;
                return false;
              }
              Defect d{left, ys, {}};
              for (Index c : alpha) {
                d.colours.push_back(palette[c]);
              }
              out.defects.push_back(std::move(d));
              return true;
            });
      });
      if (!more) {
        break;
      }
    }
    return out;
  }

  ColouredGraph extend_to_k_generic(ColouredGraph const&              g,
                                    std::vector<std::string> const&   palette,
                                    std::size_t                       k,
                                    std::optional<std::string> const& fill) {
    for (Index c : g.occurring_colours()) {
      if (!find_label(palette, g.colours()[c])) {
        throw InvalidTable("colour '" + g.colours()[c]
                           + "' is not in the palette");
      }
    }
    if (palette.empty()) {
      return g;
    }
    std::string const fill_colour = fill ? *fill : palette.front();
    if (!find_label(palette, fill_colour)) {
      throw InvalidTable("fill colour '" + fill_colour
                         + "' is not in the palette");
    }
    Growing w{g.left(), g.right(), g.colours(), g.colouring()};
    std::size_t const nl = g.left_size(), nr = g.right_size();

    for (bool left : {true, false}) {
      std::size_t const n = left ? nl : nr;
      for_each_subset(n, k, [&](ElementSet const& ys) {
        for_each_tuple(
            ys.size(), palette.size(), [&](ElementSet const& alpha) {
              std::vector<Index> want;
              for (Index c : alpha) {
                want.push_back(w.colour_index(palette[c]));
              }
              std::size_t const other = left ? w.right.size() : w.left.size();
              for (Index x = 0; x < other; ++x) {
                bool ok = true;
                for (std::size_t j = 0; j < ys.size() && ok; ++j) {
                  ok = (left ? w.f[ys[j]][x] : w.f[x][ys[j]]) == want[j];
                }
                if (ok) {
                  return true;
                }
              }
              Index fc = w.colour_index(fill_colour);
              if (left) {
                // New right vertex seen by every left vertex.
                w.right.push_back(w.fresh(w.right));
                for (auto& row : w.f) {
                  row.push_back(fc);
                }
                for (std::size_t j = 0; j < ys.size(); ++j) {
                  w.f[ys[j]].back() = want[j];
                }
              } else {
                w.left.push_back(w.fresh(w.left));
                w.f.emplace_back(w.right.size(), fc);
                for (std::size_t j = 0; j < ys.size(); ++j) {
                  w.f.back()[ys[j]] = want[j];
                }
              }
              return true;
            });
        return true;
      });
    }
    return ColouredGraph(std::move(w.left),
                         std::move(w.right),
                         std::move(w.colours),
                         std::move(w.f));
  }

}  // namespace cssemi
