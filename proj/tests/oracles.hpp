// Brute-force reference implementations.  They read multiplication tables
// directly and never call the library's searches, so agreement with the
// library is evidence rather than tautology.  Only usable on tiny inputs.
#ifndef CSSEMI_TESTS_ORACLES_HPP_
#define CSSEMI_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "cssemi/graph.hpp"
#include "cssemi/group.hpp"
#include "cssemi/rees.hpp"
#include "cssemi/semigroup.hpp"

namespace oracle {

  using cssemi::Index;
  using Table = std::vector<std::vector<Index>>;

  inline Table table(cssemi::FiniteSemigroup const& s) {
    return s.table_rows();
  }

  inline Table table(cssemi::FiniteGroup const& g) {
    return g.table_rows();
  }

  inline std::vector<std::uint64_t> closed_subsets(Table const& t,
                                                   bool         nonempty) {
    std::size_t const          n = t.size();
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = nonempty ? 1 : 0; m < (std::uint64_t(1) << n); ++m) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        for (std::size_t b = 0; b < n && ok; ++b) {
          if ((m >> a & 1) && (m >> b & 1)) {
            ok = (m >> t[a][b]) & 1;
          }
        }
      }
      if (ok) {
        out.push_back(m);
      }
    }
    return out;
  }

  // Finite subgroups are the nonempty product-closed subsets.
  inline std::size_t count_subgroups(cssemi::FiniteGroup const& g) {
    return closed_subsets(table(g), true).size();
  }

  inline std::size_t count_subsemigroups(cssemi::FiniteSemigroup const& s) {
    return closed_subsets(table(s), true).size();
  }

  // Every map a -> b, as a vector of images, visited in turn.
  template <typename F>
  void for_each_map(std::size_t a, std::size_t b, F&& f) {
    std::vector<Index> m(a, 0);
    for (;;) {
      f(m);
      std::size_t k = 0;
      while (k < a && ++m[k] == b) {
        m[k++] = 0;
      }
      if (k == a) {
        return;
      }
    }
  }

  inline bool preserves(Table const&              ta,
                        Table const&              tb,
                        std::vector<Index> const& m) {
    for (std::size_t x = 0; x < ta.size(); ++x) {
      for (std::size_t y = 0; y < ta.size(); ++y) {
        if (m[ta[x][y]] != tb[m[x]][m[y]]) {
          return false;
        }
      }
    }
    return true;
  }

  inline std::size_t count_homomorphisms(Table const& ta, Table const& tb) {
    std::size_t n = 0;
    for_each_map(ta.size(), tb.size(), [&](auto const& m) {
      n += preserves(ta, tb, m);
    });
    return n;
  }

  inline std::vector<std::vector<Index>> isomorphisms(Table const& ta,
                                                      Table const& tb) {
    std::vector<std::vector<Index>> out;
    if (ta.size() != tb.size()) {
      return out;
    }
    std::vector<Index> p(ta.size());
    std::iota(p.begin(), p.end(), 0);
    do {
      if (preserves(ta, tb, p)) {
        out.push_back(p);
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  // The definition: every isomorphism between nonempty subsemigroups is
  // the restriction of an automorphism.
  inline bool homogeneous(Table const& t) {
    auto const       auts = isomorphisms(t, t);
    auto const       subs = closed_subsets(t, true);
    std::size_t const n   = t.size();
    auto elements = [&](std::uint64_t m) {
      std::vector<Index> xs;
      for (Index x = 0; x < n; ++x) {
        if (m >> x & 1) {
          xs.push_back(x);
        }
      }
      return xs;
    };
    for (auto ma : subs) {
      auto const a = elements(ma);
      for (auto mb : subs) {
        auto b = elements(mb);
        if (a.size() != b.size()) {
          continue;
        }
        do {
          bool iso = true;
          for (std::size_t x = 0; x < a.size() && iso; ++x) {
            for (std::size_t y = 0; y < a.size() && iso; ++y) {
              Index xy = t[a[x]][a[y]];
              Index k  = static_cast<Index>(
                  std::find(a.begin(), a.end(), xy) - a.begin());
              iso = t[b[x]][b[y]] == b[k];
            }
          }
          if (!iso) {
            continue;
          }
          bool extends = std::any_of(auts.begin(), auts.end(), [&](auto const& f) {
            for (std::size_t x = 0; x < a.size(); ++x) {
              if (f[a[x]] != b[x]) {
                return false;
              }
            }
            return true;
          });
          if (!extends) {
            return false;
          }
        } while (std::next_permutation(b.begin(), b.end()));
      }
    }
    return true;
  }

  // Colour labels of the edges, row by row.
  inline std::vector<std::vector<std::string>> edges(
      cssemi::ColouredGraph const& g) {
    std::vector<std::vector<std::string>> out(g.left_size());
    for (Index l = 0; l < g.left_size(); ++l) {
      for (Index r = 0; r < g.right_size(); ++r) {
        out[l].push_back(g.colour_label(l, r));
      }
    }
    return out;
  }

  inline std::size_t count_graph_automorphisms(cssemi::ColouredGraph const& g) {
    auto const         e = edges(g);
    std::vector<Index> pl(g.left_size()), pr(g.right_size());
    std::iota(pl.begin(), pl.end(), 0);
    std::size_t n = 0;
    do {
      std::iota(pr.begin(), pr.end(), 0);
      do {
        bool ok = true;
        for (Index l = 0; l < pl.size() && ok; ++l) {
          for (Index r = 0; r < pr.size() && ok; ++r) {
            ok = e[l][r] == e[pl[l]][pr[r]];
          }
        }
        n += ok;
      } while (std::next_permutation(pr.begin(), pr.end()));
    } while (std::next_permutation(pl.begin(), pl.end()));
    return n;
  }

  // Side-preserving partial isomorphisms between induced subgraphs (on any
  // vertex subsets, including one-sided ones) all extend.
  inline bool graph_homogeneous(cssemi::ColouredGraph const& g) {
    auto const         e = edges(g);
    std::size_t const  nl = g.left_size(), nr = g.right_size();
    std::vector<std::pair<std::vector<Index>, std::vector<Index>>> auts;
    {
      std::vector<Index> pl(nl), pr(nr);
      std::iota(pl.begin(), pl.end(), 0);
      do {
        std::iota(pr.begin(), pr.end(), 0);
        do {
          bool ok = true;
          for (Index l = 0; l < nl && ok; ++l) {
            for (Index r = 0; r < nr && ok; ++r) {
              ok = e[l][r] == e[pl[l]][pr[r]];
            }
          }
          if (ok) {
            auts.emplace_back(pl, pr);
          }
        } while (std::next_permutation(pr.begin(), pr.end()));
      } while (std::next_permutation(pl.begin(), pl.end()));
    }
    auto subset = [](std::uint64_t m, std::size_t n) {
      std::vector<Index> xs;
      for (Index x = 0; x < n; ++x) {
        if (m >> x & 1) {
          xs.push_back(x);
        }
      }
      return xs;
    };
    for (std::uint64_t al = 0; al < (1u << nl); ++al) {
      for (std::uint64_t ar = 0; ar < (1u << nr); ++ar) {
        auto const a_l = subset(al, nl), a_r = subset(ar, nr);
        for (std::uint64_t bl = 0; bl < (1u << nl); ++bl) {
          for (std::uint64_t br = 0; br < (1u << nr); ++br) {
            auto b_l = subset(bl, nl), b_r = subset(br, nr);
            if (b_l.size() != a_l.size() || b_r.size() != a_r.size()) {
              continue;
            }
            do {
              auto b_r2 = b_r;
              do {
                bool iso = true;
                for (std::size_t x = 0; x < a_l.size() && iso; ++x) {
                  for (std::size_t y = 0; y < a_r.size() && iso; ++y) {
                    iso = e[a_l[x]][a_r[y]] == e[b_l[x]][b_r2[y]];
                  }
                }
                if (!iso) {
                  continue;
                }
                bool ext = std::any_of(auts.begin(), auts.end(), [&](auto const& f) {
                  for (std::size_t x = 0; x < a_l.size(); ++x) {
                    if (f.first[a_l[x]] != b_l[x]) {
                      return false;
                    }
                  }
                  for (std::size_t y = 0; y < a_r.size(); ++y) {
                    if (f.second[a_r[y]] != b_r2[y]) {
                      return false;
                    }
                  }
                  return true;
                });
                if (!ext) {
                  return false;
                }
              } while (std::next_permutation(b_r2.begin(), b_r2.end()));
            } while (std::next_permutation(b_l.begin(), b_l.end()));
          }
        }
      }
    }
    return true;
  }

  // (i, g, lambda)(j, h, mu) = (i, g p_{lambda, j} h, mu), read off the matrix.
  inline cssemi::RmsElement rees_product(cssemi::Rms const&  s,
                                         cssemi::RmsElement x,
                                         cssemi::RmsElement y) {
    auto const t = s.group().table_rows();
    Index      p = s.matrix()[x.lambda][y.i];
    return {x.i, t[t[x.g][p]][y.g], y.lambda};
  }

}  // namespace oracle

#endif  // CSSEMI_TESTS_ORACLES_HPP_
