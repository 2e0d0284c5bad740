#include "cssemi/fraisse.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cssemi {

  ////////////////////////////////////////////////////////////////////////
  // Ages, HP, JEP, AP
  ////////////////////////////////////////////////////////////////////////

  std::vector<FiniteSemigroup> iso_class_representatives(
      std::vector<FiniteSemigroup> const& xs) {
    std::vector<FiniteSemigroup> out;
    for (auto const& x : xs) {
      bool seen = std::any_of(out.begin(), out.end(), [&](auto const& y) {
        return are_isomorphic(x, y);
      });
      if (!seen) {
        out.push_back(x);
      }
    }
    std::stable_sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.size() < b.size();
    });
    return out;
  }

  AgeSample age(FiniteSemigroup const& s,
                std::size_t            bound,
                SearchOptions const&   opts) {
    std::vector<FiniteSemigroup> subs;
    for (auto const& sub : all_subsemigroups(s, opts)) {
      if (sub.size() <= bound) {
        subs.push_back(induced(s, sub));
      }
    }
    return {bound, iso_class_representatives(subs)};
  }

  HpResult check_hp(std::vector<FiniteSemigroup> const& k,
                    SearchOptions const&                opts) {
    HpResult out;
    for (std::size_t m = 0; m < k.size(); ++m) {
      for (auto const& sub : all_subsemigroups(k[m], opts)) {
        auto const part  = induced(k[m], sub);
        bool const found = std::any_of(k.begin(), k.end(), [&](auto const& y) {
          return are_isomorphic(part, y);
        });
        if (!found) {
          out.holds   = false;
          out.failure = std::make_pair(m, sub);
          return out;
        }
      }
    }
    return out;
  }

  JepResult check_jep(std::vector<FiniteSemigroup> const& k,
                      AgeSample const&                    within) {
    JepResult out;
    for (std::size_t a = 0; a < k.size(); ++a) {
      for (std::size_t b = a; b < k.size(); ++b) {
        bool found = false;
        for (std::size_t d = 0; d < within.members.size() && !found; ++d) {
          auto const& dm = within.members[d];
          auto        e1 = find_embedding(k[a], dm);
          if (!e1) {
            continue;
          }
          auto e2 = find_embedding(k[b], dm);
          if (e2) {
            out.witnesses.push_back({a, b, d, std::move(*e1), std::move(*e2)});
            found = true;
          }
        }
        if (!found) {
          out.holds   = false;
          out.failure = std::make_pair(a, b);
          return out;
        }
      }
    }
    return out;
  }

  void check_amalgam(Amalgam const& a) {
    auto injective = [](ElementMap const& m) {
      ElementMap s = m;
      std::sort(s.begin(), s.end());
      return std::adjacent_find(s.begin(), s.end()) == s.end();
    };
    if (!is_homomorphism(a.core, a.b1, a.f1) || !injective(a.f1)
        || !is_homomorphism(a.core, a.b2, a.f2) || !injective(a.f2)) {
      throw InvalidAmalgam("amalgam maps are not embeddings");
    }
  }

  ApResult check_ap(std::vector<Amalgam> const& amalgams,
                    AgeSample const&            within,
                    SearchOptions const&        opts) {
    ApResult out;
    for (std::size_t n = 0; n < amalgams.size(); ++n) {
      auto const& am = amalgams[n];
      check_amalgam(am);
      ElementSet b1_all(am.b1.size());
      std::iota(b1_all.begin(), b1_all.end(), 0);
      ElementSet b2_all(am.b2.size());
      std::iota(b2_all.begin(), b2_all.end(), 0);
      bool found = false;
      for (std::size_t d = 0; d < within.members.size() && !found; ++d) {
        auto const& dm = within.members[d];
        if (dm.size() < std::max(am.b1.size(), am.b2.size())) {
          continue;
        }
        for_each_morphism(
            am.b1, b1_all, dm, true, {},
            [&](ElementMap const& g1) {
              std::vector<std::pair<Index, Index>> fixed;
              for (Index x = 0; x < am.core.size(); ++x) {
                fixed.emplace_back(am.f2[x], g1[am.f1[x]]);
              }
              for_each_morphism(
                  am.b2, b2_all, dm, true, fixed,
                  [&](ElementMap const& g2) {
                    out.witnesses.push_back({n, d, g1, g2});
                    found = true;
                    return false;
                  },
                  opts);
              return !found;
            },
            opts);
      }
      if (!found) {
        out.holds   = false;
        out.failure = n;
        return out;
      }
    }
    return out;
  }

  std::vector<Amalgam> all_amalgams(std::vector<FiniteSemigroup> const& k) {
    std::vector<Amalgam> out;
    auto embeddings = [](FiniteSemigroup const& a, FiniteSemigroup const& b) {
      std::vector<ElementMap> maps;
      if (a.size() > b.size()) {
        return maps;
      }
      ElementSet all(a.size());
      std::iota(all.begin(), all.end(), 0);
      for_each_morphism(a, all, b, true, {}, [&](ElementMap const& m) {
        maps.push_back(m);
        return true;
      });
      return maps;
    };
    for (auto const& core : k) {
      for (auto const& b1 : k) {
        auto const e1 = embeddings(core, b1);
        if (e1.empty()) {
          continue;
        }
        for (auto const& b2 : k) {
          auto const e2 = embeddings(core, b2);
          for (auto const& f1 : e1) {
            for (auto const& f2 : e2) {
              out.push_back({core, b1, b2, f1, f2});
            }
          }
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // CS(G;H) amalgamation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool is_subset(std::vector<std::string> const& a,
                   std::vector<std::string> const& b) {
      return std::all_of(a.begin(), a.end(), [&](auto const& x) {
        return std::find(b.begin(), b.end(), x) != b.end();
      });
    }

    std::vector<std::string> intersection(std::vector<std::string> const& a,
                                          std::vector<std::string> const& b) {
      std::vector<std::string> out;
      for (auto const& x : a) {
        if (std::find(b.begin(), b.end(), x) != b.end()) {
          out.push_back(x);
        }
      }
      return out;
    }

    bool same_set(std::vector<std::string> a, std::vector<std::string> b) {
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      return a == b;
    }

    // g0 is a subgroup of g by label, with the same products.
    bool label_subgroup(FiniteGroup const& g0, FiniteGroup const& g) {
      if (!is_subset(g0.labels(), g.labels())) {
        return false;
      }
      for (Index a = 0; a < g0.size(); ++a) {
        for (Index b = 0; b < g0.size(); ++b) {
          Index x = g.index_of(g0.label(a)), y = g.index_of(g0.label(b));
          if (g.label(g.product(x, y)) != g0.label(g0.product(a, b))) {
            return false;
          }
        }
      }
      return true;
    }

    std::vector<GroupMorphism> embeddings(GroupPtr const& a, GroupPtr const& b) {
      std::vector<GroupMorphism> out;
      for (auto& m : enumerate_group_morphisms(a, b, false)) {
        ElementMap s = m.map;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) == s.end()) {
          out.push_back(std::move(m));
        }
      }
      return out;
    }
  }  // namespace

  CsAmalgamation amalgamate_cs(Rms const&        m0,
                               Rms const&        m1,
                               Rms const&        m2,
                               GroupPtr const&   g,
                               ElementSet const& h,
                               std::size_t       group_amalgam_bound) {
    if (!is_subgroup(*g, normalized_set(h))) {
      throw NotASubgroup("H is not a subgroup of G");
    }
    Cell const c0 = m0.normal_cell();
    Cell const c1 = m1.normal_cell();
    Cell const c2 = m2.normal_cell();

    // Index sets overlap exactly in the core.
    for (auto const* m : {&m1, &m2}) {
      if (!is_subset(m0.i_labels(), m->i_labels())
          || !is_subset(m0.lambda_labels(), m->lambda_labels())) {
        throw CoreMismatch("core index sets are not contained in a wing");
      }
    }
    if (!same_set(intersection(m1.i_labels(), m2.i_labels()), m0.i_labels())
        || !same_set(intersection(m1.lambda_labels(), m2.lambda_labels()),
                     m0.lambda_labels())) {
      throw CoreMismatch("wing index sets meet outside the core");
    }
    std::string const one_i = m0.i_labels()[c0.i];
    std::string const one_l = m0.lambda_labels()[c0.lambda];
    if (m1.i_labels()[c1.i] != one_i || m2.i_labels()[c2.i] != one_i
        || m1.lambda_labels()[c1.lambda] != one_l
        || m2.lambda_labels()[c2.lambda] != one_l) {
      throw CoreMismatch("wings are normalized at a different cell");
    }

    // Groups overlap exactly in the core group.
    auto const& g0 = m0.group();
    auto const& g1 = m1.group();
    auto const& g2 = m2.group();
    if (!label_subgroup(g0, g1) || !label_subgroup(g0, g2)
        || !same_set(intersection(g1.labels(), g2.labels()), g0.labels())) {
      throw CoreMismatch("wing groups do not meet in the core group");
    }
    for (Index mu = 0; mu < m0.lambda_size(); ++mu) {
      for (Index j = 0; j < m0.i_size(); ++j) {
        std::string const& p = g0.label(m0.entry(mu, j));
        for (auto const* m : {&m1, &m2}) {
          auto const& gm = m->group();
          if (gm.label(m->entry(m->lambda_index(m0.lambda_labels()[mu]),
                                m->i_index(m0.i_labels()[j])))
              != p) {
            throw CoreMismatch("wing entries differ from the core");
          }
        }
      }
    }

    // Group amalgam: smallest subgroup class of G receiving both wings.
    std::vector<GroupPtr> candidates;
    for (auto const& sub : all_subgroups(*g)) {
      if (sub.size() > group_amalgam_bound) {
        continue;
      }
      auto k = subgroup_as_group(*g, sub).group;
      bool dup = std::any_of(candidates.begin(), candidates.end(),
                             [&](auto const& x) { return are_isomorphic(x, k); });
      if (!dup) {
        candidates.push_back(std::move(k));
      }
    }
    std::optional<std::pair<GroupMorphism, GroupMorphism>> phis;
    GroupPtr                                              kk;
    for (auto const& k : candidates) {
      for (auto const& phi1 : embeddings(m1.group_ptr(), k)) {
        for (auto const& phi2 : embeddings(m2.group_ptr(), k)) {
          bool agree = true;
          for (Index x = 0; x < g0.size() && agree; ++x) {
            agree = phi1(g1.index_of(g0.label(x)))
                    == phi2(g2.index_of(g0.label(x)));
          }
          if (agree) {
            phis.emplace(phi1, phi2);
            break;
          }
        }
        if (phis) {
          break;
        }
      }
      if (phis) {
        kk = k;
        break;
      }
    }
    if (!phis) {
      throw NoGroupAmalgamFound("no group of order at most "
                                + std::to_string(group_amalgam_bound)
                                + " amalgamates the wing groups");
    }

    // Index sets: wing 1 then the new labels of wing 2.
    std::vector<std::string> bar_i = m1.i_labels();
    std::vector<std::string> bar_l = m1.lambda_labels();
    for (auto const& x : m2.i_labels()) {
      if (std::find(bar_i.begin(), bar_i.end(), x) == bar_i.end()) {
        bar_i.push_back(x);
      }
    }
    for (auto const& x : m2.lambda_labels()) {
      if (std::find(bar_l.begin(), bar_l.end(), x) == bar_l.end()) {
        bar_l.push_back(x);
      }
    }
    auto position = [](std::vector<std::string> const& xs,
                       std::string const&              x) -> std::optional<Index> {
      auto it = std::find(xs.begin(), xs.end(), x);
      if (it == xs.end()) {
        return std::nullopt;
      }
      return static_cast<Index>(it - xs.begin());
    };
    std::vector<std::vector<Index>> q(bar_l.size(),
                                      std::vector<Index>(bar_i.size(),
                                                         kk->identity()));
    for (Index lambda = 0; lambda < bar_l.size(); ++lambda) {
      for (Index i = 0; i < bar_i.size(); ++i) {
        auto l1 = position(m1.lambda_labels(), bar_l[lambda]);
        auto i1 = position(m1.i_labels(), bar_i[i]);
        auto l2 = position(m2.lambda_labels(), bar_l[lambda]);
        auto i2 = position(m2.i_labels(), bar_i[i]);
        if (l1 && i1) {
          q[lambda][i] = phis->first(m1.entry(*l1, *i1));
        } else if (l2 && i2) {
          q[lambda][i] = phis->second(m2.entry(*l2, *i2));
        }
      }
    }
    Rms t(kk, std::move(q), bar_i, bar_l);
    t.mark_normalized({*position(bar_i, one_i), *position(bar_l, one_l)});

    auto wing_embedding = [&](Rms const& m, GroupMorphism const& phi) {
      RmsMorphism e;
      e.theta = phi;
      for (auto const& x : m.i_labels()) {
        e.psi_i.push_back(*position(bar_i, x));
      }
      for (auto const& x : m.lambda_labels()) {
        e.psi_lambda.push_back(*position(bar_l, x));
      }
      e.u.assign(m.i_size(), kk->identity());
      e.v.assign(m.lambda_size(), kk->identity());
      return validated(std::move(e), m, t);
    };
    CsAmalgamation out{t,
                       wing_embedding(m1, phis->first),
                       wing_embedding(m2, phis->second),
                       kk,
                       false};

    // The two embeddings agree on the core.
    for (Index x = 0; x < m0.size(); ++x) {
      RmsElement const e = m0.element(x);
      auto             lift = [&](Rms const& m) {
        return RmsElement{m.i_index(m0.i_labels()[e.i]),
                          m.group().index_of(g0.label(e.g)),
                          m.lambda_index(m0.lambda_labels()[e.lambda])};
      };
      if (apply(out.g1, lift(m1)) != apply(out.g2, lift(m2))) {
        throw CoreMismatch("wing embeddings disagree on the core");
      }
    }

    auto const gen = entry_group_data(t).generated;
    out.entries_in_age_h
        = embeds_in(subgroup_as_group(*kk, gen).group,
                    subgroup_as_group(*g, normalized_set(h)).group);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Generic growth
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string fresh_label(std::vector<std::string> const& labels) {
      for (std::size_t n = labels.size() + 1;; ++n) {
        std::string s = std::to_string(n);
        if (std::find(labels.begin(), labels.end(), s) == labels.end()) {
          return s;
        }
      }
    }

    std::vector<std::string> palette_of(FiniteGroup const& g,
                                        ElementSet const&  h) {
      std::vector<std::string> out;
      for (Index x : h) {
        out.push_back(g.label(x));
      }
      return out;
    }
  }  // namespace

  DefectList rms_defects(Rms const&                                         s,
                         ElementSet const&                                  h,
                         std::size_t                                        k,
                         std::optional<std::pair<std::size_t, std::size_t>> scope) {
    return k_generic_defects(from_matrix(s, s.normal_cell()),
                             palette_of(s.group(), normalized_set(h)),
                             k,
                             scope);
  }

  Rms grow_generic_rms(GroupPtr const&           g,
                       ElementSet const&         h_in,
                       std::size_t               k,
                       std::optional<Rms> const& seed) {
    ElementSet const h = normalized_set(h_in);
    if (!is_subgroup(*g, h)) {
      throw NotASubgroup("H is not a subgroup of G");
    }
    Index const e = g->identity();
    std::optional<Rms> start;
    if (seed) {
      if (!(seed->group() == *g)) {
        throw InvalidSeed("the seed is over a different group");
      }
      for (auto const& row : seed->matrix()) {
        for (Index x : row) {
          if (!std::binary_search(h.begin(), h.end(), x)) {
            throw InvalidSeed("seed entry " + g->label(x) + " is not in H");
          }
        }
      }
      if (seed->is_normalized()) {
        start = *seed;
      } else {
        start = normalize(*seed, 0, 0).semigroup;
      }
    } else {
      start.emplace(g, std::vector<std::vector<Index>>(2, {e, e}));
      start->mark_normalized({0, 0});
    }
    Rms const& s  = *start;
    Cell const c  = s.normal_cell();
    auto const palette = palette_of(*g, h);

    auto const gamma = from_matrix(s, c);
    auto const grown = extend_to_k_generic(gamma, palette, k, g->label(e));

    // Row and column order of the matrix: existing ones, then new witnesses.
    std::vector<std::string> i_labels = s.i_labels();
    std::vector<std::string> l_labels = s.lambda_labels();
    std::vector<Index>       left_row, right_col;  // graph vertex -> index
    for (Index lambda = 0; lambda < s.lambda_size(); ++lambda) {
      if (lambda != c.lambda) {
        left_row.push_back(lambda);
      }
    }
    for (Index i = 0; i < s.i_size(); ++i) {
      if (i != c.i) {
        right_col.push_back(i);
      }
    }
    while (left_row.size() < grown.left_size()) {
      left_row.push_back(static_cast<Index>(l_labels.size()));
      l_labels.push_back(fresh_label(l_labels));
    }
    while (right_col.size() < grown.right_size()) {
      right_col.push_back(static_cast<Index>(i_labels.size()));
      i_labels.push_back(fresh_label(i_labels));
    }
    std::vector<std::vector<Index>> p(l_labels.size(),
                                      std::vector<Index>(i_labels.size(), e));
    for (Index l = 0; l < grown.left_size(); ++l) {
      for (Index r = 0; r < grown.right_size(); ++r) {
        p[left_row[l]][right_col[r]] = g->index_of(grown.colour_label(l, r));
      }
    }

    // Rows and columns that miss a colour of H get it from |H| extra rows
    // and columns: row x carries x against the old columns, column y
    // carries y against the old rows, and their crossing is x y.
    auto complete = [&](std::vector<Index> const& line) {
      auto sorted = normalized_set(line);
      return std::includes(sorted.begin(), sorted.end(), h.begin(), h.end());
    };
    bool missing = false;
    for (Index lambda = 0; lambda < p.size(); ++lambda) {
      missing = missing || (lambda != c.lambda && !complete(p[lambda]));
    }
    for (Index i = 0; i < i_labels.size(); ++i) {
      std::vector<Index> col;
      for (auto const& row : p) {
        col.push_back(row[i]);
      }
      missing = missing || (i != c.i && !complete(col));
    }
    if (missing && h.size() > 1) {
      std::size_t const old_rows = p.size(), old_cols = i_labels.size();
      for (Index x : h) {
        (void) x;
        l_labels.push_back(fresh_label(l_labels));
        i_labels.push_back(fresh_label(i_labels));
      }
      for (auto& row : p) {
        row.resize(i_labels.size(), e);
      }
      p.resize(l_labels.size(), std::vector<Index>(i_labels.size(), e));
      for (std::size_t a = 0; a < h.size(); ++a) {
        for (Index lambda = 0; lambda < old_rows; ++lambda) {
          if (lambda != c.lambda) {
            p[lambda][old_cols + a] = h[a];
          }
        }
        for (Index i = 0; i < old_cols; ++i) {
          if (i != c.i) {
            p[old_rows + a][i] = h[a];
          }
        }
        for (std::size_t b = 0; b < h.size(); ++b) {
          p[old_rows + a][old_cols + b] = g->product(h[a], h[b]);
        }
      }
    }
    if (p.size() == s.lambda_size() && i_labels.size() == s.i_size()) {
      return s;
    }
    Rms out(g, std::move(p), std::move(i_labels), std::move(l_labels));
    out.mark_normalized(c);
    return out;
  }

}  // namespace cssemi
