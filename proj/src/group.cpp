#include "cssemi/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace cssemi {

  namespace {
    std::vector<bool> closure_flags(FiniteGroup const& g, ElementSet const& x) {
      std::vector<bool> in(g.size(), false);
      std::vector<Index> members;
      auto add = [&](Index y) {
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      };
      add(g.identity());
      for (Index y : x) {
        add(y);
      }
      // Finite: closure under products already contains inverses.
      for (std::size_t k = 0; k < members.size(); ++k) {
        Index a = members[k];
        for (Index b : x) {
          add(g.product(a, b));
        }
      }
      return in;
    }

    ElementSet flags_to_set(std::vector<bool> const& in) {
      ElementSet out;
      for (Index k = 0; k < in.size(); ++k) {
        if (in[k]) {
          out.push_back(k);
        }
      }
      return out;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteGroup
  ////////////////////////////////////////////////////////////////////////

  GroupPtr FiniteGroup::make(std::vector<std::string>              labels,
                             std::vector<std::vector<Index>> const& table) {
    std::size_t const n = labels.size();
    if (n == 0) {
      throw InvalidTable("a group needs at least one element");
    }
    {
      std::set<std::string> seen(labels.begin(), labels.end());
      if (seen.size() != n) {
        throw InvalidTable("duplicate element label");
      }
    }
    if (table.size() != n) {
      throw InvalidTable("table must have one row per element");
    }
    std::shared_ptr<FiniteGroup> g(new FiniteGroup());
    g->_labels = std::move(labels);
    g->_table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n) {
        throw InvalidTable("row " + g->_labels[a] + " has the wrong length");
      }
      std::vector<bool> seen(n, false);
      for (std::size_t b = 0; b < n; ++b) {
        Index c = table[a][b];
        if (c >= n) {
          throw InvalidTable("entry out of range in row " + g->_labels[a]);
        }
        if (seen[c]) {
          throw InvalidTable("row " + g->_labels[a]
                             + " is not a permutation of the elements");
        }
        seen[c]             = true;
        g->_table[a * n + b] = c;
      }
    }
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<bool> seen(n, false);
      for (std::size_t a = 0; a < n; ++a) {
        Index c = g->_table[a * n + b];
        if (seen[c]) {
          throw InvalidTable("column " + g->_labels[b]
                             + " is not a permutation of the elements");
        }
        seen[c] = true;
      }
    }
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        for (Index c = 0; c < n; ++c) {
          if (g->product(g->product(a, b), c) != g->product(a, g->product(b, c))) {
            throw InvalidTable("not associative: (" + g->_labels[a] + " "
                               + g->_labels[b] + ") " + g->_labels[c]);
          }
        }
      }
    }
    bool found = false;
    for (Index e = 0; e < n && !found; ++e) {
      bool ok = true;
      for (Index a = 0; a < n && ok; ++a) {
        ok = g->product(e, a) == a && g->product(a, e) == a;
      }
      if (ok) {
        g->_identity = e;
        found        = true;
      }
    }
    if (!found) {
      throw InvalidTable("no two-sided identity");
    }
    g->_inverse.assign(n, 0);
    g->_order.assign(n, 0);
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (g->product(a, b) == g->_identity) {
          g->_inverse[a] = b;
        }
      }
      Index x = a;
      Index k = 1;
      while (x != g->_identity) {
        x = g->product(x, a);
        ++k;
      }
      g->_order[a] = k;
    }

    // Greedy generating set, largest orders first, then made irredundant.
    std::vector<Index> by_order(n);
    std::iota(by_order.begin(), by_order.end(), 0);
    std::stable_sort(by_order.begin(), by_order.end(), [&](Index x, Index y) {
      return g->_order[x] > g->_order[y];
    });
    ElementSet gens;
    std::vector<bool> span = closure_flags(*g, gens);
    for (Index x : by_order) {
      if (!span[x]) {
        gens.push_back(x);
        span = closure_flags(*g, gens);
      }
    }
    for (std::size_t k = 0; k < gens.size();) {
      ElementSet rest = gens;
      rest.erase(rest.begin() + k);
      auto c = closure_flags(*g, rest);
      if (std::count(c.begin(), c.end(), true) == static_cast<long>(n)) {
        gens = std::move(rest);
      } else {
        ++k;
      }
    }
    g->_generators = std::move(gens);
    return g;
  }

  Index FiniteGroup::index_of(std::string_view label) const {
    auto k = find(label);
    if (!k) {
      throw UnknownElement("unknown group element '" + std::string(label)
                           + "'");
    }
    return *k;
  }

  std::optional<Index> FiniteGroup::find(std::string_view label) const {
    for (Index k = 0; k < _labels.size(); ++k) {
      if (_labels[k] == label) {
        return k;
      }
    }
    return std::nullopt;
  }

  void FiniteGroup::check_element(Index g) const {
    if (g >= size()) {
      throw UnknownElement("group element index " + std::to_string(g)
                           + " out of range");
    }
  }

  bool FiniteGroup::is_abelian() const {
    for (Index a = 0; a < size(); ++a) {
      for (Index b = a + 1; b < size(); ++b) {
        if (product(a, b) != product(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::vector<Index>> FiniteGroup::table_rows() const {
    std::vector<std::vector<Index>> rows(size(), std::vector<Index>(size()));
    for (Index a = 0; a < size(); ++a) {
      for (Index b = 0; b < size(); ++b) {
        rows[a][b] = product(a, b);
      }
    }
    return rows;
  }

  bool operator==(FiniteGroup const& a, FiniteGroup const& b) {
    return a.labels() == b.labels() && a.table_rows() == b.table_rows();
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphisms
  ////////////////////////////////////////////////////////////////////////

  bool operator==(GroupMorphism const& a, GroupMorphism const& b) {
    return a.map == b.map && *a.source == *b.source && *a.target == *b.target;
  }

  bool is_group_morphism(GroupMorphism const& theta) {
    auto const& g = *theta.source;
    auto const& h = *theta.target;
    if (theta.map.size() != g.size()) {
      return false;
    }
    for (Index x : theta.map) {
      if (x >= h.size()) {
        return false;
      }
    }
    for (Index a = 0; a < g.size(); ++a) {
      for (Index b = 0; b < g.size(); ++b) {
        if (theta(g.product(a, b)) != h.product(theta(a), theta(b))) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_bijective(GroupMorphism const& theta) {
    if (theta.source->size() != theta.target->size()) {
      return false;
    }
    std::vector<bool> hit(theta.target->size(), false);
    for (Index x : theta.map) {
      if (hit[x]) {
        return false;
      }
      hit[x] = true;
    }
    return true;
  }

  GroupMorphism identity_morphism(GroupPtr const& g) {
    ElementMap m(g->size());
    std::iota(m.begin(), m.end(), 0);
    return {g, g, std::move(m)};
  }

  GroupMorphism compose(GroupMorphism const& theta, GroupMorphism const& phi) {
    if (theta.target->size() != phi.source->size()) {
      throw ComponentMismatch("cannot compose group morphisms");
    }
    ElementMap m(theta.map.size());
    for (Index g = 0; g < m.size(); ++g) {
      m[g] = phi(theta(g));
    }
    return {theta.source, phi.target, std::move(m)};
  }

  GroupMorphism inverse(GroupMorphism const& theta) {
    if (!is_bijective(theta)) {
      throw ComponentMismatch("only bijective morphisms can be inverted");
    }
    ElementMap m(theta.map.size());
    for (Index g = 0; g < m.size(); ++g) {
      m[theta(g)] = g;
    }
    return {theta.target, theta.source, std::move(m)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroups
  ////////////////////////////////////////////////////////////////////////

  ElementSet subgroup_closure(FiniteGroup const& g, ElementSet const& x) {
    for (Index y : x) {
      g.check_element(y);
    }
    return flags_to_set(closure_flags(g, normalized_set(x)));
  }

  bool is_subgroup(FiniteGroup const& g, ElementSet const& h) {
    if (h.empty()) {
      return false;
    }
    std::vector<bool> in(g.size(), false);
    for (Index x : h) {
      if (x >= g.size()) {
        return false;
      }
      in[x] = true;
    }
    for (Index a : h) {
      for (Index b : h) {
        if (!in[g.product(a, b)]) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<ElementSet> all_subgroups(FiniteGroup const& g) {
    std::set<ElementSet>    seen;
    std::deque<ElementSet>  queue;
    auto push = [&](ElementSet s) {
      if (seen.insert(s).second) {
        queue.push_back(std::move(s));
      }
    };
    for (Index x = 0; x < g.size(); ++x) {
      push(subgroup_closure(g, {x}));
    }
    while (!queue.empty()) {
      ElementSet h = std::move(queue.front());
      queue.pop_front();
      std::vector<bool> in(g.size(), false);
      for (Index x : h) {
        in[x] = true;
      }
      for (Index x = 0; x < g.size(); ++x) {
        if (!in[x]) {
          ElementSet ext = h;
          ext.push_back(x);
          push(subgroup_closure(g, ext));
        }
      }
    }
    std::vector<std::pair<std::vector<std::string>, ElementSet>> keyed;
    for (auto const& h : seen) {
      std::vector<std::string> key;
      for (Index x : h) {
        key.push_back(g.label(x));
      }
      std::sort(key.begin(), key.end());
      keyed.emplace_back(std::move(key), h);
    }
    std::sort(keyed.begin(), keyed.end(), [](auto const& a, auto const& b) {
      if (a.second.size() != b.second.size()) {
        return a.second.size() < b.second.size();
      }
      return a.first < b.first;
    });
    std::vector<ElementSet> out;
    for (auto& [key, h] : keyed) {
      out.push_back(std::move(h));
    }
    return out;
  }

  std::vector<GroupMorphism> enumerate_group_morphisms(GroupPtr const& g,
                                                       GroupPtr const& h,
                                                       bool bijective_only) {
    std::vector<GroupMorphism> out;
    if (bijective_only && g->size() != h->size()) {
      return out;
    }
    ElementSet const& gens = g->generators();
    std::vector<Index> images(gens.size(), 0);

    // Extends the generator images to a map by walking the right Cayley
    // graph; fails on the first inconsistent edge.
    auto extend = [&]() -> std::optional<ElementMap> {
      constexpr Index unset = static_cast<Index>(-1);
      ElementMap m(g->size(), unset);
      m[g->identity()] = h->identity();
      std::vector<Index> queue{g->identity()};
      for (std::size_t k = 0; k < queue.size(); ++k) {
        Index x = queue[k];
        for (std::size_t j = 0; j < gens.size(); ++j) {
          Index y   = g->product(x, gens[j]);
          Index img = h->product(m[x], images[j]);
          if (m[y] == unset) {
            m[y] = img;
            queue.push_back(y);
          } else if (m[y] != img) {
            return std::nullopt;
          }
        }
      }
      return m;
    };

    auto recurse = [&](auto&& self, std::size_t depth) -> void {
      if (depth == gens.size()) {
        auto m = extend();
        if (!m) {
          return;
        }
        GroupMorphism theta{g, h, std::move(*m)};
        if (!is_group_morphism(theta)) {
          return;
        }
        if (bijective_only && !is_bijective(theta)) {
          return;
        }
        out.push_back(std::move(theta));
        return;
      }
      Index ord = g->order(gens[depth]);
      for (Index y = 0; y < h->size(); ++y) {
        if (ord % h->order(y) != 0) {
          continue;
        }
        if (bijective_only && h->order(y) != ord) {
          continue;
        }
        images[depth] = y;
        self(self, depth + 1);
      }
    };
    recurse(recurse, 0);
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.map < b.map;
    });
    return out;
  }

  std::vector<GroupMorphism> automorphisms(GroupPtr const& g) {
    return enumerate_group_morphisms(g, g, true);
  }

  GroupMorphism inner_automorphism(GroupPtr const& g, Index u) {
    g->check_element(u);
    ElementMap m(g->size());
    Index      u_inv = g->inverse(u);
    for (Index x = 0; x < g->size(); ++x) {
      m[x] = g->product(g->product(u, x), u_inv);
    }
    return {g, g, std::move(m)};
  }

  CharacteristicResult is_characteristic(GroupPtr const&   g,
                                         ElementSet const& h) {
    ElementSet hs = normalized_set(h);
    if (!is_subgroup(*g, hs)) {
      throw NotASubgroup("the given set is not a subgroup");
    }
    std::vector<bool> in(g->size(), false);
    for (Index x : hs) {
      in[x] = true;
    }
    for (auto& theta : automorphisms(g)) {
      for (Index x : hs) {
        if (!in[theta(x)]) {
          return {false, std::move(theta)};
        }
      }
    }
    return {};
  }

  bool is_simple_abelian(FiniteGroup const& g) {
    if (!g.is_abelian()) {
      return false;
    }
    auto n = g.size();
    if (n == 1) {
      return true;
    }
    for (std::size_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  Subgroup subgroup_as_group(FiniteGroup const& g, ElementSet const& h) {
    ElementSet hs = normalized_set(h);
    if (!is_subgroup(g, hs)) {
      throw NotASubgroup("the given set is not a subgroup");
    }
    std::vector<Index> local(g.size(), 0);
    for (Index k = 0; k < hs.size(); ++k) {
      local[hs[k]] = k;
    }
    std::vector<std::string>        labels;
    std::vector<std::vector<Index>> table(hs.size(),
                                          std::vector<Index>(hs.size()));
    for (Index a = 0; a < hs.size(); ++a) {
      labels.push_back(g.label(hs[a]));
      for (Index b = 0; b < hs.size(); ++b) {
        table[a][b] = local[g.product(hs[a], hs[b])];
      }
    }
    return {FiniteGroup::make(std::move(labels), table), hs};
  }

  namespace {
    bool has_injective_morphism(GroupPtr const& g, GroupPtr const& h) {
      if (h->size() % g->size() != 0) {
        return false;
      }
      for (auto const& theta : enumerate_group_morphisms(g, h, false)) {
        std::vector<Index> img = theta.map;
        std::sort(img.begin(), img.end());
        if (std::adjacent_find(img.begin(), img.end()) == img.end()) {
          return true;
        }
      }
      return false;
    }
  }  // namespace

  bool embeds_in(GroupPtr const& g, GroupPtr const& h) {
    return has_injective_morphism(g, h);
  }

  bool are_isomorphic(GroupPtr const& g, GroupPtr const& h) {
    return g->size() == h->size() && has_injective_morphism(g, h);
  }

}  // namespace cssemi
