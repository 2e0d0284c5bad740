#include "cssemi/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace cssemi {

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemigroup
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup::FiniteSemigroup(std::vector<std::string>              labels,
                                   std::vector<std::vector<Index>> const& table)
      : _labels(std::move(labels)) {
    std::size_t const n = _labels.size();
    if (n == 0) {
      throw InvalidTable("a semigroup needs at least one element");
    }
    {
      std::set<std::string> seen(_labels.begin(), _labels.end());
      if (seen.size() != n) {
        throw InvalidTable("duplicate element label");
      }
    }
    if (table.size() != n) {
      throw InvalidTable("table must have one row per element");
    }
    _table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n) {
        throw InvalidTable("row " + _labels[a] + " has the wrong length");
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (table[a][b] >= n) {
          throw InvalidTable("entry out of range in row " + _labels[a]);
        }
        _table[a * n + b] = table[a][b];
      }
    }
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        Index ab = product(a, b);
        for (Index c = 0; c < n; ++c) {
          if (product(ab, c) != product(a, product(b, c))) {
            throw InvalidTable("not associative: (" + _labels[a] + " "
                               + _labels[b] + ") " + _labels[c] + " != "
                               + _labels[a] + " (" + _labels[b] + " "
                               + _labels[c] + ")");
          }
        }
      }
    }
  }

  Index FiniteSemigroup::index_of(std::string_view label) const {
    auto k = find(label);
    if (!k) {
      throw UnknownElement("unknown semigroup element '" + std::string(label)
                           + "'");
    }
    return *k;
  }

  std::optional<Index> FiniteSemigroup::find(std::string_view label) const {
    for (Index k = 0; k < _labels.size(); ++k) {
      if (_labels[k] == label) {
        return k;
      }
    }
    return std::nullopt;
  }

  void FiniteSemigroup::check_element(Index a) const {
    if (a >= size()) {
      throw UnknownElement("semigroup element index " + std::to_string(a)
                           + " out of range");
    }
  }

  std::vector<std::vector<Index>> FiniteSemigroup::table_rows() const {
    std::vector<std::vector<Index>> rows(size(), std::vector<Index>(size()));
    for (Index a = 0; a < size(); ++a) {
      for (Index b = 0; b < size(); ++b) {
        rows[a][b] = product(a, b);
      }
    }
    return rows;
  }

  FiniteSemigroup as_semigroup(FiniteGroup const& g) {
    return FiniteSemigroup(g.labels(), g.table_rows());
  }

  ////////////////////////////////////////////////////////////////////////
  // Closure and idempotents
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Closes `members` (flags in `in`) in place.
    void close_in_place(FiniteSemigroup const& s,
                        std::vector<bool>&     in,
                        std::vector<Index>&    members,
                        std::size_t            first_new) {
      for (std::size_t k = first_new; k < members.size(); ++k) {
        Index w = members[k];
        for (std::size_t j = 0; j <= k; ++j) {
          Index e = members[j];
          for (Index p : {s.product(w, e), s.product(e, w)}) {
            if (!in[p]) {
              in[p] = true;
              members.push_back(p);
            }
          }
        }
      }
    }

    std::vector<bool> closure_flags(FiniteSemigroup const& s,
                                    ElementSet const&      x) {
      std::vector<bool>  in(s.size(), false);
      std::vector<Index> members;
      for (Index y : x) {
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
      close_in_place(s, in, members, 0);
      return in;
    }

    // Closure of (closed t) + x as a mask.
    Mask close_with(FiniteSemigroup const& s, Mask t, Index x) {
      if (mask::contains(t, x)) {
        return t;
      }
      std::vector<Index> members = mask::to_set(t);
      std::size_t        first   = members.size();
      members.push_back(x);
      t |= mask::bit(x);
      for (std::size_t k = first; k < members.size(); ++k) {
        Index w = members[k];
        for (std::size_t j = 0; j <= k; ++j) {
          Index e = members[j];
          Index p = s.product(w, e);
          if (!mask::contains(t, p)) {
            t |= mask::bit(p);
            members.push_back(p);
          }
          p = s.product(e, w);
          if (!mask::contains(t, p)) {
            t |= mask::bit(p);
            members.push_back(p);
          }
        }
      }
      return t;
    }

    // (index, period) of the monogenic subsemigroup generated by x.
    std::pair<Index, Index> index_period(FiniteSemigroup const& s, Index x) {
      std::vector<Index> seen_at(s.size(), 0);
      Index              y = x;
      for (Index k = 1;; ++k) {
        if (seen_at[y] != 0) {
          return {seen_at[y], k - seen_at[y]};
        }
        seen_at[y] = k;
        y          = s.product(y, x);
      }
    }

    std::vector<Mask> subsemigroup_masks(FiniteSemigroup const& s,
                                         SearchOptions const&   opts) {
      if (s.size() > max_mask_size) {
        throw TooLarge("subsemigroup enumeration supports at most 64 elements");
      }
      std::unordered_set<Mask> seen;
      std::vector<Mask>        order;
      auto push = [&](Mask m) {
        if (seen.insert(m).second) {
          order.push_back(m);
          if (seen.size() > opts.subsemigroup_cap) {
            throw CapExceeded(seen.size());
          }
        }
      };
      for (Index x = 0; x < s.size(); ++x) {
        push(close_with(s, 0, x));
      }
      for (std::size_t k = 0; k < order.size(); ++k) {
        if ((k & 255U) == 0) {
          opts.check_deadline();
        }
        Mask t = order[k];
        for (Index x = 0; x < s.size(); ++x) {
          if (!mask::contains(t, x)) {
            push(close_with(s, t, x));
          }
        }
      }
      return order;
    }
  }  // namespace

  FiniteSemigroup induced(FiniteSemigroup const& s, ElementSet const& sub) {
    ElementSet sorted = normalized_set(sub);
    if (sorted.empty() || !is_closed(s, sorted)) {
      throw InvalidTable("subset is not a subsemigroup");
    }
    std::vector<Index> local(s.size(), 0);
    for (Index k = 0; k < sorted.size(); ++k) {
      local[sorted[k]] = k;
    }
    std::vector<std::string>        labels;
    std::vector<std::vector<Index>> table(sorted.size(),
                                          std::vector<Index>(sorted.size()));
    for (Index a = 0; a < sorted.size(); ++a) {
      labels.push_back(s.label(sorted[a]));
      for (Index b = 0; b < sorted.size(); ++b) {
        table[a][b] = local[s.product(sorted[a], sorted[b])];
      }
    }
    return FiniteSemigroup(std::move(labels), table);
  }

  ElementSet closure(FiniteSemigroup const& s, ElementSet const& x) {
    for (Index y : x) {
      s.check_element(y);
    }
    auto       in = closure_flags(s, x);
    ElementSet out;
    for (Index k = 0; k < s.size(); ++k) {
      if (in[k]) {
        out.push_back(k);
      }
    }
    return out;
  }

  bool is_closed(FiniteSemigroup const& s, ElementSet const& x) {
    std::vector<bool> in(s.size(), false);
    for (Index y : x) {
      if (y >= s.size()) {
        return false;
      }
      in[y] = true;
    }
    for (Index a : x) {
      for (Index b : x) {
        if (!in[s.product(a, b)]) {
          return false;
        }
      }
    }
    return true;
  }

  IdempotentData idempotent_structure(FiniteSemigroup const& s) {
    IdempotentData out;
    for (Index x = 0; x < s.size(); ++x) {
      if (s.is_idempotent(x)) {
        out.idempotents.push_back(x);
      }
    }
    for (Index e : out.idempotents) {
      bool primitive = true;
      for (Index f : out.idempotents) {
        if (s.product(e, f) == e && s.product(f, e) == e) {
          out.natural_order.emplace_back(e, f);
        }
        if (f != e && s.product(e, f) == f && s.product(f, e) == f) {
          primitive = false;
        }
      }
      if (primitive) {
        out.primitive.push_back(e);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Green's relations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void partition(std::vector<std::vector<bool>> const& same,
                   std::vector<ElementSet>&              classes,
                   std::vector<std::size_t>&             index) {
      std::size_t const n = same.size();
      index.assign(n, static_cast<std::size_t>(-1));
      for (Index a = 0; a < n; ++a) {
        if (index[a] != static_cast<std::size_t>(-1)) {
          continue;
        }
        classes.emplace_back();
        for (Index b = a; b < n; ++b) {
          if (same[a][b]) {
            index[b] = classes.size() - 1;
            classes.back().push_back(b);
          }
        }
      }
    }
  }  // namespace

  GreenData green(FiniteSemigroup const& s) {
    std::size_t const              n = s.size();
    std::vector<std::vector<bool>> right(n, std::vector<bool>(n, false));
    std::vector<std::vector<bool>> left(n, std::vector<bool>(n, false));
    for (Index b = 0; b < n; ++b) {
      right[b][b] = true;
      left[b][b]  = true;
      for (Index u = 0; u < n; ++u) {
        right[b][s.product(b, u)] = true;
        left[b][s.product(u, b)]  = true;
      }
    }
    GreenData out;
    out.r_preorder.assign(n, std::vector<bool>(n, false));
    std::vector<std::vector<bool>> r_same(n, std::vector<bool>(n, false));
    std::vector<std::vector<bool>> l_same(n, std::vector<bool>(n, false));
    std::vector<std::vector<bool>> h_same(n, std::vector<bool>(n, false));
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        out.r_preorder[a][b] = right[b][a];
      }
    }
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        r_same[a][b] = right[b][a] && right[a][b];
        l_same[a][b] = left[b][a] && left[a][b];
        h_same[a][b] = r_same[a][b] && l_same[a][b];
      }
    }
    partition(r_same, out.r_classes, out.r_index);
    partition(l_same, out.l_classes, out.l_index);
    partition(h_same, out.h_classes, out.h_index);
    return out;
  }

  bool is_completely_simple(FiniteSemigroup const& s) {
    std::size_t const n = s.size();
    for (Index x = 0; x < n; ++x) {
      std::vector<bool> ideal(n, false);
      ideal[x] = true;
      for (Index u = 0; u < n; ++u) {
        Index ux = s.product(u, x);
        ideal[ux] = true;
        ideal[s.product(x, u)] = true;
        for (Index v = 0; v < n; ++v) {
          ideal[s.product(ux, v)] = true;
        }
      }
      if (std::find(ideal.begin(), ideal.end(), false) != ideal.end()) {
        return false;
      }
    }
    return !idempotent_structure(s).primitive.empty();
  }

  bool is_regular(FiniteSemigroup const& s) {
    for (Index x = 0; x < s.size(); ++x) {
      bool found = false;
      for (Index y = 0; y < s.size() && !found; ++y) {
        found = s.product(s.product(x, y), x) == x;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  bool is_orthodox(FiniteSemigroup const& s) {
    auto e = idempotent_structure(s).idempotents;
    return !e.empty() && is_closed(s, e);
  }

  std::vector<ElementSet> all_subsemigroups(FiniteSemigroup const& s,
                                            SearchOptions const&   opts) {
    std::vector<ElementSet> out;
    for (Mask m : subsemigroup_masks(s, opts)) {
      out.push_back(mask::to_set(m));
    }
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphism search
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Compatible = std::function<bool(Index, Index)>;

    class MorphismSearch {
     public:
      MorphismSearch(FiniteSemigroup const& source,
                     FiniteSemigroup const& target,
                     bool                   injective,
                     SearchOptions const&   opts)
          : _source(source), _target(target), _injective(injective),
            _opts(opts) {}

      bool run(ElementSet const&                           domain,
               std::vector<std::pair<Index, Index>> const& fixed,
               Compatible const&                           compatible,
               MorphismVisitor const&                      visit) {
        _compatible = &compatible;
        _visit      = &visit;
        _domain     = domain.size();
        State st;
        st.map.assign(_source.size(), kUnmapped);
        st.used.assign(_target.size(), 0);
        for (auto [x, y] : fixed) {
          _source.check_element(x);
          _target.check_element(y);
          if (!assign(st, x, y)) {
            return true;
          }
        }
        choose_generators(domain, st);
        if (_injective) {
          _source_profile.resize(_source.size());
          for (Index x : _generators) {
            _source_profile[x] = index_period(_source, x);
          }
          _target_profile.resize(_target.size());
          for (Index y = 0; y < _target.size(); ++y) {
            _target_profile[y] = index_period(_target, y);
          }
        }
        return recurse(st, 0);
      }

     private:
      struct State {
        ElementMap         map;
        std::vector<char>  used;
        std::vector<Index> dom;
        std::size_t        processed = 0;
      };

      bool set_product(State& st, Index p, Index img) {
        if (st.map[p] == kUnmapped) {
          if (_injective && st.used[img]) {
            return false;
          }
          st.map[p]  = img;
          st.used[img] = 1;
          st.dom.push_back(p);
          return true;
        }
        return st.map[p] == img;
      }

      bool assign(State& st, Index x, Index y) {
        if (st.map[x] != kUnmapped) {
          return st.map[x] == y;
        }
        if (!set_product(st, x, y)) {
          return false;
        }
        while (st.processed < st.dom.size()) {
          Index x0 = st.dom[st.processed];
          for (std::size_t k = 0; k <= st.processed; ++k) {
            Index z = st.dom[k];
            if (!set_product(st,
                             _source.product(x0, z),
                             _target.product(st.map[x0], st.map[z]))
                || !set_product(st,
                                _source.product(z, x0),
                                _target.product(st.map[z], st.map[x0]))) {
              return false;
            }
          }
          ++st.processed;
        }
        return true;
      }

      // Greedy: each generator is the element adding the most to the
      // closure of everything chosen (or fixed) so far.
      void choose_generators(ElementSet const& domain, State const& st) {
        std::vector<bool>  in(_source.size(), false);
        std::vector<Index> members;
        for (Index x : st.dom) {
          in[x] = true;
          members.push_back(x);
        }
        close_in_place(_source, in, members, 0);
        _generators.clear();
        for (;;) {
          std::size_t best_gain = 0;
          Index       best      = kUnmapped;
          for (Index x : domain) {
            if (in[x]) {
              continue;
            }
            std::vector<bool>  trial = in;
            std::vector<Index> tm    = members;
            trial[x]                 = true;
            tm.push_back(x);
            close_in_place(_source, trial, tm, members.size());
            if (tm.size() > best_gain) {
              best_gain = tm.size();
              best      = x;
            }
          }
          if (best == kUnmapped) {
            break;
          }
          _generators.push_back(best);
          in[best] = true;
          std::size_t first = members.size();
          members.push_back(best);
          close_in_place(_source, in, members, first);
        }
      }

      bool recurse(State const& st, std::size_t depth) {
        if ((++_nodes & 1023U) == 0) {
          _opts.check_deadline();
        }
        if (depth == _generators.size()) {
          if (st.dom.size() != _domain) {
            throw InternalError("morphism search domain is not closed");
          }
          return (*_visit)(st.map);
        }
        Index x = _generators[depth];
        for (Index y = 0; y < _target.size(); ++y) {
          if (_injective
              && (st.used[y] || _source_profile[x] != _target_profile[y])) {
            continue;
          }
          if (*_compatible && !(*_compatible)(x, y)) {
            continue;
          }
          State next = st;
          if (assign(next, x, y) && !recurse(next, depth + 1)) {
            return false;
          }
        }
        return true;
      }

      FiniteSemigroup const&               _source;
      FiniteSemigroup const&               _target;
      bool                                 _injective;
      SearchOptions const&                 _opts;
      Compatible const*                    _compatible = nullptr;
      MorphismVisitor const*               _visit      = nullptr;
      std::size_t                          _domain     = 0;
      std::size_t                          _nodes      = 0;
      std::vector<Index>                   _generators;
      std::vector<std::pair<Index, Index>> _source_profile;
      std::vector<std::pair<Index, Index>> _target_profile;
    };

    ElementSet everything(FiniteSemigroup const& s) {
      ElementSet all(s.size());
      std::iota(all.begin(), all.end(), 0);
      return all;
    }

    // Isomorphism invariants of each element within its own semigroup.
    std::vector<std::vector<std::size_t>> profiles(FiniteSemigroup const& s) {
      auto                                  g = green(s);
      std::vector<std::vector<std::size_t>> out(s.size());
      for (Index x = 0; x < s.size(); ++x) {
        auto [idx, per] = index_period(s, x);
        std::size_t left_identity_of = 0, right_identity_of = 0;
        std::size_t fixes = 0;
        std::vector<bool> row(s.size(), false), col(s.size(), false);
        for (Index y = 0; y < s.size(); ++y) {
          left_identity_of += s.product(x, y) == y;
          right_identity_of += s.product(y, x) == y;
          fixes += s.product(x, y) == x;
          row[s.product(x, y)] = true;
          col[s.product(y, x)] = true;
        }
        out[x] = {idx,
                  per,
                  g.r_classes[g.r_index[x]].size(),
                  g.l_classes[g.l_index[x]].size(),
                  g.h_classes[g.h_index[x]].size(),
                  left_identity_of,
                  right_identity_of,
                  fixes,
                  static_cast<std::size_t>(std::count(row.begin(), row.end(), true)),
                  static_cast<std::size_t>(std::count(col.begin(), col.end(), true))};
      }
      return out;
    }
  }  // namespace

  bool for_each_morphism(FiniteSemigroup const&                      source,
                         ElementSet const&                           domain,
                         FiniteSemigroup const&                      target,
                         bool                                        injective,
                         std::vector<std::pair<Index, Index>> const& fixed,
                         MorphismVisitor const&                      visit,
                         SearchOptions const&                        opts) {
    MorphismSearch search(source, target, injective, opts);
    return search.run(domain, fixed, Compatible{}, visit);
  }

  std::vector<ElementMap> enumerate_homomorphisms(FiniteSemigroup const& a,
                                                  FiniteSemigroup const& b) {
    std::vector<ElementMap> out;
    for_each_morphism(a, everything(a), b, false, {}, [&](ElementMap const& m) {
      out.push_back(m);
      return true;
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  std::optional<ElementMap> find_embedding(FiniteSemigroup const& a,
                                           FiniteSemigroup const& b) {
    std::optional<ElementMap> out;
    if (a.size() > b.size()) {
      return out;
    }
    for_each_morphism(a, everything(a), b, true, {}, [&](ElementMap const& m) {
      out = m;
      return false;
    });
    return out;
  }

  std::vector<ElementMap> enumerate_isomorphisms(FiniteSemigroup const& a,
                                                 FiniteSemigroup const& b) {
    std::vector<ElementMap> out;
    if (a.size() != b.size()) {
      return out;
    }
    auto pa = profiles(a);
    auto pb = profiles(b);
    {
      auto sa = pa, sb = pb;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) {
        return out;
      }
    }
    Compatible same_profile = [&](Index x, Index y) { return pa[x] == pb[y]; };
    MorphismSearch search(a, b, true, SearchOptions{});
    search.run(everything(a), {}, same_profile, [&](ElementMap const& m) {
      out.push_back(m);
      return true;
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  bool are_isomorphic(FiniteSemigroup const& a, FiniteSemigroup const& b) {
    if (a.size() != b.size()) {
      return false;
    }
    auto pa = profiles(a);
    auto pb = profiles(b);
    {
      auto sa = pa, sb = pb;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) {
        return false;
      }
    }
    bool           found        = false;
    Compatible     same_profile = [&](Index x, Index y) { return pa[x] == pb[y]; };
    MorphismSearch search(a, b, true, SearchOptions{});
    search.run(everything(a), {}, same_profile, [&](ElementMap const&) {
      found = true;
      return false;
    });
    return found;
  }

  bool is_homomorphism(FiniteSemigroup const& a,
                       FiniteSemigroup const& b,
                       ElementMap const&      map) {
    if (map.size() != a.size()) {
      return false;
    }
    for (Index x : map) {
      if (x >= b.size()) {
        return false;
      }
    }
    for (Index x = 0; x < a.size(); ++x) {
      for (Index y = 0; y < a.size(); ++y) {
        if (map[a.product(x, y)] != b.product(map[x], map[y])) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Homogeneity
  ////////////////////////////////////////////////////////////////////////

  HomogeneityCertificate is_homogeneous(FiniteSemigroup const& s,
                                        SearchOptions const&   opts) {
    if (s.size() > max_mask_size) {
      throw TooLarge("brute-force homogeneity supports at most 64 elements");
    }
    HomogeneityCertificate cert;
    auto const             auts = enumerate_isomorphisms(s, s);
    auto                   subs = subsemigroup_masks(s, opts);
    std::sort(subs.begin(), subs.end(), [](Mask a, Mask b) {
      auto ca = mask::count(a), cb = mask::count(b);
      return ca != cb ? ca < cb : mask::to_set(a) < mask::to_set(b);
    });
    cert.automorphisms = auts.size();
    cert.subsemigroups = subs.size();

    auto image = [](ElementMap const& alpha, Mask m) {
      Mask out = 0;
      while (m != 0) {
        out |= mask::bit(alpha[std::countr_zero(m)]);
        m &= m - 1;
      }
      return out;
    };

    std::unordered_set<Mask> visited;
    for (Mask m : subs) {
      if (visited.count(m) != 0) {
        continue;
      }
      opts.check_deadline();
      OrbitWitness w;
      w.representative = mask::to_set(m);
      for (auto const& alpha : auts) {
        if (visited.insert(image(alpha, m)).second) {
          ++w.orbit_size;
        }
      }
      std::set<std::vector<Index>> restrictions;
      for (auto const& alpha : auts) {
        std::vector<Index> r;
        r.reserve(w.representative.size());
        for (Index x : w.representative) {
          r.push_back(alpha[x]);
        }
        restrictions.insert(std::move(r));
      }
      w.restrictions = restrictions.size();

      std::vector<Index> r(w.representative.size());
      for_each_morphism(
          s,
          w.representative,
          s,
          true,
          {},
          [&](ElementMap const& emb) {
            for (std::size_t k = 0; k < r.size(); ++k) {
              r[k] = emb[w.representative[k]];
            }
            if (restrictions.count(r) == 0) {
              NonExtendable bad;
              bad.domain = w.representative;
              for (std::size_t k = 0; k < r.size(); ++k) {
                bad.map.emplace_back(w.representative[k], r[k]);
              }
              bad.image          = normalized_set(r);
              cert.counterexample = std::move(bad);
              return false;
            }
            ++w.embeddings;
            return true;
          },
          opts);
      if (cert.counterexample) {
        cert.homogeneous = false;
        return cert;
      }
      cert.orbits.push_back(std::move(w));
    }
    cert.homogeneous = true;
    return cert;
  }

  bool is_homogeneous_group(FiniteGroup const& g, SearchOptions const& opts) {
    return is_homogeneous(as_semigroup(g), opts).homogeneous;
  }

}  // namespace cssemi
