#include "cssemi/rees.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cssemi/rms_morphism.hpp"

namespace cssemi {

  namespace {
    std::vector<std::string> default_labels(std::size_t n) {
      std::vector<std::string> out;
      for (std::size_t k = 1; k <= n; ++k) {
        out.push_back(std::to_string(k));
      }
      return out;
    }

    Index find_index(std::vector<std::string> const& labels,
                     std::string_view                x,
                     char const*                     what) {
      auto it = std::find(labels.begin(), labels.end(), x);
      if (it == labels.end()) {
        throw UnknownLabel(std::string("unknown ") + what + " label '"
                           + std::string(x) + "'");
      }
      return static_cast<Index>(it - labels.begin());
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // ReesMatrixSemigroup
  ////////////////////////////////////////////////////////////////////////

  ReesMatrixSemigroup::ReesMatrixSemigroup(
      GroupPtr                        group,
      std::vector<std::vector<Index>> matrix,
      std::vector<std::string>        i_labels,
      std::vector<std::string>        lambda_labels)
      : _group(std::move(group)), _matrix(std::move(matrix)) {
    if (!_group) {
      throw InvalidTable("a Rees matrix semigroup needs a group");
    }
    if (_matrix.empty() || _matrix.front().empty()) {
      throw InvalidTable("the sandwich matrix must be nonempty");
    }
    std::size_t const n = _matrix.front().size();
    for (auto const& row : _matrix) {
      if (row.size() != n) {
        throw InvalidTable("sandwich matrix rows differ in length");
      }
      for (Index g : row) {
        _group->check_element(g);
      }
    }
    _i_labels = i_labels.empty() ? default_labels(n) : std::move(i_labels);
    _lambda_labels = lambda_labels.empty() ? default_labels(_matrix.size())
                                           : std::move(lambda_labels);
    if (_i_labels.size() != n || _lambda_labels.size() != _matrix.size()) {
      throw InvalidTable("index labels do not match the matrix shape");
    }
    for (auto const* labels : {&_i_labels, &_lambda_labels}) {
      std::set<std::string> seen(labels->begin(), labels->end());
      if (seen.size() != labels->size()) {
        throw InvalidTable("duplicate index label");
      }
    }
  }

  Index ReesMatrixSemigroup::i_index(std::string_view label) const {
    return find_index(_i_labels, label, "I");
  }

  Index ReesMatrixSemigroup::lambda_index(std::string_view label) const {
    return find_index(_lambda_labels, label, "Lambda");
  }

  bool ReesMatrixSemigroup::is_normal_cell(Cell c) const {
    if (c.i >= i_size() || c.lambda >= lambda_size()) {
      return false;
    }
    Index const e = group().identity();
    for (Index j = 0; j < i_size(); ++j) {
      if (_matrix[c.lambda][j] != e) {
        return false;
      }
    }
    for (Index mu = 0; mu < lambda_size(); ++mu) {
      if (_matrix[mu][c.i] != e) {
        return false;
      }
    }
    return true;
  }

  ReesMatrixSemigroup& ReesMatrixSemigroup::mark_normalized(Cell c) {
    if (!is_normal_cell(c)) {
      throw NotNormalized("row and column of the marker are not all identity");
    }
    _normalized_at = c;
    return *this;
  }

  std::optional<Cell> ReesMatrixSemigroup::find_normal_cell() const {
    if (_normalized_at) {
      return _normalized_at;
    }
    for (Index lambda = 0; lambda < lambda_size(); ++lambda) {
      for (Index i = 0; i < i_size(); ++i) {
        if (is_normal_cell({i, lambda})) {
          return Cell{i, lambda};
        }
      }
    }
    return std::nullopt;
  }

  Cell ReesMatrixSemigroup::normal_cell() const {
    auto c = find_normal_cell();
    if (!c) {
      throw NotNormalized("the Rees matrix semigroup is not normalized");
    }
    return *c;
  }

  void ReesMatrixSemigroup::check_element(RmsElement x) const {
    if (x.i >= i_size() || x.g >= group().size()
        || x.lambda >= lambda_size()) {
      throw UnknownLabel("Rees matrix element out of range");
    }
  }

  std::string ReesMatrixSemigroup::element_label(RmsElement x) const {
    check_element(x);
    return _i_labels[x.i] + ":" + group().label(x.g) + ":"
           + _lambda_labels[x.lambda];
  }

  RmsElement ReesMatrixSemigroup::parse_element(std::string_view text) const {
    auto first = text.find(':');
    auto last  = text.rfind(':');
    if (first == std::string_view::npos || first == last) {
      throw UnknownLabel("expected i:g:lambda, got '" + std::string(text)
                         + "'");
    }
    RmsElement x;
    x.i      = i_index(text.substr(0, first));
    x.lambda = lambda_index(text.substr(last + 1));
    auto g   = group().find(text.substr(first + 1, last - first - 1));
    if (!g) {
      throw UnknownLabel("unknown group element in '" + std::string(text)
                         + "'");
    }
    x.g = *g;
    return x;
  }

  bool operator==(ReesMatrixSemigroup const& a, ReesMatrixSemigroup const& b) {
    return *a._group == *b._group && a._matrix == b._matrix
           && a._i_labels == b._i_labels
           && a._lambda_labels == b._lambda_labels
           && a._normalized_at == b._normalized_at;
  }

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  RmsElement multiply(Rms const& s, RmsElement x, RmsElement y) {
    s.check_element(x);
    s.check_element(y);
    auto const& g = s.group();
    return {x.i, g.product(g.product(x.g, s.entry(x.lambda, y.i)), y.g),
            y.lambda};
  }

  RmsElement idempotent_at(Rms const& s, Index i, Index lambda) {
    if (i >= s.i_size() || lambda >= s.lambda_size()) {
      throw UnknownLabel("index out of range");
    }
    return {i, s.group().inverse(s.entry(lambda, i)), lambda};
  }

  Normalization normalize(Rms const& s, Index i, Index lambda) {
    if (i >= s.i_size() || lambda >= s.lambda_size()) {
      throw UnknownLabel("normalization cell out of range");
    }
    auto const& g   = s.group();
    auto        inv = [&](Index x) { return g.inverse(x); };
    auto        mul = [&](Index x, Index y) { return g.product(x, y); };
    Index const pli = s.entry(lambda, i);
    std::vector<std::vector<Index>> q(s.lambda_size(),
                                      std::vector<Index>(s.i_size()));
    for (Index mu = 0; mu < s.lambda_size(); ++mu) {
      for (Index j = 0; j < s.i_size(); ++j) {
        q[mu][j] = mul(mul(mul(pli, inv(s.entry(mu, i))), s.entry(mu, j)),
                       inv(s.entry(lambda, j)));
      }
    }
    Rms t(s.group_ptr(), std::move(q), s.i_labels(), s.lambda_labels());
    t.mark_normalized({i, lambda});

    RmsMorphism phi;
    phi.theta = identity_morphism(s.group_ptr());
    phi.psi_i.resize(s.i_size());
    std::iota(phi.psi_i.begin(), phi.psi_i.end(), 0);
    phi.psi_lambda.resize(s.lambda_size());
    std::iota(phi.psi_lambda.begin(), phi.psi_lambda.end(), 0);
    for (Index j = 0; j < s.i_size(); ++j) {
      phi.u.push_back(s.entry(lambda, j));
    }
    for (Index mu = 0; mu < s.lambda_size(); ++mu) {
      phi.v.push_back(mul(s.entry(mu, i), inv(pli)));
    }
    auto check = validate(phi, s, t);
    if (!check) {
      throw InternalError("normalization isomorphism failed validation");
    }
    phi.validated = true;
    return {std::move(t), std::move(phi)};
  }

  EntryGroupData entry_group_data(Rms const& s) {
    EntryGroupData out;
    out.columns.resize(s.i_size());
    out.rows.resize(s.lambda_size());
    std::vector<Index> all;
    for (Index lambda = 0; lambda < s.lambda_size(); ++lambda) {
      for (Index i = 0; i < s.i_size(); ++i) {
        Index p = s.entry(lambda, i);
        all.push_back(p);
        out.columns[i].push_back(p);
        out.rows[lambda].push_back(p);
      }
    }
    out.entries = normalized_set(std::move(all));
    for (auto& c : out.columns) {
      c = normalized_set(std::move(c));
    }
    for (auto& r : out.rows) {
      r = normalized_set(std::move(r));
    }
    out.generated = subgroup_closure(s.group(), out.entries);
    return out;
  }

  Rms idempotent_generated(Rms const& s) {
    Cell const c   = s.normal_cell();
    auto       sub = subgroup_as_group(s.group(), entry_group_data(s).generated);
    std::vector<Index> local(s.group().size(), 0);
    for (Index k = 0; k < sub.embedding.size(); ++k) {
      local[sub.embedding[k]] = k;
    }
    auto q = s.matrix();
    for (auto& row : q) {
      for (Index& x : row) {
        x = local[x];
      }
    }
    Rms out(sub.group, std::move(q), s.i_labels(), s.lambda_labels());
    if (s.normalized_at()) {
      out.mark_normalized(c);
    }
    return out;
  }

  ColouredGraph from_matrix(Rms const& s, std::optional<Cell> drop) {
    if (drop && (drop->i >= s.i_size() || drop->lambda >= s.lambda_size())) {
      throw UnknownLabel("dropped cell out of range");
    }
    std::vector<Index> rows, cols;
    for (Index lambda = 0; lambda < s.lambda_size(); ++lambda) {
      if (!drop || lambda != drop->lambda) {
        rows.push_back(lambda);
      }
    }
    for (Index i = 0; i < s.i_size(); ++i) {
      if (!drop || i != drop->i) {
        cols.push_back(i);
      }
    }
    std::vector<Index> used;
    for (Index lambda : rows) {
      for (Index i : cols) {
        used.push_back(s.entry(lambda, i));
      }
    }
    used = normalized_set(std::move(used));
    std::vector<Index> colour_of(s.group().size(), 0);
    std::vector<std::string> colours;
    for (Index k = 0; k < used.size(); ++k) {
      colour_of[used[k]] = k;
      colours.push_back(s.group().label(used[k]));
    }
    std::vector<std::string>        left, right;
    std::vector<std::vector<Index>> f;
    for (Index lambda : rows) {
      left.push_back(s.lambda_labels()[lambda]);
      f.emplace_back();
      for (Index i : cols) {
        f.back().push_back(colour_of[s.entry(lambda, i)]);
      }
    }
    for (Index i : cols) {
      right.push_back(s.i_labels()[i]);
    }
    return ColouredGraph(
        std::move(left), std::move(right), std::move(colours), std::move(f));
  }

  InducedGraphs induced_graphs(Rms const& s) {
    Cell const                      c = s.normal_cell();
    std::vector<std::vector<Index>> mono(
        s.lambda_size(), std::vector<Index>(s.i_size(), 0));
    ColouredGraph gamma_p(s.lambda_labels(),
                          s.i_labels(),
                          {s.group().label(s.group().identity())},
                          std::move(mono));
    return {std::move(gamma_p), from_matrix(s, c)};
  }

  FiniteSemigroup to_table(Rms const& s) {
    std::size_t const               n = s.size();
    std::vector<std::string>        labels(n);
    std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
    for (Index a = 0; a < n; ++a) {
      RmsElement x = s.element(a);
      labels[a]    = s.element_label(x);
      for (Index b = 0; b < n; ++b) {
        table[a][b] = s.index(multiply(s, x, s.element(b)));
      }
    }
    return FiniteSemigroup(std::move(labels), table);
  }

  Coordinatization rees_coordinatize(FiniteSemigroup const& s) {
    if (!is_completely_simple(s)) {
      throw NotCompletelySimple("the semigroup is not completely simple");
    }
    auto const gd = green(s);
    auto const ed = idempotent_structure(s);
    Index const e = ed.idempotents.front();

    // Classes of e come first.
    auto order = [&](std::vector<ElementSet> const& classes, std::size_t own) {
      std::vector<std::size_t> out{own};
      for (std::size_t k = 0; k < classes.size(); ++k) {
        if (k != own) {
          out.push_back(k);
        }
      }
      return out;
    };
    auto const r_order = order(gd.r_classes, gd.r_index[e]);
    auto const l_order = order(gd.l_classes, gd.l_index[e]);
    std::size_t const ni = r_order.size(), nl = l_order.size();

    // The idempotent in R-class r and L-class l.
    auto idempotent_in = [&](std::size_t r, std::size_t l) -> Index {
      for (Index f : ed.idempotents) {
        if (gd.r_index[f] == r && gd.l_index[f] == l) {
          return f;
        }
      }
      throw InternalError("H-class without idempotent in a completely simple "
                          "semigroup");
    };

    ElementSet const& h = gd.h_classes[gd.h_index[e]];
    std::vector<Index> local(s.size(), 0);
    for (Index k = 0; k < h.size(); ++k) {
      local[h[k]] = k;
    }
    std::vector<std::string>        glabels;
    std::vector<std::vector<Index>> gtable(h.size(),
                                           std::vector<Index>(h.size()));
    for (Index a = 0; a < h.size(); ++a) {
      glabels.push_back(s.label(h[a]));
      for (Index b = 0; b < h.size(); ++b) {
        gtable[a][b] = local[s.product(h[a], h[b])];
      }
    }
    GroupPtr g = FiniteGroup::make(std::move(glabels), gtable);

    std::vector<Index> r(ni), q(nl);
    for (std::size_t i = 0; i < ni; ++i) {
      r[i] = idempotent_in(r_order[i], gd.l_index[e]);
    }
    for (std::size_t lambda = 0; lambda < nl; ++lambda) {
      q[lambda] = idempotent_in(gd.r_index[e], l_order[lambda]);
    }
    std::vector<std::vector<Index>> p(nl, std::vector<Index>(ni));
    for (std::size_t lambda = 0; lambda < nl; ++lambda) {
      for (std::size_t i = 0; i < ni; ++i) {
        p[lambda][i] = local[s.product(q[lambda], r[i])];
      }
    }
    Rms rms(g, std::move(p));
    rms.mark_normalized({0, 0});

    ElementMap iso(s.size(), kUnmapped);
    for (Index k = 0; k < rms.size(); ++k) {
      RmsElement x = rms.element(k);
      Index      t = s.product(s.product(r[x.i], h[x.g]), q[x.lambda]);
      if (iso[t] != kUnmapped) {
        throw InternalError("coordinatization is not injective");
      }
      iso[t] = k;
    }
    if (std::find(iso.begin(), iso.end(), kUnmapped) != iso.end()
        || !is_homomorphism(s, to_table(rms), iso)) {
      throw InternalError("coordinatization is not an isomorphism");
    }
    return {std::move(rms), std::move(iso)};
  }

}  // namespace cssemi
