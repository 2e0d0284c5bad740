#include "cssemi/rms_morphism.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

namespace cssemi {

  namespace {
    bool same_group(GroupPtr const& a, FiniteGroup const& b) {
      return a && (a.get() == &b || *a == b);
    }

    void check_components(RmsMorphism const& phi, Rms const& s, Rms const& t) {
      auto const& h = t.group();
      if (!same_group(phi.theta.source, s.group())
          || !same_group(phi.theta.target, h)
          || phi.theta.map.size() != s.group().size()
          || phi.psi_i.size() != s.i_size()
          || phi.psi_lambda.size() != s.lambda_size()
          || phi.u.size() != s.i_size() || phi.v.size() != s.lambda_size()) {
        throw ComponentMismatch("morphism components do not fit the semigroups");
      }
      auto below = [](std::vector<Index> const& xs, std::size_t n) {
        return std::all_of(
            xs.begin(), xs.end(), [n](Index x) { return x < n; });
      };
      if (!below(phi.theta.map, h.size()) || !below(phi.psi_i, t.i_size())
          || !below(phi.psi_lambda, t.lambda_size()) || !below(phi.u, h.size())
          || !below(phi.v, h.size())) {
        throw ComponentMismatch("morphism component out of range");
      }
    }

    RmsElement act(RmsMorphism const& phi, RmsElement x) {
      auto const& h = *phi.theta.target;
      return {phi.psi_i[x.i],
              h.product(h.product(phi.u[x.i], phi.theta(x.g)),
                        phi.v[x.lambda]),
              phi.psi_lambda[x.lambda]};
    }

    bool less(RmsMorphism const& a, RmsMorphism const& b) {
      return std::tie(a.psi_i, a.psi_lambda, a.theta.map, a.u, a.v)
             < std::tie(b.psi_i, b.psi_lambda, b.theta.map, b.u, b.v);
    }

    // Every map {0..n-1} -> {0..m-1}, or every injective one.
    std::vector<ElementMap> all_maps(std::size_t n,
                                     std::size_t m,
                                     bool        injective) {
      std::vector<ElementMap> out;
      ElementMap              cur(n);
      std::vector<bool>       used(m, false);
      std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == n) {
          out.push_back(cur);
          return;
        }
        for (Index y = 0; y < m; ++y) {
          if (injective && used[y]) {
            continue;
          }
          used[y] = true;
          cur[k]  = y;
          rec(k + 1);
          used[y] = false;
        }
      };
      rec(0);
      return out;
    }
  }  // namespace

  namespace {
    ValidationResult check_equation(RmsMorphism const& phi,
                                    Rms const&         s,
                                    Rms const&         t) {
      auto const& h = t.group();
      for (Index lambda = 0; lambda < s.lambda_size(); ++lambda) {
        for (Index i = 0; i < s.i_size(); ++i) {
          Index lhs = phi.theta(s.entry(lambda, i));
          Index rhs = h.product(
              h.product(phi.v[lambda],
                        t.entry(phi.psi_lambda[lambda], phi.psi_i[i])),
              phi.u[i]);
          if (lhs != rhs) {
            return {false, Cell{i, lambda}};
          }
        }
      }
      return {};
    }
  }  // namespace

  ValidationResult validate(RmsMorphism const& phi, Rms const& s, Rms const& t) {
    check_components(phi, s, t);
    return check_equation(phi, s, t);
  }

  RmsMorphism validated(RmsMorphism phi, Rms const& s, Rms const& t) {
    auto r = validate(phi, s, t);
    if (!r) {
      throw NotValidated("compatibility fails at column "
                         + s.i_labels()[r.failing->i] + ", row "
                         + s.lambda_labels()[r.failing->lambda]);
    }
    phi.validated = true;
    return phi;
  }

  RmsElement apply(RmsMorphism const& phi, RmsElement x) {
    if (!phi.validated) {
      throw NotValidated("the morphism has not been validated");
    }
    if (x.i >= phi.psi_i.size() || x.lambda >= phi.psi_lambda.size()
        || x.g >= phi.theta.map.size()) {
      throw UnknownLabel("element outside the morphism's domain");
    }
    return act(phi, x);
  }

  ElementMap element_map(RmsMorphism const& phi, Rms const& s, Rms const& t) {
    check_components(phi, s, t);
    ElementMap out(s.size());
    for (Index k = 0; k < s.size(); ++k) {
      out[k] = t.index(act(phi, s.element(k)));
    }
    return out;
  }

  bool equal(RmsMorphism const& a, RmsMorphism const& b) {
    if (a.psi_i.size() != b.psi_i.size()
        || a.psi_lambda.size() != b.psi_lambda.size()
        || a.theta.map.size() != b.theta.map.size()
        || a.theta.target->size() != b.theta.target->size()
        || a.u.size() != b.u.size() || a.v.size() != b.v.size()) {
      throw ComponentMismatch("morphisms have different shapes");
    }
    if (a.psi_i != b.psi_i || a.psi_lambda != b.psi_lambda) {
      return false;
    }
    auto const& h = *a.theta.target;
    Index const x = h.product(h.inverse(a.u[0]), b.u[0]);
    for (Index g = 0; g < a.theta.map.size(); ++g) {
      if (a.theta(g) != h.product(h.product(x, b.theta(g)), h.inverse(x))) {
        return false;
      }
    }
    for (Index i = 0; i < a.u.size(); ++i) {
      for (Index lambda = 0; lambda < a.v.size(); ++lambda) {
        if (h.product(a.u[i], a.v[lambda]) != h.product(b.u[i], b.v[lambda])) {
          return false;
        }
      }
    }
    return true;
  }

  RmsMorphism identity_rms_morphism(Rms const& s) {
    RmsMorphism phi;
    phi.theta = identity_morphism(s.group_ptr());
    phi.psi_i.resize(s.i_size());
    std::iota(phi.psi_i.begin(), phi.psi_i.end(), 0);
    phi.psi_lambda.resize(s.lambda_size());
    std::iota(phi.psi_lambda.begin(), phi.psi_lambda.end(), 0);
    phi.u.assign(s.i_size(), s.group().identity());
    phi.v.assign(s.lambda_size(), s.group().identity());
    phi.validated = true;
    return phi;
  }

  RmsMorphism compose(RmsMorphism const& a, RmsMorphism const& b) {
    if (a.psi_i.empty() || a.theta.target->size() != b.theta.source->size()) {
      throw ComponentMismatch("cannot compose Rees matrix morphisms");
    }
    for (Index j : a.psi_i) {
      if (j >= b.psi_i.size()) {
        throw ComponentMismatch("cannot compose Rees matrix morphisms");
      }
    }
    for (Index mu : a.psi_lambda) {
      if (mu >= b.psi_lambda.size()) {
        throw ComponentMismatch("cannot compose Rees matrix morphisms");
      }
    }
    auto const& k = *b.theta.target;
    RmsMorphism out;
    out.theta = compose(a.theta, b.theta);
    for (Index i = 0; i < a.psi_i.size(); ++i) {
      out.psi_i.push_back(b.psi_i[a.psi_i[i]]);
      out.u.push_back(k.product(b.u[a.psi_i[i]], b.theta(a.u[i])));
    }
    for (Index lambda = 0; lambda < a.psi_lambda.size(); ++lambda) {
      out.psi_lambda.push_back(b.psi_lambda[a.psi_lambda[lambda]]);
      out.v.push_back(
          k.product(b.theta(a.v[lambda]), b.v[a.psi_lambda[lambda]]));
    }
    out.validated = a.validated && b.validated;
    return out;
  }

  RmsMorphism inverse(RmsMorphism const& phi) {
    auto invert = [](ElementMap const& m) {
      ElementMap        out(m.size());
      std::vector<bool> hit(m.size(), false);
      for (Index k = 0; k < m.size(); ++k) {
        if (m[k] >= m.size() || hit[m[k]]) {
          throw ComponentMismatch("only bijective morphisms can be inverted");
        }
        hit[m[k]]  = true;
        out[m[k]] = k;
      }
      return out;
    };
    auto const& h = *phi.theta.target;
    RmsMorphism out;
    out.theta      = inverse(phi.theta);
    out.psi_i      = invert(phi.psi_i);
    out.psi_lambda = invert(phi.psi_lambda);
    for (Index j = 0; j < out.psi_i.size(); ++j) {
      out.u.push_back(out.theta(h.inverse(phi.u[out.psi_i[j]])));
    }
    for (Index mu = 0; mu < out.psi_lambda.size(); ++mu) {
      out.v.push_back(out.theta(h.inverse(phi.v[out.psi_lambda[mu]])));
    }
    out.validated = phi.validated;
    return out;
  }

  RmsMorphism canonical_normalized_form(RmsMorphism const& phi,
                                        Rms const&         s,
                                        Rms const&         t) {
    Cell const cs = s.normal_cell();
    Cell const ct = t.normal_cell();
    check_components(phi, s, t);
    if (phi.psi_i[cs.i] != ct.i || phi.psi_lambda[cs.lambda] != ct.lambda) {
      throw NormalizationNotFixed(
          "psi does not fix the normalized row and column");
    }
    RmsMorphism const checked = validated(phi, s, t);
    auto const&       h       = t.group();
    Index const       u       = checked.u[0];
    for (Index x : checked.u) {
      if (x != u) {
        throw InternalError("u is not constant on a normalization-fixing "
                            "morphism");
      }
    }
    for (Index x : checked.v) {
      if (x != h.inverse(u)) {
        throw InternalError("v is not u^-1 on a normalization-fixing "
                            "morphism");
      }
    }
    RmsMorphism out = checked;
    out.theta = compose(checked.theta, inner_automorphism(t.group_ptr(), u));
    out.u.assign(out.u.size(), h.identity());
    out.v.assign(out.v.size(), h.identity());
    out = validated(std::move(out), s, t);
    if (!equal(out, checked)) {
      throw InternalError("canonical form differs from the input");
    }
    return out;
  }

  std::vector<RmsMorphism> enumerate_rms_morphisms(Rms const& s,
                                                   Rms const& t,
                                                   bool       bijective_only) {
    std::vector<RmsMorphism> out;
    if (bijective_only
        && (s.group().size() != t.group().size() || s.i_size() != t.i_size()
            || s.lambda_size() != t.lambda_size())) {
      return out;
    }
    auto const cell = s.find_normal_cell();
    if (!cell) {
      auto n = normalize(s, 0, 0);
      for (auto const& phi : enumerate_rms_morphisms(n.semigroup, t,
                                                     bijective_only)) {
        out.push_back(compose(n.iso, phi));
      }
      std::sort(out.begin(), out.end(), less);
      return out;
    }
    auto const& h      = t.group();
    auto const  thetas = enumerate_group_morphisms(
        s.group_ptr(), t.group_ptr(), bijective_only);
    auto const psis_i = all_maps(s.i_size(), t.i_size(), bijective_only);
    auto const psis_l
        = all_maps(s.lambda_size(), t.lambda_size(), bijective_only);
    for (auto const& pi : psis_i) {
      for (auto const& pl : psis_l) {
        Index const j0 = pi[cell->i];
        Index const m0 = pl[cell->lambda];
        RmsMorphism phi;
        phi.psi_i      = pi;
        phi.psi_lambda = pl;
        for (Index i = 0; i < s.i_size(); ++i) {
          phi.u.push_back(h.product(h.inverse(t.entry(m0, pi[i])),
                                    t.entry(m0, j0)));
        }
        for (Index lambda = 0; lambda < s.lambda_size(); ++lambda) {
          phi.v.push_back(h.inverse(t.entry(pl[lambda], j0)));
        }
        for (auto const& theta : thetas) {
          phi.theta = theta;
          if (check_equation(phi, s, t)) {
            out.push_back(phi);
            out.back().validated = true;
          }
        }
      }
    }
    std::sort(out.begin(), out.end(), less);
    return out;
  }

  IdempotentRestriction restrict_to_idempotent_generated(RmsMorphism const& phi,
                                                         Rms const&         s,
                                                         Rms const&         t) {
    s.normal_cell();
    t.normal_cell();
    RmsMorphism const checked = validated(phi, s, t);
    auto const&       h       = t.group();
    ElementSet const  gp      = entry_group_data(s).generated;
    ElementSet const  hq      = entry_group_data(t).generated;
    std::vector<bool> in_hq(h.size(), false);
    for (Index x : hq) {
      in_hq[x] = true;
    }

    std::optional<RmsMorphism> rep;
    for (Index w = 0; w < h.size() && !rep; ++w) {
      RmsMorphism cand = checked;
      cand.theta = compose(checked.theta, inner_automorphism(t.group_ptr(), w));
      for (Index& x : cand.u) {
        x = h.product(x, h.inverse(w));
      }
      for (Index& x : cand.v) {
        x = h.product(w, x);
      }
      bool ok = std::all_of(cand.u.begin(), cand.u.end(),
                            [&](Index x) { return in_hq[x]; })
                && std::all_of(cand.v.begin(), cand.v.end(),
                               [&](Index x) { return in_hq[x]; })
                && std::all_of(gp.begin(), gp.end(), [&](Index g) {
                     return in_hq[cand.theta(g)];
                   });
      if (ok) {
        rep = std::move(cand);
      }
    }
    if (!rep) {
      throw InternalError("no representative with coefficients in <H^Q>");
    }
    *rep = validated(std::move(*rep), s, t);
    if (!equal(*rep, checked)) {
      throw InternalError("representative differs from the input");
    }

    Rms         source = idempotent_generated(s);
    Rms         target = idempotent_generated(t);
    auto const& gs     = source.group();
    auto const& gt     = target.group();
    RmsMorphism r;
    r.theta.source = source.group_ptr();
    r.theta.target = target.group_ptr();
    for (Index k = 0; k < gs.size(); ++k) {
      Index g = s.group().index_of(gs.label(k));
      r.theta.map.push_back(gt.index_of(h.label(rep->theta(g))));
    }
    r.psi_i      = rep->psi_i;
    r.psi_lambda = rep->psi_lambda;
    for (Index x : rep->u) {
      r.u.push_back(gt.index_of(h.label(x)));
    }
    for (Index x : rep->v) {
      r.v.push_back(gt.index_of(h.label(x)));
    }
    r = validated(std::move(r), source, target);
    return {std::move(*rep), std::move(r), std::move(source), std::move(target)};
  }

}  // namespace cssemi
