#include "doctest.h"

#include "cssemi/catalog.hpp"
#include "cssemi/rees.hpp"
#include "cssemi/rms_morphism.hpp"
#include "oracles.hpp"

using namespace cssemi;

namespace {
  RmsMorphism quadruple(Rms const& s,
                        Rms const& t,
                        Index      u,
                        Index      v) {
    RmsMorphism phi;
    phi.theta      = identity_morphism(s.group_ptr());
    phi.theta.target = t.group_ptr();
    phi.psi_i.resize(s.i_size());
    phi.psi_lambda.resize(s.lambda_size());
    for (Index k = 0; k < s.i_size(); ++k) {
      phi.psi_i[k] = k;
    }
    for (Index k = 0; k < s.lambda_size(); ++k) {
      phi.psi_lambda[k] = k;
    }
    phi.u.assign(s.i_size(), u);
    phi.v.assign(s.lambda_size(), v);
    return phi;
  }

  // The element map preserves every product.
  bool is_morphism(RmsMorphism const& phi, Rms const& s, Rms const& t) {
    for (Index x = 0; x < s.size(); ++x) {
      for (Index y = 0; y < s.size(); ++y) {
        auto const xy = oracle::rees_product(s, s.element(x), s.element(y));
        if (apply(phi, xy)
            != oracle::rees_product(
                t, apply(phi, s.element(x)), apply(phi, s.element(y)))) {
          return false;
        }
      }
    }
    return true;
  }
}  // namespace

TEST_CASE("validation") {
  auto s2 = catalog::s2();
  CHECK(validate(identity_rms_morphism(s2), s2, s2));

  auto t  = catalog::trivial_rms(catalog::cyclic_group(2, {"e", "a"}), 2, 2);
  auto aa = quadruple(t, t, 1, 1);
  // v e u = a a = e in Z2
  CHECK(validate(aa, t, t));
  auto const checked = validated(aa, t, t);
  CHECK(element_map(checked, t, t) == element_map(identity_rms_morphism(t), t, t));

  auto swap     = quadruple(s2, s2, 0, 0);
  swap.psi_i    = {1, 0};
  auto const r  = validate(swap, s2, s2);
  CHECK_FALSE(r.ok);
  REQUIRE(r.failing);
  Cell const c = *r.failing;
  CHECK(s2.entry(c.lambda, c.i) != s2.entry(c.lambda, swap.psi_i[c.i]));
  CHECK_THROWS_AS(validated(swap, s2, s2), NotValidated);

  auto bad = quadruple(s2, s2, 0, 0);
  bad.u.pop_back();
  CHECK_THROWS_AS(validate(bad, s2, s2), ComponentMismatch);
}

TEST_CASE("apply") {
  auto s2 = catalog::s2();
  auto id = identity_rms_morphism(s2);
  auto x  = s2.parse_element("1:e:1");
  CHECK(apply(id, x) == x);
  auto t  = catalog::trivial_rms(catalog::cyclic_group(2, {"e", "a"}), 2, 2);
  auto aa = validated(quadruple(t, t, 1, 1), t, t);
  for (auto g : {"e", "a"}) {
    auto y = t.parse_element(std::string("1:") + g + ":1");
    CHECK(apply(aa, y) == y);
  }
  CHECK_THROWS_AS(apply(quadruple(t, t, 1, 1), x), NotValidated);
  for (auto const& s : {catalog::s2(), catalog::s3()}) {
    for (auto const& phi : enumerate_rms_morphisms(s, s, false)) {
      CHECK(is_morphism(phi, s, s));
    }
  }
}

TEST_CASE("equality of quadruples") {
  auto t  = catalog::trivial_rms(catalog::cyclic_group(2, {"e", "a"}), 2, 2);
  auto id = identity_rms_morphism(t);
  CHECK(equal(id, id));
  auto s2 = catalog::s2();
  auto phi = enumerate_rms_morphisms(s2, s2, true).back();
  // u x, x^-1 v over the abelian Z2 with x = a
  auto shifted = phi;
  for (auto& u : shifted.u) {
    u = s2.group().product(u, 1);
  }
  for (auto& v : shifted.v) {
    v = s2.group().product(1, v);
  }
  CHECK(equal(phi, shifted));
  auto moved     = identity_rms_morphism(t);
  moved.psi_i[0] = 1;
  CHECK_FALSE(equal(id, moved));
}

TEST_CASE("composition and inverse") {
  auto s4   = catalog::s4();
  auto auts = enumerate_rms_morphisms(s4, s4, true);
  REQUIRE(auts.size() >= 2);
  for (std::size_t k = 0; k < auts.size(); k += 7) {
    auto const& a = auts[k];
    auto const& b = auts[(k * 5 + 3) % auts.size()];
    auto ab       = compose(a, b);
    CHECK(validate(ab, s4, s4));
    auto ma = element_map(a, s4, s4), mb = element_map(b, s4, s4);
    auto mab = element_map(validated(ab, s4, s4), s4, s4);
    for (Index x = 0; x < s4.size(); ++x) {
      CHECK(mab[x] == mb[ma[x]]);
    }
    auto inv = validated(inverse(a), s4, s4);
    CHECK(equal(compose(a, inv), identity_rms_morphism(s4)));
  }
}

TEST_CASE("canonical normalized form") {
  auto s2 = catalog::s2();
  auto id = identity_rms_morphism(s2);
  CHECK(equal(canonical_normalized_form(id, s2, s2), id));

  auto t = catalog::trivial_rms(catalog::cyclic_group(2, {"e", "a"}), 2, 2);
  t.mark_normalized({0, 0});
  auto aa = validated(quadruple(t, t, 1, 1), t, t);
  auto c  = canonical_normalized_form(aa, t, t);
  CHECK(c.u == std::vector<Index>{0, 0});
  CHECK(c.v == std::vector<Index>{0, 0});
  CHECK(equal(c, identity_rms_morphism(t)));

  auto s4 = catalog::s4();
  for (auto const& phi : enumerate_rms_morphisms(s4, s4, true)) {
    if (phi.psi_i[0] != 0 || phi.psi_lambda[0] != 0) {
      CHECK_THROWS_AS(canonical_normalized_form(phi, s4, s4),
                      NormalizationNotFixed);
      continue;
    }
    auto f = canonical_normalized_form(phi, s4, s4);
    for (Index x : f.u) {
      CHECK(x == 0);
    }
    for (Index x : f.v) {
      CHECK(x == 0);
    }
    CHECK(validate(f, s4, s4));
    CHECK(equal(f, phi));
  }
}

TEST_CASE("morphism enumeration against the table oracle") {
  auto b = catalog::trivial_rms(catalog::trivial_group(), 2, 2);
  CHECK(enumerate_rms_morphisms(b, b, true).size() == 4);
  CHECK(oracle::isomorphisms(oracle::table(to_table(b)),
                             oracle::table(to_table(b)))
            .size()
        == 4);
  CHECK(enumerate_rms_morphisms(catalog::s2(), catalog::s3(), true)
            .empty());
  auto s2 = catalog::s2();
  auto t2 = to_table(s2);
  CHECK(enumerate_rms_morphisms(s2, s2, true).size()
        == enumerate_isomorphisms(t2, t2).size());
  CHECK(enumerate_rms_morphisms(s2, s2, true).size()
        == oracle::isomorphisms(oracle::table(t2), oracle::table(t2)).size());

  // every morphism between small instances, as element maps
  std::vector<Rms> corpus{catalog::s2(), b,
                          catalog::trivial_rms(catalog::cyclic_group(2), 2, 2),
                          catalog::trivial_rms(catalog::cyclic_group(3), 1, 1)};
  for (auto const& s : corpus) {
    for (auto const& t : corpus) {
      std::vector<ElementMap> maps;
      for (auto const& phi : enumerate_rms_morphisms(s, t, false)) {
        maps.push_back(element_map(phi, s, t));
      }
      std::sort(maps.begin(), maps.end());
      CHECK(std::adjacent_find(maps.begin(), maps.end()) == maps.end());
      CHECK(maps.size()
            == oracle::count_homomorphisms(oracle::table(to_table(s)),
                                           oracle::table(to_table(t))));
    }
  }
}

TEST_CASE("restriction to the idempotent-generated part") {
  auto s2 = catalog::s2();
  for (auto const& phi : enumerate_rms_morphisms(s2, s2, true)) {
    auto r = restrict_to_idempotent_generated(phi, s2, s2);
    CHECK(equal(r.representative, phi));
    CHECK(validate(r.restricted, r.source, r.target));
  }
  auto id = identity_rms_morphism(s2);
  auto ri = restrict_to_idempotent_generated(id, s2, s2);
  CHECK(element_map(ri.restricted, ri.source, ri.target)
        == element_map(identity_rms_morphism(ri.source), ri.source, ri.source));

  auto z4 = catalog::cyclic_group(4);
  Rms  s(z4, {{0, 0}, {0, 2}});
  for (auto const& phi : enumerate_rms_morphisms(s, s, false)) {
    auto r = restrict_to_idempotent_generated(phi, s, s);
    CHECK(r.source.group().size() == 2);
    CHECK(validate(r.restricted, r.source, r.target));
    CHECK(is_morphism(r.restricted, r.source, r.target));
  }
}
