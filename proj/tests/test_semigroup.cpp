#include "doctest.h"

#include "cssemi/catalog.hpp"
#include "cssemi/rees.hpp"
#include "cssemi/semigroup.hpp"
#include "oracles.hpp"

using namespace cssemi;

namespace {
  FiniteSemigroup mono() {
    return catalog::monogenic(2, 2);
  }

  ElementSet labels_to_set(FiniteSemigroup const& s,
                           std::vector<std::string> const& xs) {
    ElementSet out;
    for (auto const& x : xs) {
      out.push_back(s.index_of(x));
    }
    return normalized_set(out);
  }
}  // namespace

TEST_CASE("non-associative tables are rejected") {
  // x*y = y*x = 1 except 1*1 = 0: (0*0)*1 = 1*... differs from 0*(0*1)
  CHECK_THROWS_AS(FiniteSemigroup({"p", "q"}, {{1, 0}, {0, 0}}), InvalidTable);
}

TEST_CASE("monogenic table") {
  auto s = mono();
  CHECK(s.size() == 3);
  CHECK(s.labels() == std::vector<std::string>{"a", "a^2", "a^3"});
  // a^2 a^2 = a^4 = a^2, a a^3 = a^4 = a^2, a^3 a^3 = a^6 = a^2
  CHECK(s.label(s.product(1, 1)) == "a^2");
  CHECK(s.label(s.product(0, 2)) == "a^2");
  CHECK(s.label(s.product(0, 1)) == "a^3");
}

TEST_CASE("closure") {
  auto s2 = to_table(catalog::s2());
  auto x  = s2.index_of("2:e:2");
  CHECK(closure(s2, {x}) == labels_to_set(s2, {"2:e:2", "2:a:2"}));
  auto b = catalog::rectangular_band(2, 2);
  CHECK(closure(b, labels_to_set(b, {"(1,1)", "(2,2)"})).size() == 4);
  CHECK(closure(b, {}).empty());
  CHECK_THROWS_AS(closure(b, {9}), UnknownElement);
}

TEST_CASE("idempotents") {
  auto s4 = to_table(catalog::s4());
  auto e4 = idempotent_structure(s4);
  CHECK(e4.idempotents.size() == 16);
  CHECK(e4.primitive == e4.idempotents);
  CHECK(idempotent_structure(mono()).idempotents
        == labels_to_set(mono(), {"a^2"}));
  auto z4 = as_semigroup(*catalog::cyclic_group(4));
  CHECK(idempotent_structure(z4).idempotents == ElementSet{0});
  CHECK(idempotent_structure(z4).primitive == ElementSet{0});
}

TEST_CASE("Green's relations") {
  auto g4 = green(to_table(catalog::s4()));
  CHECK(g4.r_classes.size() == 4);
  CHECK(g4.l_classes.size() == 4);
  CHECK(g4.h_classes.size() == 16);
  for (auto const& h : g4.h_classes) {
    CHECK(h.size() == 2);
  }
  auto gz = green(as_semigroup(*catalog::symmetric_group3()));
  CHECK(gz.r_classes.size() == 1);
  CHECK(gz.l_classes.size() == 1);
  CHECK(gz.h_classes.size() == 1);
  auto m = mono();
  CHECK(green(m).r_classes
        == std::vector<ElementSet>{labels_to_set(m, {"a"}),
                                   labels_to_set(m, {"a^2", "a^3"})});
}

TEST_CASE("completely simple and regular") {
  CHECK(is_completely_simple(to_table(catalog::s3())));
  CHECK_FALSE(is_completely_simple(mono()));
  CHECK(is_completely_simple(as_semigroup(*catalog::cyclic_group(4))));
  CHECK(is_regular(to_table(catalog::s2())));
  // a y a over y in {a, a^2, a^3} is a^3, a^2, a^3: never a
  auto m = mono();
  for (Index y = 0; y < 3; ++y) {
    CHECK(m.product(m.product(0, y), 0) != 0);
  }
  CHECK_FALSE(is_regular(m));
  CHECK(is_regular(catalog::rectangular_band(2, 3)));
  CHECK(is_orthodox(catalog::rectangular_band(2, 3)));
}

TEST_CASE("subsemigroups match brute force") {
  auto b = catalog::rectangular_band(2, 2);
  CHECK(oracle::count_subsemigroups(b) == 9);
  CHECK(all_subsemigroups(b).size() == 9);
  CHECK(all_subsemigroups(as_semigroup(*catalog::cyclic_group(2))).size() == 2);
  CHECK(all_subsemigroups(as_semigroup(*catalog::cyclic_group(3))).size() == 2);
  auto s2 = to_table(catalog::s2());
  CHECK(all_subsemigroups(s2).size() == oracle::count_subsemigroups(s2));
  CHECK(all_subsemigroups(mono()).size() == oracle::count_subsemigroups(mono()));
  auto b23 = catalog::rectangular_band(2, 3);
  CHECK(all_subsemigroups(b23).size() == oracle::count_subsemigroups(b23));
  SearchOptions tight;
  tight.subsemigroup_cap = 3;
  CHECK_THROWS_AS(all_subsemigroups(b, tight), CapExceeded);
}

TEST_CASE("isomorphisms match brute force") {
  auto b = catalog::rectangular_band(2, 2);
  CHECK(oracle::isomorphisms(oracle::table(b), oracle::table(b)).size() == 4);
  CHECK(enumerate_isomorphisms(b, b).size() == 4);
  CHECK(enumerate_isomorphisms(b, b)
        == oracle::isomorphisms(oracle::table(b), oracle::table(b)));
  CHECK(enumerate_isomorphisms(as_semigroup(*catalog::cyclic_group(2)),
                               as_semigroup(*catalog::cyclic_group(3)))
            .empty());
  CHECK(enumerate_isomorphisms(catalog::left_zero(2), catalog::right_zero(2))
            .empty());
  auto s2 = to_table(catalog::s2());
  CHECK(enumerate_isomorphisms(s2, s2).size()
        == oracle::isomorphisms(oracle::table(s2), oracle::table(s2)).size());
}

TEST_CASE("homomorphisms match brute force") {
  auto a = catalog::rectangular_band(1, 2);
  auto b = catalog::rectangular_band(2, 2);
  auto m = mono();
  for (auto const* x : {&a, &b, &m}) {
    for (auto const* y : {&a, &b, &m}) {
      CHECK(enumerate_homomorphisms(*x, *y).size()
            == oracle::count_homomorphisms(oracle::table(*x),
                                           oracle::table(*y)));
    }
  }
}

TEST_CASE("brute-force homogeneity") {
  auto s2 = to_table(catalog::s2());
  CHECK(is_homogeneous(s2).homogeneous);
  CHECK(oracle::homogeneous(oracle::table(s2)));
  CHECK(is_homogeneous(mono()).homogeneous);
  CHECK(oracle::homogeneous(oracle::table(mono())));

  auto g  = catalog::direct_product(catalog::cyclic_group(2),
                                   catalog::cyclic_group(4));
  auto zt = as_semigroup(*g);
  auto h  = is_homogeneous(zt);
  CHECK_FALSE(h.homogeneous);
  REQUIRE(h.counterexample);
  // some isomorphism between subgroups of order 2 fails to extend:
  // (1,0) is not a square, (0,2) is
  auto const& ce = *h.counterexample;
  CHECK(ce.domain.size() == 2);
  bool square_mismatch = false;
  for (auto [x, y] : ce.map) {
    auto is_square = [&](Index z) {
      for (Index w = 0; w < g->size(); ++w) {
        if (g->product(w, w) == z) {
          return true;
        }
      }
      return false;
    };
    square_mismatch = square_mismatch || is_square(x) != is_square(y);
  }
  CHECK(square_mismatch);

  for (auto const& [name, grp] : catalog::small_groups(6)) {
    CAPTURE(name);
    CHECK(is_homogeneous_group(*grp)
          == oracle::homogeneous(oracle::table(*grp)));
  }
  CHECK(is_homogeneous_group(*catalog::cyclic_group(4)));
  CHECK(is_homogeneous_group(*catalog::direct_product(catalog::cyclic_group(2),
                                                       catalog::cyclic_group(2))));
  CHECK_FALSE(is_homogeneous_group(*g));
}
