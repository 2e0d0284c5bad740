#include "doctest.h"

#include "cssemi/catalog.hpp"
#include "cssemi/fraisse.hpp"
#include "cssemi/homogeneity.hpp"
#include "oracles.hpp"

using namespace cssemi;

namespace {
  AgeSample rectangular_bands(std::size_t max_size) {
    AgeSample out{max_size, {}};
    for (std::size_t a = 1; a <= max_size; ++a) {
      for (std::size_t b = 1; a * b <= max_size; ++b) {
        out.members.push_back(catalog::rectangular_band(a, b));
      }
    }
    out.members = iso_class_representatives(out.members);
    return out;
  }

  GroupPtr z2() {
    return catalog::cyclic_group(2, {"e", "a"});
  }
}  // namespace

TEST_CASE("ages") {
  auto a = age(catalog::rectangular_band(2, 2), 4);
  REQUIRE(a.members.size() == 4);
  CHECK(a.members[0].size() == 1);
  CHECK(a.members[3].size() == 4);
  // left zero and right zero of order 2 are both present
  bool lz = false, rz = false;
  for (auto const& m : a.members) {
    lz = lz || are_isomorphic(m, catalog::left_zero(2));
    rz = rz || are_isomorphic(m, catalog::right_zero(2));
  }
  CHECK(lz);
  CHECK(rz);
  for (std::size_t x = 0; x < a.members.size(); ++x) {
    for (std::size_t y = x + 1; y < a.members.size(); ++y) {
      CHECK(oracle::isomorphisms(oracle::table(a.members[x]),
                                 oracle::table(a.members[y]))
                .empty());
    }
  }
  CHECK(age(as_semigroup(*catalog::cyclic_group(3)), 3).members.size() == 2);
  CHECK(age(as_semigroup(*catalog::trivial_group()), 1).members.size() == 1);
}

TEST_CASE("hereditary property") {
  CHECK(check_hp(age(catalog::rectangular_band(2, 2), 4).members).holds);
  // a class containing a 2x2 band but not the trivial band fails
  std::vector<FiniteSemigroup> k{catalog::rectangular_band(2, 2)};
  CHECK_FALSE(check_hp(k).holds);
}

TEST_CASE("joint embedding") {
  auto a = age(catalog::rectangular_band(2, 2), 4);
  CHECK(check_jep(a.members, a).holds);

  auto g2 = as_semigroup(*catalog::cyclic_group(2));
  auto g3 = as_semigroup(*catalog::cyclic_group(3));
  AgeSample within{3, iso_class_representatives({as_semigroup(*catalog::trivial_group()), g2, g3})};
  auto r = check_jep({g2, g3}, within);
  CHECK_FALSE(r.holds);
  CHECK(check_jep({g2}, AgeSample{2, {g2}}).holds);
}

TEST_CASE("amalgamation of rectangular bands") {
  // sides at most 2, witnesses among sides at most 4
  AgeSample k{4, {}}, within{16, {}};
  for (std::size_t a = 1; a <= 4; ++a) {
    for (std::size_t b = 1; b <= 4; ++b) {
      if (a <= 2 && b <= 2) {
        k.members.push_back(catalog::rectangular_band(a, b));
      }
      within.members.push_back(catalog::rectangular_band(a, b));
    }
  }
  auto ams = all_amalgams(k.members);
  auto r   = check_ap(ams, within);
  CHECK(r.holds);
  CHECK(r.witnesses.size() == ams.size());
  for (std::size_t n = 0; n < r.witnesses.size(); n += 7) {
    auto const& w = r.witnesses[n];
    auto const& a = ams[w.amalgam];
    auto const& d = within.members[w.d];
    CHECK(oracle::preserves(oracle::table(a.b1), oracle::table(d), w.g1));
    CHECK(oracle::preserves(oracle::table(a.b2), oracle::table(d), w.g2));
    for (Index x = 0; x < a.core.size(); ++x) {
      CHECK(w.g1[a.f1[x]] == w.g2[a.f2[x]]);
    }
  }
}

TEST_CASE("amalgams of bands need the sum of the sides") {
  // a 1x4 and a 4x1 band over a point only meet in a 4x4 band, so a bound
  // on the number of elements of the witnesses must grow quadratically
  auto const point = catalog::rectangular_band(1, 1);
  Amalgam    a{point, catalog::rectangular_band(1, 4),
            catalog::rectangular_band(4, 1), {0}, {0}};
  CHECK_FALSE(check_ap({a}, rectangular_bands(15)).holds);
  AgeSample square{16, {catalog::rectangular_band(4, 4)}};
  CHECK(check_ap({a}, square).holds);
}

TEST_CASE("amalgamation of groups") {
  auto z4  = as_semigroup(*catalog::cyclic_group(4));
  auto z2s = as_semigroup(*catalog::cyclic_group(2));
  // Z2 sits in Z4 as {0, 2}
  Amalgam a{z2s, z4, z4, {0, 2}, {0, 2}};
  check_amalgam(a);
  AgeSample within{4, {as_semigroup(*catalog::trivial_group()), z2s, z4}};
  auto r = check_ap({a}, within);
  CHECK(r.holds);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(within.members[r.witnesses[0].d].size() == 4);

  auto t = as_semigroup(*catalog::trivial_group());
  CHECK(check_ap({Amalgam{t, t, t, {0}, {0}}}, AgeSample{1, {t}}).holds);
  CHECK_THROWS_AS(check_amalgam(Amalgam{z2s, z4, z4, {0, 1}, {0, 2}}),
                  InvalidAmalgam);
}

TEST_CASE("CS(G;H) amalgams") {
  auto one = catalog::trivial_group();
  Rms  core(one, {{0}});
  Rms  w1(one, {{0, 0}});
  Rms  w2(one, {{0}, {0}});
  auto r = amalgamate_cs(core, w1, w2, one, {0}, 1);
  CHECK(r.t.i_size() == 2);
  CHECK(r.t.lambda_size() == 2);
  CHECK(r.t.matrix() == std::vector<std::vector<Index>>{{0, 0}, {0, 0}});

  // two copies of S2 sharing only the normalized cell
  auto g  = z2();
  Rms  c(g, {{0}});
  Rms  s2a(g, {{0, 0}, {0, 1}}, {"1", "2"}, {"1", "2"});
  Rms  s2b(g, {{0, 0}, {0, 1}}, {"1", "3"}, {"1", "3"});
  auto a = amalgamate_cs(c, s2a, s2b, g, {0, 1}, 2);
  CHECK(a.t.i_size() == 3);
  CHECK(a.t.lambda_size() == 3);
  CHECK(validate(a.g1, s2a, a.t));
  CHECK(validate(a.g2, s2b, a.t));
  CHECK(a.entries_in_age_h);
  // Q agrees with the wings and is e elsewhere
  auto const& k = *a.k;
  CHECK(k.label(a.t.entry(a.t.lambda_index("2"), a.t.i_index("2"))) == "a");
  CHECK(k.label(a.t.entry(a.t.lambda_index("3"), a.t.i_index("3"))) == "a");
  CHECK(a.t.entry(a.t.lambda_index("2"), a.t.i_index("3")) == k.identity());
  CHECK(a.t.entry(a.t.lambda_index("3"), a.t.i_index("2")) == k.identity());
  for (Index x = 0; x < c.size(); ++x) {
    auto e = c.element(x);
    RmsElement in1{s2a.i_index("1"), e.g, s2a.lambda_index("1")};
    RmsElement in2{s2b.i_index("1"), e.g, s2b.lambda_index("1")};
    CHECK(apply(a.g1, in1) == apply(a.g2, in2));
  }

  // the wings disagree with the core at (2, 2)
  Rms flat(g, {{0, 0}, {0, 0}});
  Rms twisted(g, {{0, 0}, {0, 1}});
  CHECK_THROWS_AS(amalgamate_cs(flat, twisted, twisted, g, {0, 1}, 2),
                  CoreMismatch);
  CHECK_THROWS_AS(amalgamate_cs(c, s2a, s2a, g, {0, 1}, 2), CoreMismatch);
}

TEST_CASE("generic growth") {
  auto g = z2();
  auto trivial = grow_generic_rms(g, {0}, 3);
  CHECK(entry_group_data(trivial).entries == ElementSet{0});

  auto s = grow_generic_rms(g, {0, 1}, 1);
  CHECK(entry_group_data(s).entries == ElementSet{0, 1});
  CHECK(screen_necessary(s).pass());
  CHECK(rms_defects(s, {0, 1}, 1, std::make_pair(1, 1)).empty());

  auto s2 = grow_generic_rms(g, {0, 1}, 2);
  CHECK(rms_defects(s2, {0, 1}, 2, std::make_pair(1, 1)).empty());
  CHECK(screen_necessary(s2).pass());

  // a seed that already satisfies the condition comes back unchanged
  auto again = grow_generic_rms(g, {0, 1}, 1, catalog::s4());
  CHECK(again == catalog::s4());

  // seeds are extended, never rewritten
  auto grown = grow_generic_rms(g, {0, 1}, 2, s2);
  for (Index l = 0; l < s2.lambda_size(); ++l) {
    for (Index i = 0; i < s2.i_size(); ++i) {
      CHECK(grown.entry(l, i) == s2.entry(l, i));
    }
  }
  CHECK(rms_defects(grown, {0, 1}, 2,
                    std::make_pair(s2.lambda_size() - 1, s2.i_size() - 1))
            .empty());

  auto z4 = catalog::cyclic_group(4);
  CHECK_THROWS_AS(grow_generic_rms(z4, {0, 1}, 1), NotASubgroup);
  CHECK_THROWS_AS(grow_generic_rms(z4, {0, 2}, 1,
                                   Rms(z4, {{0, 0}, {0, 1}})),
                  InvalidSeed);
}
