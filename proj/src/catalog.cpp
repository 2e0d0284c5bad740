#include "cssemi/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace cssemi::catalog {

  namespace {
    GroupPtr from_product(std::vector<std::string>                labels,
                          std::function<Index(Index, Index)> const& mul) {
      std::size_t const               n = labels.size();
      std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
      for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
          table[a][b] = mul(a, b);
        }
      }
      return FiniteGroup::make(std::move(labels), table);
    }

    FiniteSemigroup semigroup_from_product(
        std::vector<std::string>                  labels,
        std::function<Index(Index, Index)> const& mul) {
      std::size_t const               n = labels.size();
      std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
      for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
          table[a][b] = mul(a, b);
        }
      }
      return FiniteSemigroup(std::move(labels), table);
    }

    // D4 as r^k s^j, stored as 4 * j + k.
    GroupPtr dihedral8() {
      std::vector<std::string> labels{"e", "r", "r2", "r3", "s", "rs", "r2s",
                                      "r3s"};
      return from_product(labels, [](Index x, Index y) {
        Index a = x % 4, b = x / 4, c = y % 4, d = y / 4;
        Index k = b == 0 ? (a + c) % 4 : (a + 4 - c) % 4;
        return static_cast<Index>(4 * ((b + d) % 2) + k);
      });
    }

    // Q8 as sign * unit with units 1, i, j, k; index 2 * unit + (sign < 0).
    GroupPtr quaternion8() {
      std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k",
                                      "-k"};
      // unit product table and signs for 1, i, j, k
      static constexpr Index unit[4][4]
          = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
      static constexpr int sign[4][4] = {
          {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
      return from_product(labels, [](Index x, Index y) {
        Index ux = x / 2, uy = y / 2;
        int   s  = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1) * sign[ux][uy];
        return static_cast<Index>(2 * unit[ux][uy] + (s < 0 ? 1 : 0));
      });
    }
  }  // namespace

  GroupPtr cyclic_group(std::size_t n, std::vector<std::string> labels) {
    if (labels.empty()) {
      for (std::size_t k = 0; k < n; ++k) {
        labels.push_back(std::to_string(k));
      }
    }
    return from_product(std::move(labels), [n](Index a, Index b) {
      return static_cast<Index>((a + b) % n);
    });
  }

  GroupPtr trivial_group() {
    return cyclic_group(1, {"e"});
  }

  GroupPtr direct_product(GroupPtr const& g, GroupPtr const& h) {
    std::vector<std::string> labels;
    for (Index a = 0; a < g->size(); ++a) {
      for (Index b = 0; b < h->size(); ++b) {
        labels.push_back("(" + g->label(a) + "," + h->label(b) + ")");
      }
    }
    std::size_t const m = h->size();
    return from_product(std::move(labels), [&](Index x, Index y) {
      return static_cast<Index>(g->product(x / m, y / m) * m
                                + h->product(x % m, y % m));
    });
  }

  GroupPtr symmetric_group3() {
    std::vector<std::vector<Index>> perms;
    std::vector<Index>              p{0, 1, 2};
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto label = [](std::vector<Index> const& q) {
      std::string       out;
      std::vector<bool> seen(3, false);
      for (Index x = 0; x < 3; ++x) {
        if (seen[x] || q[x] == x) {
          continue;
        }
        out += "(";
        for (Index y = x; !seen[y]; y = q[y]) {
          seen[y] = true;
          out += std::to_string(y + 1);
        }
        out += ")";
      }
      return out.empty() ? std::string("()") : out;
    };
    std::vector<std::string> labels;
    for (auto const& q : perms) {
      labels.push_back(label(q));
    }
    return from_product(std::move(labels), [&](Index a, Index b) {
      // x(ab) = (xa)b
      std::vector<Index> c(3);
      for (Index x = 0; x < 3; ++x) {
        c[x] = perms[b][perms[a][x]];
      }
      return static_cast<Index>(
          std::find(perms.begin(), perms.end(), c) - perms.begin());
    });
  }

  std::vector<std::pair<std::string, GroupPtr>> small_groups(std::size_t n) {
    std::vector<std::pair<std::string, GroupPtr>> out;
    auto add = [&](std::size_t order, std::string name, auto make) {
      if (order <= n) {
        out.emplace_back(std::move(name), make());
      }
    };
    add(1, "Z1", [] { return cyclic_group(1); });
    add(2, "Z2", [] { return cyclic_group(2); });
    add(3, "Z3", [] { return cyclic_group(3); });
    add(4, "Z4", [] { return cyclic_group(4); });
    add(4, "Z2xZ2", [] {
      return direct_product(cyclic_group(2), cyclic_group(2));
    });
    add(5, "Z5", [] { return cyclic_group(5); });
    add(6, "Z6", [] { return cyclic_group(6); });
    add(6, "Sym3", [] { return symmetric_group3(); });
    add(7, "Z7", [] { return cyclic_group(7); });
    add(8, "Z8", [] { return cyclic_group(8); });
    add(8, "Z2xZ4", [] {
      return direct_product(cyclic_group(2), cyclic_group(4));
    });
    add(8, "Z2xZ2xZ2", [] {
      return direct_product(cyclic_group(2),
                            direct_product(cyclic_group(2), cyclic_group(2)));
    });
    add(8, "D4", [] { return dihedral8(); });
    add(8, "Q8", [] { return quaternion8(); });
    return out;
  }

  FiniteSemigroup rectangular_band(std::size_t rows, std::size_t cols) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= rows; ++i) {
      for (std::size_t j = 1; j <= cols; ++j) {
        labels.push_back("(" + std::to_string(i) + "," + std::to_string(j)
                         + ")");
      }
    }
    return semigroup_from_product(std::move(labels), [cols](Index x, Index y) {
      return static_cast<Index>((x / cols) * cols + y % cols);
    });
  }

  FiniteSemigroup left_zero(std::size_t n) {
    return rectangular_band(n, 1);
  }

  FiniteSemigroup right_zero(std::size_t n) {
    return rectangular_band(1, n);
  }

  FiniteSemigroup monogenic(std::size_t index, std::size_t period) {
    std::size_t const        n = index + period - 1;
    std::vector<std::string> labels{"a"};
    for (std::size_t k = 2; k <= n; ++k) {
      labels.push_back("a^" + std::to_string(k));
    }
    // a^p a^q = a^(p+q) reduced into [index, index + period).
    return semigroup_from_product(std::move(labels), [=](Index x, Index y) {
      std::size_t e = (x + 1) + (y + 1);
      if (e > n) {
        e = index + (e - index) % period;
      }
      return static_cast<Index>(e - 1);
    });
  }

  Rms trivial_rms(GroupPtr const& g, std::size_t i_size, std::size_t l_size) {
    return Rms(g,
               std::vector<std::vector<Index>>(
                   l_size, std::vector<Index>(i_size, g->identity())));
  }

  Rms s2() {
    auto g = cyclic_group(2, {"e", "a"});
    return Rms(g, {{0, 0}, {0, 1}});
  }

  Rms s3() {
    auto g = cyclic_group(3, {"e", "a", "b"});
    return Rms(g, {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}});
  }

  Rms s4() {
    auto g = cyclic_group(2, {"e", "a"});
    return Rms(g, {{0, 0, 0, 0}, {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}});
  }

}  // namespace cssemi::catalog
