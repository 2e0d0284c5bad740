#include "cssemi/homogeneity.hpp"

#include <algorithm>
#include <sstream>

namespace cssemi {

  namespace {
    std::string set_string(FiniteGroup const& g, ElementSet const& xs) {
      std::string out = "{";
      for (std::size_t k = 0; k < xs.size(); ++k) {
        out += (k ? "," : "") + g.label(xs[k]);
      }
      return out + "}";
    }

    // The entries of P off row c.lambda and column c.i, as rows.
    std::vector<std::vector<Index>> reduced_matrix(Rms const& s, Cell c) {
      std::vector<std::vector<Index>> out;
      for (Index lambda = 0; lambda < s.lambda_size(); ++lambda) {
        if (lambda == c.lambda) {
          continue;
        }
        out.emplace_back();
        for (Index i = 0; i < s.i_size(); ++i) {
          if (i != c.i) {
            out.back().push_back(s.entry(lambda, i));
          }
        }
      }
      return out;
    }

    // Every row and column of m contains x exactly once.
    bool once_per_line(std::vector<std::vector<Index>> const& m, Index x) {
      std::size_t const n = m.size();
      for (std::size_t r = 0; r < n; ++r) {
        if (m[r].size() != n
            || std::count(m[r].begin(), m[r].end(), x) != 1) {
          return false;
        }
      }
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t count = 0;
        for (std::size_t r = 0; r < n; ++r) {
          count += m[r][c] == x;
        }
        if (count != 1) {
          return false;
        }
      }
      return true;
    }

    // The case (2, 3 or 4) whose pattern s matches at normalization cell c,
    // or 0.
    int match_case(Rms const& s, Cell c) {
      auto const& g  = s.group();
      auto const  gp = entry_group_data(s).entries;
      auto const  pp = reduced_matrix(s, c);
      Index const e  = g.identity();
      std::size_t const n = s.i_size();
      if (n != s.lambda_size()) {
        return 0;
      }
      if (n == 2 && gp.size() == 2) {
        Index a = gp[0] == e ? gp[1] : gp[0];
        if (g.order(a) == 2 && pp[0][0] == a) {
          return 2;
        }
      }
      if (n == 3 && gp.size() == 3) {
        Index a = gp[0] == e ? gp[1] : gp[0];
        if (g.order(a) == 3
            && std::find(gp.begin(), gp.end(), g.inverse(a)) != gp.end()) {
          bool off_identity = true;
          for (auto const& row : pp) {
            for (Index x : row) {
              off_identity = off_identity && x != e;
            }
          }
          if (off_identity && once_per_line(pp, a)) {
            return 3;
          }
        }
      }
      if (n == 4 && gp.size() == 2) {
        Index a = gp[0] == e ? gp[1] : gp[0];
        if (g.order(a) == 2 && once_per_line(pp, e)) {
          return 4;
        }
      }
      return 0;
    }
  }  // namespace

  ScreenResult screen_necessary(Rms const& s, SearchOptions const& opts) {
    Cell const  c  = s.normal_cell();
    auto const& g  = s.group();
    auto const  ed = entry_group_data(s);
    ScreenResult out;
    bool const  closed = is_subgroup(g, ed.entries);
    if (!closed) {
      std::string msg = "G^P = " + set_string(g, ed.entries) + " is not closed";
      auto outside = [&](Index z) {
        return !std::binary_search(ed.entries.begin(), ed.entries.end(), z);
      };
      for (Index x : ed.entries) {
        auto y = std::find_if(ed.entries.begin(), ed.entries.end(),
                              [&](Index y) { return outside(g.product(x, y)); });
        if (y != ed.entries.end()) {
          msg += ": " + g.label(x) + " " + g.label(*y) + " = "
                 + g.label(g.product(x, *y));
          break;
        }
      }
      out.violations.push_back({ScreenViolation::Kind::NotClosed, 0, msg});
    }
    for (Index i = 0; i < s.i_size(); ++i) {
      if (i != c.i && ed.columns[i] != ed.entries) {
        out.violations.push_back(
            {ScreenViolation::Kind::Column,
             i,
             "C(" + s.i_labels()[i] + ") = " + set_string(g, ed.columns[i])
                 + " != G^P = " + set_string(g, ed.entries)});
      }
    }
    for (Index lambda = 0; lambda < s.lambda_size(); ++lambda) {
      if (lambda != c.lambda && ed.rows[lambda] != ed.entries) {
        out.violations.push_back(
            {ScreenViolation::Kind::Row,
             lambda,
             "R(" + s.lambda_labels()[lambda]
                 + ") = " + set_string(g, ed.rows[lambda])
                 + " != G^P = " + set_string(g, ed.entries)});
      }
    }
    opts.check_deadline();
    if (closed) {
      auto ch = is_characteristic(s.group_ptr(), ed.entries);
      if (!ch) {
        out.violations.push_back({ScreenViolation::Kind::NotCharacteristic,
                                  0,
                                  "G^P = " + set_string(g, ed.entries)
                                      + " is not characteristic"});
      }
    }
    return out;
  }

  std::string to_string(Reason r) {
    switch (r) {
      case Reason::FailedScreen:
        return "FailedScreen";
      case Reason::GroupNotHomogeneous:
        return "GroupNotHomogeneous";
      case Reason::GPNotCharacteristic:
        return "GPNotCharacteristic";
      case Reason::PatternMismatch:
        return "PatternMismatch";
    }
    return "PatternMismatch";
  }

  std::string ClassificationOutcome::verdict() const {
    if (homogeneous) {
      return "Homogeneous(case " + std::to_string(case_number) + ")";
    }
    return "NotHomogeneous(" + to_string(reason.value_or(Reason::PatternMismatch))
           + ")";
  }

  ClassificationOutcome classify_homogeneous(Rms const&           s,
                                             SearchOptions const& opts) {
    ClassificationOutcome out;
    std::optional<Rms>    normalized;
    Cell                  c{0, 0};
    if (auto nc = s.find_normal_cell()) {
      c = *nc;
    } else {
      normalized = normalize(s, 0, 0).semigroup;
    }
    Rms const&  n = normalized ? *normalized : s;
    auto const& g = n.group();
    auto set_cell = [&](Cell x) {
      out.normalization        = x;
      out.normalization_i      = n.i_labels()[x.i];
      out.normalization_lambda = n.lambda_labels()[x.lambda];
    };
    set_cell(c);

    auto const ed = entry_group_data(n);
    for (Index x : ed.entries) {
      out.gp.push_back(g.label(x));
    }
    out.pattern = classify_pattern(from_matrix(n, c));

    auto fail = [&](Reason r, std::string detail) {
      out.homogeneous = false;
      out.reason      = r;
      out.detail      = std::move(detail);
      return out;
    };

    if (ed.entries.size() == 1) {
      out.characteristic = true;
      if (!is_homogeneous_group(g, opts)) {
        return fail(Reason::GroupNotHomogeneous, "G is not homogeneous");
      }
      out.homogeneous = true;
      out.case_number = 1;
      out.detail      = "orthodox: normalized matrix is all identity";
      return out;
    }

    auto const screen = screen_necessary(n, opts);
    for (auto const& v : screen.violations) {
      if (v.kind != ScreenViolation::Kind::NotCharacteristic) {
        return fail(Reason::FailedScreen, v.message);
      }
    }
    if (!screen.pass()) {
      return fail(Reason::GPNotCharacteristic,
                  screen.violations.front().message);
    }
    out.characteristic = true;
    if (!is_homogeneous_group(g, opts)) {
      return fail(Reason::GroupNotHomogeneous, "G is not homogeneous");
    }

    std::vector<Cell> cells{c};
    for (Index lambda = 0; lambda < n.lambda_size(); ++lambda) {
      for (Index i = 0; i < n.i_size(); ++i) {
        if (Cell{i, lambda} != c) {
          cells.push_back({i, lambda});
        }
      }
    }
    for (Cell x : cells) {
      opts.check_deadline();
      int k = x == c ? match_case(n, x)
                     : match_case(normalize(n, x.i, x.lambda).semigroup, x);
      if (k != 0) {
        set_cell(x);
        out.homogeneous = true;
        out.case_number = k;
        out.detail      = "sandwich matrix matches case " + std::to_string(k);
        return out;
      }
    }
    return fail(Reason::PatternMismatch,
                "no normalization matches a homogeneous pattern");
  }

  ClassificationOutcome classify_homogeneous(FiniteSemigroup const& s,
                                             SearchOptions const&   opts) {
    auto coords = rees_coordinatize(s);
    auto out    = classify_homogeneous(coords.semigroup, opts);
    auto e      = idempotent_at(
        coords.semigroup, out.normalization.i, out.normalization.lambda);
    Index k = coords.semigroup.index(e);
    for (Index x = 0; x < s.size(); ++x) {
      if (coords.iso[x] == k) {
        out.normalization_idempotent = s.label(x);
      }
    }
    return out;
  }

  DecompositionReport decompose_check(Rms const& s, SearchOptions const& opts) {
    s.normal_cell();
    DecompositionReport out;
    out.group_homogeneous = is_homogeneous_group(s.group(), opts);
    out.idempotent_generated_homogeneous
        = is_homogeneous(to_table(idempotent_generated(s)), opts).homogeneous;
    auto const entries = entry_group_data(s).entries;
    out.characteristic = is_subgroup(s.group(), entries)
                         && is_characteristic(s.group_ptr(), entries)
                                .characteristic;
    return out;
  }

  std::vector<SweepInstance> sweep_instances(
      std::vector<std::pair<std::string, GroupPtr>> const& groups,
      std::size_t                                          max_index) {
    std::vector<SweepInstance> out;
    for (auto const& [name, g] : groups) {
      for (std::size_t ni = 1; ni <= max_index; ++ni) {
        for (std::size_t nl = 1; nl <= max_index; ++nl) {
          std::size_t const free = (ni - 1) * (nl - 1);
          std::vector<Index> digits(free, 0);
          for (;;) {
            std::vector<std::vector<Index>> p(
                nl, std::vector<Index>(ni, g->identity()));
            for (std::size_t k = 0; k < free; ++k) {
              p[1 + k / (ni - 1)][1 + k % (ni - 1)] = digits[k];
            }
            Rms s(g, std::move(p));
            s.mark_normalized({0, 0});
            out.push_back({name, std::move(s)});
            std::size_t pos = 0;
            while (pos < free && ++digits[pos] == g->size()) {
              digits[pos++] = 0;
            }
            if (pos == free) {
              break;
            }
          }
        }
      }
    }
    return out;
  }

  std::string matrix_string(Rms const& s) {
    std::string out;
    for (Index lambda = 0; lambda < s.lambda_size(); ++lambda) {
      out += lambda ? "; " : "";
      for (Index i = 0; i < s.i_size(); ++i) {
        out += (i ? " " : "") + s.group().label(s.entry(lambda, i));
      }
    }
    return out;
  }

  SweepReport sweep(std::vector<SweepInstance> const& instances,
                    SearchOptions const&              opts) {
    SweepReport out;
    for (auto const& inst : instances) {
      ++out.instances;
      auto const& s     = inst.semigroup;
      auto const  table = to_table(s);
      bool const  brute = is_homogeneous(table, opts).homogeneous;
      auto const  cls   = classify_homogeneous(s, opts);
      bool const  dec   = decompose_check(s, opts).homogeneous();
      if (brute) {
        ++out.homogeneous;
        if (is_regular(table)) {
          ++out.regular_homogeneous;
          if (!is_completely_simple(table)) {
            ++out.regular_homogeneous_not_cs;
          }
        }
      }
      if (brute != cls.homogeneous || brute != dec) {
        std::ostringstream msg;
        msg << "M[" << inst.group << ";" << s.i_size() << ","
            << s.lambda_size() << ";" << matrix_string(s)
            << "]: brute=" << brute << " classify=" << cls.verdict()
            << " decompose=" << dec;
        out.disagreements.push_back(msg.str());
      }
    }
    return out;
  }

}  // namespace cssemi
