#include "cssemi/workspace.hpp"

#include <algorithm>
#include <sstream>

namespace cssemi {

  namespace {
    struct Line {
      std::size_t              number;
      std::vector<std::string> tokens;
    };

    std::vector<Line> tokenize(std::string_view text) {
      std::vector<Line> out;
      std::size_t       number = 0;
      std::size_t       pos    = 0;
      while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        ++number;
        std::string raw(text.substr(pos, end - pos));
        raw = raw.substr(0, raw.find('#'));
        std::istringstream       in(raw);
        std::vector<std::string> tokens;
        for (std::string t; in >> t;) {
          tokens.push_back(std::move(t));
        }
        if (!tokens.empty()) {
          out.push_back({number, std::move(tokens)});
        }
        pos = end + 1;
      }
      return out;
    }

    class Parser {
     public:
      explicit Parser(std::vector<Line> lines) : _lines(std::move(lines)) {}

      Workspace run() {
        while (_pos < _lines.size()) {
          Line const& head = next();
          if (head.tokens.size() != 2) {
            throw ParseError(head.number, "expected '<kind> NAME'");
          }
          std::string const& kind = head.tokens[0];
          std::string const& name = head.tokens[1];
          if (kind == "group") {
            check_unique(_ws.find_group(name) != nullptr, "group", name);
            _ws.groups.emplace_back(name, group(head));
          } else if (kind == "semigroup") {
            check_unique(
                _ws.find_semigroup(name) != nullptr, "semigroup", name);
            _ws.semigroups.emplace_back(name, semigroup(head));
          } else if (kind == "rms") {
            check_unique(_ws.find_rms(name) != nullptr, "rms", name);
            _ws.rms.push_back(rms(name));
          } else if (kind == "graph") {
            check_unique(_ws.find_graph(name) != nullptr, "graph", name);
            _ws.graphs.emplace_back(name, graph(head));
          } else {
            throw ParseError(head.number, "unknown declaration '" + kind + "'");
          }
        }
        return std::move(_ws);
      }

     private:
      Line const& next() {
        if (_pos == _lines.size()) {
          std::size_t last = _lines.empty() ? 1 : _lines.back().number;
          throw ParseError(last, "unexpected end of input");
        }
        return _lines[_pos++];
      }

      Line const& keyword(std::string const& word, std::size_t arity) {
        Line const& l = next();
        if (l.tokens[0] != word
            || (arity != kAny && l.tokens.size() != arity + 1)) {
          throw ParseError(l.number,
                           "expected '" + word + "'"
                               + (arity == kAny || arity == 0
                                      ? std::string()
                                      : " with " + std::to_string(arity)
                                            + " argument(s)"));
        }
        return l;
      }

      std::size_t count(std::string const& word) {
        Line const& l = keyword(word, 1);
        try {
          std::size_t used = 0;
          long        n    = std::stol(l.tokens[1], &used);
          if (used == l.tokens[1].size() && n > 0) {
            return static_cast<std::size_t>(n);
          }
        } catch (std::exception const&) {
        }
        throw ParseError(l.number, "expected a positive count after '" + word
                                       + "'");
      }

      // rows of n tokens mapped through lookup
      template <typename F>
      std::vector<std::vector<Index>> rows(std::size_t n_rows,
                                           std::size_t n_cols,
                                           F&&         lookup) {
        std::vector<std::vector<Index>> out;
        for (std::size_t r = 0; r < n_rows; ++r) {
          Line const& l = next();
          if (l.tokens.size() != n_cols) {
            throw ParseError(l.number,
                             "expected " + std::to_string(n_cols)
                                 + " entries, found "
                                 + std::to_string(l.tokens.size()));
          }
          out.emplace_back();
          for (auto const& t : l.tokens) {
            auto x = lookup(t);
            if (!x) {
              throw ParseError(l.number, "unknown element '" + t + "'");
            }
            out.back().push_back(*x);
          }
        }
        return out;
      }

      std::pair<std::vector<std::string>, std::vector<std::vector<Index>>>
      table_block() {
        Line const& el = keyword("elements", kAny);
        std::vector<std::string> labels(el.tokens.begin() + 1, el.tokens.end());
        if (labels.empty()) {
          throw ParseError(el.number, "no elements");
        }
        auto sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
          throw ParseError(el.number, "duplicate element label");
        }
        keyword("table", 0);
        auto t = rows(labels.size(), labels.size(), [&](std::string const& x) {
          auto it = std::find(labels.begin(), labels.end(), x);
          return it == labels.end()
                     ? std::optional<Index>()
                     : std::optional<Index>(static_cast<Index>(it - labels.begin()));
        });
        keyword("end", 0);
        return {std::move(labels), std::move(t)};
      }

      GroupPtr group(Line const& head) {
        auto [labels, table] = table_block();
        try {
          return FiniteGroup::make(std::move(labels), table);
        } catch (InvalidTable const& e) {
          throw ParseError(head.number, e.what());
        }
      }

      FiniteSemigroup semigroup(Line const& head) {
        auto [labels, table] = table_block();
        try {
          return FiniteSemigroup(std::move(labels), table);
        } catch (InvalidTable const& e) {
          throw ParseError(head.number, e.what());
        }
      }

      NamedRms rms(std::string const& name) {
        Line const&       gl    = keyword("group", 1);
        std::string const gname = gl.tokens[1];
        auto const*       g     = _ws.find_group(gname);
        if (g == nullptr) {
          throw UnresolvedReference("rms " + name + " uses undeclared group "
                                    + gname + " (line "
                                    + std::to_string(gl.number) + ")");
        }
        std::size_t n = count("I");
        std::size_t m = count("L");
        keyword("matrix", 0);
        auto p = rows(m, n, [&](std::string const& x) { return (*g)->find(x); });
        keyword("end", 0);
        return {name, gname, Rms(*g, std::move(p))};
      }

      ColouredGraph graph(Line const& head) {
        Line const&              cl = keyword("colours", kAny);
        std::vector<std::string> colours(cl.tokens.begin() + 1, cl.tokens.end());
        std::size_t              n = count("left");
        std::size_t              m = count("right");
        keyword("matrix", 0);
        auto c = rows(n, m, [&](std::string const& x) {
          auto it = std::find(colours.begin(), colours.end(), x);
          return it == colours.end()
                     ? std::optional<Index>()
                     : std::optional<Index>(
                         static_cast<Index>(it - colours.begin()));
        });
        keyword("end", 0);
        auto numbered = [](std::size_t k) {
          std::vector<std::string> out;
          for (std::size_t x = 1; x <= k; ++x) {
            out.push_back(std::to_string(x));
          }
          return out;
        };
        try {
          return ColouredGraph(numbered(n), numbered(m), colours, c);
        } catch (InvalidTable const& e) {
          throw ParseError(head.number, e.what());
        }
      }

      void check_unique(bool taken, std::string const& kind,
                        std::string const& name) {
        if (taken) {
          throw DuplicateName("duplicate " + kind + " name " + name);
        }
      }

      static constexpr std::size_t kAny = static_cast<std::size_t>(-1);

      std::vector<Line> _lines;
      std::size_t       _pos = 0;
      Workspace         _ws;
    };

    template <typename T>
    T const* find_named(std::vector<std::pair<std::string, T>> const& xs,
                        std::string_view                             name) {
      for (auto const& [n, x] : xs) {
        if (n == name) {
          return &x;
        }
      }
      return nullptr;
    }

    void write_table(std::ostream&                          out,
                     std::vector<std::string> const&        labels,
                     std::vector<std::vector<Index>> const& rows) {
      out << "elements";
      for (auto const& l : labels) {
        out << ' ' << l;
      }
      out << "\ntable\n";
      for (auto const& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
          out << (k ? " " : "") << labels[row[k]];
        }
        out << '\n';
      }
      out << "end\n";
    }
  }  // namespace

  GroupPtr const* Workspace::find_group(std::string_view name) const {
    return find_named(groups, name);
  }

  FiniteSemigroup const* Workspace::find_semigroup(std::string_view name) const {
    return find_named(semigroups, name);
  }

  NamedRms const* Workspace::find_rms(std::string_view name) const {
    for (auto const& r : rms) {
      if (r.name == name) {
        return &r;
      }
    }
    return nullptr;
  }

  ColouredGraph const* Workspace::find_graph(std::string_view name) const {
    return find_named(graphs, name);
  }

  Workspace parse_workspace(std::string_view text) {
    return Parser(tokenize(text)).run();
  }

  std::string serialize_workspace(Workspace const& ws) {
    std::ostringstream out;
    for (auto const& [name, g] : ws.groups) {
      out << "group " << name << '\n';
      write_table(out, g->labels(), g->table_rows());
    }
    for (auto const& [name, s] : ws.semigroups) {
      out << "semigroup " << name << '\n';
      write_table(out, s.labels(), s.table_rows());
    }
    for (auto const& r : ws.rms) {
      auto const& s = r.semigroup;
      out << "rms " << r.name << "\ngroup " << r.group << "\nI " << s.i_size()
          << "\nL " << s.lambda_size() << "\nmatrix\n";
      for (Index lambda = 0; lambda < s.lambda_size(); ++lambda) {
        for (Index i = 0; i < s.i_size(); ++i) {
          out << (i ? " " : "") << s.group().label(s.entry(lambda, i));
        }
        out << '\n';
      }
      out << "end\n";
    }
    for (auto const& [name, g] : ws.graphs) {
      out << "graph " << name << "\ncolours";
      for (auto const& c : g.colours()) {
        out << ' ' << c;
      }
      out << "\nleft " << g.left_size() << "\nright " << g.right_size()
          << "\nmatrix\n";
      for (Index l = 0; l < g.left_size(); ++l) {
        for (Index r = 0; r < g.right_size(); ++r) {
          out << (r ? " " : "") << g.colour_label(l, r);
        }
        out << '\n';
      }
      out << "end\n";
    }
    return out.str();
  }

  bool operator==(Workspace const& a, Workspace const& b) {
    auto same_groups = [](auto const& x, auto const& y) {
      return x.first == y.first && *x.second == *y.second;
    };
    auto same_rms = [](NamedRms const& x, NamedRms const& y) {
      return x.name == y.name && x.group == y.group
             && x.semigroup == y.semigroup;
    };
    return std::equal(a.groups.begin(), a.groups.end(), b.groups.begin(),
                      b.groups.end(), same_groups)
           && a.semigroups == b.semigroups
           && std::equal(a.rms.begin(), a.rms.end(), b.rms.begin(),
                         b.rms.end(), same_rms)
           && a.graphs == b.graphs;
  }

}  // namespace cssemi
