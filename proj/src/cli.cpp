#include "cssemi/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cssemi/catalog.hpp"
#include "cssemi/fraisse.hpp"
#include "cssemi/graph.hpp"
#include "cssemi/homogeneity.hpp"
#include "cssemi/rees.hpp"
#include "cssemi/rms_morphism.hpp"
#include "cssemi/semigroup.hpp"
#include "cssemi/workspace.hpp"

namespace cssemi {

  namespace {
#include "cssemi/corpus.inc"

    using json = nlohmann::ordered_json;

    struct Report {
      std::string         text;
      json                data = json::object();
      std::optional<bool> predicate;
    };

    struct Context {
      Workspace     ws;
      SearchOptions opts;
      std::uint64_t seed = 0;
    };

    std::string join(std::vector<std::string> const& xs,
                     std::string const&              sep = " ") {
      std::string out;
      for (std::size_t k = 0; k < xs.size(); ++k) {
        out += (k ? sep : "") + xs[k];
      }
      return out;
    }

    std::vector<std::string> labels_of(FiniteSemigroup const& s,
                                       ElementSet const&      xs) {
      std::vector<std::string> out;
      for (Index x : xs) {
        out.push_back(s.label(x));
      }
      return out;
    }

    std::vector<std::string> labels_of(FiniteGroup const& g,
                                       ElementSet const&  xs) {
      std::vector<std::string> out;
      for (Index x : xs) {
        out.push_back(g.label(x));
      }
      return out;
    }

    // Element list given as "x,y" or "x y".
    ElementSet parse_subset(FiniteGroup const& g, std::string const& text) {
      std::string t = text;
      std::replace(t.begin(), t.end(), ',', ' ');
      std::istringstream in(t);
      ElementSet         out;
      for (std::string x; in >> x;) {
        out.push_back(g.index_of(x));
      }
      return normalized_set(out);
    }

    json matrix_json(Rms const& s) {
      json rows = json::array();
      for (Index lambda = 0; lambda < s.lambda_size(); ++lambda) {
        json row = json::array();
        for (Index i = 0; i < s.i_size(); ++i) {
          row.push_back(s.group().label(s.entry(lambda, i)));
        }
        rows.push_back(row);
      }
      return rows;
    }

    json rms_json(Rms const& s) {
      return {{"group", s.group().labels()},
              {"I", s.i_labels()},
              {"L", s.lambda_labels()},
              {"matrix", matrix_json(s)}};
    }

    json graph_json(ColouredGraph const& g) {
      json rows = json::array();
      for (Index l = 0; l < g.left_size(); ++l) {
        json row = json::array();
        for (Index r = 0; r < g.right_size(); ++r) {
          row.push_back(g.colour_label(l, r));
        }
        rows.push_back(row);
      }
      return {{"colours", g.colours()},
              {"left", g.left()},
              {"right", g.right()},
              {"matrix", rows}};
    }

    json table_json(FiniteSemigroup const& s) {
      json rows = json::array();
      for (auto const& row : s.table_rows()) {
        json r = json::array();
        for (Index x : row) {
          r.push_back(s.label(x));
        }
        rows.push_back(r);
      }
      return {{"elements", s.labels()}, {"table", rows}};
    }

    std::string rms_block(std::string const& name,
                          std::string const& group,
                          Rms const&         s) {
      Workspace ws;
      ws.rms.push_back({name, group, s});
      return serialize_workspace(ws);
    }

    std::string graph_block(std::string const& name, ColouredGraph const& g) {
      Workspace ws;
      ws.graphs.emplace_back(name, g);
      return serialize_workspace(ws);
    }

    ////////////////////////////////////////////////////////////////////////
    // Name resolution: rms, then semigroup, then group, then graph.
    ////////////////////////////////////////////////////////////////////////

    enum class Kind { Rms, Semigroup, Group, Graph };

    Kind kind_of(Context const& c, std::string const& name) {
      if (c.ws.find_rms(name)) {
        return Kind::Rms;
      }
      if (c.ws.find_semigroup(name)) {
        return Kind::Semigroup;
      }
      if (c.ws.find_group(name)) {
        return Kind::Group;
      }
      if (c.ws.find_graph(name)) {
        return Kind::Graph;
      }
      throw UnresolvedReference("no declaration named " + name);
    }

    NamedRms const& rms_of(Context const& c, std::string const& name) {
      if (auto const* r = c.ws.find_rms(name)) {
        return *r;
      }
      throw UnresolvedReference("no rms named " + name);
    }

    GroupPtr const& group_of(Context const& c, std::string const& name) {
      if (auto const* g = c.ws.find_group(name)) {
        return *g;
      }
      throw UnresolvedReference("no group named " + name);
    }

    FiniteSemigroup table_of(Context const& c, std::string const& name) {
      switch (kind_of(c, name)) {
        case Kind::Rms:
          return to_table(c.ws.find_rms(name)->semigroup);
        case Kind::Semigroup:
          return *c.ws.find_semigroup(name);
        case Kind::Group:
          return as_semigroup(**c.ws.find_group(name));
        case Kind::Graph:
          break;
      }
      throw UnresolvedReference(name + " is a graph, not a semigroup");
    }

    // An Rms for name: rms as declared, or a coordinatized semigroup.
    Rms rees_of(Context const& c, std::string const& name) {
      if (kind_of(c, name) == Kind::Rms) {
        return c.ws.find_rms(name)->semigroup;
      }
      return rees_coordinatize(table_of(c, name)).semigroup;
    }

    Rms normalized(Rms const& s) {
      return s.is_normalized() ? s : normalize(s, 0, 0).semigroup;
    }

    Report predicate(bool value, json data = json::object()) {
      Report r;
      r.text      = value ? "true\n" : "false\n";
      r.predicate = value;
      r.data      = std::move(data);
      return r;
    }

    ////////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////////

    Report cmd_multiply(Context const&     c,
                        std::string const& name,
                        std::string const& x,
                        std::string const& y) {
      std::string product;
      switch (kind_of(c, name)) {
        case Kind::Rms: {
          auto const& s = rms_of(c, name).semigroup;
          product
              = s.element_label(multiply(s, s.parse_element(x), s.parse_element(y)));
          break;
        }
        case Kind::Semigroup: {
          auto const& s = *c.ws.find_semigroup(name);
          product       = s.label(s.product(s.index_of(x), s.index_of(y)));
          break;
        }
        case Kind::Group: {
          auto const& g = *group_of(c, name);
          product       = g.label(g.product(g.index_of(x), g.index_of(y)));
          break;
        }
        case Kind::Graph:
          throw UnresolvedReference(name + " is a graph");
      }
      return {product + "\n", {{"product", product}}, std::nullopt};
    }

    Report cmd_normalize(Context const&     c,
                         std::string const& name,
                         std::string const& row,
                         std::string const& col) {
      auto const& r = rms_of(c, name);
      auto const& s = r.semigroup;
      Index const i = col.empty() ? 0 : s.i_index(col);
      Index const l = row.empty() ? 0 : s.lambda_index(row);
      auto const  n = normalize(s, i, l);
      Report      out;
      out.text = rms_block(name + "_normalized", r.group, n.semigroup);
      out.data = {{"row", s.lambda_labels()[l]},
                  {"col", s.i_labels()[i]},
                  {"semigroup", rms_json(n.semigroup)},
                  {"u", labels_of(s.group(), n.iso.u)},
                  {"v", labels_of(s.group(), n.iso.v)}};
      return out;
    }

    Report cmd_egens(Context const& c, std::string const& name) {
      auto const s  = rees_of(c, name);
      auto const ed = entry_group_data(s);
      auto const e  = idempotent_generated(s);
      auto const gp = labels_of(s.group(), ed.entries);
      auto const gn = labels_of(s.group(), ed.generated);
      Report     out;
      out.text = "G^P = {" + join(gp, ",") + "}\n<G^P> = {" + join(gn, ",")
                 + "}\n<E(S)> has " + std::to_string(e.size())
                 + " elements\n";
      out.data = {{"gp", gp},
                  {"generated", gn},
                  {"size", e.size()},
                  {"semigroup", rms_json(e)}};
      return out;
    }

    Report cmd_green(Context const& c, std::string const& name) {
      auto const s  = table_of(c, name);
      auto const gd = green(s);
      Report     out;
      json       classes = json::object();
      auto       emit    = [&](std::string const& rel,
                      std::vector<ElementSet> const& xs) {
        out.text += rel + "-classes: " + std::to_string(xs.size()) + "\n";
        json arr = json::array();
        for (auto const& x : xs) {
          out.text += "  {" + join(labels_of(s, x), ",") + "}\n";
          arr.push_back(labels_of(s, x));
        }
        classes[rel] = arr;
      };
      emit("R", gd.r_classes);
      emit("L", gd.l_classes);
      emit("H", gd.h_classes);
      bool const cs  = is_completely_simple(s);
      bool const reg = is_regular(s);
      out.text += std::string("completely simple: ") + (cs ? "true" : "false")
                  + "\nregular: " + (reg ? "true" : "false") + "\n";
      out.data = {{"classes", classes},
                  {"completely_simple", cs},
                  {"regular", reg}};
      return out;
    }

    Report cmd_coordinatize(Context const& c, std::string const& name) {
      auto const s  = table_of(c, name);
      auto const co = rees_coordinatize(s);
      auto const& r = co.semigroup;
      Workspace  ws;
      ws.groups.emplace_back(name + "_G", r.group_ptr());
      ws.rms.push_back({name + "_rees", name + "_G", r});
      Report out;
      out.text = serialize_workspace(ws);
      json iso = json::object();
      for (Index x = 0; x < s.size(); ++x) {
        auto const img = r.element_label(r.element(co.iso[x]));
        out.text += s.label(x) + " -> " + img + "\n";
        iso[s.label(x)] = img;
      }
      out.data = {{"group", table_json(as_semigroup(r.group()))},
                  {"semigroup", rms_json(r)},
                  {"iso", iso}};
      return out;
    }

    Report cmd_automorphisms(Context const&     c,
                             std::string const& name,
                             std::string const& method) {
      std::size_t count = 0;
      std::string used  = method;
      switch (kind_of(c, name)) {
        case Kind::Rms:
          if (method == "table") {
            auto const t = table_of(c, name);
            count        = enumerate_isomorphisms(t, t).size();
          } else {
            auto const& s = rms_of(c, name).semigroup;
            count         = enumerate_rms_morphisms(s, s, true).size();
            used          = "rees";
          }
          break;
        case Kind::Semigroup: {
          auto const t = table_of(c, name);
          count        = enumerate_isomorphisms(t, t).size();
          used         = "table";
          break;
        }
        case Kind::Group:
          count = automorphisms(group_of(c, name)).size();
          used  = "group";
          break;
        case Kind::Graph: {
          auto const& g = *c.ws.find_graph(name);
          count         = enumerate_graph_isomorphisms(g, g).size();
          used          = "graph";
          break;
        }
      }
      return {std::to_string(count) + "\n",
              {{"count", count}, {"method", used}},
              std::nullopt};
    }

    Report cmd_isomorphic(Context const&     c,
                          std::string const& a,
                          std::string const& b) {
      bool const ga = kind_of(c, a) == Kind::Graph;
      bool const gb = kind_of(c, b) == Kind::Graph;
      if (ga != gb) {
        return predicate(false, {{"isomorphic", false}});
      }
      bool iso = ga ? !enumerate_graph_isomorphisms(*c.ws.find_graph(a),
                                                    *c.ws.find_graph(b))
                           .empty()
                    : are_isomorphic(table_of(c, a), table_of(c, b));
      return predicate(iso, {{"isomorphic", iso}});
    }

    json outcome_json(ClassificationOutcome const& o) {
      json j = {{"verdict", o.verdict()},
                {"homogeneous", o.homogeneous},
                {"case", o.homogeneous ? json(o.case_number) : json(nullptr)},
                {"reason", o.reason ? json(to_string(*o.reason)) : json(nullptr)},
                {"normalization",
                 {{"i", o.normalization_i}, {"lambda", o.normalization_lambda}}},
                {"gp", o.gp},
                {"characteristic", o.characteristic},
                {"pattern", to_string(o.pattern)},
                {"detail", o.detail}};
      if (!o.normalization_idempotent.empty()) {
        j["normalization"]["idempotent"] = o.normalization_idempotent;
      }
      return j;
    }

    ClassificationOutcome classify_named(Context const& c,
                                         std::string const& name) {
      if (kind_of(c, name) == Kind::Rms) {
        return classify_homogeneous(rms_of(c, name).semigroup, c.opts);
      }
      return classify_homogeneous(table_of(c, name), c.opts);
    }

    Report cmd_homogeneous(Context const&     c,
                           std::string const& name,
                           std::string const& method) {
      Kind const k = kind_of(c, name);
      if (k == Kind::Graph) {
        auto const cert = is_homogeneous_graph(*c.ws.find_graph(name));
        return predicate(cert.homogeneous,
                         {{"homogeneous", cert.homogeneous},
                          {"method", "brute"},
                          {"automorphisms", cert.automorphisms},
                          {"subgraphs", cert.subgraphs}});
      }
      if (k == Kind::Group) {
        bool const h = is_homogeneous_group(*group_of(c, name), c.opts);
        return predicate(h, {{"homogeneous", h}, {"method", "brute"}});
      }
      if (method == "classify") {
        auto const o = classify_named(c, name);
        return predicate(o.homogeneous,
                         {{"homogeneous", o.homogeneous},
                          {"method", method},
                          {"classification", outcome_json(o)}});
      }
      if (method == "decompose") {
        auto const d = decompose_check(normalized(rees_of(c, name)), c.opts);
        return predicate(
            d.homogeneous(),
            {{"homogeneous", d.homogeneous()},
             {"method", method},
             {"group_homogeneous", d.group_homogeneous},
             {"idempotent_generated_homogeneous",
              d.idempotent_generated_homogeneous},
             {"characteristic", d.characteristic}});
      }
      auto const t    = table_of(c, name);
      auto const cert = is_homogeneous(t, c.opts);
      json       data = {{"homogeneous", cert.homogeneous},
                   {"method", "brute"},
                   {"automorphisms", cert.automorphisms},
                   {"subsemigroups", cert.subsemigroups},
                   {"orbits", cert.orbits.size()}};
      if (cert.counterexample) {
        json pairs = json::array();
        for (auto [x, y] : cert.counterexample->map) {
          pairs.push_back({t.label(x), t.label(y)});
        }
        data["counterexample"] = pairs;
      }
      return predicate(cert.homogeneous, data);
    }

    Report cmd_classify(Context const& c, std::string const& name) {
      auto const o = classify_named(c, name);
      Report     out;
      out.text = o.verdict() + "\n";
      out.text += "normalization: " + o.normalization_i + " "
                  + o.normalization_lambda
                  + (o.normalization_idempotent.empty()
                         ? std::string()
                         : " (" + o.normalization_idempotent + ")")
                  + "\nG^P: {" + join(o.gp, ",") + "}\npattern: "
                  + to_string(o.pattern) + "\ndetail: " + o.detail + "\n";
      out.data      = outcome_json(o);
      out.predicate = o.homogeneous;
      return out;
    }

    Report cmd_screen(Context const& c, std::string const& name) {
      auto const s = normalized(rees_of(c, name));
      auto const r = screen_necessary(s, c.opts);
      Report     out;
      json       vs = json::array();
      for (auto const& v : r.violations) {
        out.text += v.message + "\n";
        vs.push_back(v.message);
      }
      out.text      = (r.pass() ? "pass\n" : "fail\n") + out.text;
      out.data      = {{"pass", r.pass()}, {"violations", vs}};
      out.predicate = r.pass();
      return out;
    }

    Report cmd_graph(Context const& c, std::string const& name) {
      auto const s  = normalized(rees_of(c, name));
      auto const gs = induced_graphs(s);
      Report     out;
      out.text = graph_block(name + "_P", gs.gamma_p)
                 + graph_block(name + "_S", gs.gamma_s);
      out.data = {{"gamma_p", graph_json(gs.gamma_p)},
                  {"gamma_s", graph_json(gs.gamma_s)}};
      return out;
    }

    Report cmd_graph_classify(Context const& c, std::string const& name) {
      ColouredGraph g;
      if (kind_of(c, name) == Kind::Graph) {
        g = *c.ws.find_graph(name);
      } else {
        g = induced_graphs(normalized(rees_of(c, name))).gamma_s;
      }
      auto const p  = classify_pattern(g);
      bool const ok = p != GraphPattern::Other;
      Report     out;
      out.text      = to_string(p) + "\n";
      out.data      = {{"pattern", to_string(p)}, {"homogeneous_pattern", ok}};
      out.predicate = ok;
      return out;
    }

    json members_json(AgeSample const& a) {
      json arr = json::array();
      for (auto const& m : a.members) {
        json j    = table_json(m);
        j["size"] = m.size();
        arr.push_back(j);
      }
      return arr;
    }

    Report cmd_age(Context const& c, std::string const& name, std::size_t max) {
      auto const s  = table_of(c, name);
      auto const a  = age(s, max, c.opts);
      auto const hp = check_hp(a.members, c.opts);
      Report     out;
      out.text = std::to_string(a.members.size())
                 + " isomorphism classes of size at most "
                 + std::to_string(max) + "\n";
      for (auto const& m : a.members) {
        out.text += "  " + std::to_string(m.size()) + ": {"
                    + join(m.labels(), ",") + "}\n";
      }
      out.text += std::string("HP: ") + (hp.holds ? "true" : "false") + "\n";
      out.data = {{"bound", max},
                  {"count", a.members.size()},
                  {"members", members_json(a)},
                  {"hp", hp.holds}};
      return out;
    }

    Report cmd_jep(Context const& c, std::string const& name, std::size_t max) {
      auto const s      = table_of(c, name);
      auto const k      = age(s, max, c.opts);
      auto const within = age(s, s.size(), c.opts);
      auto const r      = check_jep(k.members, within);
      json       data   = {{"holds", r.holds},
                   {"class_size", k.members.size()},
                   {"pairs", r.witnesses.size()}};
      if (r.failure) {
        data["failure"] = {r.failure->first, r.failure->second};
      }
      return predicate(r.holds, data);
    }

    Report cmd_ap(Context const&             c,
                  std::string const&         name,
                  std::size_t                max,
                  std::optional<std::size_t> samples) {
      auto const s        = table_of(c, name);
      auto const k        = age(s, max, c.opts);
      auto const within   = age(s, s.size(), c.opts);
      auto       amalgams = all_amalgams(k.members);
      std::size_t const total = amalgams.size();
      if (samples && *samples < amalgams.size()) {
        std::mt19937_64 rng(c.seed);
        std::shuffle(amalgams.begin(), amalgams.end(), rng);
        amalgams.erase(amalgams.begin() + static_cast<std::ptrdiff_t>(*samples),
                       amalgams.end());
      }
      auto const r    = check_ap(amalgams, within, c.opts);
      json       data = {{"holds", r.holds},
                   {"class_size", k.members.size()},
                   {"amalgams", total},
                   {"checked", amalgams.size()}};
      if (r.failure) {
        auto const& a   = amalgams[*r.failure];
        data["failure"] = {{"core", a.core.labels()},
                           {"b1", a.b1.labels()},
                           {"b2", a.b2.labels()}};
      }
      return predicate(r.holds, data);
    }

    Report cmd_amalgamate(Context const&                  c,
                          std::vector<std::string> const& names,
                          std::string const&              group,
                          std::string const&              sub,
                          std::optional<std::size_t>      bound) {
      auto const& m0 = rms_of(c, names.at(0)).semigroup;
      auto const& m1 = rms_of(c, names.at(1));
      auto const& m2 = rms_of(c, names.at(2)).semigroup;
      auto const& g  = group_of(c, group.empty() ? m1.group : group);
      ElementSet  h  = sub.empty() ? ElementSet() : parse_subset(*g, sub);
      if (sub.empty()) {
        for (Index x = 0; x < g->size(); ++x) {
          h.push_back(x);
        }
      }
      auto const r = amalgamate_cs(
          m0, m1.semigroup, m2, g, h, bound.value_or(g->size()));
      Workspace ws;
      ws.groups.emplace_back("K", r.k);
      ws.rms.push_back({"T", "K", r.t});
      Report out;
      out.text = serialize_workspace(ws) + "entries in age(H): "
                 + (r.entries_in_age_h ? "true" : "false") + "\n";
      out.data = {{"k", table_json(as_semigroup(*r.k))},
                  {"t", rms_json(r.t)},
                  {"entries_in_age_h", r.entries_in_age_h}};
      return out;
    }

    Report cmd_grow(Context const&     c,
                    std::string const& group,
                    std::string const& sub,
                    std::size_t        level,
                    std::string const& from) {
      auto const& g    = group_of(c, group);
      auto const  h    = parse_subset(*g, sub);
      std::optional<Rms> seed;
      if (!from.empty()) {
        seed = rms_of(c, from).semigroup;
      }
      auto const s = grow_generic_rms(g, h, level, seed);
      std::pair<std::size_t, std::size_t> scope{1, 1};
      if (seed) {
        scope = {seed->lambda_size() - 1, seed->i_size() - 1};
      }
      auto const defects = rms_defects(s, h, level, scope);
      auto const gp      = labels_of(*g, entry_group_data(s).entries);
      Report     out;
      out.text = rms_block("generic", group, s) + "G^P: {" + join(gp, ",")
                 + "}\nseed defects: " + std::to_string(defects.defects.size())
                 + "\n";
      out.data = {{"semigroup", rms_json(s)},
                  {"gp", gp},
                  {"seed_defects", defects.defects.size()}};
      return out;
    }

    Report cmd_sweep(Context const& c, std::size_t max_group, std::size_t max_index) {
      auto const r = sweep(sweep_instances(catalog::small_groups(max_group),
                                           max_index),
                           c.opts);
      Report     out;
      out.text = "instances: " + std::to_string(r.instances)
                 + "\nhomogeneous: " + std::to_string(r.homogeneous)
                 + "\nregular homogeneous: "
                 + std::to_string(r.regular_homogeneous)
                 + "\nregular homogeneous, not completely simple: "
                 + std::to_string(r.regular_homogeneous_not_cs)
                 + "\ndisagreements: " + std::to_string(r.disagreements.size())
                 + "\n";
      for (auto const& d : r.disagreements) {
        out.text += "  " + d + "\n";
      }
      out.data = {{"instances", r.instances},
                  {"homogeneous", r.homogeneous},
                  {"regular_homogeneous", r.regular_homogeneous},
                  {"regular_homogeneous_not_cs", r.regular_homogeneous_not_cs},
                  {"disagreements", r.disagreements}};
      out.predicate = r.disagreements.empty();
      return out;
    }
  }  // namespace

  std::string_view builtin_corpus() {
    return kCorpus;
  }

  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err) {
    CLI::App app{"Finite completely simple semigroups and homogeneity"};
    app.require_subcommand(1);
    app.fallthrough();

    bool                        as_json = false;
    std::string                 file;
    std::optional<double>       deadline;
    std::optional<std::size_t>  cap;
    std::uint64_t               seed = 0;
    app.add_flag("--json", as_json, "Machine-readable report");
    app.add_option("-f,--file", file, "Workspace file (default: built-in)");
    app.add_option("--seed", seed, "Seed for randomized sampling");
    app.add_option("--deadline-secs", deadline, "Search deadline in seconds");
    app.add_option("--cap", cap, "Subsemigroup enumeration cap");

    std::string name, other, x, y, method, row, col, group, sub, from;
    std::size_t max = 2, level = 2, max_group = 3, max_index = 2;
    std::optional<std::size_t> samples, bound;
    std::vector<std::string>   names;

    std::function<Report(Context const&)> action;
    auto sub_named = [&](std::string const& cmd, std::string const& help) {
      auto* s = app.add_subcommand(cmd, help);
      s->add_option("name", name, "Declaration name")->required();
      return s;
    };

    auto* mul = sub_named("multiply", "Product of two elements");
    mul->add_option("x", x)->required();
    mul->add_option("y", y)->required();
    mul->callback([&] {
      action = [&](Context const& c) { return cmd_multiply(c, name, x, y); };
    });

    auto* nor = sub_named("normalize", "Normalize an rms at a row and column");
    nor->add_option("--row", row, "Lambda label (default first)");
    nor->add_option("--col", col, "I label (default first)");
    nor->callback([&] {
      action = [&](Context const& c) { return cmd_normalize(c, name, row, col); };
    });

    sub_named("egens", "Idempotent-generated subsemigroup")->callback([&] {
      action = [&](Context const& c) { return cmd_egens(c, name); };
    });
    sub_named("green", "Green's R, L and H classes")->callback([&] {
      action = [&](Context const& c) { return cmd_green(c, name); };
    });
    sub_named("coordinatize", "Rees coordinates of a table")->callback([&] {
      action = [&](Context const& c) { return cmd_coordinatize(c, name); };
    });

    auto* aut = sub_named("automorphisms", "Count automorphisms");
    aut->add_option("--method", method, "rees or table")
        ->check(CLI::IsMember({"rees", "table"}));
    aut->callback([&] {
      action = [&](Context const& c) {
        return cmd_automorphisms(c, name, method);
      };
    });

    auto* iso = sub_named("isomorphic", "Are two declarations isomorphic");
    iso->add_option("other", other)->required();
    iso->callback([&] {
      action = [&](Context const& c) { return cmd_isomorphic(c, name, other); };
    });

    auto* hom = sub_named("homogeneous", "Homogeneity check");
    method    = "brute";
    hom->add_option("--method", method, "brute, classify or decompose")
        ->check(CLI::IsMember({"brute", "classify", "decompose"}));
    hom->callback([&] {
      action = [&](Context const& c) {
        return cmd_homogeneous(c, name, method);
      };
    });

    sub_named("classify", "Classify a completely simple semigroup")
        ->callback([&] {
          action = [&](Context const& c) { return cmd_classify(c, name); };
        });
    sub_named("screen", "Necessary conditions for homogeneity")->callback([&] {
      action = [&](Context const& c) { return cmd_screen(c, name); };
    });
    sub_named("graph", "Induced graphs Gamma(P) and Gamma(S)")->callback([&] {
      action = [&](Context const& c) { return cmd_graph(c, name); };
    });
    sub_named("graph-classify", "Colour pattern of a graph")->callback([&] {
      action = [&](Context const& c) { return cmd_graph_classify(c, name); };
    });

    auto* ag = sub_named("age", "Isomorphism classes of subsemigroups");
    ag->add_option("--max", max, "Size bound")->required();
    ag->callback([&] {
      action = [&](Context const& c) { return cmd_age(c, name, max); };
    });

    auto* jep = sub_named("jep", "Joint embedding within the age");
    jep->add_option("--max", max, "Size bound of the class");
    jep->callback([&] {
      action = [&](Context const& c) { return cmd_jep(c, name, max); };
    });

    auto* ap = sub_named("ap", "Amalgamation within the age");
    ap->add_option("--max", max, "Size bound of the class");
    ap->add_option("--samples", samples, "Check a random sample of amalgams");
    ap->callback([&] {
      action = [&](Context const& c) { return cmd_ap(c, name, max, samples); };
    });

    auto* am = app.add_subcommand("amalgamate", "Amalgamate CS(G;H) wings");
    am->add_option("rms", names, "Core, wing 1 and wing 2")
        ->required()
        ->expected(3);
    am->add_option("--group", group, "Ambient group G (default: wing 1's)");
    am->add_option("--sub", sub, "Subgroup H as x,y,... (default: G)");
    am->add_option("--bound", bound, "Largest group amalgam order");
    am->callback([&] {
      action = [&](Context const& c) {
        return cmd_amalgamate(c, names, group, sub, bound);
      };
    });

    auto* gr = app.add_subcommand("grow-generic", "Grow a k-generic rms");
    gr->add_option("--group", group, "Group G")->required();
    gr->add_option("--sub", sub, "Subgroup H as x,y,...")->required();
    gr->add_option("--level", level, "Genericity level k")->required();
    gr->add_option("--from", from, "Seed rms");
    gr->callback([&] {
      action = [&](Context const& c) {
        return cmd_grow(c, group, sub, level, from);
      };
    });

    auto* sw = app.add_subcommand("sweep", "Compare the three homogeneity checks");
    sw->add_option("--max-group", max_group, "Largest group order");
    sw->add_option("--max-index", max_index, "Largest |I| and |Lambda|");
    sw->callback([&] {
      action = [&](Context const& c) {
        return cmd_sweep(c, max_group, max_index);
      };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return 0;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }

    std::string const command = app.get_subcommands().front()->get_name();
    std::ostringstream buffer;
    int                code = 0;
    try {
      Context c;
      if (file.empty()) {
        c.ws = parse_workspace(builtin_corpus());
      } else {
        std::ifstream in(file);
        if (!in) {
          throw Error("cannot read " + file);
        }
        std::stringstream text;
        text << in.rdbuf();
        c.ws = parse_workspace(text.str());
      }
      if (deadline) {
        c.opts.deadline = std::chrono::steady_clock::now()
                          + std::chrono::duration_cast<
                              std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(*deadline));
      }
      if (cap) {
        c.opts.subsemigroup_cap = *cap;
      }
      c.seed = seed;

      Report r = action(c);
      code     = r.predicate && !*r.predicate ? 1 : 0;
      if (as_json) {
        json j = {{"schema_version", "1"}, {"command", command}};
        j.update(r.data);
        if (r.predicate) {
          j["result"] = *r.predicate;
        }
        buffer << j.dump(2) << "\n";
      } else {
        buffer << r.text;
      }
    } catch (std::exception const& e) {
      if (as_json) {
        json j = {{"schema_version", "1"},
                  {"command", command},
                  {"error", e.what()}};
        out << j.dump(2) << "\n";
      }
      err << "error: " << e.what() << "\n";
      return 2;
    }
    out << buffer.str();
    return code;
  }

}  // namespace cssemi
