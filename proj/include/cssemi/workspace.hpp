#ifndef CSSEMI_WORKSPACE_HPP_
#define CSSEMI_WORKSPACE_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cssemi/graph.hpp"
#include "cssemi/group.hpp"
#include "cssemi/rees.hpp"
#include "cssemi/semigroup.hpp"

namespace cssemi {

  struct NamedRms {
    std::string name;
    std::string group;  // name of the group declaration it uses
    Rms         semigroup;
  };

  // Declarations read from an input file, in file order per kind.
  struct Workspace {
    std::vector<std::pair<std::string, GroupPtr>>           groups;
    std::vector<std::pair<std::string, FiniteSemigroup>>    semigroups;
    std::vector<NamedRms>                                   rms;
    std::vector<std::pair<std::string, ColouredGraph>>      graphs;

    GroupPtr const*        find_group(std::string_view name) const;
    FiniteSemigroup const* find_semigroup(std::string_view name) const;
    NamedRms const*        find_rms(std::string_view name) const;
    ColouredGraph const*   find_graph(std::string_view name) const;
  };

  // Line-oriented grammar; '#' starts a comment.
  //
  //   group NAME           semigroup NAME      rms NAME          graph NAME
  //   elements x y ...     elements ...        group GROUPNAME   colours c ...
  //   table                table               I n               left n
  //   <|G| rows>           <rows>              L m               right m
  //   end                  end                 matrix            matrix
  //                                            <m rows of n>     <rows>
  //                                            end               end
  //
  // Index labels of rms and graph declarations are 1..n.  Throws
  // ParseError, DuplicateName, UnresolvedReference.
  Workspace parse_workspace(std::string_view text);

  std::string serialize_workspace(Workspace const& ws);

  bool operator==(Workspace const& a, Workspace const& b);

}  // namespace cssemi

#endif  // CSSEMI_WORKSPACE_HPP_
