#ifndef CSSEMI_CLI_HPP_
#define CSSEMI_CLI_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cssemi {

  // The declarations available when no -f file is given.
  std::string_view builtin_corpus();

  // Runs one command.  args excludes the program name.  Returns the exit
  // code: 0 success or true, 1 predicate false, 2 error.
  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err);

}  // namespace cssemi

#endif  // CSSEMI_CLI_HPP_
