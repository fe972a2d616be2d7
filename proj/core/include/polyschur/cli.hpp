#ifndef POLYSCHUR_CLI_HPP
#define POLYSCHUR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace polyschur {

// Dispatches the subcommands (count, construct, search, report, lemma,
// bench).  Returns 0 on success, 1 on domain errors, 2 on usage errors.
// Identical arguments, config and seed produce byte-identical output
// (bench timings excepted).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyschur

#endif
