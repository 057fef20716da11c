#ifndef TRIFREE_COMMANDS_HPP
#define TRIFREE_COMMANDS_HPP

#include <ostream>
#include <string>

namespace trifree {

// Each command writes its document to `out` and returns the process exit code.
// Range violations throw Error with Errc::invalid_size.

// what: ctft | arcperm | classes | tableaux. One JSON object per line, then {"count": N}.
int cmd_enumerate(int n, const std::string& what, std::ostream& out);

// Runs a verification suite; exit code 0 iff every check passes.
int cmd_verify(int n, const std::string& suite, bool as_json, std::ostream& out);

// format: dot | json; labels: diagonal | generator | hyperplane.
int cmd_graph(int n, const std::string& format, bool oriented, const std::string& labels, std::ostream& out);

// method: formula | tableaux | enumerate.
int cmd_dn(int n, const std::string& method, std::ostream& out);

// Geodesics from the canonical star to its reverse, one JSON record per line.
int cmd_geodesics(int n, const std::string& direction, std::ostream& out);

}  // namespace trifree

#endif  // TRIFREE_COMMANDS_HPP
