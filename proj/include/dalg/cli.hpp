#ifndef DALG_CLI_HPP
#define DALG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dalg::cli
{

// Exit codes.
inline constexpr int ok = 0;
inline constexpr int law_failure = 1;
inline constexpr int usage_error = 2;

// args excludes the program name.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace dalg::cli

#endif
