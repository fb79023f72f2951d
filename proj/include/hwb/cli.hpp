#ifndef HWB_CLI_HPP
#define HWB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "hwb/autos.hpp"
#include "hwb/rfree.hpp"

namespace hwb {

/// Whitespace-separated RF tokens: x<i> / X<i>.
GroupWord parse_group_word(const std::string& text, int n);

/// Whitespace-separated automorphism tokens: c<i>.<j> / C<i>.<j>, s<i> / S<i>,
/// r<i>, a<i>.<j> / A<i>.<j>. The word g1 g2 ... evaluates to g1 o g2 o ...
WeldedAuto parse_auto_word(const std::string& text, int n);

/// Entry point of the hwb tool; args excludes the program name.
/// Exit codes: 0 success/true, 1 false or failed checks, 2 usage or input
/// errors, 3 internal invariant violations.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hwb

#endif
