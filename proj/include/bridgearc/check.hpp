#pragma once
// Always-on internal consistency checks. These guard structural invariants
// (Euler counts, move bookkeeping, alternation rules) that must hold in every
// build type; a violation indicates a bug, never bad user input, so they
// throw std::logic_error rather than returning an error value.

#include <sstream>
#include <stdexcept>
#include <string>

namespace bridgearc {

[[noreturn]] inline void check_fail(const char* expr, const char* file, int line,
                                    const std::string& msg) {
  std::ostringstream os;
  os << "internal check failed: " << expr << " at " << file << ":" << line;
  if (!msg.empty()) os << " (" << msg << ")";
  throw std::logic_error(os.str());
}

}  // namespace bridgearc

#define BA_CHECK(cond)                                              \
  do {                                                              \
    if (!(cond)) ::bridgearc::check_fail(#cond, __FILE__, __LINE__, ""); \
  } while (0)

#define BA_CHECK_MSG(cond, msg)                                     \
  do {                                                              \
    if (!(cond))                                                    \
      ::bridgearc::check_fail(#cond, __FILE__, __LINE__, (msg));    \
  } while (0)
