#include "folk/report.hpp"

namespace folk {

void Report::print(std::ostream& os, bool show_timing) const {
  if (!title.empty()) os << "== " << title << " ==\n";
  if (!header.empty()) os << header << "\n";
  for (const auto& l : lines) {
    os << (l.pass ? "PASS" : "FAIL") << "  " << l.name;
    if (show_timing && l.ms > 0.5) os << "  (" << static_cast<long>(l.ms) << " ms)";
    if (!l.pass && !l.witness.empty()) os << "  [" << l.witness << "]";
    os << "\n";
  }
  os << (all_pass() ? "all checks passed" : "CHECKS FAILED") << " (" << lines.size()
     << " checks)\n";
}

}  // namespace folk
