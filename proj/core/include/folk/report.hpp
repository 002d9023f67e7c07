#ifndef FOLK_REPORT_HPP
#define FOLK_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

namespace folk {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string witness;  // empty when passing
  double ms = 0.0;
};

struct Report {
  std::string title;
  std::string header;  // caveats printed before the lines
  std::vector<CheckLine> lines;

  void add(const std::string& name, bool pass, const std::string& witness = "") {
    lines.push_back({name, pass, witness});
  }
  bool all_pass() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
  /// Output bytes are deterministic for a fixed input unless timings are
  /// requested.
  void print(std::ostream& os, bool show_timing = false) const;
};

}  // namespace folk

#endif
