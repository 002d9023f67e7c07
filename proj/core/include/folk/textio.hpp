#ifndef FOLK_TEXTIO_HPP
#define FOLK_TEXTIO_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "folk/homotopy.hpp"
#include "folk/interval.hpp"

namespace folk {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct NamedSquare {
  std::string left, right, top, bottom;
};

/// Parsed values by name. Every value is validated on parse; dangling
/// references and incomplete composition tables are reported with the
/// offending line.
struct Workspace {
  Kit* kit = nullptr;
  std::map<std::string, CatPtr> categories;
  std::map<std::string, FunctorMap> functors;
  std::map<std::string, NatTrans> nats;
  std::map<std::string, Homotopy> homotopies;
  std::map<std::string, NamedSquare> squares;

  CatPtr category(const std::string& name) const;
  FunctorMap functor(const std::string& name) const;
  Homotopy homotopy(const std::string& name) const;
};

/// Parses a whole file: any sequence of category / functor / nat /
/// homotopy / square blocks. Throws ParseError.
void parse_text(Workspace& ws, const std::string& text);

std::string print_category(const FinCat& c);
std::string print_functor(const FunctorMap& f);
std::string print_nat(const NatTrans& n);
std::string print_homotopy(const Homotopy& h, const std::string& a0_name,
                           const std::string& a1_name);
std::string print_square(const std::string& name, const NamedSquare& sq);

}  // namespace folk

#endif
