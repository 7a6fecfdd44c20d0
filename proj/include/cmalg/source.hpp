#pragma once
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cmalg/groebner.hpp"
#include "cmalg/resolution.hpp"

namespace cma {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& msg);
  int line() const { return line_; }
  int column() const { return col_; }
  const std::string& message() const { return msg_; }

 private:
  int line_, col_;
  std::string msg_;
};

struct IdealSource {
  RingContext ring;
  std::vector<std::pair<std::string, Ideal>> ideals;

  const Ideal& get(const std::string& name) const;
  bool has(const std::string& name) const;
};

// ring <prime> [names]  followed by  ideal <name> = poly, poly, ...
IdealSource parse_source(const std::string& text);
std::string print_source(const IdealSource& src);
std::string print_source(const RingContext& R, const std::vector<std::pair<std::string, Ideal>>& ideals);

struct ModuleExpr {
  ModulePresentation module;
  Ideal ideal;           // the ideal named by the expression
  bool quotient = false; // S/<ideal> rather than the ideal itself
  std::string text;
};

// S/E or E, where E is built from ideal names with ^k, *, +, intersect(E,E) and parentheses.
ModuleExpr parse_module_expr(const IdealSource& src, const std::string& text);

}  // namespace cma
