#pragma once

// Input files: one JSON object per file, integer payloads, 1-based indices.
//
//   {"ring": 4, "ideal": [[2,0,3,1], [0,3,0,2]]}   or "ideal": ["x1^2*x3^3*x4", ...]
//   {"graph": 5, "edges": [[1,2], [2,3]]}
//   {"hypergraph": 4, "edges": [[1,2,3], [3,4]]}
//   {"complex": 4, "facets": [[1,2,3], [1,4], [3,4]]}

#include <string>
#include <string_view>
#include <variant>

#include "idealis/combinat.hpp"
#include "idealis/monomial.hpp"
#include "idealis/simplicial.hpp"

namespace idealis {

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

using InputObject = std::variant<MonomialIdeal, Graph, Hypergraph, SimplicialComplex>;

InputObject parse_input(std::string_view text);
/// Throws Error when the file cannot be read.
InputObject parse_input_file(const std::string& path);

/// Canonical one-line JSON; parse_input(emit(x)) == x.
std::string emit(const InputObject& object);

/// "x1^2*x3" or "1". Throws InvalidArgument.
Monomial parse_monomial(std::string_view text, std::size_t arity);

const char* kind_name(const InputObject& object);

}  // namespace idealis
