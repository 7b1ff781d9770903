#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cellar/element.hpp"

namespace cellar {

// One symbolic term of a relation or datum expression. The coefficient is an
// exact literal ("1", "-2/3") or a parameter expression ("lambda", "-lambda",
// "2*lambda"). A term is either a nonempty arrow path or a vertex.
struct TermSpec {
  std::string coeff = "1";
  bool is_vertex = false;
  std::string vertex;
  std::vector<std::string> path;
};

using ExprSpec = std::vector<TermSpec>;

struct Param {
  std::string name;
  std::string value;                   // exact literal
  std::vector<std::string> forbidden;  // exact literals
};

// A bound-quiver presentation over an exact field. Relations are kept both
// symbolically (for bit-exact serialization) and substituted (for the
// engine). Relations may be non-admissible but must lie in the span of paths
// of length >= 1.
struct Presentation {
  Field field;
  Quiver quiver;
  std::vector<Param> params;
  std::vector<ExprSpec> relation_specs;
  std::vector<Element> relations;

  // Substitutes parameters and validates one expression against the quiver.
  Element instantiate(const ExprSpec& spec, bool allow_vertices) const;
  Scalar coeff_value(const std::string& text) const;
};

Presentation parse_presentation(const std::string& json_text);
std::string serialize_presentation(const Presentation& p);

// Rebuilds the computational fields after edits to the symbolic ones.
void finalize_presentation(Presentation& p);

// Compact expression notation used by the built-in catalog:
//   "alpha beta - lambda*beta alpha"   two terms, one with a parameter coeff
//   "e(0)"                             a vertex idempotent term
// Terms are separated by standalone +/- tokens; a coefficient is attached to
// the first arrow of its term with '*'.
ExprSpec parse_expr_dsl(const std::string& text);

}  // namespace cellar
