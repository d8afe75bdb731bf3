#ifndef ARD_TEXT_HPP
#define ARD_TEXT_HPP

#include <map>
#include <string>

#include "ard/equation.hpp"
#include "ard/vector_field.hpp"

namespace ard {

// Named rational constants allowed inside expressions (K, delta, c0, ...).
using SymbolTable = std::map<std::string, Rational>;

// Canonical printer. Terms appear in canonical order; rationals print as p/q;
// fractional and negative exponents are parenthesized.
std::string print_expression(const JetPoly& p, Coords coords = Coords::original);
std::string print_equation(const EvolutionEquation& eq);

// "%.10g" formatting used for every numeric result.
std::string format_double(double v);

// Whitespace-insensitive grammar:
//   equation := lhs "=" expr ; expr := ["-"] term (("+"|"-") term)* ;
//   term := factor ("*" factor)* ; factor := rational | powfactor ;
//   powfactor := var ["^" exponent] | "exp(" rational "*t" ")" ;
//   exponent := rational | "(" rational ")" ; rational := ["-"] int ["/" int] | decimal
// Variables come from one alphabet: (x,t,u,u_x,...) or the adapted (y,s,w,...).
JetPoly parse_expression(const std::string& src, const SymbolTable& symbols = {});
EvolutionEquation parse_equation(const std::string& src, const SymbolTable& symbols = {});

// "xi=...; tau=...; phi=..." with expressions over x, t, u.
VectorField parse_vector_field(const std::string& src, const SymbolTable& symbols = {});

}  // namespace ard

#endif
