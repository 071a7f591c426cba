#pragma once

// Expression parsing, canonical printing, and JSON serialization.
//
// Grammar:
//   poly   := '-'? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' NAT)?
//   base   := RATIONAL | IDENT | '(' poly ')'
//   RATIONAL := INT ('/' NAT)? ; IDENT := letter (letter|digit|'_')*
// Multiplication is always explicit; in Free mode '*' is noncommutative and
// product order is preserved.

#include <string>

#include <json.hpp>

#include "rank2/cpoly.hpp"
#include "rank2/ncpoly.hpp"
#include "rank2/scalar.hpp"

namespace rank2 {

enum class RingMode { Free, Commutative };

struct Session {
    FieldSpec field;
    Alphabet alphabet;
    RingMode mode;
};

NcPoly parse_ncpoly(const std::string& src, const FieldSpec& field, const Alphabet& alphabet);
CPoly parse_cpoly(const std::string& src, const FieldSpec& field, const Alphabet& alphabet);

// "a" or "a/b" over Q, a decimal residue over GF(p); leading '-' allowed.
Scalar parse_scalar(const std::string& src, const FieldSpec& field);

// Canonical text: terms deglex-descending, coefficients in exact scalar
// syntax, words as '*'-separated generators. parse(print(f)) == f.
std::string print_poly(const NcPoly& f);
std::string print_poly(const CPoly& f);

nlohmann::json poly_to_json(const NcPoly& f);
nlohmann::json poly_to_json(const CPoly& f);
NcPoly ncpoly_from_json(const nlohmann::json& j);
CPoly cpoly_from_json(const nlohmann::json& j);

}  // namespace rank2
