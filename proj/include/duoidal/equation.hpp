#pragma once

#include "duoidal/term.hpp"

#include <string>

namespace duoidal {

/// A pair of parallel morphism terms, both normalized.
struct Equation {
  Term lhs = Term::id(Obj::unit_tens());
  Term rhs = Term::id(Obj::unit_tens());
  friend bool operator==(const Equation &, const Equation &) = default;
};

/// Type-checks and normalizes both sides; throws TypeError when either side
/// is ill-typed or the two sides are not parallel.
Equation make_equation(const Term &lhs, const Term &rhs);

Typing type_of(const Equation &eq);

/// `lhs = rhs` in the term grammar.
std::string to_string(const Equation &eq);

} // namespace duoidal
