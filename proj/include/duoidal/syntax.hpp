#pragma once

#include "duoidal/object.hpp"
#include "duoidal/term.hpp"

#include <string>
#include <string_view>

namespace duoidal {

/// Parses an object expression and returns it %-normalized.
///
///   obj := I | R | Ident | neg(obj) | (obj * obj) | (obj % obj [% obj]...) | (obj)
///
/// Generator identifiers start with an uppercase letter; `I` and `R` are
/// reserved for the two units.
Obj parse_object(std::string_view text);

/// Parses a morphism term. Composites `h o g o f` nest to the right. The
/// result is not normalized; pass it through `infer_type` and `normalize`.
Term parse_term(std::string_view text);

std::string to_string(const Obj &o);
std::string to_string(const Term &t);

} // namespace duoidal
