#include "duoidal/equation.hpp"

#include "duoidal/error.hpp"
#include "duoidal/syntax.hpp"

namespace duoidal {

Equation make_equation(const Term &lhs, const Term &rhs) {
  Typing l = infer_type(lhs);
  Typing r = infer_type(rhs);
  if (l != r)
    throw TypeError("sides are not parallel: " + to_string(l.dom) + " ==> " +
                    to_string(l.cod) + " versus " + to_string(r.dom) +
                    " ==> " + to_string(r.cod));
  return {normalize(lhs), normalize(rhs)};
}

Typing type_of(const Equation &eq) { return infer_type(eq.lhs); }

std::string to_string(const Equation &eq) {
  return to_string(eq.lhs) + " = " + to_string(eq.rhs);
}

} // namespace duoidal
