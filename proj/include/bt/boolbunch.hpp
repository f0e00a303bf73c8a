#pragma once

#include "bt/bunch.hpp"

namespace bt {

// Boolean bunches: the five-valued calculus over bunches of type BOOL.
// null = no information, T = true, F = false, (T,F) = perhaps,
// improper = everything (contradiction / abort).
enum class BoolBunch { Null, True, False, Perhaps, Improper };

BoolBunch classify(const Bunch& b);   // b must have type BOOL
Bunch toBunch(BoolBunch v);
std::string show(BoolBunch v);

// A =b B, A <b B: improper operands dominate; otherwise the pointwise
// comprehension over pairs of elements, so a null operand gives null.
Bunch eqB(const Bunch& a, const Bunch& b);
Bunch ltB(const Bunch& a, const Bunch& b);

// E ∈b S: pointwise membership of elements of E in set-elements of S.
Bunch memB(const Bunch& e, const Bunch& s);

// A ∧b B by the five-valued truth table. The table is not the pointwise
// lifting: F conjoined with no-information is still F.
Bunch andB(const Bunch& a, const Bunch& b);

// Negation and disjunction have no settled table; deliberately unimplemented.
Bunch notB(const Bunch& a);
Bunch orB(const Bunch& a, const Bunch& b);

} // namespace bt
