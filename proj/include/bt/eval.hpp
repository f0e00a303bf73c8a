#pragma once

#include "bt/typecheck.hpp"

namespace bt {

// Expression evaluation over an environment. Total: partiality shows up as
// null, failure as the improper bunch, never as control flow — only genuine
// misuse (type errors, unbound names, enumeration blow-ups) throws.
Bunch evalExpr(const ExprP& e, const Env& env, const Decls& d);

// Classical two-valued predicates over bunches.
bool evalPred(const PredP& p, const Env& env, const Decls& d);

} // namespace bt
