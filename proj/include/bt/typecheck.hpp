#pragma once

#include "bt/ast.hpp"
#include "bt/decls.hpp"

namespace bt {

// Binder types overlay the declared variable types.
using TypeScope = std::map<std::string, TypePtr>;

TypeScope scopeFromEnv(const Env& env);

// Full static checks; throw TypeError with a readable message on failure.
TypePtr typecheckExpr(const ExprP& e, const Decls& d, const TypeScope& scope);
void typecheckPred(const PredP& p, const Decls& d, const TypeScope& scope);
void typecheckCmd(const CmdP& c, const Decls& d);

// Resolve a binder's type: the annotation if present, otherwise inferred from
// the first constraining use in the body (x ∈ S, x = E, x : E, arithmetic).
TypePtr binderTypeE(const std::string& x, const TypeAnn& ann, const ExprP& body,
                    const Decls& d, const TypeScope& scope);
TypePtr binderTypeP(const std::string& x, const TypeAnn& ann, const PredP& body,
                    const Decls& d, const TypeScope& scope);

// Enumeration context narrowed by a binder annotation's range, if any.
EnumCtx annCtx(const TypeAnn& ann, const EnumCtx& base);

} // namespace bt
