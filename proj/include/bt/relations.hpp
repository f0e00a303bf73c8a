#pragma once

#include "bt/enumerate.hpp"

namespace bt {

// Functions are extensional here: a relation is a bunch whose elements are
// sets of pairs, i.e. a bunch of type SET(PAIR(T,U)). A bunch of several
// relations applied to a bunch of several arguments yields the union of all
// matching results, so application is inherently lifted.

// F(A): improper if F or A is; otherwise the union of b over every pair
// a |-> b of every set in F with a in A. Null when nothing matches.
Bunch applyRel(const Bunch& f, const Bunch& a);

// f.X = ~ f{X}: apply f to the package of X, then unpackage. Requires the
// result type of f to be a set type (every relation built by bigLambda is of
// that shape); inherits null from applyRel.
Bunch wholisticApply(const Bunch& f, const Bunch& x);

// λx • body over an explicit element domain: the relation element
// { a |-> b  |  a in domain, b in body(a) }. body(a) = null omits a from the
// domain of the result; an improper body is not representable and throws.
Bunch lambdaExt(const std::vector<Value>& domain, const TypePtr& resultType,
                const std::function<Bunch(const Value&)>& body);

// ΛX • body: the wholistic abstraction λz • {body(~z)} with z ranging over
// all sets of elemType within ctx. Pairs each set z with the package of
// body applied to the contents of z.
Bunch bigLambda(const TypePtr& elemType, const EnumCtx& ctx,
                const std::function<Bunch(const Bunch&)>& body);

// Diagrammatic composition (f then g) of elementary or lifted relations:
// every pair a |-> c such that a |-> b in some set of f and b |-> c in some
// set of g, collected per set-pair.
Bunch composeRel(const Bunch& f, const Bunch& g);

// f^n as a relation; n = 0 is the identity on the domain side of f.
Bunch iterateRel(const Bunch& f, int n);

} // namespace bt
