#pragma once

#include "bt/decls.hpp"
#include "bt/render.hpp"

namespace bt {

// Surface syntax. Unicode operators and their ASCII spellings lex to the
// same tokens: ->> and the right-tailed arrow, |>> , |-> , <> , [] , >> ,
// ==> , <+>p , !! , % , @ , & , \/ , ! , => , <=> , in , != , <= , >= .
// Declarations come from outside (Decls): given-set atoms parse as literals,
// anything else as a variable.

struct PvQuery {
    CmdP prog;
    ExprP expr;
};

enum class NodeKind { Expr, Pred, Cmd, Query };

struct AnyNode {
    NodeKind kind;
    ExprP e;
    PredP p;
    CmdP c;
    PvQuery q;
};

// Each entry point consumes the whole string or throws ParseError (with a
// byte offset). parsePred accepts a bare boolean-valued expression e and
// reads it as e = T.
ExprP parseExpr(const std::string& text, const Decls& d);
PredP parsePred(const std::string& text, const Decls& d);
CmdP parseCmd(const std::string& text, const Decls& d);
PvQuery parsePvQuery(const std::string& text, const Decls& d);  // S <> E
AnyNode parseAny(const std::string& text, const Decls& d);

// Type syntax as printed by show(TypePtr): INT, BOOL, CHAR, STRING, a given
// set's name, PAIR(T,U), SET(T).
TypePtr parseType(const std::string& text, const Decls& d);

// A binder/declaration annotation: a type, with an optional (lo..hi) range
// after INT.
TypeAnn parseTypeAnn(const std::string& text, const Decls& d);

} // namespace bt
