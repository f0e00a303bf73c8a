#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "bt/env.hpp"

namespace bt {

struct Expr;
struct Pred;
struct Cmd;
using ExprP = std::shared_ptr<const Expr>;
using PredP = std::shared_ptr<const Pred>;
using CmdP = std::shared_ptr<const Cmd>;

enum class ArithOp { Add, Sub, Mul, Div, Mod };
enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };
enum class BoolFn { Eqb, Ltb, Memb, Andb };

// Binder annotation: a type, optionally narrowed to an INT range.
struct TypeAnn {
    TypePtr type;  // null = infer from the body
    std::optional<std::pair<long long, long long>> range;
};

enum class ExprKind {
    Lit,         // elementary literal
    NullLit,     // null:T
    BotLit,      // improper:T
    Var,
    Union,       // a , b
    IntersectE,  // a ' b
    DiffE,       // a \ b
    GuardE,      // p ->> a
    PrecondE,    // p |>> a
    MapletE,     // a |-> b
    Arith,       // a op b
    Neg,         // -a
    PackE,       // {a}
    UnpackE,     // ~a
    Compr,       // % x @ a
    Apply,       // a(b)
    WApply,      // a.b
    Lambda,      // lam x : ann @ a
    ResultsSet,  // {S <> a}
    IfE,         // if p then a else b end
    CardE,       // card(a)
    BoolCall,    // eqb/ltb/memb/andb(a, b)
};

struct Expr {
    ExprKind kind;
    std::optional<Value> lit;
    TypePtr ann;        // NullLit / BotLit
    std::string name;   // Var; binder of Compr / Lambda
    TypeAnn binder;     // Compr / Lambda
    ExprP a, b;
    PredP p;
    CmdP cmd;           // ResultsSet
    ArithOp aop{};
    BoolFn bfn{};
};

enum class PredKind { True, False, Cmp, SubB, MemB, Not, And, Or, Imp, Iff, Forall, Exists };

struct Pred {
    PredKind kind;
    CmpOp cop{};
    ExprP a, b;
    PredP p, q;
    std::string binder;  // Forall / Exists
    TypeAnn binderAnn;
};

enum class CmdKind { Skip, Assign, Pre, GuardC, Choice, Seq, Pref, Prob, If };

struct Cmd {
    CmdKind kind;
    std::vector<std::string> targets;  // Assign, positional
    std::vector<ExprP> rhs;
    PredP p;   // Pre / GuardC / If condition
    CmdP s, t;
    Rat prob;  // Prob
};

// --- constructors -----------------------------------------------------------

ExprP lit(Value v);
ExprP litInt(long long n);
ExprP nullLit(TypePtr t);
ExprP botLit(TypePtr t);
ExprP var(std::string name);
ExprP binop(ExprKind k, ExprP a, ExprP b);
ExprP arith(ArithOp op, ExprP a, ExprP b);
ExprP neg(ExprP a);
ExprP guardE(PredP p, ExprP a);
ExprP precondE(PredP p, ExprP a);
ExprP packE(ExprP a);
ExprP unpackE(ExprP a);
ExprP compr(std::string x, TypeAnn ann, ExprP body);
ExprP apply(ExprP f, ExprP a);
ExprP wapply(ExprP f, ExprP x);
ExprP lambda(std::string x, TypeAnn ann, ExprP body);
ExprP resultsSet(CmdP s, ExprP e);
ExprP ifE(PredP p, ExprP a, ExprP b);
ExprP cardE(ExprP a);
ExprP boolCall(BoolFn fn, ExprP a, ExprP b);

PredP ptrue();
PredP pfalse();
PredP cmp(CmpOp op, ExprP a, ExprP b);
PredP subB(ExprP a, ExprP b);
PredP memB(ExprP a, ExprP b);
PredP pnot(PredP p);
PredP pbin(PredKind k, PredP p, PredP q);
PredP quant(PredKind k, std::string x, TypeAnn ann, PredP body);

CmdP skip();
CmdP assign(std::vector<std::string> xs, std::vector<ExprP> es);
CmdP pre(PredP p, CmdP s);
CmdP guardC(PredP p, CmdP s);
CmdP choice(CmdP s, CmdP t);
CmdP seq(CmdP s, CmdP t);
CmdP pref(CmdP s, CmdP t);
CmdP prob(Rat p, CmdP s, CmdP t);
CmdP ifC(PredP p, CmdP s, CmdP t);
CmdP abortCmd();  // false | skip
CmdP magicCmd();  // false ==> skip

// Syntactic write frame: every Assign target below c.
std::vector<std::string> writeSet(const CmdP& c);
bool containsKind(const CmdP& c, CmdKind k);

} // namespace bt
