#include "bt/eval.hpp"

#include "bt/boolbunch.hpp"
#include "bt/pv.hpp"
#include "bt/relations.hpp"

namespace bt {

namespace {

std::optional<Value> arithValue(ArithOp op, const Value& x, const Value& y) {
    const Rat& a = x.num;
    const Rat& b = y.num;
    switch (op) {
        case ArithOp::Add: return Value::intv(a + b);
        case ArithOp::Sub: return Value::intv(a - b);
        case ArithOp::Mul: return Value::intv(a * b);
        case ArithOp::Div:
            if (b == Rat(0)) return std::nullopt;  // division by zero: no result
            return Value::intv(a / b);
        case ArithOp::Mod: {
            if (b == Rat(0) || a.denominator() != 1 || b.denominator() != 1)
                return std::nullopt;
            long long m = b.numerator();
            long long r = a.numerator() % m;
            if (r != 0 && ((r < 0) != (m < 0))) r += m;  // floored remainder
            return Value::intv(r);
        }
    }
    return std::nullopt;
}

} // namespace

Bunch evalExpr(const ExprP& e, const Env& env, const Decls& d) {
    if (!e) throw EvalError("missing expression");
    switch (e->kind) {
        case ExprKind::Lit:
            return Bunch::unit(*e->lit);
        case ExprKind::NullLit:
            return Bunch::null(e->ann);
        case ExprKind::BotLit:
            return Bunch::bottom(e->ann);
        case ExprKind::Var:
            return env.at(e->name);
        case ExprKind::Union:
            return bunchUnion(evalExpr(e->a, env, d), evalExpr(e->b, env, d));
        case ExprKind::IntersectE:
            return intersect(evalExpr(e->a, env, d), evalExpr(e->b, env, d));
        case ExprKind::DiffE:
            return diff(evalExpr(e->a, env, d), evalExpr(e->b, env, d));
        case ExprKind::GuardE: {
            // the guarded expression stays unevaluated unless the guard holds
            TypePtr t = typecheckExpr(e->a, d, scopeFromEnv(env));
            return guard(evalPred(e->p, env, d), t,
                         [&] { return evalExpr(e->a, env, d); });
        }
        case ExprKind::PrecondE:
            return precond(evalPred(e->p, env, d), evalExpr(e->a, env, d));
        case ExprKind::MapletE:
            return maplet(evalExpr(e->a, env, d), evalExpr(e->b, env, d));
        case ExprKind::Arith: {
            ArithOp op = e->aop;
            return liftBinary(Type::integer(), evalExpr(e->a, env, d),
                              evalExpr(e->b, env, d),
                              [op](const Value& x, const Value& y) {
                                  return arithValue(op, x, y);
                              });
        }
        case ExprKind::Neg:
            return liftUnary(Type::integer(), evalExpr(e->a, env, d), [](const Value& x) {
                return std::optional<Value>(Value::intv(-x.num));
            });
        case ExprKind::PackE:
            return pack(evalExpr(e->a, env, d));
        case ExprKind::UnpackE:
            return unpack(evalExpr(e->a, env, d));
        case ExprKind::Compr: {
            TypeScope scope = scopeFromEnv(env);
            TypePtr bt_ = binderTypeE(e->name, e->binder, e->a, d, scope);
            TypeScope inner = scope;
            inner[e->name] = bt_;
            TypePtr rt = typecheckExpr(e->a, d, inner);
            auto domain = enumerateType(bt_, annCtx(e->binder, d.enumCtx));
            return comprehension(domain, rt, [&](const Value& v) {
                return evalExpr(e->a, env.with(e->name, Bunch::unit(v)), d);
            });
        }
        case ExprKind::Apply:
            return applyRel(evalExpr(e->a, env, d), evalExpr(e->b, env, d));
        case ExprKind::WApply:
            return wholisticApply(evalExpr(e->a, env, d), evalExpr(e->b, env, d));
        case ExprKind::Lambda: {
            TypeScope scope = scopeFromEnv(env);
            TypePtr bt_ = binderTypeE(e->name, e->binder, e->a, d, scope);
            TypeScope inner = scope;
            inner[e->name] = bt_;
            TypePtr rt = typecheckExpr(e->a, d, inner);
            auto domain = enumerateType(bt_, annCtx(e->binder, d.enumCtx));
            return lambdaExt(domain, rt, [&](const Value& v) {
                return evalExpr(e->a, env.with(e->name, Bunch::unit(v)), d);
            });
        }
        case ExprKind::ResultsSet:
            return pack(pv(e->cmd, e->a, env, d));
        case ExprKind::IfE:
            // (p ↣ a) , (¬p ↣ b): exactly one branch is ever inspected
            return evalPred(e->p, env, d) ? evalExpr(e->a, env, d)
                                          : evalExpr(e->b, env, d);
        case ExprKind::CardE:
            return Bunch::unit(Value::intv(cardinality(evalExpr(e->a, env, d))));
        case ExprKind::BoolCall: {
            Bunch a = evalExpr(e->a, env, d), b = evalExpr(e->b, env, d);
            switch (e->bfn) {
                case BoolFn::Eqb: return eqB(a, b);
                case BoolFn::Ltb: return ltB(a, b);
                case BoolFn::Memb: return memB(a, b);
                case BoolFn::Andb: return andB(a, b);
            }
            throw EvalError("unreachable boolean call");
        }
    }
    throw EvalError("unreachable expression kind");
}

bool evalPred(const PredP& p, const Env& env, const Decls& d) {
    if (!p) throw EvalError("missing predicate");
    switch (p->kind) {
        case PredKind::True:
            return true;
        case PredKind::False:
            return false;
        case PredKind::Cmp: {
            Bunch a = evalExpr(p->a, env, d), b = evalExpr(p->b, env, d);
            if (p->cop == CmpOp::Eq) return a == b;
            // the other comparisons are lifted relations: true iff every pair
            // of elements is related; vacuous over null, false over improper
            if (a.improper || b.improper) return false;
            for (const auto& x : a.elems)
                for (const auto& y : b.elems) {
                    int c = compareValues(x, y);
                    bool ok = false;
                    switch (p->cop) {
                        case CmpOp::Ne: ok = c != 0; break;
                        case CmpOp::Lt: ok = c < 0; break;
                        case CmpOp::Le: ok = c <= 0; break;
                        case CmpOp::Gt: ok = c > 0; break;
                        case CmpOp::Ge: ok = c >= 0; break;
                        case CmpOp::Eq: break;
                    }
                    if (!ok) return false;
                }
            return true;
        }
        case PredKind::SubB:
            return subBunch(evalExpr(p->a, env, d), evalExpr(p->b, env, d));
        case PredKind::MemB:
            return member(evalExpr(p->a, env, d), evalExpr(p->b, env, d));
        case PredKind::Not:
            return !evalPred(p->p, env, d);
        case PredKind::And:
            return evalPred(p->p, env, d) && evalPred(p->q, env, d);
        case PredKind::Or:
            return evalPred(p->p, env, d) || evalPred(p->q, env, d);
        case PredKind::Imp:
            return !evalPred(p->p, env, d) || evalPred(p->q, env, d);
        case PredKind::Iff:
            return evalPred(p->p, env, d) == evalPred(p->q, env, d);
        case PredKind::Forall:
        case PredKind::Exists: {
            TypeScope scope = scopeFromEnv(env);
            TypePtr bt_ = binderTypeP(p->binder, p->binderAnn, p->p, d, scope);
            auto domain = enumerateType(bt_, annCtx(p->binderAnn, d.enumCtx));
            bool forall = p->kind == PredKind::Forall;
            for (const auto& v : domain) {
                bool r = evalPred(p->p, env.with(p->binder, Bunch::unit(v)), d);
                if (forall && !r) return false;
                if (!forall && r) return true;
            }
            return forall;
        }
    }
    throw EvalError("unreachable predicate kind");
}

} // namespace bt
