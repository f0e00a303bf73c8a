#include "bt/typecheck.hpp"

namespace bt {

TypeScope scopeFromEnv(const Env& env) {
    TypeScope s;
    for (const auto& [name, b] : env.vars) s[name] = b.type;
    return s;
}

static TypePtr lookupVar(const std::string& name, const Decls& d, const TypeScope& scope) {
    auto it = scope.find(name);
    if (it != scope.end()) return it->second;
    if (TypePtr t = d.typeOfVar(name)) return t;
    throw TypeError("undeclared name '" + name + "'");
}

static void requireEq(const TypePtr& a, const TypePtr& b, const char* what) {
    if (!sameType(a, b))
        throw TypeError(std::string(what) + " over different types: " + show(a) + " vs " +
                        show(b));
}

EnumCtx annCtx(const TypeAnn& ann, const EnumCtx& base) {
    EnumCtx c = base;
    if (ann.range) {
        c.intLo = ann.range->first;
        c.intHi = ann.range->second;
    }
    return c;
}

// ---- binder inference -------------------------------------------------------

namespace {

// Try to typecheck an expression that may mention the binder; failure means
// "this side doesn't constrain the binder", not an error.
std::optional<TypePtr> tryType(const ExprP& e, const Decls& d, const TypeScope& scope) {
    try {
        return typecheckExpr(e, d, scope);
    } catch (const Error&) {
        return std::nullopt;
    }
}

bool mentions(const ExprP& e, const std::string& x);
bool mentionsP(const PredP& p, const std::string& x) {
    if (!p) return false;
    if ((p->kind == PredKind::Forall || p->kind == PredKind::Exists) && p->binder == x)
        return false;  // shadowed
    return mentions(p->a, x) || mentions(p->b, x) || mentionsP(p->p, x) || mentionsP(p->q, x);
}
bool mentions(const ExprP& e, const std::string& x) {
    if (!e) return false;
    if (e->kind == ExprKind::Var) return e->name == x;
    if ((e->kind == ExprKind::Compr || e->kind == ExprKind::Lambda) && e->name == x)
        return false;  // shadowed
    return mentions(e->a, x) || mentions(e->b, x) || mentionsP(e->p, x);
}

// First constraining use of x wins. Returns nullptr when nothing constrains it.
TypePtr inferE(const std::string& x, const ExprP& e, const Decls& d, const TypeScope& scope);

TypePtr inferP(const std::string& x, const PredP& p, const Decls& d, const TypeScope& scope) {
    if (!p) return nullptr;
    if ((p->kind == PredKind::Forall || p->kind == PredKind::Exists) && p->binder == x)
        return nullptr;
    switch (p->kind) {
        case PredKind::Cmp:
        case PredKind::SubB: {
            bool la = mentions(p->a, x), lb = mentions(p->b, x);
            if (la && !lb)
                if (auto t = tryType(p->b, d, scope)) return *t;
            if (lb && !la)
                if (auto t = tryType(p->a, d, scope)) return *t;
            break;
        }
        case PredKind::MemB: {
            if (p->a && p->a->kind == ExprKind::Var && p->a->name == x)
                if (auto t = tryType(p->b, d, scope))
                    if (*t && (*t)->kind == TypeKind::Set) return (*t)->left;
            break;
        }
        default:
            break;
    }
    if (auto t = inferE(x, p->a, d, scope)) return t;
    if (auto t = inferE(x, p->b, d, scope)) return t;
    if (auto t = inferP(x, p->p, d, scope)) return t;
    return inferP(x, p->q, d, scope);
}

TypePtr inferE(const std::string& x, const ExprP& e, const Decls& d, const TypeScope& scope) {
    if (!e) return nullptr;
    if ((e->kind == ExprKind::Compr || e->kind == ExprKind::Lambda) && e->name == x)
        return nullptr;
    switch (e->kind) {
        case ExprKind::Arith:
        case ExprKind::Neg:
            if (mentions(e->a, x) || mentions(e->b, x)) return Type::integer();
            break;
        case ExprKind::Apply:
            if (e->b && e->b->kind == ExprKind::Var && e->b->name == x)
                if (auto t = tryType(e->a, d, scope))
                    if (*t && (*t)->kind == TypeKind::Set &&
                        (*t)->left->kind == TypeKind::Pair)
                        return (*t)->left->left;
            break;
        case ExprKind::Union:
        case ExprKind::IntersectE:
        case ExprKind::DiffE: {
            bool la = mentions(e->a, x), lb = mentions(e->b, x);
            if (la && !lb)
                if (auto t = tryType(e->b, d, scope)) return *t;
            if (lb && !la)
                if (auto t = tryType(e->a, d, scope)) return *t;
            break;
        }
        default:
            break;
    }
    if (auto t = inferE(x, e->a, d, scope)) return t;
    if (auto t = inferE(x, e->b, d, scope)) return t;
    return inferP(x, e->p, d, scope);
}

} // namespace

TypePtr binderTypeE(const std::string& x, const TypeAnn& ann, const ExprP& body,
                    const Decls& d, const TypeScope& scope) {
    if (ann.type) return ann.type;
    if (ann.range) return Type::integer();
    if (auto t = inferE(x, body, d, scope)) return t;
    throw TypeError("cannot infer the type of binder '" + x + "'; annotate it");
}

TypePtr binderTypeP(const std::string& x, const TypeAnn& ann, const PredP& body,
                    const Decls& d, const TypeScope& scope) {
    if (ann.type) return ann.type;
    if (ann.range) return Type::integer();
    if (auto t = inferP(x, body, d, scope)) return t;
    throw TypeError("cannot infer the type of binder '" + x + "'; annotate it");
}

// ---- checking ---------------------------------------------------------------

TypePtr typecheckExpr(const ExprP& e, const Decls& d, const TypeScope& scope) {
    if (!e) throw TypeError("missing expression");
    switch (e->kind) {
        case ExprKind::Lit:
            return typeOf(*e->lit);
        case ExprKind::NullLit:
        case ExprKind::BotLit:
            if (!e->ann) throw TypeError("null/improper literal without a type");
            return e->ann;
        case ExprKind::Var:
            return lookupVar(e->name, d, scope);
        case ExprKind::Union:
        case ExprKind::IntersectE:
        case ExprKind::DiffE: {
            TypePtr a = typecheckExpr(e->a, d, scope), b = typecheckExpr(e->b, d, scope);
            requireEq(a, b, "bunch operation");
            return a;
        }
        case ExprKind::GuardE:
        case ExprKind::PrecondE:
            typecheckPred(e->p, d, scope);
            return typecheckExpr(e->a, d, scope);
        case ExprKind::MapletE:
            return Type::pair(typecheckExpr(e->a, d, scope), typecheckExpr(e->b, d, scope));
        case ExprKind::Arith: {
            requireEq(typecheckExpr(e->a, d, scope), Type::integer(), "arithmetic");
            requireEq(typecheckExpr(e->b, d, scope), Type::integer(), "arithmetic");
            return Type::integer();
        }
        case ExprKind::Neg:
            requireEq(typecheckExpr(e->a, d, scope), Type::integer(), "negation");
            return Type::integer();
        case ExprKind::PackE:
            return Type::set(typecheckExpr(e->a, d, scope));
        case ExprKind::UnpackE: {
            TypePtr t = typecheckExpr(e->a, d, scope);
            if (t->kind != TypeKind::Set)
                throw TypeError("unpackaging a non-set " + show(t));
            return t->left;
        }
        case ExprKind::Compr: {
            TypePtr bt_ = binderTypeE(e->name, e->binder, e->a, d, scope);
            TypeScope inner = scope;
            inner[e->name] = bt_;
            return typecheckExpr(e->a, d, inner);
        }
        case ExprKind::Apply: {
            TypePtr f = typecheckExpr(e->a, d, scope);
            if (f->kind != TypeKind::Set || f->left->kind != TypeKind::Pair)
                throw TypeError("applying a non-relation " + show(f));
            requireEq(typecheckExpr(e->b, d, scope), f->left->left, "application");
            return f->left->right;
        }
        case ExprKind::WApply: {
            TypePtr f = typecheckExpr(e->a, d, scope);
            if (f->kind != TypeKind::Set || f->left->kind != TypeKind::Pair ||
                f->left->left->kind != TypeKind::Set)
                throw TypeError("wholistic application of " + show(f));
            requireEq(typecheckExpr(e->b, d, scope), f->left->left->left,
                      "wholistic application");
            if (f->left->right->kind != TypeKind::Set)
                throw TypeError("wholistic application needs a set-valued relation, got " +
                                show(f));
            return f->left->right->left;
        }
        case ExprKind::Lambda: {
            TypePtr bt_ = binderTypeE(e->name, e->binder, e->a, d, scope);
            TypeScope inner = scope;
            inner[e->name] = bt_;
            TypePtr body = typecheckExpr(e->a, d, inner);
            return Type::set(Type::pair(bt_, body));
        }
        case ExprKind::ResultsSet: {
            typecheckCmd(e->cmd, d);
            return Type::set(typecheckExpr(e->a, d, scope));
        }
        case ExprKind::IfE: {
            typecheckPred(e->p, d, scope);
            TypePtr a = typecheckExpr(e->a, d, scope), b = typecheckExpr(e->b, d, scope);
            requireEq(a, b, "conditional");
            return a;
        }
        case ExprKind::CardE:
            typecheckExpr(e->a, d, scope);
            return Type::integer();
        case ExprKind::BoolCall: {
            TypePtr a = typecheckExpr(e->a, d, scope), b = typecheckExpr(e->b, d, scope);
            switch (e->bfn) {
                case BoolFn::Eqb:
                case BoolFn::Ltb:
                    requireEq(a, b, "boolean-bunch comparison");
                    break;
                case BoolFn::Memb:
                    if (b->kind != TypeKind::Set || !sameType(a, b->left))
                        throw TypeError("∈b of " + show(a) + " in " + show(b));
                    break;
                case BoolFn::Andb:
                    requireEq(a, Type::boolean(), "∧b");
                    requireEq(b, Type::boolean(), "∧b");
                    break;
            }
            return Type::boolean();
        }
    }
    throw TypeError("unreachable expression kind");
}

void typecheckPred(const PredP& p, const Decls& d, const TypeScope& scope) {
    if (!p) throw TypeError("missing predicate");
    switch (p->kind) {
        case PredKind::True:
        case PredKind::False:
            return;
        case PredKind::Cmp: {
            TypePtr a = typecheckExpr(p->a, d, scope), b = typecheckExpr(p->b, d, scope);
            requireEq(a, b, "comparison");
            if (p->cop != CmpOp::Eq && p->cop != CmpOp::Ne) {
                if (a->kind != TypeKind::Int && a->kind != TypeKind::Char &&
                    a->kind != TypeKind::String)
                    throw TypeError("ordering on unordered type " + show(a));
            }
            return;
        }
        case PredKind::SubB: {
            TypePtr a = typecheckExpr(p->a, d, scope), b = typecheckExpr(p->b, d, scope);
            requireEq(a, b, "inclusion");
            return;
        }
        case PredKind::MemB: {
            TypePtr a = typecheckExpr(p->a, d, scope), b = typecheckExpr(p->b, d, scope);
            if (b->kind != TypeKind::Set || !sameType(a, b->left))
                throw TypeError("membership of " + show(a) + " in " + show(b));
            return;
        }
        case PredKind::Not:
            typecheckPred(p->p, d, scope);
            return;
        case PredKind::And:
        case PredKind::Or:
        case PredKind::Imp:
        case PredKind::Iff:
            typecheckPred(p->p, d, scope);
            typecheckPred(p->q, d, scope);
            return;
        case PredKind::Forall:
        case PredKind::Exists: {
            TypePtr bt_ = binderTypeP(p->binder, p->binderAnn, p->p, d, scope);
            TypeScope inner = scope;
            inner[p->binder] = bt_;
            typecheckPred(p->p, d, inner);
            return;
        }
    }
    throw TypeError("unreachable predicate kind");
}

void typecheckCmd(const CmdP& c, const Decls& d) {
    if (!c) throw TypeError("missing command");
    TypeScope scope;
    switch (c->kind) {
        case CmdKind::Skip:
            return;
        case CmdKind::Assign: {
            for (std::size_t i = 0; i < c->targets.size(); ++i) {
                TypePtr vt = d.typeOfVar(c->targets[i]);
                if (!vt) throw TypeError("assignment to undeclared '" + c->targets[i] + "'");
                requireEq(typecheckExpr(c->rhs[i], d, scope), vt,
                          "assignment");
            }
            return;
        }
        case CmdKind::Pre:
        case CmdKind::GuardC:
            typecheckPred(c->p, d, scope);
            typecheckCmd(c->s, d);
            return;
        case CmdKind::If:
            typecheckPred(c->p, d, scope);
            typecheckCmd(c->s, d);
            typecheckCmd(c->t, d);
            return;
        case CmdKind::Choice:
        case CmdKind::Seq:
        case CmdKind::Pref:
        case CmdKind::Prob:
            typecheckCmd(c->s, d);
            typecheckCmd(c->t, d);
            return;
    }
    throw TypeError("unreachable command kind");
}

} // namespace bt
