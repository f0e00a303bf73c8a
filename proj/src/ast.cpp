#include "bt/ast.hpp"

#include <algorithm>
#include <set>

namespace bt {

static std::shared_ptr<Expr> mk(ExprKind k) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    return e;
}

ExprP lit(Value v) {
    auto e = mk(ExprKind::Lit);
    e->lit = std::move(v);
    return e;
}
ExprP litInt(long long n) { return lit(Value::intv(n)); }
ExprP nullLit(TypePtr t) {
    auto e = mk(ExprKind::NullLit);
    e->ann = std::move(t);
    return e;
}
ExprP botLit(TypePtr t) {
    auto e = mk(ExprKind::BotLit);
    e->ann = std::move(t);
    return e;
}
ExprP var(std::string name) {
    auto e = mk(ExprKind::Var);
    e->name = std::move(name);
    return e;
}
static std::shared_ptr<Expr> mk2(ExprKind k, ExprP a, ExprP b) {
    auto e = mk(k);
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}
ExprP binop(ExprKind k, ExprP a, ExprP b) { return mk2(k, std::move(a), std::move(b)); }
ExprP arith(ArithOp op, ExprP a, ExprP b) {
    auto e = mk2(ExprKind::Arith, std::move(a), std::move(b));
    e->aop = op;
    return e;
}
ExprP neg(ExprP a) {
    auto e = mk(ExprKind::Neg);
    e->a = std::move(a);
    return e;
}
ExprP guardE(PredP p, ExprP a) {
    auto e = mk(ExprKind::GuardE);
    e->p = std::move(p);
    e->a = std::move(a);
    return e;
}
ExprP precondE(PredP p, ExprP a) {
    auto e = mk(ExprKind::PrecondE);
    e->p = std::move(p);
    e->a = std::move(a);
    return e;
}
ExprP packE(ExprP a) {
    auto e = mk(ExprKind::PackE);
    e->a = std::move(a);
    return e;
}
ExprP unpackE(ExprP a) {
    auto e = mk(ExprKind::UnpackE);
    e->a = std::move(a);
    return e;
}
ExprP compr(std::string x, TypeAnn ann, ExprP body) {
    auto e = mk(ExprKind::Compr);
    e->name = std::move(x);
    e->binder = std::move(ann);
    e->a = std::move(body);
    return e;
}
ExprP apply(ExprP f, ExprP a) { return binop(ExprKind::Apply, std::move(f), std::move(a)); }
ExprP wapply(ExprP f, ExprP x) { return binop(ExprKind::WApply, std::move(f), std::move(x)); }
ExprP lambda(std::string x, TypeAnn ann, ExprP body) {
    auto e = mk(ExprKind::Lambda);
    e->name = std::move(x);
    e->binder = std::move(ann);
    e->a = std::move(body);
    return e;
}
ExprP resultsSet(CmdP s, ExprP e0) {
    auto e = mk(ExprKind::ResultsSet);
    e->cmd = std::move(s);
    e->a = std::move(e0);
    return e;
}
ExprP ifE(PredP p, ExprP a, ExprP b) {
    auto e = mk(ExprKind::IfE);
    e->p = std::move(p);
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}
ExprP cardE(ExprP a) {
    auto e = mk(ExprKind::CardE);
    e->a = std::move(a);
    return e;
}
ExprP boolCall(BoolFn fn, ExprP a, ExprP b) {
    auto e = mk2(ExprKind::BoolCall, std::move(a), std::move(b));
    e->bfn = fn;
    return e;
}

static std::shared_ptr<Pred> mkp(PredKind k) {
    auto p = std::make_shared<Pred>();
    p->kind = k;
    return p;
}

PredP ptrue() { return mkp(PredKind::True); }
PredP pfalse() { return mkp(PredKind::False); }
PredP cmp(CmpOp op, ExprP a, ExprP b) {
    auto p = mkp(PredKind::Cmp);
    p->cop = op;
    p->a = std::move(a);
    p->b = std::move(b);
    return p;
}
PredP subB(ExprP a, ExprP b) {
    auto p = mkp(PredKind::SubB);
    p->a = std::move(a);
    p->b = std::move(b);
    return p;
}
PredP memB(ExprP a, ExprP b) {
    auto p = mkp(PredKind::MemB);
    p->a = std::move(a);
    p->b = std::move(b);
    return p;
}
PredP pnot(PredP p) {
    auto q = mkp(PredKind::Not);
    q->p = std::move(p);
    return q;
}
PredP pbin(PredKind k, PredP p, PredP q) {
    auto r = mkp(k);
    r->p = std::move(p);
    r->q = std::move(q);
    return r;
}
PredP quant(PredKind k, std::string x, TypeAnn ann, PredP body) {
    auto r = mkp(k);
    r->binder = std::move(x);
    r->binderAnn = std::move(ann);
    r->p = std::move(body);
    return r;
}

static std::shared_ptr<Cmd> mkc(CmdKind k) {
    auto c = std::make_shared<Cmd>();
    c->kind = k;
    return c;
}

CmdP skip() { return mkc(CmdKind::Skip); }
CmdP assign(std::vector<std::string> xs, std::vector<ExprP> es) {
    if (xs.empty() || xs.size() != es.size())
        throw TypeError("assignment needs as many expressions as targets");
    auto c = mkc(CmdKind::Assign);
    c->targets = std::move(xs);
    c->rhs = std::move(es);
    return c;
}
CmdP pre(PredP p, CmdP s) {
    auto c = mkc(CmdKind::Pre);
    c->p = std::move(p);
    c->s = std::move(s);
    return c;
}
CmdP guardC(PredP p, CmdP s) {
    auto c = mkc(CmdKind::GuardC);
    c->p = std::move(p);
    c->s = std::move(s);
    return c;
}
static std::shared_ptr<Cmd> two(CmdKind k, CmdP s, CmdP t) {
    auto c = mkc(k);
    c->s = std::move(s);
    c->t = std::move(t);
    return c;
}
CmdP choice(CmdP s, CmdP t) { return two(CmdKind::Choice, std::move(s), std::move(t)); }
CmdP seq(CmdP s, CmdP t) { return two(CmdKind::Seq, std::move(s), std::move(t)); }
CmdP pref(CmdP s, CmdP t) { return two(CmdKind::Pref, std::move(s), std::move(t)); }
CmdP prob(Rat p, CmdP s, CmdP t) {
    if (p <= Rat(0) || p >= Rat(1))
        throw TypeError("probability must lie strictly between 0 and 1");
    auto c = two(CmdKind::Prob, std::move(s), std::move(t));
    c->prob = p;
    return c;
}
CmdP ifC(PredP p, CmdP s, CmdP t) {
    auto c = two(CmdKind::If, std::move(s), std::move(t));
    c->p = std::move(p);
    return c;
}
CmdP abortCmd() { return pre(pfalse(), skip()); }
CmdP magicCmd() { return guardC(pfalse(), skip()); }

static void collectWrites(const CmdP& c, std::set<std::string>& out) {
    if (!c) return;
    if (c->kind == CmdKind::Assign)
        for (const auto& x : c->targets) out.insert(x);
    collectWrites(c->s, out);
    collectWrites(c->t, out);
}

std::vector<std::string> writeSet(const CmdP& c) {
    std::set<std::string> s;
    collectWrites(c, s);
    return {s.begin(), s.end()};
}

bool containsKind(const CmdP& c, CmdKind k) {
    if (!c) return false;
    return c->kind == k || containsKind(c->s, k) || containsKind(c->t, k);
}

} // namespace bt
