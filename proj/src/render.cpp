#include "bt/render.hpp"

#include <sstream>

namespace bt {

namespace {

std::string wrap(const std::string& s, int level, int slot) {
    if (level < slot) return "(" + s + ")";
    return s;
}

std::string arithSym(ArithOp op) {
    switch (op) {
        case ArithOp::Add: return "+";
        case ArithOp::Sub: return "-";
        case ArithOp::Mul: return "*";
        case ArithOp::Div: return "/";
        case ArithOp::Mod: return "mod";
    }
    return "?";
}

int arithLevel(ArithOp op) {
    return (op == ArithOp::Add || op == ArithOp::Sub) ? prec::AddSub : prec::MulDiv;
}

std::string cmpSym(CmpOp op) {
    switch (op) {
        case CmpOp::Eq: return "=";
        case CmpOp::Ne: return "!=";
        case CmpOp::Lt: return "<";
        case CmpOp::Le: return "<=";
        case CmpOp::Gt: return ">";
        case CmpOp::Ge: return ">=";
    }
    return "?";
}

std::string boolFnName(BoolFn fn) {
    switch (fn) {
        case BoolFn::Eqb: return "eqb";
        case BoolFn::Ltb: return "ltb";
        case BoolFn::Memb: return "memb";
        case BoolFn::Andb: return "andb";
    }
    return "?";
}

std::string rE(const ExprP& e, int slot);
std::string rP(const PredP& p, int slot);
std::string rC(const CmdP& c, int slot);

// Literal values of pair kind print with an infix |->, negative numbers with
// a leading minus; both need the corresponding operator level.
int litLevel(const Value& v) {
    if (v.kind == ValueKind::Pair) return prec::Maplet;
    if (v.kind == ValueKind::Int && v.num < Rat(0)) return prec::Prefix;
    return prec::Primary;
}

std::string rE(const ExprP& e, int slot) {
    using K = ExprKind;
    switch (e->kind) {
        case K::Lit:
            return wrap(show(*e->lit), litLevel(*e->lit), slot);
        case K::NullLit:
            return "null:" + show(e->ann);
        case K::BotLit:
            return "improper:" + show(e->ann);
        case K::Var:
            return e->name;
        case K::Union:
            return wrap(rE(e->a, prec::Bunch) + " , " + rE(e->b, prec::Bunch + 1),
                        prec::Bunch, slot);
        case K::IntersectE:
            return wrap(rE(e->a, prec::Bunch) + " ' " + rE(e->b, prec::Bunch + 1),
                        prec::Bunch, slot);
        case K::DiffE:
            return wrap(rE(e->a, prec::Bunch) + " \\ " + rE(e->b, prec::Bunch + 1),
                        prec::Bunch, slot);
        case K::GuardE:
            return wrap(rP(e->p, prec::Guard + 1) + " ->> " + rE(e->a, prec::Guard),
                        prec::Guard, slot);
        case K::PrecondE:
            return wrap(rP(e->p, prec::Guard + 1) + " |>> " + rE(e->a, prec::Guard),
                        prec::Guard, slot);
        case K::MapletE:
            return wrap(rE(e->a, prec::Maplet) + " |-> " + rE(e->b, prec::Maplet + 1),
                        prec::Maplet, slot);
        case K::Arith: {
            int lv = arithLevel(e->aop);
            return wrap(rE(e->a, lv) + " " + arithSym(e->aop) + " " + rE(e->b, lv + 1),
                        lv, slot);
        }
        case K::Neg:
            return wrap("-" + rE(e->a, prec::Prefix), prec::Prefix, slot);
        case K::PackE:
            return "{" + rE(e->a, 0) + "}";
        case K::UnpackE:
            return wrap("~" + rE(e->a, prec::Prefix), prec::Prefix, slot);
        case K::Compr:
            return wrap("% " + e->name + renderAnn(e->binder) + " @ " + rE(e->a, prec::Body),
                        prec::Body, slot);
        case K::Apply:
            // An argument at bunch level would read back as a pair of
            // arguments, so it keeps its parentheses.
            return wrap(rE(e->a, prec::App) + "(" + rE(e->b, prec::Bunch + 1) + ")",
                        prec::App, slot);
        case K::WApply:
            return wrap(rE(e->a, prec::App) + "." + rE(e->b, prec::App + 1),
                        prec::App, slot);
        case K::Lambda:
            return wrap("lam " + e->name + renderAnn(e->binder) + " @ " + rE(e->a, prec::Body),
                        prec::Body, slot);
        case K::ResultsSet:
            return "{" + rC(e->cmd, 0) + " <> " + rE(e->a, prec::Diamond) + "}";
        case K::IfE:
            return "if " + rP(e->p, 0) + " then " + rE(e->a, 0) + " else " + rE(e->b, 0) +
                   " end";
        case K::CardE:
            return "card(" + rE(e->a, 0) + ")";
        case K::BoolCall:
            return boolFnName(e->bfn) + "(" + rE(e->a, prec::Bunch + 1) + ", " +
                   rE(e->b, prec::Bunch + 1) + ")";
    }
    return "?";
}

int cmpLevel(CmpOp op) {
    return (op == CmpOp::Eq || op == CmpOp::Ne) ? prec::Equal : prec::Rel;
}

std::string rP(const PredP& p, int slot) {
    using K = PredKind;
    switch (p->kind) {
        case K::True:
            return "true";
        case K::False:
            return "false";
        case K::Cmp: {
            int lv = cmpLevel(p->cop);
            return wrap(rE(p->a, lv + 1) + " " + cmpSym(p->cop) + " " + rE(p->b, lv + 1),
                        lv, slot);
        }
        case K::SubB:
            return wrap(rE(p->a, prec::Member + 1) + " : " + rE(p->b, prec::Member + 1),
                        prec::Member, slot);
        case K::MemB:
            return wrap(rE(p->a, prec::Member + 1) + " in " + rE(p->b, prec::Member + 1),
                        prec::Member, slot);
        case K::Not: {
            std::string inner = rP(p->p, prec::Prefix);
            // "!!" would lex as the improper-bunch token
            if (!inner.empty() && inner[0] == '!') inner = " " + inner;
            return wrap("!" + inner, prec::Prefix, slot);
        }
        case K::And:
            return wrap(rP(p->p, prec::AndP) + " & " + rP(p->q, prec::AndP + 1),
                        prec::AndP, slot);
        case K::Or:
            return wrap(rP(p->p, prec::OrP) + " \\/ " + rP(p->q, prec::OrP + 1),
                        prec::OrP, slot);
        case K::Imp:
            return wrap(rP(p->p, prec::ImpP + 1) + " => " + rP(p->q, prec::ImpP),
                        prec::ImpP, slot);
        case K::Iff:
            return wrap(rP(p->p, prec::IffP) + " <=> " + rP(p->q, prec::IffP + 1),
                        prec::IffP, slot);
        case K::Forall:
            return wrap("forall " + p->binder + renderAnn(p->binderAnn) + " @ " +
                            rP(p->p, prec::Body),
                        prec::Body, slot);
        case K::Exists:
            return wrap("exists " + p->binder + renderAnn(p->binderAnn) + " @ " +
                            rP(p->p, prec::Body),
                        prec::Body, slot);
    }
    return "?";
}

std::string rC(const CmdP& c, int slot) {
    using K = CmdKind;
    switch (c->kind) {
        case K::Skip:
            return "skip";
        case K::Assign: {
            std::ostringstream os;
            for (std::size_t i = 0; i < c->targets.size(); ++i)
                os << (i ? " , " : "") << c->targets[i];
            os << " := ";
            if (c->rhs.size() == 1) {
                os << rE(c->rhs[0], prec::Assign);
            } else {
                // Per-target expressions: a bunch-level expression must keep
                // its parentheses or it would be re-split across targets.
                for (std::size_t i = 0; i < c->rhs.size(); ++i)
                    os << (i ? " , " : "") << rE(c->rhs[i], prec::Bunch + 1);
            }
            return wrap(os.str(), prec::Assign, slot);
        }
        case K::Pre:
            return wrap(rP(c->p, prec::PreCmd + 1) + " | " + rC(c->s, prec::PreCmd),
                        prec::PreCmd, slot);
        case K::GuardC:
            return wrap(rP(c->p, prec::GuardCmd + 1) + " ==> " + rC(c->s, prec::GuardCmd),
                        prec::GuardCmd, slot);
        case K::Choice:
            return wrap(rC(c->s, prec::ChoiceCmd) + " [] " + rC(c->t, prec::ChoiceCmd + 1),
                        prec::ChoiceCmd, slot);
        case K::Seq:
            return wrap(rC(c->s, prec::SeqCmd) + " ; " + rC(c->t, prec::SeqCmd + 1),
                        prec::SeqCmd, slot);
        case K::Pref:
            return wrap(rC(c->s, prec::PrefCmd) + " >> " + rC(c->t, prec::PrefCmd + 1),
                        prec::PrefCmd, slot);
        case K::Prob:
            return wrap(rC(c->s, prec::ChoiceCmd) + " <+>" + show(c->prob) + " " +
                            rC(c->t, prec::ChoiceCmd + 1),
                        prec::ChoiceCmd, slot);
        case K::If:
            return "if " + rP(c->p, 0) + " then " + rC(c->s, 0) + " else " + rC(c->t, 0) +
                   " end";
    }
    return "?";
}

}  // namespace

std::string renderAnn(const TypeAnn& ann) {
    if (!ann.type) return "";
    std::string out = ":" + show(ann.type);
    if (ann.range)
        out += "(" + std::to_string(ann.range->first) + ".." +
               std::to_string(ann.range->second) + ")";
    return out;
}

std::string render(const ExprP& e) { return rE(e, 0); }
std::string render(const PredP& p) { return rP(p, 0); }
std::string render(const CmdP& c) { return rC(c, 0); }

} // namespace bt
