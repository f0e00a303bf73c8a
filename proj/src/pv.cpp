#include "bt/pv.hpp"

namespace bt {

namespace {

using Cont = std::function<Bunch(const Env&)>;

// The interpreter is written against a continuation K standing for "the value
// of E in the state where I finish": sequential composition is then just
// S ◇ (T ◇ E) without re-entering syntax.
Bunch run(const CmdP& S, const Cont& K, const TypePtr& rt, const Env& rho, const Decls& d,
          bool expectation) {
    switch (S->kind) {
        case CmdKind::Skip:
            return K(rho);

        case CmdKind::Assign: {
            // (x:=F) ◇ E = ∮x • x:F ↣ E — one binding per element of F,
            // null when F has none, improper when F fails
            std::vector<Bunch> vals;
            for (const auto& ex : S->rhs) vals.push_back(evalExpr(ex, rho, d));
            for (const auto& v : vals)
                if (v.isImproper()) return Bunch::bottom(rt);
            for (const auto& v : vals)
                if (v.isNull()) return Bunch::null(rt);
            Bunch out = Bunch::null(rt);
            std::vector<std::size_t> idx(vals.size(), 0);
            for (;;) {
                Env after = rho;
                for (std::size_t i = 0; i < vals.size(); ++i)
                    after = after.with(S->targets[i], Bunch::unit(vals[i].elems[idx[i]]));
                out = bunchUnion(out, K(after));
                std::size_t i = 0;
                while (i < idx.size() && ++idx[i] == vals[i].elems.size()) idx[i++] = 0;
                if (i == idx.size()) break;
            }
            return out;
        }

        case CmdKind::Pre:
            // (P | S) ◇ E = P ⫢ (S ◇ E)
            return evalPred(S->p, rho, d) ? run(S->s, K, rt, rho, d, expectation)
                                          : Bunch::bottom(rt);

        case CmdKind::GuardC:
            // (P ⟹ S) ◇ E = P ↣ (S ◇ E)
            return evalPred(S->p, rho, d) ? run(S->s, K, rt, rho, d, expectation)
                                          : Bunch::null(rt);

        case CmdKind::Choice:
            return bunchUnion(run(S->s, K, rt, rho, d, expectation),
                              run(S->t, K, rt, rho, d, expectation));

        case CmdKind::Seq:
            return run(
                S->s,
                [&](const Env& mid) { return run(S->t, K, rt, mid, d, expectation); }, rt,
                rho, d, expectation);

        case CmdKind::Pref: {
            // (S ⟩⟩ T) ◇ E = (S◇E) , ((S◇E) = null ↣ (T◇E)); S◇E is shared
            Bunch first = run(S->s, K, rt, rho, d, expectation);
            Bunch fallback = guard(first.isNull(), rt, [&] {
                return run(S->t, K, rt, rho, d, expectation);
            });
            return bunchUnion(first, fallback);
        }

        case CmdKind::If:
            // if g then S else T = (g ⟹ S) ⊓ (¬g ⟹ T)
            return evalPred(S->p, rho, d) ? run(S->s, K, rt, rho, d, expectation)
                                          : run(S->t, K, rt, rho, d, expectation);

        case CmdKind::Prob: {
            if (!expectation)
                throw Unsupported(
                    "probabilistic choice has no plain prospective value; use the "
                    "expectation semantics");
            if (rt->kind != TypeKind::Int)
                throw TypeError("expectation needs a numeric expression, got " + show(rt));
            Bunch x1 = run(S->s, K, rt, rho, d, expectation);
            Bunch x2 = run(S->t, K, rt, rho, d, expectation);
            // X1 p+ X2 = (X1=null ↣ X2) , (X2=null ↣ X1) , (p·X1 + (1−p)·X2)
            Rat p = S->prob, q = Rat(1) - S->prob;
            auto scale = [&](const Rat& w, const Bunch& x) {
                return liftUnary(rt, x, [&](const Value& v) {
                    return std::optional<Value>(Value::intv(w * v.num));
                });
            };
            Bunch mix = liftBinary(rt, scale(p, x1), scale(q, x2),
                                   [](const Value& a, const Value& b) {
                                       return std::optional<Value>(Value::intv(a.num + b.num));
                                   });
            Bunch out = guard(x1.isNull(), rt, [&] { return x2; });
            out = bunchUnion(out, guard(x2.isNull(), rt, [&] { return x1; }));
            return bunchUnion(out, mix);
        }
    }
    throw EvalError("unreachable command kind");
}

Bunch pvWith(const CmdP& S, const ExprP& E, const Env& rho, const Decls& d,
             bool expectation) {
    if (!rho.elementary())
        throw EvalError("prospective values need an elementary initial state");
    typecheckCmd(S, d);
    TypePtr rt = typecheckExpr(E, d, scopeFromEnv(rho));
    return run(
        S, [&](const Env& after) { return evalExpr(E, after, d); }, rt, rho, d,
        expectation);
}

} // namespace

Bunch pv(const CmdP& S, const ExprP& E, const Env& rho, const Decls& d) {
    return pvWith(S, E, rho, d, false);
}

Bunch pvExpect(const CmdP& S, const ExprP& E, const Env& rho, const Decls& d) {
    return pvWith(S, E, rho, d, true);
}

bool fis(const CmdP& S, const Env& rho, const Decls& d) {
    typecheckCmd(S, d);
    TypePtr t = Type::integer();
    Bunch r = run(
        S, [&](const Env&) { return Bunch::bottom(t); }, t, rho, d, false);
    return !r.isNull();
}

Bunch resultsSet(const CmdP& S, const ExprP& E, const Env& rho, const Decls& d) {
    return pack(pv(S, E, rho, d));
}

RefineReport refineCheck(const CmdP& S, const CmdP& T, const std::vector<ExprP>& basis,
                         const std::vector<Env>& states, const Decls& d) {
    RefineReport rep;
    if ((containsKind(S, CmdKind::Pref) || containsKind(T, CmdKind::Pref)) &&
        (containsKind(S, CmdKind::Prob) || containsKind(T, CmdKind::Prob)))
        rep.notes.push_back("pref_prob_mix: ⟩⟩ and p⊕ interact beyond the theory; "
                            "expectation semantics used for both sides");
    bool probabilistic = containsKind(S, CmdKind::Prob) || containsKind(T, CmdKind::Prob);
    for (const auto& rho : states)
        for (const auto& E : basis) {
            Bunch sv = probabilistic ? pvExpect(S, E, rho, d) : pv(S, E, rho, d);
            Bunch tv = probabilistic ? pvExpect(T, E, rho, d) : pv(T, E, rho, d);
            if (!subBunch(tv, sv)) {
                rep.holds = false;
                std::string state;
                for (const auto& [k, v] : rho.vars) state += k + "=" + show(v) + " ";
                rep.counterexamples.push_back("at " + state + "with E: refined value " +
                                              show(tv) + " is not part of " + show(sv));
                if (rep.counterexamples.size() >= 5) return rep;
            }
        }
    return rep;
}

} // namespace bt
