#include "bt/wp.hpp"

namespace bt {

StateSpace StateSpace::over(const std::vector<std::string>& vars, const Decls& d) {
    StateSpace sp;
    sp.names = vars;
    for (const auto& v : vars) {
        TypePtr t = d.typeOfVar(v);
        if (!t) throw EvalError("state space over undeclared '" + v + "'");
        sp.domains.push_back(enumerateType(t, d.ctxFor(v)));
    }
    std::vector<std::size_t> idx(vars.size(), 0);
    for (;;) {
        Env rho;
        for (std::size_t i = 0; i < vars.size(); ++i)
            rho.vars.insert_or_assign(sp.names[i], Bunch::unit(sp.domains[i][idx[i]]));
        sp.states.push_back(std::move(rho));
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == sp.domains[i].size()) idx[i++] = 0;
        if (i == idx.size() || idx.empty()) break;
    }
    return sp;
}

std::size_t StateSpace::indexOf(const Env& rho) const {
    for (std::size_t s = 0; s < states.size(); ++s) {
        bool match = true;
        for (const auto& n : names)
            if (!(states[s].at(n) == rho.at(n))) {
                match = false;
                break;
            }
        if (match) return s;
    }
    throw EvalError("state is outside the declared state space");
}

PredExt allStates(const StateSpace& sp) { return PredExt(sp.states.size(), 1); }
PredExt noStates(const StateSpace& sp) { return PredExt(sp.states.size(), 0); }

PredExt complementExt(const PredExt& q) {
    PredExt r = q;
    for (auto& b : r) b = !b;
    return r;
}

PredExt extOfPred(const PredP& p, const StateSpace& sp, const Decls& d) {
    PredExt r = noStates(sp);
    for (std::size_t s = 0; s < sp.states.size(); ++s) r[s] = evalPred(p, sp.states[s], d);
    return r;
}

PredExt wpExt(const CmdP& S, const PredExt& q, const StateSpace& sp, const Decls& d) {
    switch (S->kind) {
        case CmdKind::Skip:
            return q;

        case CmdKind::Assign: {
            PredExt r = noStates(sp);
            for (std::size_t s = 0; s < sp.states.size(); ++s) {
                const Env& rho = sp.states[s];
                std::vector<Bunch> vals;
                bool improper = false;
                for (const auto& ex : S->rhs) {
                    vals.push_back(evalExpr(ex, rho, d));
                    improper = improper || vals.back().isImproper();
                }
                if (improper) {
                    r[s] = 0;  // may abort: no certainty of anything
                    continue;
                }
                // [x:=F]Q = ∀x • x:F ⇒ Q — vacuously true when F is null
                bool ok = true;
                std::vector<std::size_t> idx(vals.size(), 0);
                bool any = true;
                for (const auto& v : vals) any = any && !v.elems.empty();
                while (ok && any) {
                    Env after = rho;
                    for (std::size_t i = 0; i < vals.size(); ++i)
                        after = after.with(S->targets[i],
                                           Bunch::unit(vals[i].elems[idx[i]]));
                    ok = q[sp.indexOf(after)];
                    std::size_t i = 0;
                    while (i < idx.size() && ++idx[i] == vals[i].elems.size()) idx[i++] = 0;
                    if (i == idx.size()) break;
                }
                r[s] = ok;
            }
            return r;
        }

        case CmdKind::Pre: {
            // [P|S]Q = P ∧ [S]Q
            PredExt inner = wpExt(S->s, q, sp, d), pe = extOfPred(S->p, sp, d);
            PredExt r = noStates(sp);
            for (std::size_t s = 0; s < r.size(); ++s) r[s] = pe[s] && inner[s];
            return r;
        }

        case CmdKind::GuardC: {
            // [P⟹S]Q = P ⇒ [S]Q
            PredExt inner = wpExt(S->s, q, sp, d), pe = extOfPred(S->p, sp, d);
            PredExt r = noStates(sp);
            for (std::size_t s = 0; s < r.size(); ++s) r[s] = !pe[s] || inner[s];
            return r;
        }

        case CmdKind::Choice: {
            PredExt a = wpExt(S->s, q, sp, d), b = wpExt(S->t, q, sp, d);
            PredExt r = noStates(sp);
            for (std::size_t s = 0; s < r.size(); ++s) r[s] = a[s] && b[s];
            return r;
        }

        case CmdKind::Seq:
            return wpExt(S->s, wpExt(S->t, q, sp, d), sp, d);

        case CmdKind::If: {
            PredExt a = wpExt(S->s, q, sp, d), b = wpExt(S->t, q, sp, d);
            PredExt pe = extOfPred(S->p, sp, d);
            PredExt r = noStates(sp);
            for (std::size_t s = 0; s < r.size(); ++s) r[s] = pe[s] ? a[s] : b[s];
            return r;
        }

        case CmdKind::Pref:
        case CmdKind::Prob:
            throw Unsupported("weakest preconditions cover only the ⟩⟩-free, ⊕-free fragment");
    }
    throw EvalError("unreachable command kind");
}

PredExt cwpExt(const CmdP& S, const PredExt& q, const StateSpace& sp, const Decls& d) {
    return complementExt(wpExt(S, complementExt(q), sp, d));
}

LawReport basicLawCheck(const CmdP& S, const ExprP& E, const StateSpace& sp,
                        const Decls& d) {
    LawReport rep;
    typecheckCmd(S, d);
    TypePtr et = typecheckExpr(E, d, scopeFromEnv(sp.states.front()));

    // atomic probes: every element of E's type, plus null and improper
    std::vector<Bunch> probes;
    for (const auto& v : enumerateType(et, d.enumCtx)) probes.push_back(Bunch::unit(v));
    probes.push_back(Bunch::null(et));
    probes.push_back(Bunch::bottom(et));

    // prospective values once per state
    std::vector<Bunch> pvs;
    pvs.reserve(sp.states.size());
    for (const auto& rho : sp.states) pvs.push_back(pv(S, E, rho, d));

    for (const auto& z : probes) {
        PredExt zInE = noStates(sp);
        for (std::size_t s = 0; s < sp.states.size(); ++s)
            zInE[s] = subBunch(z, evalExpr(E, sp.states[s], d));
        PredExt may = cwpExt(S, zInE, sp, d);
        for (std::size_t s = 0; s < sp.states.size(); ++s) {
            bool lhs = subBunch(z, pvs[s]);
            bool rhs = may[s];
            ++rep.checked;
            if (lhs != rhs) {
                rep.ok = false;
                std::string st;
                for (const auto& n : sp.names) st += n + "=" + show(sp.states[s].at(n)) + " ";
                rep.violations.push_back("z=" + show(z) + " at " + st + ": z:(S◇E)=" +
                                         (lhs ? "true" : "false") + " but ⟨S⟩z:E=" +
                                         (rhs ? "true" : "false"));
            }
        }
    }
    return rep;
}

Bunch pvExplicit(const CmdP& S, const ExprP& E, const Env& rho, const StateSpace& sp,
                 const Decls& d) {
    typecheckCmd(S, d);
    TypePtr rt = typecheckExpr(E, d, scopeFromEnv(rho));
    std::size_t here = sp.indexOf(rho);

    // ⟨S⟩false ↣ improper — the abort possibility
    PredExt mayAbort = cwpExt(S, noStates(sp), sp, d);
    if (mayAbort[here]) return Bunch::bottom(rt);

    // ∮σ' • ⟨S⟩(σ = σ') ↣ (λσ•E) σ'
    Bunch out = Bunch::null(rt);
    for (std::size_t s = 0; s < sp.states.size(); ++s) {
        PredExt just = noStates(sp);
        just[s] = 1;
        PredExt may = cwpExt(S, just, sp, d);
        if (may[here]) out = bunchUnion(out, evalExpr(E, sp.states[s], d));
    }
    return out;
}

} // namespace bt
