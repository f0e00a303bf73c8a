#pragma once

#include "bt/pv.hpp"

namespace bt {

// An enumerated state space over a subset of the declared variables.
// Predicates over it are extensional: one bit per state.
struct StateSpace {
    std::vector<std::string> names;
    std::vector<std::vector<Value>> domains;  // per name, in canonical order
    std::vector<Env> states;                  // full cross product

    static StateSpace over(const std::vector<std::string>& vars, const Decls& d);
    std::size_t indexOf(const Env& rho) const;  // match on this space's variables
};

using PredExt = std::vector<char>;  // one flag per state index

PredExt allStates(const StateSpace& sp);
PredExt noStates(const StateSpace& sp);
PredExt complementExt(const PredExt& q);
PredExt extOfPred(const PredP& p, const StateSpace& sp, const Decls& d);

// Weakest precondition of the ⟩⟩/⊕-free fragment, computed extensionally and
// independently of the ◇ interpreter. [S]Q: from these states S certainly
// terminates in Q. Pref/Prob throw Unsupported.
PredExt wpExt(const CmdP& S, const PredExt& q, const StateSpace& sp, const Decls& d);

// Conjugate: ⟨S⟩Q = ¬[S]¬Q — S may reach Q.
PredExt cwpExt(const CmdP& S, const PredExt& q, const StateSpace& sp, const Decls& d);

// z : (S◇E) ⇔ ⟨S⟩(z : E), checked for every state and every atomic z:
// each element of E's type over the space's enumeration, plus null and
// the improper bunch.
struct LawReport {
    bool ok = true;
    std::size_t checked = 0;
    std::vector<std::string> violations;
};
LawReport basicLawCheck(const CmdP& S, const ExprP& E, const StateSpace& sp,
                        const Decls& d);

// The ◇-free characterization: ⟨S⟩false ↣ improper , (∮σ' • ⟨S⟩(σ=σ') ↣ E σ').
// A second route to S ◇ E, used to cross-check the interpreter.
Bunch pvExplicit(const CmdP& S, const ExprP& E, const Env& rho, const StateSpace& sp,
                 const Decls& d);

} // namespace bt
