#pragma once

#include "bt/eval.hpp"

namespace bt {

// S ◇ E: the bunch of values E may take after S runs from the elementary
// state rho. Nondeterminism unions, infeasibility yields null, abortion
// yields the improper bunch. Probabilistic choice is not a ◇ construct;
// plain pv rejects it (use pvExpect).
Bunch pv(const CmdP& S, const ExprP& E, const Env& rho, const Decls& d);

// S ◇ E under the expectation reading: p⊕ mixes the two prospective values
// with exact rational weights; an abort possibility on either side makes the
// whole expectation improper. E must be numeric.
Bunch pvExpect(const CmdP& S, const ExprP& E, const Env& rho, const Decls& d);

// fis S = (S ◇ improper) ≠ null.
bool fis(const CmdP& S, const Env& rho, const Decls& d);

// {S ◇ E} as an element.
Bunch resultsSet(const CmdP& S, const ExprP& E, const Env& rho, const Decls& d);

// S ⊑ T over a state space and a basis of expressions: (T◇E) : (S◇E)
// everywhere. Programs mixing ⟩⟩ with p⊕ are noted in the report.
struct RefineReport {
    bool holds = true;
    std::vector<std::string> counterexamples;
    std::vector<std::string> notes;
};
RefineReport refineCheck(const CmdP& S, const CmdP& T, const std::vector<ExprP>& basis,
                         const std::vector<Env>& states, const Decls& d);

} // namespace bt
