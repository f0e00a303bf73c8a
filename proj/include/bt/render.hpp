#pragma once

#include <string>

#include "bt/ast.hpp"

namespace bt {

// Binding levels, higher binds tighter. Render and parse share this table so
// canonical output always re-parses to the same tree.
namespace prec {
constexpr int Primary = 1000;
constexpr int App = 900;      // f(x), f.x
constexpr int Prefix = 850;   // - ~ ! card-as-prefix
constexpr int MulDiv = 800;   // * / mod
constexpr int AddSub = 790;   // + -
constexpr int Maplet = 700;   // |->
constexpr int Bunch = 600;    // , ' \ (left)
constexpr int Rel = 500;      // > < <= >=
constexpr int Equal = 490;    // = !=
constexpr int Member = 480;   // : in
constexpr int AndP = 470;
constexpr int OrP = 460;
constexpr int ImpP = 450;     // => (right)
constexpr int IffP = 440;
constexpr int Guard = 400;    // ->> |>> (right)
constexpr int Body = 350;     // @ binder body
constexpr int Assign = 300;   // :=
constexpr int GuardCmd = 290; // ==>
constexpr int ChoiceCmd = 280;// [] and <+>p
constexpr int PrefCmd = 270;  // >>
constexpr int SeqCmd = 260;   // ;
constexpr int PreCmd = 250;   // |
constexpr int Diamond = 200;  // <>
}  // namespace prec

// Canonical ASCII text. Canonical output is a parser fixpoint:
// parse(render(x)) re-renders to the same string.
std::string render(const ExprP& e);
std::string render(const PredP& p);
std::string render(const CmdP& c);

// Binder annotation as rendered after a binder name ("" when inferred).
std::string renderAnn(const TypeAnn& ann);

} // namespace bt
