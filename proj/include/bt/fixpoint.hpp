#pragma once

#include "bt/bunch.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace bt::fixpoint {

// ---- rhs combinators --------------------------------------------------------

// The intensional body of a bunch transformer: terminals, references to
// named arguments/nonterminals, catenation, and union.
struct Rhs;
using RhsP = std::shared_ptr<const Rhs>;

struct Rhs {
    enum class Kind { Terminal, Ref, Cat, Union } kind = Kind::Terminal;
    Bunch terminal = Bunch::null(Type::string());
    std::string ref;
    RhsP a, b;
};

RhsP terminal(Bunch b);
RhsP terminal(const std::string& word);
RhsP charRange(char lo, char hi);  // single-character words lo..hi
RhsP ref(std::string name);
RhsP cat(RhsP a, RhsP b);
RhsP alt(RhsP a, RhsP b);

// lifted pairwise word catenation
Bunch catenate(const Bunch& a, const Bunch& b);

using Binding = std::map<std::string, Bunch>;
Bunch evalRhs(const RhsP& rhs, const Binding& env);

// ---- transformers -----------------------------------------------------------

struct Transformer {
    std::string name;
    int arity = 1;
    TypePtr type = Type::string();  // argument and result value type
    std::function<Bunch(const std::vector<Bunch>&)> fn;

    Bunch apply(const std::vector<Bunch>& args) const;
    Bunch apply1(const Bunch& x) const;
};

// wrap an rhs body as a transformer taking the named parameters in order
Transformer fromRhs(std::string name, std::vector<std::string> params, RhsP body);

// ---- chains and fixed points --------------------------------------------------

struct ChainResult {
    std::vector<Bunch> steps;  // f.null, f^2.null, ..., f^n.null
    bool stabilized = false;
};
ChainResult chain(const Transformer& f, int n);

struct LfpResult {
    Bunch value = Bunch::null(Type::string());
    int steps = 0;
    std::string status;  // EXACT | APPROXIMANT
};
LfpResult lfpBounded(const Transformer& f, int maxIter);

struct ConstructiveReport {
    bool constructive = false;
    std::string reason;  // witness description when rejected, summary when accepted
};
ConstructiveReport checkConstructive(const Transformer& f, int sampleBudget = 200, unsigned seed = 1);

// ---- grammar systems ----------------------------------------------------------

struct GrammarSystem {
    std::vector<std::string> order;  // nonterminals in declaration order
    std::map<std::string, RhsP> rules;
};

// one rule per line: N = rhs, with `,` for union, `.` for catenation,
// quoted terminals, "a"-"z" character ranges, and # comments
GrammarSystem parseGrammar(const std::string& text);

struct MutualChainResult {
    // steps[i] holds every nonterminal's approximant after i+1 applications
    std::vector<std::map<std::string, Bunch>> steps;
    bool stabilized = false;
};
MutualChainResult mutualChain(const GrammarSystem& g, int n);

struct MemberResult {
    bool found = false;
    int depth = 0;      // YES: first depth containing the word; NO: last depth checked
    bool definite = false;  // NO only: approximants stabilized, so the word is not in the language
};
MemberResult memberBounded(const GrammarSystem& g, const std::string& nt, const std::string& word,
                           int maxDepth, bool prune = true);

} // namespace bt::fixpoint
