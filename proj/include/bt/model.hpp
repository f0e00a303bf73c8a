#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace bt::model {

// A self-contained denotational model: bunches denote host-level sets, the
// improper bunch denotes a maximal set extended with a fresh κ element per
// type, and axioms are validated by brute enumeration of all denotable
// environments. Deliberately independent of the bunch kernel so it can act
// as an oracle for it.

// ---- host values ------------------------------------------------------------

struct SemVal {
    enum class Kind { Atom, Pair, Set } kind = Kind::Atom;
    std::string atom;
    std::shared_ptr<const SemVal> fst, snd;
    std::vector<SemVal> set;  // sorted, deduplicated

    static SemVal mkAtom(std::string a);
    static SemVal mkPair(SemVal a, SemVal b);
    static SemVal mkSet(std::vector<SemVal> xs);
};

int cmp(const SemVal& a, const SemVal& b);
bool operator==(const SemVal& a, const SemVal& b);
inline bool operator!=(const SemVal& a, const SemVal& b) { return !(a == b); }
std::string show(const SemVal& v);

// A bunch denotation: a set of host values.
using SemSet = std::vector<SemVal>;  // sorted, deduplicated

SemSet norm(std::vector<SemVal> xs);
bool contains(const SemSet& s, const SemVal& v);
bool subset(const SemSet& a, const SemSet& b);
SemSet unite(const SemSet& a, const SemSet& b);
std::string show(const SemSet& s);

// ---- types ------------------------------------------------------------------

struct SemType;
using SemTypeP = std::shared_ptr<const SemType>;

struct SemType {
    enum class Kind { Given, Pair, Pow } kind = Kind::Given;
    SemTypeP a, b;

    static SemTypeP given();
    static SemTypeP pair(SemTypeP x, SemTypeP y);
    static SemTypeP pow(SemTypeP x);
};
bool sameSemType(const SemTypeP& x, const SemTypeP& y);

// ---- the universe -----------------------------------------------------------

struct Universe {
    int carrierSize = 2;
    bool improper = false;
    // the choice function on nonempty host sets; the default picks the
    // canonical minimum, the validator's negative control corrupts it
    std::function<SemVal(const SemSet&)> choiceFn;

    explicit Universe(int carrier, bool withImproper);

    SemSet carrier() const;                       // the given atoms
    SemSet properElems(const SemTypeP& t) const;  // elements, κ-free at the root
    SemVal kappa(const SemTypeP& t) const;        // improper mode only
    SemSet bottomDen(const SemTypeP& t) const;    // denotation of the improper bunch
    // every denotable bunch value at t: subsets of the proper elements, plus
    // the bottom denotation when the universe models the improper bunch
    std::vector<SemSet> bunchDens(const SemTypeP& t) const;
    // every value a set-valued element variable can take at pow(t)
    std::vector<SemVal> setElems(const SemTypeP& t) const;
};

// ---- source terms -----------------------------------------------------------

struct STerm;
struct SPred;
using STermP = std::shared_ptr<const STerm>;
using SPredP = std::shared_ptr<const SPred>;

enum class STK {
    Const, Var, BottomT, Pack, Unpack, Maplet, PowT, Cross, ChoiceT, ComprT,
    GuardT, SubstE, UnionT, BigT
};

struct STerm {
    STK kind;
    SemVal cval = SemVal::mkAtom("?");  // Const
    std::string var;                    // Var; binder of ComprT; subst variable
    SemTypeP type;                      // the term's type (every node annotated)
    STermP a, b;
    SPredP pred;  // ComprT body, GuardT guard
};

enum class SPK {
    TrueP, FalseP, Eq, In, ElementP, CardIs, SubB, NotP, AndP, OrP, ForallIn,
    ExistsIn, SubstP, InfiniteP
};

struct SPred {
    SPK kind;
    STermP a, b;
    SPredP p, q;
    std::string var;  // binder / subst variable
    int n = 0;        // CardIs
};

// constructors
STermP sconst(SemVal v, SemTypeP t);
STermP svar(std::string x, SemTypeP t);
STermP sbottom(SemTypeP t);
STermP spack(STermP e);
STermP sunpack(STermP e);
STermP smaplet(STermP e, STermP f);
STermP spow(STermP s);
STermP scross(STermP s, STermP t);
STermP schoice(STermP s);
STermP scompr(std::string x, STermP s, SPredP p);
STermP sguard(SPredP g, STermP e);
STermP ssubst(STermP e, std::string x, STermP f);
STermP sunion(STermP s, STermP t);
STermP sbig();

SPredP strue();
SPredP sfalse();
SPredP seq(STermP a, STermP b);
SPredP sin(STermP e, STermP s);
SPredP selement(STermP e);
SPredP scardis(STermP a, int n);
SPredP ssub(STermP a, STermP b);
SPredP snot(SPredP p);
SPredP sand(SPredP p, SPredP q);
SPredP sor(SPredP p, SPredP q);
SPredP sforall(std::string x, STermP s, SPredP p);
SPredP sexists(std::string x, STermP s, SPredP p);
SPredP spsubst(SPredP p, std::string x, STermP f);
SPredP sinfinite(STermP s);

// ---- denotations ------------------------------------------------------------

using SemEnv = std::map<std::string, SemSet>;

SemSet vden(const STermP& e, const SemEnv& rho, const Universe& u);
bool tden(const SPredP& p, const SemEnv& rho, const Universe& u);

// ---- validation -------------------------------------------------------------

struct AxiomResult {
    std::string group;   // set-theory | bunch | improper
    std::string name;
    std::string status;  // PASS | FAIL | SKIPPED
    std::string detail;  // counterexample or skip reason
};

struct ValidateConfig {
    int carrier = 2;
    int depth = 2;
    bool improper = false;       // additionally run the improper battery
    bool corruptChoice = false;  // negative control: break choice()
};

std::vector<AxiomResult> validateAxioms(const ValidateConfig& cfg);

// substitution lemmas: the substitution rule agrees with structural
// substitution on every constructor shape
std::vector<AxiomResult> lemmaSuite(const ValidateConfig& cfg);

} // namespace bt::model
