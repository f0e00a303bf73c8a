#include "bt/model.hpp"

#include "bt/common.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace bt::model {

// ---- host values ------------------------------------------------------------

SemVal SemVal::mkAtom(std::string a) {
    SemVal v;
    v.kind = Kind::Atom;
    v.atom = std::move(a);
    return v;
}

SemVal SemVal::mkPair(SemVal a, SemVal b) {
    SemVal v;
    v.kind = Kind::Pair;
    v.fst = std::make_shared<SemVal>(std::move(a));
    v.snd = std::make_shared<SemVal>(std::move(b));
    return v;
}

SemVal SemVal::mkSet(std::vector<SemVal> xs) {
    SemVal v;
    v.kind = Kind::Set;
    v.set = norm(std::move(xs));
    return v;
}

static int cmpVec(const std::vector<SemVal>& a, const std::vector<SemVal>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
        if (int c = cmp(a[i], b[i])) return c;
    return 0;
}

int cmp(const SemVal& a, const SemVal& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind) ? -1 : 1;
    switch (a.kind) {
    case SemVal::Kind::Atom:
        return a.atom < b.atom ? -1 : a.atom > b.atom ? 1 : 0;
    case SemVal::Kind::Pair:
        if (int c = cmp(*a.fst, *b.fst)) return c;
        return cmp(*a.snd, *b.snd);
    case SemVal::Kind::Set:
        return cmpVec(a.set, b.set);
    }
    return 0;
}

bool operator==(const SemVal& a, const SemVal& b) { return cmp(a, b) == 0; }

SemSet norm(std::vector<SemVal> xs) {
    std::sort(xs.begin(), xs.end(), [](const SemVal& a, const SemVal& b) { return cmp(a, b) < 0; });
    xs.erase(std::unique(xs.begin(), xs.end(), [](const SemVal& a, const SemVal& b) { return cmp(a, b) == 0; }),
             xs.end());
    return xs;
}

bool contains(const SemSet& s, const SemVal& v) {
    for (const auto& x : s)
        if (x == v) return true;
    return false;
}

bool subset(const SemSet& a, const SemSet& b) {
    for (const auto& x : a)
        if (!contains(b, x)) return false;
    return true;
}

SemSet unite(const SemSet& a, const SemSet& b) {
    SemSet out = a;
    out.insert(out.end(), b.begin(), b.end());
    return norm(std::move(out));
}

std::string show(const SemVal& v) {
    switch (v.kind) {
    case SemVal::Kind::Atom:
        return v.atom;
    case SemVal::Kind::Pair:
        return "(" + show(*v.fst) + " |-> " + show(*v.snd) + ")";
    case SemVal::Kind::Set:
        return show(v.set);
    }
    return "?";
}

std::string show(const SemSet& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += show(s[i]);
    }
    return out + "}";
}

// ---- types ------------------------------------------------------------------

SemTypeP SemType::given() {
    static const SemTypeP t = std::make_shared<SemType>(SemType{Kind::Given, nullptr, nullptr});
    return t;
}

SemTypeP SemType::pair(SemTypeP x, SemTypeP y) {
    return std::make_shared<SemType>(SemType{Kind::Pair, std::move(x), std::move(y)});
}

SemTypeP SemType::pow(SemTypeP x) {
    return std::make_shared<SemType>(SemType{Kind::Pow, std::move(x), nullptr});
}

bool sameSemType(const SemTypeP& x, const SemTypeP& y) {
    if (x == y) return true;
    if (!x || !y || x->kind != y->kind) return false;
    switch (x->kind) {
    case SemType::Kind::Given: return true;
    case SemType::Kind::Pair: return sameSemType(x->a, y->a) && sameSemType(x->b, y->b);
    case SemType::Kind::Pow: return sameSemType(x->a, y->a);
    }
    return false;
}

// ---- the universe -----------------------------------------------------------

static SemSet crossSets(const SemSet& a, const SemSet& b) {
    std::vector<SemVal> out;
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(SemVal::mkPair(x, y));
    return norm(std::move(out));
}

static std::vector<SemSet> allSubsets(const SemSet& base) {
    if (base.size() > 16)
        throw EnumerationError("powerset enumeration over " + std::to_string(base.size()) +
                               " elements is too large");
    std::vector<SemSet> out;
    size_t n = base.size();
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        SemSet s;
        for (size_t i = 0; i < n; ++i)
            if (mask & (size_t{1} << i)) s.push_back(base[i]);
        out.push_back(std::move(s));
    }
    return out;
}

Universe::Universe(int carrier, bool withImproper) : carrierSize(carrier), improper(withImproper) {
    if (carrier < 1) throw Error("the carrier needs at least one atom");
    choiceFn = [](const SemSet& s) {
        if (s.empty()) throw Error("choice of an empty set");
        return s.front();
    };
}

SemSet Universe::carrier() const {
    SemSet out;
    for (int i = 0; i < carrierSize; ++i) out.push_back(SemVal::mkAtom(std::string(1, char('a' + i))));
    return out;
}

SemVal Universe::kappa(const SemTypeP& t) const {
    if (!improper) throw Error("kappa exists only in the improper universe");
    switch (t->kind) {
    case SemType::Kind::Given: return SemVal::mkAtom("kappa");
    case SemType::Kind::Pair: return SemVal::mkPair(kappa(t->a), kappa(t->b));
    case SemType::Kind::Pow: return SemVal::mkSet(bottomDen(t->a));
    }
    throw Error("unreachable");
}

SemSet Universe::bottomDen(const SemTypeP& t) const {
    if (!improper) throw Error("the improper bunch has no denotation in the proper universe");
    switch (t->kind) {
    case SemType::Kind::Given: {
        SemSet out = carrier();
        out.push_back(kappa(t));
        return norm(std::move(out));
    }
    case SemType::Kind::Pair: return crossSets(bottomDen(t->a), bottomDen(t->b));
    case SemType::Kind::Pow: {
        std::vector<SemVal> out;
        for (auto& s : allSubsets(bottomDen(t->a))) out.push_back(SemVal::mkSet(std::move(s)));
        return norm(std::move(out));
    }
    }
    throw Error("unreachable");
}

SemSet Universe::properElems(const SemTypeP& t) const {
    if (improper) {
        SemSet bottom = bottomDen(t);
        SemVal k = kappa(t);
        SemSet out;
        for (const auto& v : bottom)
            if (!(v == k)) out.push_back(v);
        return out;
    }
    switch (t->kind) {
    case SemType::Kind::Given: return carrier();
    case SemType::Kind::Pair: return crossSets(properElems(t->a), properElems(t->b));
    case SemType::Kind::Pow: {
        std::vector<SemVal> out;
        for (auto& s : allSubsets(properElems(t->a))) out.push_back(SemVal::mkSet(std::move(s)));
        return norm(std::move(out));
    }
    }
    throw Error("unreachable");
}

std::vector<SemSet> Universe::bunchDens(const SemTypeP& t) const {
    std::vector<SemSet> out = allSubsets(properElems(t));
    if (improper) out.push_back(bottomDen(t));
    return out;
}

std::vector<SemVal> Universe::setElems(const SemTypeP& t) const {
    std::vector<SemVal> out;
    for (auto& s : allSubsets(properElems(t))) out.push_back(SemVal::mkSet(std::move(s)));
    return out;
}

// ---- source terms -----------------------------------------------------------

static std::shared_ptr<STerm> mut(STK k) {
    auto t = std::make_shared<STerm>();
    t->kind = k;
    return t;
}

static std::shared_ptr<SPred> pmut(SPK k) {
    auto p = std::make_shared<SPred>();
    p->kind = k;
    return p;
}

STermP sconst(SemVal v, SemTypeP t) {
    auto e = mut(STK::Const);
    e->cval = std::move(v);
    e->type = std::move(t);
    return e;
}

STermP svar(std::string x, SemTypeP t) {
    auto e = mut(STK::Var);
    e->var = std::move(x);
    e->type = std::move(t);
    return e;
}

STermP sbottom(SemTypeP t) {
    auto e = mut(STK::BottomT);
    e->type = std::move(t);
    return e;
}

STermP spack(STermP x) {
    auto e = mut(STK::Pack);
    e->type = SemType::pow(x->type);
    e->a = std::move(x);
    return e;
}

STermP sunpack(STermP x) {
    if (x->type->kind != SemType::Kind::Pow) throw Error("unpacking a term whose type is not a powerset");
    auto e = mut(STK::Unpack);
    e->type = x->type->a;
    e->a = std::move(x);
    return e;
}

STermP smaplet(STermP x, STermP y) {
    auto e = mut(STK::Maplet);
    e->type = SemType::pair(x->type, y->type);
    e->a = std::move(x);
    e->b = std::move(y);
    return e;
}

STermP spow(STermP s) {
    if (s->type->kind != SemType::Kind::Pow) throw Error("pow applies to set-typed terms");
    auto e = mut(STK::PowT);
    e->type = SemType::pow(s->type);
    e->a = std::move(s);
    return e;
}

STermP scross(STermP s, STermP t) {
    if (s->type->kind != SemType::Kind::Pow || t->type->kind != SemType::Kind::Pow)
        throw Error("cross product applies to set-typed terms");
    auto e = mut(STK::Cross);
    e->type = SemType::pow(SemType::pair(s->type->a, t->type->a));
    e->a = std::move(s);
    e->b = std::move(t);
    return e;
}

STermP schoice(STermP s) {
    if (s->type->kind != SemType::Kind::Pow) throw Error("choice applies to set-typed terms");
    auto e = mut(STK::ChoiceT);
    e->type = s->type->a;
    e->a = std::move(s);
    return e;
}

STermP scompr(std::string x, STermP s, SPredP p) {
    if (s->type->kind != SemType::Kind::Pow) throw Error("comprehension ranges over a set-typed term");
    auto e = mut(STK::ComprT);
    e->type = s->type;
    e->var = std::move(x);
    e->a = std::move(s);
    e->pred = std::move(p);
    return e;
}

STermP sguard(SPredP g, STermP x) {
    auto e = mut(STK::GuardT);
    e->type = x->type;
    e->a = std::move(x);
    e->pred = std::move(g);
    return e;
}

STermP ssubst(STermP x, std::string v, STermP f) {
    auto e = mut(STK::SubstE);
    e->type = x->type;
    e->var = std::move(v);
    e->a = std::move(x);
    e->b = std::move(f);
    return e;
}

STermP sunion(STermP s, STermP t) {
    if (s->type->kind != SemType::Kind::Pow || t->type->kind != SemType::Kind::Pow)
        throw Error("set union applies to set-typed terms");
    auto e = mut(STK::UnionT);
    e->type = s->type;
    e->a = std::move(s);
    e->b = std::move(t);
    return e;
}

STermP sbig() {
    auto e = mut(STK::BigT);
    e->type = SemType::pow(SemType::given());
    return e;
}

SPredP strue() { return pmut(SPK::TrueP); }
SPredP sfalse() { return pmut(SPK::FalseP); }

SPredP seq(STermP a, STermP b) {
    auto p = pmut(SPK::Eq);
    p->a = std::move(a);
    p->b = std::move(b);
    return p;
}

SPredP sin(STermP e, STermP s) {
    auto p = pmut(SPK::In);
    p->a = std::move(e);
    p->b = std::move(s);
    return p;
}

SPredP selement(STermP e) {
    auto p = pmut(SPK::ElementP);
    p->a = std::move(e);
    return p;
}

SPredP scardis(STermP a, int n) {
    auto p = pmut(SPK::CardIs);
    p->a = std::move(a);
    p->n = n;
    return p;
}

SPredP ssub(STermP a, STermP b) {
    auto p = pmut(SPK::SubB);
    p->a = std::move(a);
    p->b = std::move(b);
    return p;
}

SPredP snot(SPredP q) {
    auto p = pmut(SPK::NotP);
    p->p = std::move(q);
    return p;
}

SPredP sand(SPredP a, SPredP b) {
    auto p = pmut(SPK::AndP);
    p->p = std::move(a);
    p->q = std::move(b);
    return p;
}

SPredP sor(SPredP a, SPredP b) {
    auto p = pmut(SPK::OrP);
    p->p = std::move(a);
    p->q = std::move(b);
    return p;
}

SPredP sforall(std::string x, STermP s, SPredP body) {
    auto p = pmut(SPK::ForallIn);
    p->var = std::move(x);
    p->a = std::move(s);
    p->p = std::move(body);
    return p;
}

SPredP sexists(std::string x, STermP s, SPredP body) {
    auto p = pmut(SPK::ExistsIn);
    p->var = std::move(x);
    p->a = std::move(s);
    p->p = std::move(body);
    return p;
}

SPredP spsubst(SPredP body, std::string x, STermP f) {
    auto p = pmut(SPK::SubstP);
    p->var = std::move(x);
    p->a = std::move(f);
    p->p = std::move(body);
    return p;
}

SPredP sinfinite(STermP s) {
    auto p = pmut(SPK::InfiniteP);
    p->a = std::move(s);
    return p;
}

// ---- denotations ------------------------------------------------------------

// the facsimile of an elementary set denotation: choice({S}) = S
static SemVal facsimile(const SemSet& ds, const Universe& u, const char* what) {
    if (ds.size() != 1) throw Error(std::string("expected an elementary denotation in ") + what);
    SemVal v = u.choiceFn(ds);
    if (v.kind != SemVal::Kind::Set) throw Error(std::string("expected a set denotation in ") + what);
    return v;
}

static bool isBottomOf(const SemSet& d, const SemTypeP& t, const Universe& u) {
    return u.improper && d == u.bottomDen(t);
}

SemSet vden(const STermP& e, const SemEnv& rho, const Universe& u) {
    switch (e->kind) {
    case STK::Const:
        return {e->cval};
    case STK::Var: {
        auto it = rho.find(e->var);
        if (it == rho.end()) throw Error("variable " + e->var + " has no binding");
        return it->second;
    }
    case STK::BottomT:
        return u.bottomDen(e->type);
    case STK::Pack: {
        SemSet d = vden(e->a, rho, u);
        if (isBottomOf(d, e->a->type, u)) return u.bottomDen(e->type);
        return {SemVal::mkSet(std::move(d))};
    }
    case STK::Unpack: {
        SemSet d = vden(e->a, rho, u);
        if (isBottomOf(d, e->a->type, u)) return u.bottomDen(e->type);
        std::vector<SemVal> out;
        for (const auto& m : d) {
            if (m.kind != SemVal::Kind::Set) throw Error("unpacking a denotation that is not a set of sets");
            out.insert(out.end(), m.set.begin(), m.set.end());
        }
        return norm(std::move(out));
    }
    case STK::Maplet: {
        SemSet da = vden(e->a, rho, u), db = vden(e->b, rho, u);
        if (isBottomOf(da, e->a->type, u) || isBottomOf(db, e->b->type, u)) return u.bottomDen(e->type);
        return crossSets(da, db);
    }
    case STK::PowT: {
        SemVal s = facsimile(vden(e->a, rho, u), u, "pow");
        std::vector<SemVal> subs;
        for (auto& x : allSubsets(s.set)) subs.push_back(SemVal::mkSet(std::move(x)));
        return {SemVal::mkSet(std::move(subs))};
    }
    case STK::Cross: {
        SemSet da = vden(e->a, rho, u), db = vden(e->b, rho, u);
        if (isBottomOf(da, e->a->type, u) || isBottomOf(db, e->b->type, u)) return u.bottomDen(e->type);
        SemVal s = facsimile(da, u, "cross product");
        SemVal t = facsimile(db, u, "cross product");
        return {SemVal::mkSet(crossSets(s.set, t.set))};
    }
    case STK::ChoiceT: {
        SemVal s = facsimile(vden(e->a, rho, u), u, "choice");
        if (s.set.empty()) return {};
        return {u.choiceFn(s.set)};
    }
    case STK::ComprT: {
        SemVal s = facsimile(vden(e->a, rho, u), u, "comprehension");
        std::vector<SemVal> keep;
        for (const auto& x : s.set) {
            SemEnv probe = rho;
            probe[e->var] = SemSet{x};
            if (tden(e->pred, probe, u)) keep.push_back(x);
        }
        return {SemVal::mkSet(std::move(keep))};
    }
    case STK::GuardT:
        return tden(e->pred, rho, u) ? vden(e->a, rho, u) : SemSet{};
    case STK::SubstE: {
        SemEnv over = rho;
        over[e->var] = vden(e->b, rho, u);
        return vden(e->a, over, u);
    }
    case STK::UnionT: {
        SemSet da = vden(e->a, rho, u), db = vden(e->b, rho, u);
        if (isBottomOf(da, e->a->type, u) || isBottomOf(db, e->b->type, u)) return u.bottomDen(e->type);
        SemVal s = facsimile(da, u, "set union");
        SemVal t = facsimile(db, u, "set union");
        return {SemVal::mkSet(unite(s.set, t.set))};
    }
    case STK::BigT:
        throw Unsupported("BIG has no finite denotation");
    }
    throw Error("unreachable");
}

bool tden(const SPredP& p, const SemEnv& rho, const Universe& u) {
    switch (p->kind) {
    case SPK::TrueP:
        return true;
    case SPK::FalseP:
        return false;
    case SPK::Eq:
        return vden(p->a, rho, u) == vden(p->b, rho, u);
    case SPK::In: {
        SemVal s = facsimile(vden(p->b, rho, u), u, "set membership");
        return subset(vden(p->a, rho, u), s.set);
    }
    case SPK::ElementP:
        return vden(p->a, rho, u).size() == 1;
    case SPK::CardIs: {
        SemVal s = facsimile(vden(p->a, rho, u), u, "cardinality");
        return static_cast<int>(s.set.size()) == p->n;
    }
    case SPK::SubB:
        return subset(vden(p->a, rho, u), vden(p->b, rho, u));
    case SPK::NotP:
        return !tden(p->p, rho, u);
    case SPK::AndP:
        return tden(p->p, rho, u) && tden(p->q, rho, u);
    case SPK::OrP:
        return tden(p->p, rho, u) || tden(p->q, rho, u);
    case SPK::ForallIn: {
        SemVal s = facsimile(vden(p->a, rho, u), u, "universal quantification");
        for (const auto& x : s.set) {
            SemEnv probe = rho;
            probe[p->var] = SemSet{x};
            if (!tden(p->p, probe, u)) return false;
        }
        return true;
    }
    case SPK::ExistsIn: {
        SemVal s = facsimile(vden(p->a, rho, u), u, "existential quantification");
        for (const auto& x : s.set) {
            SemEnv probe = rho;
            probe[p->var] = SemSet{x};
            if (tden(p->p, probe, u)) return true;
        }
        return false;
    }
    case SPK::SubstP: {
        SemEnv over = rho;
        over[p->var] = vden(p->a, rho, u);
        return tden(p->p, over, u);
    }
    case SPK::InfiniteP:
        throw Unsupported("infinite() is not finitely checkable");
    }
    throw Error("unreachable");
}

// ---- validation -------------------------------------------------------------

namespace {

struct VarSpec {
    std::string name;
    std::vector<SemSet> values;
};

std::string showEnv(const SemEnv& rho) {
    std::string out;
    for (const auto& [k, v] : rho) {
        if (!out.empty()) out += ", ";
        out += k + " = " + show(v);
    }
    return out.empty() ? "(no variables)" : out;
}

size_t envCount(const std::vector<VarSpec>& vs) {
    size_t n = 1;
    for (const auto& v : vs) n *= v.values.size();
    return n;
}

bool sweep(const std::vector<VarSpec>& vs, const std::function<bool(const SemEnv&)>& check,
           std::string& cex) {
    std::vector<size_t> idx(vs.size(), 0);
    for (;;) {
        SemEnv rho;
        for (size_t i = 0; i < vs.size(); ++i) rho[vs[i].name] = vs[i].values[idx[i]];
        if (!check(rho)) {
            cex = showEnv(rho);
            return false;
        }
        size_t i = 0;
        while (i < idx.size() && ++idx[i] == vs[i].values.size()) {
            idx[i] = 0;
            ++i;
        }
        if (i == idx.size()) return true;
    }
}

std::vector<SemSet> singletons(const std::vector<SemVal>& elems) {
    std::vector<SemSet> out;
    for (const auto& v : elems) out.push_back(SemSet{v});
    return out;
}

// accumulates several instance sweeps into one per-axiom verdict
struct Acc {
    bool pass = true;
    size_t envs = 0;
    std::string cex;

    void run(const std::vector<VarSpec>& vs, const std::function<bool(const SemEnv&)>& check) {
        if (!pass) return;
        std::string c;
        if (sweep(vs, check, c)) {
            envs += envCount(vs);
        } else {
            pass = false;
            cex = c;
        }
    }

    AxiomResult done(std::string group, std::string name, const std::string& note = "") const {
        AxiomResult r;
        r.group = std::move(group);
        r.name = std::move(name);
        r.status = pass ? "PASS" : "FAIL";
        r.detail = pass ? std::to_string(envs) + " environments" : "counterexample: " + cex;
        if (pass && !note.empty()) r.detail += "; " + note;
        return r;
    }
};

// the guard/comprehension predicate templates: small closed shapes over
// element variables u, w and an elementary set variable t
struct PredTemplate {
    std::string label;
    SPredP pred;                       // mentions the bound variable "x" where applicable
    std::vector<std::string> extra;    // which of u, w, t it mentions
};

std::vector<PredTemplate> predTemplates(const SemTypeP& T, const SemTypeP& PT, bool overX) {
    std::vector<PredTemplate> out;
    out.push_back({"true", strue(), {}});
    out.push_back({"false", sfalse(), {}});
    if (overX) {
        out.push_back({"x=w", seq(svar("x", T), svar("w", T)), {"w"}});
        out.push_back({"x in t", sin(svar("x", T), svar("t", PT)), {"t"}});
    } else {
        out.push_back({"u=w", seq(svar("u", T), svar("w", T)), {"u", "w"}});
        out.push_back({"u in t", sin(svar("u", T), svar("t", PT)), {"u", "t"}});
    }
    return out;
}

std::vector<VarSpec> withTemplateVars(std::vector<VarSpec> base, const PredTemplate& tp,
                                      const std::vector<SemSet>& elemVals,
                                      const std::vector<SemSet>& setVals) {
    for (const auto& name : tp.extra) {
        if (name == "t")
            base.push_back({"t", setVals});
        else
            base.push_back({name, elemVals});
    }
    return base;
}

} // namespace

std::vector<AxiomResult> validateAxioms(const ValidateConfig& cfg) {
    std::vector<AxiomResult> out;

    Universe u(cfg.carrier, false);
    if (cfg.corruptChoice) {
        // the negative control: a broken selector that hands back a value
        // outside the set whenever the set is ambiguous
        SemSet atoms = u.carrier();
        u.choiceFn = [atoms](const SemSet& s) -> SemVal {
            if (s.empty()) throw Error("choice of an empty set");
            if (s.size() == 1) return s.front();
            for (const auto& a : atoms)
                if (!contains(s, a)) return a;
            return SemVal::mkAtom("#garbage");
        };
    }

    auto T = SemType::given();
    auto PT = SemType::pow(T);

    const std::vector<SemSet> elemT = singletons(u.properElems(T));
    const std::vector<SemSet> setT = singletons(u.setElems(T));
    const std::vector<SemSet> bunchT = u.bunchDens(T);

    // which base types the bunch axioms run at
    std::vector<SemTypeP> bunchCarriers{T};
    if (cfg.depth >= 3) bunchCarriers.push_back(PT);

    // ---- set theory ----
    {
        auto lhs = sin(smaplet(svar("x", T), svar("y", T)), scross(svar("s", PT), svar("t", PT)));
        auto rhs = sand(sin(svar("x", T), svar("s", PT)), sin(svar("y", T), svar("t", PT)));
        Acc a;
        a.run({{"x", elemT}, {"y", elemT}, {"s", setT}, {"t", setT}},
              [&](const SemEnv& rho) { return tden(lhs, rho, u) == tden(rhs, rho, u); });
        out.push_back(a.done("set-theory", "ordered-pair"));
    }
    {
        auto lhs = sin(svar("s", PT), spow(svar("t", PT)));
        auto rhs = sforall("x", svar("s", PT), sin(svar("x", T), svar("t", PT)));
        Acc a;
        a.run({{"s", setT}, {"t", setT}},
              [&](const SemEnv& rho) { return tden(lhs, rho, u) == tden(rhs, rho, u); });
        out.push_back(a.done("set-theory", "powerset"));
    }
    {
        Acc a;
        for (const auto& tp : predTemplates(T, PT, true)) {
            auto lhs = sin(svar("e", T), scompr("x", svar("s", PT), tp.pred));
            auto rhs = sand(sin(svar("e", T), svar("s", PT)), spsubst(tp.pred, "x", svar("e", T)));
            auto vs = withTemplateVars({{"e", elemT}, {"s", setT}}, tp, elemT, setT);
            a.run(vs, [&](const SemEnv& rho) { return tden(lhs, rho, u) == tden(rhs, rho, u); });
        }
        out.push_back(a.done("set-theory", "comprehension", "4 predicate shapes"));
    }
    {
        auto fwd = sforall("x", svar("s", PT), sin(svar("x", T), svar("t", PT)));
        auto bwd = sforall("x", svar("t", PT), sin(svar("x", T), svar("s", PT)));
        auto lhs = sand(fwd, bwd);
        auto rhs = seq(svar("s", PT), svar("t", PT));
        Acc a;
        a.run({{"s", setT}, {"t", setT}},
              [&](const SemEnv& rho) { return tden(lhs, rho, u) == tden(rhs, rho, u); });
        out.push_back(a.done("set-theory", "set-equality", "checked as an equivalence"));
    }
    {
        auto lhs = sexists("x", svar("s", PT), strue());
        auto rhs = sexists("x", svar("s", PT), seq(svar("x", T), schoice(svar("s", PT))));
        Acc a;
        a.run({{"s", setT}}, [&](const SemEnv& rho) { return !tden(lhs, rho, u) || tden(rhs, rho, u); });
        out.push_back(a.done("set-theory", "choice", "element-forcing form"));
    }
    out.push_back({"set-theory", "big", "SKIPPED", "requires an infinite set; not finitely checkable"});
    out.push_back({"set-theory", "infinity-1", "SKIPPED", "infinite() is not finitely checkable"});
    out.push_back({"set-theory", "infinity-2", "SKIPPED", "infinite() is not finitely checkable"});

    // ---- bunch theory ----
    {
        Acc a;
        for (const auto& bt : bunchCarriers) {
            auto A = svar("A", SemType::pow(bt));
            auto both = spack(sunpack(A));
            a.run({{"A", singletons(u.setElems(bt))}},
                  [&](const SemEnv& rho) { return vden(both, rho, u) == vden(A, rho, u); });
        }
        out.push_back(a.done("bunch", "packaging-1"));
    }
    {
        Acc a;
        for (const auto& bt : bunchCarriers) {
            auto E = svar("E", bt);
            auto both = sunpack(spack(E));
            a.run({{"E", u.bunchDens(bt)}},
                  [&](const SemEnv& rho) { return vden(both, rho, u) == vden(E, rho, u); });
        }
        out.push_back(a.done("bunch", "packaging-2"));
    }
    {
        Acc a;
        for (const auto& bt : bunchCarriers) {
            auto A = svar("A", SemType::pow(bt));
            auto lhs = selement(sunpack(A));
            auto rhs = scardis(A, 1);
            a.run({{"A", singletons(u.setElems(bt))}},
                  [&](const SemEnv& rho) { return tden(lhs, rho, u) == tden(rhs, rho, u); });
        }
        out.push_back(a.done("bunch", "element-1"));
    }
    {
        Acc a;
        for (const auto& bt : bunchCarriers) {
            auto packed = selement(spack(svar("E", bt)));
            a.run({{"E", u.bunchDens(bt)}}, [&](const SemEnv& rho) { return tden(packed, rho, u); });
        }
        out.push_back(a.done("bunch", "element-2"));
    }
    {
        Acc a;
        for (const auto& tp : predTemplates(T, PT, false)) {
            auto guarded = sguard(tp.pred, svar("E", T));
            auto vs = withTemplateVars({{"E", bunchT}}, tp, elemT, setT);
            a.run(vs, [&](const SemEnv& rho) {
                return !tden(tp.pred, rho, u) || vden(guarded, rho, u) == vden(svar("E", T), rho, u);
            });
        }
        out.push_back(a.done("bunch", "guard-1", "4 guard shapes"));
    }
    {
        Acc a;
        for (const auto& tp : predTemplates(T, PT, false)) {
            auto guarded = sguard(tp.pred, svar("E", T));
            auto vs = withTemplateVars({{"E", bunchT}}, tp, elemT, setT);
            a.run(vs, [&](const SemEnv& rho) {
                return tden(tp.pred, rho, u) || vden(guarded, rho, u).empty();
            });
        }
        out.push_back(a.done("bunch", "guard-2", "4 guard shapes"));
    }

    // ---- improper bunch theory ----
    if (cfg.improper) {
        Universe iu(cfg.carrier, true);
        std::vector<SemTypeP> improperCarriers{T, PT};

        {
            Acc a;
            for (const auto& bt : improperCarriers) {
                auto sub = ssub(svar("E", bt), sbottom(bt));
                a.run({{"E", iu.bunchDens(bt)}}, [&](const SemEnv& rho) { return tden(sub, rho, iu); });
            }
            out.push_back(a.done("improper", "maximality", "checked at the base and set carriers"));
        }
        {
            auto composite = sunpack(sunion(spack(svar("A", T)), spack(svar("B", T))));
            auto premise = ssub(sbottom(T), composite);
            Acc a;
            a.run({{"A", iu.bunchDens(T)}, {"B", iu.bunchDens(T)}}, [&](const SemEnv& rho) {
                if (!tden(premise, rho, iu)) return true;
                SemSet bottom = iu.bottomDen(T);
                return vden(svar("A", T), rho, iu) == bottom || vden(svar("B", T), rho, iu) == bottom;
            });
            out.push_back(a.done("improper", "atomicity"));
        }
        {
            Acc a;
            for (const auto& bt : improperCarriers) {
                auto packed = spack(sbottom(bt));
                a.run({}, [&](const SemEnv& rho) {
                    return vden(packed, rho, iu) == iu.bottomDen(SemType::pow(bt));
                });
            }
            out.push_back(a.done("improper", "improper-packaging"));
        }
        {
            Acc a;
            for (const auto& bt : improperCarriers) {
                auto unpacked = sunpack(sbottom(SemType::pow(bt)));
                a.run({}, [&](const SemEnv& rho) { return vden(unpacked, rho, iu) == iu.bottomDen(bt); });
            }
            out.push_back(a.done("improper", "improper-unpackaging"));
        }
        {
            Acc a;
            auto packed = selement(spack(svar("E", T)));
            a.run({{"E", iu.bunchDens(T)}}, [&](const SemEnv& rho) {
                if (vden(svar("E", T), rho, iu) == iu.bottomDen(T)) return true;
                return tden(packed, rho, iu);
            });
            out.push_back(a.done("improper", "guarded-element"));
        }
    }

    return out;
}

// ---- lemma suite ------------------------------------------------------------

namespace {

using HostPred = std::function<bool(const SemVal&)>;

struct HostTemplate {
    std::string label;
    HostPred fn;
};

std::vector<HostTemplate> hostTemplates(const Universe& u) {
    std::vector<HostTemplate> out;
    out.push_back({"true", [](const SemVal&) { return true; }});
    out.push_back({"false", [](const SemVal&) { return false; }});
    for (const auto& w : u.carrier())
        out.push_back({"x=" + show(w), [w](const SemVal& x) { return x == w; }});
    for (const auto& t : allSubsets(u.carrier()))
        out.push_back({"x in " + show(t), [t](const SemVal& x) { return contains(t, x); }});
    return out;
}

SemSet filterSet(const SemSet& base, const HostPred& p) {
    SemSet out;
    for (const auto& x : base)
        if (p(x)) out.push_back(x);
    return out;
}

AxiomResult lemmaResult(const std::string& name, bool pass, size_t cases, const std::string& cex,
                        const std::string& note = "") {
    AxiomResult r;
    r.group = "lemma";
    r.name = name;
    r.status = pass ? "PASS" : "FAIL";
    r.detail = pass ? std::to_string(cases) + " cases" : "counterexample: " + cex;
    if (pass && !note.empty()) r.detail += "; " + note;
    return r;
}

} // namespace

std::vector<AxiomResult> lemmaSuite(const ValidateConfig& cfg) {
    std::vector<AxiomResult> out;
    Universe u(cfg.carrier, false);
    const SemSet atoms = u.carrier();
    const std::vector<SemSet> sets = allSubsets(atoms);
    const auto templates = hostTemplates(u);

    // L1: a x b <= c x d  <=>  a <= c and b <= d, for nonempty a and b;
    // the unrestricted form fails at a = {} since {} x b is a subset of anything
    {
        bool pass = true;
        size_t cases = 0;
        std::string cex;
        for (const auto& a : sets)
            for (const auto& b : sets) {
                if (a.empty() || b.empty()) continue;
                for (const auto& c : sets)
                    for (const auto& d : sets) {
                        ++cases;
                        bool lhs = subset(crossSets(a, b), crossSets(c, d));
                        bool rhs = subset(a, c) && subset(b, d);
                        if (lhs != rhs && pass) {
                            pass = false;
                            cex = "a=" + show(a) + " b=" + show(b) + " c=" + show(c) + " d=" + show(d);
                        }
                    }
            }
        out.push_back(lemmaResult("L1", pass, cases, cex, "nonempty a, b"));
    }
    // L2: {x | x in X and P and Q} = {x | x in X and P} cap {x | x in X and Q}
    {
        bool pass = true;
        size_t cases = 0;
        std::string cex;
        for (const auto& X : sets)
            for (const auto& P : templates)
                for (const auto& Q : templates) {
                    ++cases;
                    SemSet both = filterSet(X, [&](const SemVal& x) { return P.fn(x) && Q.fn(x); });
                    SemSet lhsP = filterSet(X, P.fn), lhsQ = filterSet(X, Q.fn);
                    SemSet inter;
                    for (const auto& x : lhsP)
                        if (contains(lhsQ, x)) inter.push_back(x);
                    if (!(both == inter) && pass) {
                        pass = false;
                        cex = "X=" + show(X) + " P=" + P.label + " Q=" + Q.label;
                    }
                }
        out.push_back(lemmaResult("L2", pass, cases, cex));
    }
    // L3: for singleton a, a = {choice(a)}
    {
        bool pass = true;
        size_t cases = 0;
        std::string cex;
        for (const auto& v : atoms) {
            ++cases;
            SemSet a{v};
            if (!(a == SemSet{u.choiceFn(a)}) && pass) {
                pass = false;
                cex = "a=" + show(a);
            }
        }
        out.push_back(lemmaResult("L3", pass, cases, cex));
    }
    // L4: {a} <= B  <=>  a in B
    {
        bool pass = true;
        size_t cases = 0;
        std::string cex;
        for (const auto& v : atoms)
            for (const auto& B : sets) {
                ++cases;
                if ((subset(SemSet{v}, B) != contains(B, v)) && pass) {
                    pass = false;
                    cex = "a=" + show(v) + " B=" + show(B);
                }
            }
        out.push_back(lemmaResult("L4", pass, cases, cex));
    }
    // L5: a in pow(b)  <=>  a <= b
    {
        bool pass = true;
        size_t cases = 0;
        std::string cex;
        for (const auto& a : sets)
            for (const auto& b : sets) {
                ++cases;
                SemSet powB;
                for (auto& s : allSubsets(b)) powB.push_back(SemVal::mkSet(std::move(s)));
                bool lhs = contains(norm(std::move(powB)), SemVal::mkSet(a));
                if ((lhs != subset(a, b)) && pass) {
                    pass = false;
                    cex = "a=" + show(a) + " b=" + show(b);
                }
            }
        out.push_back(lemmaResult("L5", pass, cases, cex));
    }
    // L6: {x | x in {e} and P} /= {}  <=>  P[e/x]
    {
        bool pass = true;
        size_t cases = 0;
        std::string cex;
        for (const auto& e : atoms)
            for (const auto& P : templates) {
                ++cases;
                bool lhs = !filterSet(SemSet{e}, P.fn).empty();
                if ((lhs != P.fn(e)) && pass) {
                    pass = false;
                    cex = "e=" + show(e) + " P=" + P.label;
                }
            }
        out.push_back(lemmaResult("L6", pass, cases, cex));
    }
    // L7: {a} <= {b}  <=>  a = b
    {
        bool pass = true;
        size_t cases = 0;
        std::string cex;
        for (const auto& a : atoms)
            for (const auto& b : atoms) {
                ++cases;
                if ((subset(SemSet{a}, SemSet{b}) != (a == b)) && pass) {
                    pass = false;
                    cex = "a=" + show(a) + " b=" + show(b);
                }
            }
        out.push_back(lemmaResult("L7", pass, cases, cex));
    }
    // L8: {x | P} <= {x | Q}  <=>  (forall x: P => Q), over the bounded domain
    {
        bool pass = true;
        size_t cases = 0;
        std::string cex;
        for (const auto& P : templates)
            for (const auto& Q : templates) {
                ++cases;
                bool lhs = subset(filterSet(atoms, P.fn), filterSet(atoms, Q.fn));
                bool rhs = true;
                for (const auto& x : atoms)
                    if (P.fn(x) && !Q.fn(x)) rhs = false;
                if ((lhs != rhs) && pass) {
                    pass = false;
                    cex = "P=" + P.label + " Q=" + Q.label;
                }
            }
        out.push_back(lemmaResult("L8", pass, cases, cex, "bounded domain"));
    }
    // L9: (P <=> Q) => {x | x in S and P} = {x | x in S and Q}
    {
        bool pass = true;
        size_t cases = 0;
        std::string cex;
        for (const auto& P : templates)
            for (const auto& Q : templates) {
                bool equiv = true;
                for (const auto& x : atoms)
                    if (P.fn(x) != Q.fn(x)) equiv = false;
                for (const auto& S : sets) {
                    ++cases;
                    if (equiv && !(filterSet(S, P.fn) == filterSet(S, Q.fn)) && pass) {
                        pass = false;
                        cex = "P=" + P.label + " Q=" + Q.label + " S=" + show(S);
                    }
                }
            }
        out.push_back(lemmaResult("L9", pass, cases, cex));
    }

    return out;
}

} // namespace bt::model
