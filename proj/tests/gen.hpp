#pragma once

// Shared randomized generators for the test suites: syntax trees for
// render/parse round-trips, and small guarded-command programs over two
// bounded INT variables for the semantic law checks.

#include <random>
#include <string>
#include <vector>

#include "bt/parser.hpp"
#include "bt/wp.hpp"

namespace btgen {

using namespace bt;

struct Gen {
    std::mt19937_64 rng;

    explicit Gen(unsigned long long seed) : rng(seed) {}

    int upto(int n) {  // uniform 0..n-1
        return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng));
    }
    bool chance(double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
    }
    template <class T>
    const T& pick(const std::vector<T>& xs) {
        return xs[static_cast<std::size_t>(upto(static_cast<int>(xs.size())))];
    }
};

// ---------------------------------------------------------------------------
// Arbitrary (untyped) syntax for round-trip tests. These trees need not
// typecheck; they only exercise the renderer/parser pair.

inline TypePtr randomType(Gen& g, int depth = 1) {
    int n = g.upto(depth > 0 ? 6 : 4);
    switch (n) {
        case 0: return Type::integer();
        case 1: return Type::boolean();
        case 2: return Type::character();
        case 3: return Type::string();
        case 4: return Type::pair(randomType(g, depth - 1), randomType(g, depth - 1));
        default: return Type::set(randomType(g, depth - 1));
    }
}

inline TypeAnn randomAnn(Gen& g) {
    TypeAnn ann;
    if (g.chance(0.5)) return ann;  // inferred
    if (g.chance(0.5)) {
        ann.type = Type::integer();
        if (g.chance(0.5)) {
            long long lo = g.upto(5) - 2;
            ann.range = {lo, lo + g.upto(4)};
        }
    } else {
        ann.type = randomType(g);
    }
    return ann;
}

inline std::string randomName(Gen& g) {
    static const std::vector<std::string> names = {"x", "y", "z", "f", "g2", "w_1"};
    return g.pick(names);
}

ExprP randomExpr(Gen& g, int depth);
PredP randomPred(Gen& g, int depth);
CmdP randomCmd(Gen& g, int depth);

inline ExprP randomExpr(Gen& g, int depth) {
    if (depth <= 0) {
        switch (g.upto(6)) {
            case 0: return litInt(g.upto(20) - 5);
            case 1: return var(randomName(g));
            case 2: return lit(Value::charv(static_cast<char>('a' + g.upto(26))));
            case 3: return lit(Value::str(g.chance(0.5) ? "ab" : "q"));
            case 4: return nullLit(randomType(g));
            default: return lit(Value::boolean(g.chance(0.5)));
        }
    }
    switch (g.upto(18)) {
        case 0: return binop(ExprKind::Union, randomExpr(g, depth - 1), randomExpr(g, depth - 1));
        case 1: return binop(ExprKind::IntersectE, randomExpr(g, depth - 1), randomExpr(g, depth - 1));
        case 2: return binop(ExprKind::DiffE, randomExpr(g, depth - 1), randomExpr(g, depth - 1));
        case 3: return binop(ExprKind::MapletE, randomExpr(g, depth - 1), randomExpr(g, depth - 1));
        case 4: {
            ArithOp ops[] = {ArithOp::Add, ArithOp::Sub, ArithOp::Mul, ArithOp::Div, ArithOp::Mod};
            return arith(ops[g.upto(5)], randomExpr(g, depth - 1), randomExpr(g, depth - 1));
        }
        case 5: return neg(randomExpr(g, depth - 1));
        case 6: return packE(randomExpr(g, depth - 1));
        case 7: return unpackE(randomExpr(g, depth - 1));
        case 8: return guardE(randomPred(g, depth - 1), randomExpr(g, depth - 1));
        case 9: return precondE(randomPred(g, depth - 1), randomExpr(g, depth - 1));
        case 10: return compr(randomName(g), randomAnn(g), randomExpr(g, depth - 1));
        case 11: return apply(randomExpr(g, depth - 1), randomExpr(g, depth - 1));
        case 12: return wapply(randomExpr(g, depth - 1), randomExpr(g, depth - 1));
        case 13: return lambda(randomName(g), randomAnn(g), randomExpr(g, depth - 1));
        case 14: return ifE(randomPred(g, depth - 1), randomExpr(g, depth - 1), randomExpr(g, depth - 1));
        case 15: return cardE(randomExpr(g, depth - 1));
        case 16: {
            BoolFn fns[] = {BoolFn::Eqb, BoolFn::Ltb, BoolFn::Memb, BoolFn::Andb};
            return boolCall(fns[g.upto(4)], randomExpr(g, depth - 1), randomExpr(g, depth - 1));
        }
        default: return resultsSet(randomCmd(g, depth - 1), randomExpr(g, depth - 1));
    }
}

inline PredP randomPred(Gen& g, int depth) {
    if (depth <= 0) return g.chance(0.5) ? ptrue() : pfalse();
    switch (g.upto(10)) {
        case 0: {
            CmpOp ops[] = {CmpOp::Eq, CmpOp::Ne, CmpOp::Lt, CmpOp::Le, CmpOp::Gt, CmpOp::Ge};
            return cmp(ops[g.upto(6)], randomExpr(g, depth - 1), randomExpr(g, depth - 1));
        }
        case 1: return subB(randomExpr(g, depth - 1), randomExpr(g, depth - 1));
        case 2: return memB(randomExpr(g, depth - 1), randomExpr(g, depth - 1));
        case 3: return pnot(randomPred(g, depth - 1));
        case 4: return pbin(PredKind::And, randomPred(g, depth - 1), randomPred(g, depth - 1));
        case 5: return pbin(PredKind::Or, randomPred(g, depth - 1), randomPred(g, depth - 1));
        case 6: return pbin(PredKind::Imp, randomPred(g, depth - 1), randomPred(g, depth - 1));
        case 7: return pbin(PredKind::Iff, randomPred(g, depth - 1), randomPred(g, depth - 1));
        case 8: return quant(PredKind::Forall, randomName(g), randomAnn(g), randomPred(g, depth - 1));
        default: return quant(PredKind::Exists, randomName(g), randomAnn(g), randomPred(g, depth - 1));
    }
}

inline CmdP randomCmd(Gen& g, int depth) {
    if (depth <= 0) return g.chance(0.8) ? skip() : assign({randomName(g)}, {litInt(g.upto(5))});
    switch (g.upto(9)) {
        case 0: return assign({randomName(g)}, {randomExpr(g, depth - 1)});
        case 1: {
            std::string a = "x", b = "y";
            return assign({a, b}, {randomExpr(g, depth - 1), randomExpr(g, depth - 1)});
        }
        case 2: return pre(randomPred(g, depth - 1), randomCmd(g, depth - 1));
        case 3: return guardC(randomPred(g, depth - 1), randomCmd(g, depth - 1));
        case 4: return choice(randomCmd(g, depth - 1), randomCmd(g, depth - 1));
        case 5: return seq(randomCmd(g, depth - 1), randomCmd(g, depth - 1));
        case 6: return pref(randomCmd(g, depth - 1), randomCmd(g, depth - 1));
        case 7: {
            long long den = 2 + g.upto(5);
            long long num = 1 + g.upto(static_cast<int>(den) - 1);
            return prob(Rat(num, den), randomCmd(g, depth - 1), randomCmd(g, depth - 1));
        }
        default: return ifC(randomPred(g, depth - 1), randomCmd(g, depth - 1), randomCmd(g, depth - 1));
    }
}

// ---------------------------------------------------------------------------
// Typed program corpus: guarded commands over two INT variables on a small
// range, restricted to the fragment the weakest-precondition oracle accepts
// (no preferential or probabilistic choice).

struct CorpusCfg {
    long long lo = 0, hi = 3;
    std::vector<std::string> vars = {"x", "y"};
    int depth = 3;
    bool allowGuards = true;
};

ExprP corpusExpr(Gen& g, const CorpusCfg& cfg, int depth);
PredP corpusPred(Gen& g, const CorpusCfg& cfg, int depth);
CmdP corpusCmd(Gen& g, const CorpusCfg& cfg, int depth);

inline Decls corpusDecls(const CorpusCfg& cfg) {
    Decls d;
    for (const auto& v : cfg.vars) {
        d.varTypes[v] = Type::integer();
        d.intRanges[v] = {cfg.lo, cfg.hi};
    }
    d.enumCtx.intLo = cfg.lo;
    d.enumCtx.intHi = cfg.hi;
    return d;
}

// An INT expression whose value stays inside [lo,hi]: arithmetic is clamped
// by mod so assignments keep states in range.
inline ExprP corpusExpr(Gen& g, const CorpusCfg& cfg, int depth) {
    long long span = cfg.hi - cfg.lo + 1;
    auto clamp = [&](ExprP e) {
        // ((e) mod span + span) mod span + lo, folded as mod with positive span
        ExprP m = arith(ArithOp::Mod, e, litInt(span));
        return cfg.lo == 0 ? m : arith(ArithOp::Add, m, litInt(cfg.lo));
    };
    if (depth <= 0 || g.chance(0.3)) {
        if (g.chance(0.5)) return litInt(cfg.lo + g.upto(static_cast<int>(span)));
        return var(g.pick(cfg.vars));
    }
    switch (g.upto(4)) {
        case 0: return clamp(arith(ArithOp::Add, corpusExpr(g, cfg, depth - 1),
                                   corpusExpr(g, cfg, depth - 1)));
        case 1: return clamp(arith(ArithOp::Mul, corpusExpr(g, cfg, depth - 1),
                                   litInt(1 + g.upto(3))));
        case 2: return binop(ExprKind::Union, corpusExpr(g, cfg, depth - 1),
                             corpusExpr(g, cfg, depth - 1));
        default: return ifE(corpusPred(g, cfg, 1), corpusExpr(g, cfg, depth - 1),
                            corpusExpr(g, cfg, depth - 1));
    }

}

inline PredP corpusPred(Gen& g, const CorpusCfg& cfg, int depth) {
    if (depth <= 0) {
        CmpOp ops[] = {CmpOp::Eq, CmpOp::Ne, CmpOp::Lt, CmpOp::Le, CmpOp::Gt, CmpOp::Ge};
        return cmp(ops[g.upto(6)], var(g.pick(cfg.vars)),
                   g.chance(0.5) ? litInt(cfg.lo + g.upto(static_cast<int>(cfg.hi - cfg.lo + 1)))
                                 : var(g.pick(cfg.vars)));
    }
    switch (g.upto(4)) {
        case 0: return pnot(corpusPred(g, cfg, depth - 1));
        case 1: return pbin(PredKind::And, corpusPred(g, cfg, depth - 1),
                            corpusPred(g, cfg, depth - 1));
        case 2: return pbin(PredKind::Or, corpusPred(g, cfg, depth - 1),
                            corpusPred(g, cfg, depth - 1));
        default: return corpusPred(g, cfg, 0);
    }
}

inline CmdP corpusCmd(Gen& g, const CorpusCfg& cfg, int depth) {
    if (depth <= 0) {
        if (g.chance(0.2)) return skip();
        return assign({g.pick(cfg.vars)}, {corpusExpr(g, cfg, 1)});
    }
    switch (g.upto(10)) {
        case 0: return skip();
        case 1:
        case 2: return assign({g.pick(cfg.vars)}, {corpusExpr(g, cfg, depth - 1)});
        case 3: return seq(corpusCmd(g, cfg, depth - 1), corpusCmd(g, cfg, depth - 1));
        case 4: return choice(corpusCmd(g, cfg, depth - 1), corpusCmd(g, cfg, depth - 1));
        case 5: return ifC(corpusPred(g, cfg, 1), corpusCmd(g, cfg, depth - 1),
                           corpusCmd(g, cfg, depth - 1));
        case 6:
            if (cfg.allowGuards)
                // complementary guards keep the whole command feasible
                return choice(guardC(corpusPred(g, cfg, 1), corpusCmd(g, cfg, depth - 1)),
                              choice(guardC(ptrue(), skip()),
                                     corpusCmd(g, cfg, depth - 1)));
            return seq(corpusCmd(g, cfg, depth - 1), corpusCmd(g, cfg, depth - 1));
        case 7: return pre(corpusPred(g, cfg, 1), corpusCmd(g, cfg, depth - 1));
        case 8: return assign({cfg.vars[0], cfg.vars[1]},
                              {corpusExpr(g, cfg, depth - 1), corpusExpr(g, cfg, depth - 1)});
        default: return ifC(corpusPred(g, cfg, 2), corpusCmd(g, cfg, depth - 1), skip());
    }
}

// Everywhere-feasible programs only: ⟨S⟩true must hold in every state, since
// the basic law is checked at z = null (where it reads exactly fis S).
inline bool everywhereFeasible(const CmdP& S, const StateSpace& sp, const Decls& d) {
    PredExt f = cwpExt(S, allStates(sp), sp, d);
    for (char v : f)
        if (!v) return false;
    return true;
}

inline std::vector<CmdP> feasibleCorpus(Gen& g, const CorpusCfg& cfg, const StateSpace& sp,
                                        const Decls& d, std::size_t count) {
    std::vector<CmdP> out;
    while (out.size() < count) {
        CmdP S = corpusCmd(g, cfg, cfg.depth);
        if (everywhereFeasible(S, sp, d)) out.push_back(S);
    }
    return out;
}

}  // namespace btgen
