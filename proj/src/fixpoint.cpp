#include "bt/fixpoint.hpp"

#include "bt/common.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace bt::fixpoint {

// ---- rhs combinators --------------------------------------------------------

static std::shared_ptr<Rhs> node(Rhs::Kind k) {
    auto r = std::make_shared<Rhs>();
    r->kind = k;
    return r;
}

RhsP terminal(Bunch b) {
    if (!sameType(b.type, Type::string())) throw TypeError("grammar terminals are word bunches");
    auto r = node(Rhs::Kind::Terminal);
    r->terminal = std::move(b);
    return r;
}

RhsP terminal(const std::string& word) { return terminal(Bunch::unit(Value::str(word))); }

RhsP charRange(char lo, char hi) {
    if (lo > hi) throw Error("empty character range");
    std::vector<Value> words;
    for (char c = lo; c <= hi; ++c) words.push_back(Value::str(std::string(1, c)));
    return terminal(Bunch::of(Type::string(), std::move(words)));
}

RhsP ref(std::string name) {
    auto r = node(Rhs::Kind::Ref);
    r->ref = std::move(name);
    return r;
}

RhsP cat(RhsP a, RhsP b) {
    auto r = node(Rhs::Kind::Cat);
    r->a = std::move(a);
    r->b = std::move(b);
    return r;
}

RhsP alt(RhsP a, RhsP b) {
    auto r = node(Rhs::Kind::Union);
    r->a = std::move(a);
    r->b = std::move(b);
    return r;
}

Bunch catenate(const Bunch& a, const Bunch& b) {
    return liftBinary(Type::string(), a, b, [](const Value& x, const Value& y) {
        return Value::str(x.s + y.s);
    });
}

Bunch evalRhs(const RhsP& rhs, const Binding& env) {
    switch (rhs->kind) {
    case Rhs::Kind::Terminal:
        return rhs->terminal;
    case Rhs::Kind::Ref: {
        auto it = env.find(rhs->ref);
        if (it == env.end()) throw Error("unresolved name " + rhs->ref + " in grammar rule");
        return it->second;
    }
    case Rhs::Kind::Cat:
        return catenate(evalRhs(rhs->a, env), evalRhs(rhs->b, env));
    case Rhs::Kind::Union:
        return bunchUnion(evalRhs(rhs->a, env), evalRhs(rhs->b, env));
    }
    throw Error("unreachable");
}

// ---- transformers -----------------------------------------------------------

Bunch Transformer::apply(const std::vector<Bunch>& args) const {
    if (static_cast<int>(args.size()) != arity)
        throw Error(name + " takes " + std::to_string(arity) + " arguments");
    return fn(args);
}

Bunch Transformer::apply1(const Bunch& x) const { return apply({x}); }

Transformer fromRhs(std::string name, std::vector<std::string> params, RhsP body) {
    Transformer t;
    t.name = std::move(name);
    t.arity = static_cast<int>(params.size());
    t.type = Type::string();
    t.fn = [params = std::move(params), body = std::move(body)](const std::vector<Bunch>& args) {
        Binding env;
        for (size_t i = 0; i < params.size(); ++i) env.emplace(params[i], args[i]);
        return evalRhs(body, env);
    };
    return t;
}

// ---- chains and fixed points --------------------------------------------------

static std::vector<Bunch> allNull(const Transformer& f) {
    return std::vector<Bunch>(static_cast<size_t>(f.arity), Bunch::null(f.type));
}

ChainResult chain(const Transformer& f, int n) {
    if (f.arity != 1) throw Error("chains apply to unary transformers");
    if (n < 1) throw Error("chain length must be at least 1");
    ChainResult out;
    Bunch cur = Bunch::null(f.type);
    for (int i = 0; i < n; ++i) {
        Bunch next = f.apply1(cur);
        if (!out.steps.empty() && next == out.steps.back()) out.stabilized = true;
        out.steps.push_back(next);
        cur = std::move(next);
    }
    return out;
}

LfpResult lfpBounded(const Transformer& f, int maxIter) {
    if (f.arity != 1) throw Error("fixed points apply to unary transformers");
    LfpResult out;
    Bunch cur = Bunch::null(f.type);
    for (int i = 1; i <= maxIter; ++i) {
        Bunch next = f.apply1(cur);
        if (next == cur) {
            out.value = cur;
            out.steps = i - 1;
            out.status = "EXACT";
            return out;
        }
        cur = std::move(next);
    }
    out.value = cur;
    out.steps = maxIter;
    out.status = "APPROXIMANT";
    return out;
}

namespace {

// candidate elements for distributivity probes: whatever the transformer
// itself generates in a few diagonal steps
std::vector<Value> probeUniverse(const Transformer& f) {
    std::vector<Value> out;
    std::vector<Bunch> args = allNull(f);
    for (int i = 0; i < 3; ++i) {
        Bunch next = f.apply(args);
        if (next.isImproper()) break;
        for (const auto& v : next.elems) {
            bool seen = false;
            for (const auto& w : out)
                if (compareValues(v, w) == 0) seen = true;
            if (!seen) out.push_back(v);
            if (out.size() >= 12) return out;
        }
        args.assign(args.size(), next);
    }
    return out;
}

Bunch subsetOf(const std::vector<Value>& universe, size_t mask, const TypePtr& t) {
    std::vector<Value> vals;
    for (size_t i = 0; i < universe.size(); ++i)
        if (mask & (size_t{1} << i)) vals.push_back(universe[i]);
    return Bunch::of(t, std::move(vals));
}

} // namespace

ConstructiveReport checkConstructive(const Transformer& f, int sampleBudget, unsigned seed) {
    ConstructiveReport out;

    Bunch bottomArgs = f.apply(allNull(f));
    if (bottomArgs.isNull()) {
        out.constructive = false;
        out.reason = f.name + " is strict: applying it to null yields null";
        return out;
    }

    std::vector<Value> universe = probeUniverse(f);
    std::mt19937 rng(seed);

    auto checkPair = [&](int pos, const Bunch& c, const Bunch& d) -> bool {
        std::vector<Bunch> base = allNull(f);
        // fix the other argument positions at a generated value so the probe
        // exercises a realistic context
        if (f.arity > 1 && !universe.empty())
            base.assign(base.size(), subsetOf(universe, 1, f.type));
        std::vector<Bunch> ac = base, ad = base, acd = base;
        ac[pos] = c;
        ad[pos] = d;
        acd[pos] = bunchUnion(c, d);
        Bunch lhs = f.apply(acd);
        Bunch rhs = bunchUnion(f.apply(ac), f.apply(ad));
        if (lhs == rhs) return true;
        std::ostringstream msg;
        msg << f.name << " is not distributive in argument " << pos + 1 << ": with C = " << show(c)
            << " and D = " << show(d) << ", f.(C,D) = " << show(lhs) << " but f.C , f.D = "
            << show(rhs);
        out.reason = msg.str();
        return false;
    };

    size_t small = std::min<size_t>(universe.size(), 3);
    for (int pos = 0; pos < f.arity; ++pos) {
        for (size_t mc = 0; mc < (size_t{1} << small); ++mc)
            for (size_t md = 0; md < (size_t{1} << small); ++md) {
                std::vector<Value> head(universe.begin(), universe.begin() + small);
                if (!checkPair(pos, subsetOf(head, mc, f.type), subsetOf(head, md, f.type))) {
                    out.constructive = false;
                    return out;
                }
            }
        for (int trial = 0; trial < sampleBudget; ++trial) {
            size_t mc = rng() & ((size_t{1} << universe.size()) - 1);
            size_t md = rng() & ((size_t{1} << universe.size()) - 1);
            if (!checkPair(pos, subsetOf(universe, mc, f.type), subsetOf(universe, md, f.type))) {
                out.constructive = false;
                return out;
            }
        }
    }

    out.constructive = true;
    std::ostringstream msg;
    msg << f.name << ".null = " << show(bottomArgs) << "; distributivity held on all probes";
    out.reason = msg.str();
    return out;
}

// ---- grammar parsing ----------------------------------------------------------

namespace {

struct GrammarCursor {
    const std::string& s;
    size_t i = 0;
    int line = 1;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("grammar line " + std::to_string(line) + ": " + msg, i);
    }
    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    void skipSpaces() {
        while (!done() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
};

bool nameStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool nameChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::string readName(GrammarCursor& c) {
    size_t start = c.i;
    while (!c.done() && nameChar(c.peek())) ++c.i;
    return c.s.substr(start, c.i - start);
}

std::string readQuoted(GrammarCursor& c) {
    ++c.i;  // opening quote
    size_t start = c.i;
    while (!c.done() && c.peek() != '"' && c.peek() != '\n') ++c.i;
    if (c.done() || c.peek() != '"') c.fail("unterminated terminal string");
    std::string word = c.s.substr(start, c.i - start);
    ++c.i;
    return word;
}

RhsP parseUnion(GrammarCursor& c);

RhsP parseFactor(GrammarCursor& c) {
    c.skipSpaces();
    if (c.done()) c.fail("missing grammar factor");
    char ch = c.peek();
    if (ch == '"') {
        std::string word = readQuoted(c);
        c.skipSpaces();
        if (!c.done() && c.peek() == '-') {
            ++c.i;
            c.skipSpaces();
            if (c.done() || c.peek() != '"') c.fail("a character range needs a quoted upper bound");
            std::string hi = readQuoted(c);
            if (word.size() != 1 || hi.size() != 1)
                c.fail("character ranges take single-character bounds");
            return charRange(word[0], hi[0]);
        }
        return terminal(word);
    }
    if (ch == '(') {
        ++c.i;
        RhsP inner = parseUnion(c);
        c.skipSpaces();
        if (c.done() || c.peek() != ')') c.fail("missing )");
        ++c.i;
        return inner;
    }
    if (nameStart(ch)) return ref(readName(c));
    c.fail(std::string("unexpected character '") + ch + "'");
}

RhsP parseCat(GrammarCursor& c) {
    RhsP left = parseFactor(c);
    for (;;) {
        c.skipSpaces();
        if (!c.done() && c.peek() == '.') {
            ++c.i;
            left = cat(left, parseFactor(c));
        } else {
            return left;
        }
    }
}

RhsP parseUnion(GrammarCursor& c) {
    RhsP left = parseCat(c);
    for (;;) {
        c.skipSpaces();
        if (!c.done() && c.peek() == ',') {
            ++c.i;
            left = alt(left, parseCat(c));
        } else {
            return left;
        }
    }
}

void collectRefs(const RhsP& rhs, std::vector<std::string>& out) {
    switch (rhs->kind) {
    case Rhs::Kind::Terminal:
        return;
    case Rhs::Kind::Ref:
        out.push_back(rhs->ref);
        return;
    case Rhs::Kind::Cat:
    case Rhs::Kind::Union:
        collectRefs(rhs->a, out);
        collectRefs(rhs->b, out);
        return;
    }
}

} // namespace

GrammarSystem parseGrammar(const std::string& text) {
    GrammarSystem g;
    GrammarCursor c{text};
    while (!c.done()) {
        c.skipSpaces();
        if (!c.done() && c.peek() == '#') {
            while (!c.done() && c.peek() != '\n') ++c.i;
        }
        if (!c.done() && c.peek() == '\n') {
            ++c.i;
            ++c.line;
            continue;
        }
        if (c.done()) break;
        if (!nameStart(c.peek())) c.fail("a rule starts with a nonterminal name");
        std::string name = readName(c);
        c.skipSpaces();
        if (c.done() || c.peek() != '=') c.fail("expected = after the nonterminal name");
        ++c.i;
        RhsP rhs = parseUnion(c);
        c.skipSpaces();
        if (!c.done() && c.peek() != '\n' && c.peek() != '#')
            c.fail("trailing text after the rule");
        if (g.rules.count(name)) c.fail("duplicate rule for " + name);
        g.order.push_back(name);
        g.rules[name] = rhs;
    }
    for (const auto& [name, rhs] : g.rules) {
        std::vector<std::string> refs;
        collectRefs(rhs, refs);
        for (const auto& r : refs)
            if (!g.rules.count(r))
                throw Error("grammar rule " + name + " references undefined nonterminal " + r);
    }
    if (g.order.empty()) throw Error("the grammar has no rules");
    return g;
}

// ---- mutual iteration -----------------------------------------------------------

static std::map<std::string, Bunch> allNullState(const GrammarSystem& g) {
    std::map<std::string, Bunch> st;
    for (const auto& n : g.order) st.emplace(n, Bunch::null(Type::string()));
    return st;
}

static bool sameState(const std::map<std::string, Bunch>& a, const std::map<std::string, Bunch>& b) {
    for (const auto& [k, v] : a)
        if (!(v == b.at(k))) return false;
    return true;
}

MutualChainResult mutualChain(const GrammarSystem& g, int n) {
    MutualChainResult out;
    auto cur = allNullState(g);
    for (int i = 0; i < n; ++i) {
        std::map<std::string, Bunch> next;
        for (const auto& name : g.order) next.emplace(name, evalRhs(g.rules.at(name), cur));
        if (!out.steps.empty() && sameState(next, out.steps.back())) out.stabilized = true;
        out.steps.push_back(next);
        cur = std::move(next);
    }
    return out;
}

static Bunch pruneLonger(const Bunch& b, size_t maxLen) {
    std::vector<Value> keep;
    for (const auto& v : b.elems)
        if (v.s.size() <= maxLen) keep.push_back(v);
    return Bunch::of(Type::string(), std::move(keep));
}

MemberResult memberBounded(const GrammarSystem& g, const std::string& nt, const std::string& word,
                           int maxDepth, bool prune) {
    if (!g.rules.count(nt)) throw Error("the grammar has no nonterminal " + nt);
    if (maxDepth < 1) throw Error("membership depth must be at least 1");
    MemberResult out;
    Value target = Value::str(word);
    auto cur = allNullState(g);
    for (int d = 1; d <= maxDepth; ++d) {
        std::map<std::string, Bunch> next;
        for (const auto& name : g.order) {
            Bunch b = evalRhs(g.rules.at(name), cur);
            // sound because catenation only ever lengthens words: nothing longer
            // than the target can contribute to deriving it later
            if (prune) b = pruneLonger(b, word.size());
            next.emplace(name, std::move(b));
        }
        if (subBunch(Bunch::unit(target), next.at(nt))) {
            out.found = true;
            out.depth = d;
            return out;
        }
        if (sameState(next, cur)) {
            out.found = false;
            out.depth = d;
            out.definite = true;
            return out;
        }
        cur = std::move(next);
    }
    out.found = false;
    out.depth = maxDepth;
    out.definite = false;
    return out;
}

} // namespace bt::fixpoint
