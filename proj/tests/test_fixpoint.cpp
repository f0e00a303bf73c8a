#include <doctest.h>

#include <set>
#include <string>

#include "bt/fixpoint.hpp"

using namespace bt;
using namespace bt::fixpoint;

namespace {

TypePtr S = Type::string();

std::set<std::string> asSet(const Bunch& b) {
    REQUIRE_FALSE(b.isImproper());
    std::set<std::string> out;
    for (const auto& v : b.elems) out.insert(v.s);
    return out;
}

Bunch strs(std::initializer_list<std::string> xs) {
    std::vector<Value> vs;
    for (const auto& x : xs) vs.push_back(Value::str(x));
    return Bunch::of(S, std::move(vs));
}

// alpha = a..z, beta = alpha , 0..9
RhsP alphaRhs() { return charRange('a', 'z'); }
RhsP betaRhs() { return alt(charRange('a', 'z'), charRange('0', '9')); }

// the identifier transformer: f.e = alpha , e beta
Transformer idTransformer() {
    return fromRhs("ID", {"e"}, alt(alphaRhs(), cat(ref("e"), betaRhs())));
}

std::set<std::string> alphaSet() {
    std::set<std::string> out;
    for (char c = 'a'; c <= 'z'; ++c) out.insert(std::string(1, c));
    return out;
}

std::set<std::string> betaSet() {
    auto out = alphaSet();
    for (char c = '0'; c <= '9'; ++c) out.insert(std::string(1, c));
    return out;
}

std::set<std::string> catSets(const std::set<std::string>& a,
                              const std::set<std::string>& b) {
    std::set<std::string> out;
    for (const auto& x : a)
        for (const auto& y : b) out.insert(x + y);
    return out;
}

std::set<std::string> uniteSets(std::set<std::string> a, const std::set<std::string>& b) {
    a.insert(b.begin(), b.end());
    return a;
}

} // namespace

TEST_CASE("rhs evaluation: terminals, ranges, catenation, union") {
    Binding env;
    CHECK(evalRhs(terminal("ab"), env) == strs({"ab"}));
    CHECK(asSet(evalRhs(charRange('a', 'c'), env)) ==
          std::set<std::string>{"a", "b", "c"});
    CHECK(evalRhs(cat(terminal("a"), terminal("b")), env) == strs({"ab"}));
    CHECK(evalRhs(alt(terminal("a"), terminal("b")), env) == strs({"a", "b"}));

    // catenation is lifted pairwise and absorbs null and improper
    CHECK(catenate(strs({"a", "b"}), strs({"c", "d"})) ==
          strs({"ac", "ad", "bc", "bd"}));
    CHECK(catenate(strs({"a"}), Bunch::null(S)) == Bunch::null(S));
    CHECK(catenate(Bunch::null(S), strs({"a"})) == Bunch::null(S));
    CHECK(catenate(Bunch::bottom(S), strs({"a"})) == Bunch::bottom(S));

    env.emplace("e", strs({"x"}));
    CHECK(evalRhs(cat(ref("e"), terminal("!")), env) == strs({"x!"}));
}

TEST_CASE("identifier chain: the first three approximants") {
    Transformer f = idTransformer();
    ChainResult ch = chain(f, 3);
    REQUIRE(ch.steps.size() == 3);
    CHECK_FALSE(ch.stabilized);

    auto alpha = alphaSet();
    auto beta = betaSet();
    auto depth2 = uniteSets(alpha, catSets(alpha, beta));
    auto depth3 = uniteSets(depth2, catSets(catSets(alpha, beta), beta));

    CHECK(asSet(ch.steps[0]) == alpha);
    CHECK(asSet(ch.steps[1]) == depth2);
    CHECK(asSet(ch.steps[2]) == depth3);
    CHECK(ch.steps[0].elems.size() == 26);
    CHECK(ch.steps[1].elems.size() == 26 + 26 * 36);
    CHECK(ch.steps[2].elems.size() == 26 + 26 * 36 + 26 * 36 * 36);

    // the chain is monotone: each approximant is a sub-bunch of the next
    CHECK(subBunch(ch.steps[0], ch.steps[1]));
    CHECK(subBunch(ch.steps[1], ch.steps[2]));
}

TEST_CASE("bounded least fixed points") {
    // an all-terminal transformer reaches its fixed point immediately
    Transformer flat = fromRhs("flat", {"e"}, alt(terminal("a"), terminal("b")));
    LfpResult done = lfpBounded(flat, 10);
    CHECK(done.status == "EXACT");
    CHECK(done.value == strs({"a", "b"}));
    CHECK(done.steps <= 2);

    // the identifier language never closes in finitely many steps
    LfpResult open = lfpBounded(idTransformer(), 3);
    CHECK(open.status == "APPROXIMANT");
    CHECK(open.steps == 3);
}

TEST_CASE("constructiveness verdicts") {
    // the identifier transformer is strict-free and distributive: accepted
    ConstructiveReport ok = checkConstructive(idTransformer());
    CHECK(ok.constructive);

    // identity is rejected for strictness: f.null = null cannot seed a chain
    Transformer ident{"identity", 1, S, [](const std::vector<Bunch>& xs) {
                          return xs.at(0);
                      }};
    ConstructiveReport strict = checkConstructive(ident);
    CHECK_FALSE(strict.constructive);
    CHECK(strict.reason.find("null") != std::string::npos);

    // a cardinality probe is rejected for non-distributivity, with a witness
    Transformer card{"card", 1, S, [](const std::vector<Bunch>& xs) {
                         if (xs.at(0).isImproper()) return Bunch::bottom(S);
                         return Bunch::unit(Value::str(
                             std::string(xs.at(0).elems.size(), 'x')));
                     }};
    ConstructiveReport nd = checkConstructive(card);
    CHECK_FALSE(nd.constructive);
    CHECK(nd.reason.find("distribut") != std::string::npos);
}

TEST_CASE("grammar files parse into systems") {
    GrammarSystem g = parseGrammar(
        "# identifiers\n"
        "ID = (\"a\"-\"z\") , ID . (\"a\"-\"z\" , \"0\"-\"9\")\n");
    CHECK(g.order == std::vector<std::string>{"ID"});
    CHECK(g.rules.count("ID") == 1);

    CHECK_THROWS_WITH(parseGrammar("A = B\n"),
                      doctest::Contains("undefined nonterminal"));
    CHECK_THROWS_WITH(parseGrammar("A = \"x\"\nA = \"y\"\n"),
                      doctest::Contains("duplicate"));
    CHECK_THROWS_AS(parseGrammar("  \n# nothing\n"), Error);
}

TEST_CASE("mutual chains: the identifier system") {
    GrammarSystem g = parseGrammar(
        "ID = (\"a\"-\"z\") , ID . (\"a\"-\"z\" , \"0\"-\"9\")\n");
    MutualChainResult res = mutualChain(g, 3);
    REQUIRE(res.steps.size() == 3);

    auto alpha = alphaSet();
    auto beta = betaSet();
    CHECK(asSet(res.steps[0].at("ID")) == alpha);
    CHECK(asSet(res.steps[1].at("ID")) == uniteSets(alpha, catSets(alpha, beta)));
    CHECK(asSet(res.steps[2].at("ID")) ==
          uniteSets(uniteSets(alpha, catSets(alpha, beta)),
                    catSets(catSets(alpha, beta), beta)));
}

TEST_CASE("mutual chains: the expression grammar") {
    GrammarSystem g = parseGrammar(
        "E = E . (\"+\" , \"-\") . T , T\n"
        "T = T . (\"*\" , \"/\") . F , F\n"
        "F = \"num\" , \"id\" , \"(\" . E . \")\"\n");
    MutualChainResult res = mutualChain(g, 4);
    REQUIRE(res.steps.size() == 4);

    // first approximants: only F sees its terminal branch
    CHECK(res.steps[0].at("E") == Bunch::null(S));
    CHECK(res.steps[0].at("T") == Bunch::null(S));
    CHECK(res.steps[0].at("F") == strs({"num", "id"}));

    // second: T picks up F's words, E still null
    CHECK(res.steps[1].at("E") == Bunch::null(S));
    CHECK(res.steps[1].at("T") == strs({"num", "id"}));
    CHECK(res.steps[1].at("F") == strs({"num", "id"}));

    // third: E finally sees T; T builds its first products
    CHECK(res.steps[2].at("E") == strs({"num", "id"}));
    CHECK(res.steps[2].at("T") ==
          strs({"num", "id", "num*num", "num*id", "id*num", "id*id",
                "num/num", "num/id", "id/num", "id/id"}));
    CHECK(res.steps[2].at("F") == strs({"num", "id"}));

    // fourth: F wraps E's words in parentheses
    CHECK(subBunch(strs({"(num)", "(id)"}), res.steps[3].at("F")));
    CHECK(subBunch(strs({"num+num", "id-num"}), res.steps[3].at("E")));

    // every nonterminal's chain is monotone
    for (const auto& nt : g.order)
        for (std::size_t k = 0; k + 1 < res.steps.size(); ++k)
            CHECK(subBunch(res.steps[k].at(nt), res.steps[k + 1].at(nt)));
}

TEST_CASE("bounded membership") {
    GrammarSystem g = parseGrammar(
        "ID = (\"a\"-\"z\") , ID . (\"a\"-\"z\" , \"0\"-\"9\")\n");

    MemberResult yes = memberBounded(g, "ID", "a1", 2);
    CHECK(yes.found);
    CHECK(yes.depth == 2);

    // one-character identifiers appear at the first approximant already
    MemberResult one = memberBounded(g, "ID", "q", 5);
    CHECK(one.found);
    CHECK(one.depth == 1);

    // a leading digit can never be derived; with pruning the approximants
    // close out early and the answer is a definite no
    MemberResult no = memberBounded(g, "ID", "1a", 9);
    CHECK_FALSE(no.found);
    CHECK(no.definite);

    // without pruning the verdict is open-ended (kept shallow: the unpruned
    // approximants grow exponentially)
    MemberResult open = memberBounded(g, "ID", "1a", 2, false);
    CHECK_FALSE(open.found);
    CHECK_FALSE(open.definite);
    CHECK(open.depth == 2);

    // the empty word is never an identifier
    MemberResult empty = memberBounded(g, "ID", "", 4);
    CHECK_FALSE(empty.found);

    CHECK_THROWS_AS(memberBounded(g, "NOPE", "a", 3), Error);
}
