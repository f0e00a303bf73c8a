#include <doctest.h>

#include <random>

#include "bt/boolbunch.hpp"
#include "bt/eval.hpp"
#include "bt/parser.hpp"
#include "bt/relations.hpp"

using namespace bt;

namespace {

const TypePtr B = Type::boolean();
const TypePtr I = Type::integer();

Bunch ints(std::initializer_list<long long> xs) {
    std::vector<Value> vs;
    for (auto x : xs) vs.push_back(Value::intv(x));
    return Bunch::of(I, std::move(vs));
}

Bunch ev(const std::string& text) {
    Decls d;
    return evalExpr(parseExpr(text, d), Env{}, d);
}

const BoolBunch kAll[5] = {BoolBunch::Null, BoolBunch::True, BoolBunch::False,
                           BoolBunch::Perhaps, BoolBunch::Improper};

// The five-valued conjunction, row operand first. Transcribed from the
// reference table, independently of the implementation's lookup array.
const BoolBunch N = BoolBunch::Null, T = BoolBunch::True, F = BoolBunch::False,
                P = BoolBunch::Perhaps, X = BoolBunch::Improper;
const BoolBunch kAndTable[5][5] = {
    /* null     */ {N, N, F, N, N},
    /* T        */ {N, T, F, P, X},
    /* F        */ {F, F, F, F, F},
    /* T,F      */ {N, P, F, P, X},
    /* improper */ {N, X, F, X, X},
};

Bunch randomBool(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> five(0, 4);
    return toBunch(kAll[five(rng)]);
}

} // namespace

TEST_CASE("classification of BOOL bunches") {
    CHECK(classify(Bunch::null(B)) == BoolBunch::Null);
    CHECK(classify(Bunch::unit(Value::boolean(true))) == BoolBunch::True);
    CHECK(classify(Bunch::unit(Value::boolean(false))) == BoolBunch::False);
    CHECK(classify(Bunch::of(B, {Value::boolean(true), Value::boolean(false)})) ==
          BoolBunch::Perhaps);
    CHECK(classify(Bunch::bottom(B)) == BoolBunch::Improper);

    for (BoolBunch v : kAll) CHECK(classify(toBunch(v)) == v);

    CHECK_THROWS_AS(classify(ints({1})), TypeError);
}

TEST_CASE("rendering of the five values") {
    CHECK(show(BoolBunch::Null) == "null:BOOL");
    CHECK(show(BoolBunch::True) == "T");
    CHECK(show(BoolBunch::False) == "F");
    CHECK(show(BoolBunch::Perhaps) == "T,F");
    CHECK(show(BoolBunch::Improper) == "improper:BOOL");
}

TEST_CASE("five-valued conjunction table, cell for cell") {
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            CAPTURE(show(kAll[i]));
            CAPTURE(show(kAll[j]));
            CHECK(classify(andB(toBunch(kAll[i]), toBunch(kAll[j]))) == kAndTable[i][j]);
        }

    // the cells that distinguish the table from a pointwise lifting
    CHECK(classify(andB(Bunch::null(B), toBunch(F))) == BoolBunch::False);
    CHECK(classify(andB(toBunch(F), Bunch::bottom(B))) == BoolBunch::False);
    CHECK(classify(andB(Bunch::bottom(B), Bunch::null(B))) == BoolBunch::Null);
}

TEST_CASE("conjunction is commutative") {
    // golden table is symmetric ...
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(kAndTable[i][j] == kAndTable[j][i]);

    // ... and so is the implementation, also on non-canonical operands
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        Bunch a = randomBool(rng), b = randomBool(rng);
        CHECK(andB(a, b) == andB(b, a));
    }
}

TEST_CASE("pointwise equality and order") {
    CHECK(classify(eqB(ints({2}), ints({2}))) == BoolBunch::True);
    CHECK(classify(eqB(ints({2}), ints({3}))) == BoolBunch::False);
    CHECK(classify(eqB(ints({1, 2}), ints({1, 2}))) == BoolBunch::Perhaps);
    CHECK(classify(ltB(ints({1}), ints({2}))) == BoolBunch::True);
    CHECK(classify(ltB(ints({2}), ints({2}))) == BoolBunch::False);

    // a null operand empties the comprehension
    CHECK(classify(eqB(Bunch::null(I), ints({2}))) == BoolBunch::Null);
    CHECK(classify(ltB(ints({2}), Bunch::null(I))) == BoolBunch::Null);

    // the improper guard fires before the comprehension, even against null
    CHECK(classify(eqB(Bunch::bottom(I), Bunch::null(I))) == BoolBunch::Improper);
    CHECK(classify(ltB(Bunch::null(I), Bunch::bottom(I))) == BoolBunch::Improper);

    CHECK_THROWS_AS(eqB(ints({1}), Bunch::null(B)), TypeError);
}

TEST_CASE("pointwise membership") {
    Bunch bald = Bunch::unit(Value::setv(ints({1, 2})));
    CHECK(classify(memB(ints({1}), bald)) == BoolBunch::True);
    CHECK(classify(memB(ints({0}), bald)) == BoolBunch::False);
    CHECK(classify(memB(ints({0, 1}), bald)) == BoolBunch::Perhaps);
    CHECK(classify(memB(Bunch::bottom(I), bald)) == BoolBunch::Improper);
    CHECK_THROWS_AS(memB(ints({1}), ints({1})), TypeError);
}

TEST_CASE("interpretations of the five values") {
    // vacuous truth: nobody is king of france, so the membership claim
    // carries no information
    Bunch kingOf = Bunch::null(Type::set(Type::pair(I, I)));  // empty relation
    Bunch france = ints({0});
    Bunch bald = Bunch::unit(Value::setv(ints({1, 2})));
    CHECK(applyRel(kingOf, france) == Bunch::null(I));
    CHECK(classify(memB(applyRel(kingOf, france), bald)) == BoolBunch::Null);

    // boolean true and false
    CHECK(classify(eqB(ev("1+1"), ev("2"))) == BoolBunch::True);
    CHECK(classify(eqB(ev("1+1"), ev("3"))) == BoolBunch::False);

    // perhaps: one comparison holds, the other does not
    CHECK(classify(ltB(ev("1,3"), ev("2"))) == BoolBunch::Perhaps);

    // undefined: a diverging application denotes the improper bunch, and
    // comparing it with anything stays improper
    CHECK(classify(eqB(Bunch::bottom(I), ints({0}))) == BoolBunch::Improper);

    // the same five through the surface syntax
    CHECK(show(ev("memb(1/0, {1,2})")) == "null:BOOL");
    CHECK(show(ev("eqb(1+1, 2)")) == "T");
    CHECK(show(ev("eqb(1+1, 3)")) == "F");
    CHECK(classify(ev("ltb((1,3), 2)")) == BoolBunch::Perhaps);
    CHECK(show(ev("eqb(improper:INT, 0)")) == "improper:BOOL");
}

TEST_CASE("negation and disjunction are deliberately absent") {
    CHECK_THROWS_AS(notB(toBunch(T)), Unsupported);
    CHECK_THROWS_AS(orB(toBunch(T), toBunch(F)), Unsupported);
}
