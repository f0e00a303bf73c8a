#include <doctest.h>

#include <random>

#include "bt/bunch.hpp"
#include "bt/enumerate.hpp"

using namespace bt;

namespace {

TypePtr I = Type::integer();

Bunch ints(std::initializer_list<long long> xs) {
    std::vector<Value> vs;
    for (auto x : xs) vs.push_back(Value::intv(x));
    return Bunch::of(I, std::move(vs));
}

std::optional<Value> addOp(const Value& a, const Value& b) {
    return Value::intv(a.num + b.num);
}

std::optional<Value> divOp(const Value& a, const Value& b) {
    if (b.num == Rat(0)) return std::nullopt;  // outside the domain of /
    return Value::intv(a.num / b.num);
}

Bunch randomBunch(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 9);
    int k = kind(rng);
    if (k == 0) return Bunch::bottom(I);
    std::vector<Value> vs;
    std::uniform_int_distribution<int> size(0, 4), val(-3, 6);
    int n = size(rng);
    for (int i = 0; i < n; ++i) vs.push_back(Value::intv(val(rng)));
    return Bunch::of(I, std::move(vs));
}

} // namespace

TEST_CASE("union, intersection, difference") {
    CHECK(bunchUnion(ints({1, 2}), ints({2, 5})) == ints({1, 2, 5}));
    CHECK(bunchUnion(ints({1}), Bunch::bottom(I)) == Bunch::bottom(I));
    CHECK(bunchUnion(ints({}), ints({})) == Bunch::null(I));

    CHECK(intersect(ints({1, 2}), ints({2, 5})) == ints({2}));
    CHECK(intersect(ints({1}), ints({2})) == Bunch::null(I));
    // the improper guard fires before the empty-operand short-circuit
    CHECK(intersect(Bunch::bottom(I), Bunch::null(I)) == Bunch::bottom(I));

    CHECK(diff(ints({1, 2, 3}), ints({2})) == ints({1, 3}));
    CHECK(diff(ints({1}), Bunch::bottom(I)) == Bunch::bottom(I));
    CHECK(diff(Bunch::bottom(I), ints({1})) == Bunch::bottom(I));

    CHECK_THROWS_AS(bunchUnion(ints({1}), Bunch::null(Type::boolean())), TypeError);
}

TEST_CASE("inclusion and cardinality") {
    CHECK(subBunch(Bunch::null(I), ints({1})));
    CHECK(subBunch(ints({1, 2}), ints({1, 2, 3})));
    CHECK(!subBunch(ints({1, 4}), ints({1, 2, 3})));
    CHECK(subBunch(ints({1, 4}), Bunch::bottom(I)));      // everything : improper
    CHECK(subBunch(Bunch::null(I), Bunch::bottom(I)));
    CHECK(!subBunch(Bunch::bottom(I), ints({1, 4})));
    CHECK(subBunch(Bunch::bottom(I), Bunch::bottom(I)));

    CHECK(cardinality(Bunch::null(I)) == 0);
    CHECK(cardinality(ints({7})) == 1);
    CHECK(cardinality(ints({1, 2, 2})) == 2);
    CHECK_THROWS_AS(cardinality(Bunch::bottom(I)), UndefinedCardinality);
}

TEST_CASE("packaging and unpackaging") {
    Bunch s12 = pack(ints({1, 2}));
    CHECK(s12.isElement());
    CHECK(show(s12) == "{1,2}");
    CHECK(unpack(s12) == ints({1, 2}));

    // {null} is an element: the empty set
    Bunch empty = pack(Bunch::null(I));
    CHECK(empty.isElement());
    CHECK(show(empty) == "{}");
    CHECK(unpack(empty) == Bunch::null(I));

    // unpackaging is lifted: ~(({1,2}),({2,5})) = 1,2,5
    Bunch two = bunchUnion(pack(ints({1, 2})), pack(ints({2, 5})));
    CHECK(unpack(two) == ints({1, 2, 5}));
    CHECK(unpack(Bunch::null(Type::set(I))) == Bunch::null(I));

    CHECK(pack(Bunch::bottom(I)) == Bunch::bottom(Type::set(I)));
    CHECK(unpack(Bunch::bottom(Type::set(I))) == Bunch::bottom(I));
    CHECK_THROWS_AS(unpack(ints({1})), TypeError);
}

TEST_CASE("guard is lazy, precondition is not") {
    bool ran = false;
    Bunch g = guard(false, I, [&] {
        ran = true;
        return ints({1});
    });
    CHECK(g == Bunch::null(I));
    CHECK(!ran);  // false ↣ E never inspects E

    CHECK(guard(true, I, [] { return ints({3}); }) == ints({3}));

    CHECK(precond(false, ints({1})) == Bunch::bottom(I));
    CHECK(precond(false, Bunch::null(I)) == Bunch::bottom(I));
    CHECK(precond(true, ints({1})) == ints({1}));
}

TEST_CASE("maplets lift pairwise") {
    Bunch m = maplet(ints({1, 2}), ints({3, 4}));
    CHECK(show(m) == "1 |-> 3,1 |-> 4,2 |-> 3,2 |-> 4");
    CHECK(maplet(Bunch::null(I), ints({3})) == Bunch::null(Type::pair(I, I)));
    CHECK(maplet(ints({3}), Bunch::null(I)) == Bunch::null(Type::pair(I, I)));
    // improper absorbs before null does
    CHECK(maplet(Bunch::bottom(I), Bunch::null(I)) == Bunch::bottom(Type::pair(I, I)));
    CHECK(maplet(Bunch::null(I), Bunch::bottom(I)) == Bunch::bottom(Type::pair(I, I)));
}

TEST_CASE("lifted operators") {
    CHECK(liftBinary(I, ints({0, 1}), ints({2, 4}), addOp) == ints({2, 3, 4, 5}));
    CHECK(liftBinary(I, ints({2}), liftBinary(I, ints({3}), ints({0}), divOp), addOp) ==
          Bunch::null(I));  // 2 + 3/0 = 2 + null = null
    CHECK(liftBinary(I, Bunch::bottom(I), Bunch::null(I), addOp) == Bunch::bottom(I));
    CHECK(liftBinary(I, ints({1}), Bunch::bottom(I), addOp) == Bunch::bottom(I));
    CHECK(liftUnary(I, ints({1, 2}), [](const Value& v) {
              return std::optional<Value>(Value::intv(-v.num));
          }) == ints({-1, -2}));
}

TEST_CASE("comprehension") {
    EnumCtx ctx;
    ctx.intLo = 0;
    ctx.intHi = 5;
    auto dom = enumerateType(I, ctx);

    // ∮x • x+x over 0..5
    Bunch dbl = comprehension(dom, I, [](const Value& v) {
        return Bunch::unit(Value::intv(v.num * 2));
    });
    CHECK(dbl == ints({0, 2, 4, 6, 8, 10}));

    // a single improper branch absorbs the whole comprehension
    Bunch abs = comprehension(dom, I, [](const Value& v) {
        return v.num == Rat(3) ? Bunch::bottom(I) : Bunch::unit(v);
    });
    CHECK(abs == Bunch::bottom(I));

    // ∮x • null = null
    Bunch none = comprehension(dom, I, [](const Value&) { return Bunch::null(I); });
    CHECK(none == Bunch::null(I));
}

TEST_CASE("lifted membership") {
    Bunch s = pack(ints({1, 2, 3}));
    CHECK(member(ints({1, 2}), s));
    CHECK(!member(ints({1, 5}), s));
    CHECK(member(Bunch::null(I), s));  // vacuous
    CHECK(member(ints({2}), Bunch::null(Type::set(I))));
    Bunch twoSets = bunchUnion(pack(ints({1, 2})), pack(ints({2, 3})));
    CHECK(member(ints({2}), twoSets));   // 2 is in both sets
    CHECK(!member(ints({1}), twoSets));  // 1 is missing from the second
    CHECK(!member(Bunch::bottom(I), s));
    CHECK(!member(ints({1}), Bunch::bottom(Type::set(I))));
}

TEST_CASE("atomicity") {
    CHECK(isAtomic(Bunch::null(I)));
    CHECK(isAtomic(ints({4})));
    CHECK(isAtomic(Bunch::bottom(I)));
    CHECK(!isAtomic(ints({1, 2})));
}

TEST_CASE("rendering") {
    CHECK(show(Bunch::null(I)) == "null:INT");
    CHECK(show(Bunch::bottom(Type::set(I))) == "improper:SET(INT)");
    CHECK(show(ints({3, 1, 2})) == "1,2,3");
    CHECK(show(Bunch::unit(Value::str("ab"))) == "\"ab\"");
    CHECK(show(Bunch::unit(Value::boolean(false))) == "F");
    auto p = Value::pairv(Value::pairv(Value::intv(1), Value::intv(2)), Value::intv(3));
    CHECK(show(Bunch::unit(p)) == "(1 |-> 2) |-> 3");
}

TEST_CASE("canonical element order") {
    // sets order by cardinality first, then lexicographically over contents
    auto sA = Value::setv(ints({9}));
    auto sB = Value::setv(ints({1, 2}));
    CHECK(compareValues(sA, sB) < 0);
    auto sC = Value::setv(ints({1, 3}));
    CHECK(compareValues(sB, sC) < 0);
    // F before T
    CHECK(compareValues(Value::boolean(false), Value::boolean(true)) < 0);
    // given atoms by carrier declaration order, not name order
    auto g = Type::given("G", {"zeta", "alpha"});
    CHECK(compareValues(Value::atom("zeta", g), Value::atom("alpha", g)) < 0);
}

TEST_CASE("kernel algebra on random bunches") {
    std::mt19937_64 rng(20260826);
    for (int i = 0; i < 500; ++i) {
        Bunch a = randomBunch(rng), b = randomBunch(rng), c = randomBunch(rng);
        CHECK(bunchUnion(a, b) == bunchUnion(b, a));
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(bunchUnion(bunchUnion(a, b), c) == bunchUnion(a, bunchUnion(b, c)));
        CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
        // intersection distributes over union
        CHECK(intersect(a, bunchUnion(b, c)) ==
              bunchUnion(intersect(a, b), intersect(a, c)));
        // inclusion is antisymmetric
        if (subBunch(a, b) && subBunch(b, a)) CHECK(a == b);
        // packaging inverts unpackaging on every bunch
        CHECK(unpack(pack(a)) == a);
        // guard distributes over union
        for (bool g : {false, true}) {
            Bunch lhs = guard(g, I, [&] { return bunchUnion(a, b); });
            Bunch rhs = bunchUnion(guard(g, I, [&] { return a; }),
                                   guard(g, I, [&] { return b; }));
            CHECK(lhs == rhs);
        }
        // union and intersection respect inclusion
        CHECK(subBunch(a, bunchUnion(a, b)));
        CHECK(subBunch(intersect(a, b), bunchUnion(a, b)));
    }
}

TEST_CASE("comprehension matches its membership law") {
    // z : ∮x•E  ⇔  ∃x • z:E for atomic z
    EnumCtx ctx;
    ctx.intLo = 0;
    ctx.intHi = 3;
    auto dom = enumerateType(I, ctx);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> val(0, 6), mode(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
        // a random body: x ↦ some small bunch
        std::vector<Bunch> table;
        for (std::size_t i = 0; i < dom.size(); ++i) {
            int m = mode(rng);
            if (m == 0)
                table.push_back(Bunch::null(I));
            else
                table.push_back(ints({val(rng), val(rng)}));
        }
        auto body = [&](const Value& v) {
            return table[(std::size_t)(v.num.numerator() - 0)];
        };
        Bunch all = comprehension(dom, I, body);
        for (int z = 0; z <= 6; ++z) {
            bool lhs = subBunch(ints({z}), all);
            bool rhs = false;
            for (std::size_t i = 0; i < dom.size(); ++i)
                rhs = rhs || subBunch(ints({z}), table[i]);
            CHECK(lhs == rhs);
        }
    }
}
