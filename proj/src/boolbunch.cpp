#include "bt/boolbunch.hpp"

namespace bt {

static const TypePtr B = Type::boolean();

BoolBunch classify(const Bunch& b) {
    if (!sameType(b.type, B))
        throw TypeError("boolean-bunch operation on " + show(b.type));
    if (b.improper) return BoolBunch::Improper;
    bool hasT = false, hasF = false;
    for (const auto& v : b.elems) (v.b ? hasT : hasF) = true;
    if (hasT && hasF) return BoolBunch::Perhaps;
    if (hasT) return BoolBunch::True;
    if (hasF) return BoolBunch::False;
    return BoolBunch::Null;
}

Bunch toBunch(BoolBunch v) {
    switch (v) {
        case BoolBunch::Null: return Bunch::null(B);
        case BoolBunch::True: return Bunch::unit(Value::boolean(true));
        case BoolBunch::False: return Bunch::unit(Value::boolean(false));
        case BoolBunch::Perhaps:
            return Bunch::of(B, {Value::boolean(false), Value::boolean(true)});
        case BoolBunch::Improper: return Bunch::bottom(B);
    }
    throw TypeError("unreachable boolean bunch");
}

std::string show(BoolBunch v) {
    // conventional order for the two-element bunch; the generic bunch
    // renderer sorts canonically and would print F first
    if (v == BoolBunch::Perhaps) return "T,F";
    return show(toBunch(v));
}

static Bunch pointwise(const Bunch& a, const Bunch& b,
                       const std::function<bool(const Value&, const Value&)>& rel) {
    if (a.improper || b.improper) return Bunch::bottom(B);
    std::vector<Value> out;
    for (const auto& x : a.elems)
        for (const auto& y : b.elems) out.push_back(Value::boolean(rel(x, y)));
    return Bunch::of(B, std::move(out));
}

Bunch eqB(const Bunch& a, const Bunch& b) {
    if (!sameType(a.type, b.type))
        throw TypeError("=b over " + show(a.type) + " and " + show(b.type));
    return pointwise(a, b, [](const Value& x, const Value& y) { return x == y; });
}

Bunch ltB(const Bunch& a, const Bunch& b) {
    if (!sameType(a.type, b.type))
        throw TypeError("<b over " + show(a.type) + " and " + show(b.type));
    return pointwise(a, b,
                     [](const Value& x, const Value& y) { return compareValues(x, y) < 0; });
}

Bunch memB(const Bunch& e, const Bunch& s) {
    if (!s.type || s.type->kind != TypeKind::Set || !sameType(e.type, s.type->left))
        throw TypeError("∈b of " + show(e.type) + " in " + show(s.type));
    return pointwise(e, s, [](const Value& x, const Value& set) {
        for (const auto& m : set.members->elems)
            if (m == x) return true;
        return false;
    });
}

Bunch andB(const Bunch& a, const Bunch& b) {
    static const BoolBunch N = BoolBunch::Null, T = BoolBunch::True, F = BoolBunch::False,
                           P = BoolBunch::Perhaps, I = BoolBunch::Improper;
    // rows: A = null, T, F, (T,F), improper; columns likewise
    static const BoolBunch table[5][5] = {
        /* null     */ {N, N, F, N, N},
        /* T        */ {N, T, F, P, I},
        /* F        */ {F, F, F, F, F},
        /* (T,F)    */ {N, P, F, P, I},
        /* improper */ {N, I, F, I, I},
    };
    return toBunch(table[(int)classify(a)][(int)classify(b)]);
}

Bunch notB(const Bunch&) {
    throw Unsupported("¬b has no settled five-valued table");
}

Bunch orB(const Bunch&, const Bunch&) {
    throw Unsupported("∨b has no settled five-valued table");
}

} // namespace bt
