#include "bt/relations.hpp"

namespace bt {

static void requireRelation(const Bunch& f, const char* who) {
    if (!f.type || f.type->kind != TypeKind::Set || f.type->left->kind != TypeKind::Pair)
        throw TypeError(std::string(who) + " needs a relation, got " + show(f.type));
}

Bunch applyRel(const Bunch& f, const Bunch& a) {
    requireRelation(f, "application");
    TypePtr dom = f.type->left->left, ran = f.type->left->right;
    if (!sameType(a.type, dom))
        throw TypeError("applying " + show(f.type) + " to " + show(a.type));
    if (f.improper || a.improper) return Bunch::bottom(ran);
    std::vector<Value> out;
    for (const auto& rel : f.elems)
        for (const auto& pr : rel.members->elems)
            for (const auto& x : a.elems)
                if (*pr.fst == x) out.push_back(*pr.snd);
    return Bunch::of(ran, std::move(out));
}

Bunch wholisticApply(const Bunch& f, const Bunch& x) {
    return unpack(applyRel(f, pack(x)));
}

Bunch lambdaExt(const std::vector<Value>& domain, const TypePtr& resultType,
                const std::function<Bunch(const Value&)>& body) {
    if (domain.empty())
        throw TypeError("lambda over an empty domain has no type");
    TypePtr dom = typeOf(domain.front());
    TypePtr pairT = Type::pair(dom, resultType);
    std::vector<Value> pairs;
    for (const auto& a : domain) {
        Bunch b = body(a);
        if (b.isImproper())
            throw TypeError("improper bunch inside an extensional relation");
        for (const auto& v : b.elems) pairs.push_back(Value::pairv(a, v));
    }
    return Bunch::unit(Value::setv(Bunch::of(pairT, std::move(pairs))));
}

Bunch bigLambda(const TypePtr& elemType, const EnumCtx& ctx,
                const std::function<Bunch(const Bunch&)>& body) {
    auto sets = enumerateType(Type::set(elemType), ctx);
    TypePtr resultT;
    std::vector<Value> pairs;
    for (const auto& z : sets) {
        Bunch r = body(*z.members);
        if (r.isImproper())
            throw TypeError("improper bunch inside an extensional relation");
        if (!resultT) resultT = r.type;
        pairs.push_back(Value::pairv(z, Value::setv(r)));
    }
    TypePtr pairT = Type::pair(Type::set(elemType), Type::set(resultT));
    return Bunch::unit(Value::setv(Bunch::of(pairT, std::move(pairs))));
}

Bunch composeRel(const Bunch& f, const Bunch& g) {
    requireRelation(f, "composition");
    requireRelation(g, "composition");
    TypePtr mid = f.type->left->right;
    if (!sameType(mid, g.type->left->left))
        throw TypeError("composing " + show(f.type) + " with " + show(g.type));
    TypePtr pairT = Type::pair(f.type->left->left, g.type->left->right);
    TypePtr relT = Type::set(pairT);
    if (f.improper || g.improper) return Bunch::bottom(relT);
    std::vector<Value> out;
    for (const auto& rf : f.elems)
        for (const auto& rg : g.elems) {
            std::vector<Value> pairs;
            for (const auto& ab : rf.members->elems)
                for (const auto& bc : rg.members->elems)
                    if (*ab.snd == *bc.fst)
                        pairs.push_back(Value::pairv(*ab.fst, *bc.snd));
            out.push_back(Value::setv(Bunch::of(pairT, std::move(pairs))));
        }
    return Bunch::of(relT, std::move(out));
}

Bunch iterateRel(const Bunch& f, int n) {
    requireRelation(f, "iteration");
    TypePtr dom = f.type->left->left;
    if (!sameType(dom, f.type->left->right))
        throw TypeError("iterating a non-square relation " + show(f.type));
    if (n < 0) throw TypeError("negative relation iteration");
    if (n == 0) {
        // identity over the domain side of f
        if (f.improper) return Bunch::bottom(f.type);
        std::vector<Value> pairs;
        for (const auto& rel : f.elems)
            for (const auto& pr : rel.members->elems) pairs.push_back(Value::pairv(*pr.fst, *pr.fst));
        return Bunch::unit(Value::setv(Bunch::of(f.type->left, std::move(pairs))));
    }
    Bunch acc = f;
    for (int i = 1; i < n; ++i) acc = composeRel(acc, f);
    return acc;
}

} // namespace bt
