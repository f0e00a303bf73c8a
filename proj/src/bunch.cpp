#include "bt/bunch.hpp"

#include <algorithm>

namespace bt {

Bunch Bunch::null(TypePtr t) {
    Bunch b;
    b.type = std::move(t);
    return b;
}
Bunch Bunch::bottom(TypePtr t) {
    Bunch b;
    b.type = std::move(t);
    b.improper = true;
    return b;
}
Bunch Bunch::unit(Value v) {
    Bunch b;
    b.type = typeOf(v);
    b.elems.push_back(std::move(v));
    return b;
}
Bunch Bunch::of(TypePtr t, std::vector<Value> vs) {
    Bunch b;
    b.type = std::move(t);
    for (auto& v : vs)
        if (!sameType(typeOf(v), b.type))
            throw TypeError("bunch element of type " + show(typeOf(v)) +
                            " in a bunch of type " + show(b.type));
    std::sort(vs.begin(), vs.end(),
              [](const Value& a, const Value& b2) { return compareValues(a, b2) < 0; });
    vs.erase(std::unique(vs.begin(), vs.end(),
                         [](const Value& a, const Value& b2) { return a == b2; }),
             vs.end());
    b.elems = std::move(vs);
    return b;
}

const Value& Bunch::theElement() const {
    if (!isElement()) throw TypeError("bunch is not elementary");
    return elems.front();
}

bool operator==(const Bunch& a, const Bunch& b) {
    if (!sameType(a.type, b.type)) return false;
    if (a.improper || b.improper) return a.improper == b.improper;
    if (a.elems.size() != b.elems.size()) return false;
    for (std::size_t i = 0; i < a.elems.size(); ++i)
        if (!(a.elems[i] == b.elems[i])) return false;
    return true;
}

static void requireSame(const Bunch& a, const Bunch& b, const char* what) {
    if (!sameType(a.type, b.type))
        throw TypeError(std::string(what) + " of bunches of different types: " +
                        show(a.type) + " vs " + show(b.type));
}

Bunch bunchUnion(const Bunch& a, const Bunch& b) {
    requireSame(a, b, "union");
    if (a.improper || b.improper) return Bunch::bottom(a.type);
    std::vector<Value> vs = a.elems;
    vs.insert(vs.end(), b.elems.begin(), b.elems.end());
    return Bunch::of(a.type, std::move(vs));
}

Bunch intersect(const Bunch& a, const Bunch& b) {
    requireSame(a, b, "intersection");
    if (a.improper || b.improper) return Bunch::bottom(a.type);
    std::vector<Value> vs;
    for (const auto& v : a.elems) {
        for (const auto& w : b.elems)
            if (v == w) {
                vs.push_back(v);
                break;
            }
    }
    return Bunch::of(a.type, std::move(vs));
}

Bunch diff(const Bunch& a, const Bunch& b) {
    requireSame(a, b, "difference");
    if (a.improper || b.improper) return Bunch::bottom(a.type);
    std::vector<Value> vs;
    for (const auto& v : a.elems) {
        bool hit = false;
        for (const auto& w : b.elems)
            if (v == w) {
                hit = true;
                break;
            }
        if (!hit) vs.push_back(v);
    }
    return Bunch::of(a.type, std::move(vs));
}

bool subBunch(const Bunch& a, const Bunch& b) {
    requireSame(a, b, "inclusion");
    if (b.improper) return true;   // everything is part of the improper bunch
    if (a.improper) return false;  // ... and it is part of nothing else
    for (const auto& v : a.elems) {
        bool hit = false;
        for (const auto& w : b.elems)
            if (v == w) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

long long cardinality(const Bunch& a) {
    if (a.improper) throw UndefinedCardinality();
    return (long long)a.elems.size();
}

Bunch pack(const Bunch& a) {
    if (a.improper) return Bunch::bottom(Type::set(a.type));
    return Bunch::unit(Value::setv(a));
}

Bunch unpack(const Bunch& e) {
    if (!e.type || e.type->kind != TypeKind::Set)
        throw TypeError("unpackaging a bunch of non-set type " + show(e.type));
    TypePtr inner = e.type->left;
    if (e.improper) return Bunch::bottom(inner);
    Bunch out = Bunch::null(inner);
    for (const auto& v : e.elems) out = bunchUnion(out, *v.members);
    return out;
}

Bunch guard(bool g, const TypePtr& t, const std::function<Bunch()>& e) {
    if (!g) return Bunch::null(t);
    Bunch r = e();
    if (!sameType(r.type, t))
        throw TypeError("guarded expression has type " + show(r.type) +
                        ", expected " + show(t));
    return r;
}

Bunch precond(bool p, const Bunch& e) {
    return p ? e : Bunch::bottom(e.type);
}

Bunch maplet(const Bunch& a, const Bunch& b) {
    TypePtr t = Type::pair(a.type, b.type);
    if (a.improper || b.improper) return Bunch::bottom(t);
    std::vector<Value> vs;
    for (const auto& x : a.elems)
        for (const auto& y : b.elems) vs.push_back(Value::pairv(x, y));
    return Bunch::of(t, std::move(vs));
}

Bunch liftBinary(const TypePtr& result, const Bunch& a, const Bunch& b,
                 const std::function<std::optional<Value>(const Value&, const Value&)>& op) {
    if (a.improper || b.improper) return Bunch::bottom(result);
    std::vector<Value> vs;
    for (const auto& x : a.elems)
        for (const auto& y : b.elems)
            if (auto r = op(x, y)) vs.push_back(*r);
    return Bunch::of(result, std::move(vs));
}

Bunch liftUnary(const TypePtr& result, const Bunch& a,
                const std::function<std::optional<Value>(const Value&)>& op) {
    if (a.improper) return Bunch::bottom(result);
    std::vector<Value> vs;
    for (const auto& x : a.elems)
        if (auto r = op(x)) vs.push_back(*r);
    return Bunch::of(result, std::move(vs));
}

Bunch comprehension(const std::vector<Value>& domain, const TypePtr& resultType,
                    const std::function<Bunch(const Value&)>& body) {
    Bunch out = Bunch::null(resultType);
    for (const auto& v : domain) {
        out = bunchUnion(out, body(v));
        if (out.improper) break;  // nothing can undo absorption
    }
    return out;
}

bool member(const Bunch& e, const Bunch& s) {
    if (!s.type || s.type->kind != TypeKind::Set)
        throw TypeError("membership in a bunch of non-set type " + show(s.type));
    if (!sameType(e.type, s.type->left))
        throw TypeError("membership of " + show(e.type) + " in " + show(s.type));
    if (e.improper || s.improper) return false;
    for (const auto& x : e.elems)
        for (const auto& set : s.elems) {
            bool inside = false;
            for (const auto& m : set.members->elems)
                if (m == x) {
                    inside = true;
                    break;
                }
            if (!inside) return false;
        }
    return true;
}

bool isAtomic(const Bunch& a) {
    return a.improper || a.elems.size() <= 1;
}

std::string show(const Bunch& a) {
    if (a.improper) return "improper:" + show(a.type);
    if (a.elems.empty()) return "null:" + show(a.type);
    std::string out;
    for (std::size_t i = 0; i < a.elems.size(); ++i) {
        if (i) out += ",";
        out += show(a.elems[i]);
    }
    return out;
}

} // namespace bt
