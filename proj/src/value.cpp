#include "bt/value.hpp"

#include <algorithm>

#include "bt/bunch.hpp"

namespace bt {

Value Value::intv(Rat n) {
    Value v(ValueKind::Int);
    v.num = n;
    return v;
}
Value Value::boolean(bool x) {
    Value v(ValueKind::Bool);
    v.b = x;
    return v;
}
Value Value::charv(char x) {
    Value v(ValueKind::Char);
    v.c = x;
    return v;
}
Value Value::str(std::string x) {
    Value v(ValueKind::String);
    v.s = std::move(x);
    return v;
}
Value Value::atom(const std::string& name, TypePtr given) {
    if (!given || given->kind != TypeKind::Given)
        throw TypeError("atom '" + name + "' needs a given type");
    if (std::find(given->carrier.begin(), given->carrier.end(), name) == given->carrier.end())
        throw TypeError("atom '" + name + "' is not in the carrier of " + given->name);
    Value v(ValueKind::Atom);
    v.s = name;
    v.givenType = std::move(given);
    return v;
}
Value Value::pairv(Value a, Value d) {
    Value v(ValueKind::Pair);
    v.fst = std::make_shared<Value>(std::move(a));
    v.snd = std::make_shared<Value>(std::move(d));
    return v;
}
Value Value::setv(Bunch contents) {
    if (contents.isImproper())
        throw TypeError("a set value cannot hold the improper bunch");
    Value v(ValueKind::Set);
    v.members = std::make_shared<Bunch>(std::move(contents));
    return v;
}

static int cmp3(long long a, long long b) { return a < b ? -1 : a > b ? 1 : 0; }

int compareValues(const Value& a, const Value& b) {
    if (a.kind != b.kind)
        throw TypeError("comparing values of different kinds");
    switch (a.kind) {
        case ValueKind::Int:
            return a.num < b.num ? -1 : b.num < a.num ? 1 : 0;
        case ValueKind::Bool:
            return cmp3(a.b ? 1 : 0, b.b ? 1 : 0);  // F before T
        case ValueKind::Char:
            return cmp3((unsigned char)a.c, (unsigned char)b.c);
        case ValueKind::String:
            return a.s < b.s ? -1 : a.s > b.s ? 1 : 0;
        case ValueKind::Atom: {
            auto& carrier = a.givenType->carrier;
            auto ia = std::find(carrier.begin(), carrier.end(), a.s) - carrier.begin();
            auto ib = std::find(carrier.begin(), carrier.end(), b.s) - carrier.begin();
            return cmp3(ia, ib);
        }
        case ValueKind::Pair: {
            int c = compareValues(*a.fst, *b.fst);
            return c != 0 ? c : compareValues(*a.snd, *b.snd);
        }
        case ValueKind::Set: {
            const auto& xs = a.members->elems;
            const auto& ys = b.members->elems;
            if (xs.size() != ys.size()) return cmp3((long long)xs.size(), (long long)ys.size());
            for (std::size_t i = 0; i < xs.size(); ++i) {
                int c = compareValues(xs[i], ys[i]);
                if (c != 0) return c;
            }
            return 0;
        }
    }
    return 0;
}

bool operator==(const Value& a, const Value& b) {
    return a.kind == b.kind && compareValues(a, b) == 0;
}

TypePtr typeOf(const Value& v) {
    switch (v.kind) {
        case ValueKind::Int: return Type::integer();
        case ValueKind::Bool: return Type::boolean();
        case ValueKind::Char: return Type::character();
        case ValueKind::String: return Type::string();
        case ValueKind::Atom: return v.givenType;
        case ValueKind::Pair: return Type::pair(typeOf(*v.fst), typeOf(*v.snd));
        case ValueKind::Set: return Type::set(v.members->type);
    }
    throw TypeError("unreachable value kind");
}

std::string show(const Value& v) {
    switch (v.kind) {
        case ValueKind::Int: return show(v.num);
        case ValueKind::Bool: return v.b ? "T" : "F";
        case ValueKind::Char: return std::string("'") + v.c + "'";
        case ValueKind::String: return "\"" + v.s + "\"";
        case ValueKind::Atom: return v.s;
        case ValueKind::Pair: {
            auto part = [](const Value& x) {
                std::string t = show(x);
                return x.kind == ValueKind::Pair ? "(" + t + ")" : t;
            };
            return part(*v.fst) + " |-> " + part(*v.snd);
        }
        case ValueKind::Set: {
            std::string out = "{";
            bool first = true;
            for (const auto& m : v.members->elems) {
                if (!first) out += ",";
                out += show(m);
                first = false;
            }
            return out + "}";
        }
    }
    return "?";
}

} // namespace bt
