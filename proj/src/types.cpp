#include "bt/types.hpp"

#include <sstream>

namespace bt {

std::string show(const Rat& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    return os.str();
}

TypePtr Type::integer() {
    static TypePtr t(new Type(TypeKind::Int));
    return t;
}
TypePtr Type::boolean() {
    static TypePtr t(new Type(TypeKind::Bool));
    return t;
}
TypePtr Type::character() {
    static TypePtr t(new Type(TypeKind::Char));
    return t;
}
TypePtr Type::string() {
    static TypePtr t(new Type(TypeKind::String));
    return t;
}
TypePtr Type::given(std::string name, std::vector<std::string> carrier) {
    auto t = new Type(TypeKind::Given);
    t->name = std::move(name);
    t->carrier = std::move(carrier);
    return TypePtr(t);
}
TypePtr Type::pair(TypePtr l, TypePtr r) {
    auto t = new Type(TypeKind::Pair);
    t->left = std::move(l);
    t->right = std::move(r);
    return TypePtr(t);
}
TypePtr Type::set(TypePtr elem) {
    auto t = new Type(TypeKind::Set);
    t->left = std::move(elem);
    return TypePtr(t);
}

bool sameType(const TypePtr& a, const TypePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case TypeKind::Int:
        case TypeKind::Bool:
        case TypeKind::Char:
        case TypeKind::String:
            return true;
        case TypeKind::Given:
            return a->name == b->name && a->carrier == b->carrier;
        case TypeKind::Pair:
            return sameType(a->left, b->left) && sameType(a->right, b->right);
        case TypeKind::Set:
            return sameType(a->left, b->left);
    }
    return false;
}

std::string show(const TypePtr& t) {
    if (!t) return "?";
    switch (t->kind) {
        case TypeKind::Int: return "INT";
        case TypeKind::Bool: return "BOOL";
        case TypeKind::Char: return "CHAR";
        case TypeKind::String: return "STRING";
        case TypeKind::Given: return t->name;
        case TypeKind::Pair: return "PAIR(" + show(t->left) + "," + show(t->right) + ")";
        case TypeKind::Set: return "SET(" + show(t->left) + ")";
    }
    return "?";
}

} // namespace bt
