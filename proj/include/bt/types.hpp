#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bt/common.hpp"

namespace bt {

enum class TypeKind { Int, Bool, Char, String, Given, Pair, Set };

class Type;
using TypePtr = std::shared_ptr<const Type>;

// Every bunch carries a type, so the empty (null) and improper bunches of
// distinct types stay distinct values. Given types carry their carrier in
// declaration order; that order is part of the canonical value order.
class Type {
public:
    TypeKind kind;
    std::string name;                  // Given only
    std::vector<std::string> carrier;  // Given only, in declaration order
    TypePtr left;                      // Pair: first component; Set: element type
    TypePtr right;                     // Pair: second component

    static TypePtr integer();
    static TypePtr boolean();
    static TypePtr character();
    static TypePtr string();
    static TypePtr given(std::string name, std::vector<std::string> carrier);
    static TypePtr pair(TypePtr l, TypePtr r);
    static TypePtr set(TypePtr elem);

private:
    explicit Type(TypeKind k) : kind(k) {}
};

bool sameType(const TypePtr& a, const TypePtr& b);
std::string show(const TypePtr& t);

} // namespace bt
