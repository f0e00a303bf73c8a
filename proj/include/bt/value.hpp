#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bt/types.hpp"

namespace bt {

class Bunch;
using BunchPtr = std::shared_ptr<const Bunch>;

enum class ValueKind { Int, Bool, Char, String, Atom, Pair, Set };

// An element: the only inhabitants of packaged sets and of environments.
// Sets store their members as a (proper, canonically ordered) bunch; the
// improper bunch is not a value and can never appear inside an element.
class Value {
public:
    ValueKind kind;
    Rat num{};                          // Int
    bool b = false;                     // Bool
    char c = 0;                         // Char
    std::string s;                      // String text, or Atom name
    TypePtr givenType;                  // Atom: its Given type (carrier order)
    std::shared_ptr<const Value> fst, snd;  // Pair
    BunchPtr members;                   // Set

    static Value intv(Rat n);
    static Value intv(long long n) { return intv(Rat(n)); }
    static Value boolean(bool v);
    static Value charv(char v);
    static Value str(std::string v);
    static Value atom(const std::string& name, TypePtr given);
    static Value pairv(Value a, Value d);
    static Value setv(Bunch contents);  // contents must be proper

private:
    explicit Value(ValueKind k) : kind(k) {}
};

// Canonical order: ints by value; chars and strings lexicographic; F before T;
// given atoms by carrier declaration order; pairs lexicographic (fst, then snd);
// sets by cardinality first, then lexicographic over ordered members.
// Both arguments must have the same type.
int compareValues(const Value& a, const Value& b);
bool operator==(const Value& a, const Value& b);
inline bool operator!=(const Value& a, const Value& b) { return !(a == b); }

TypePtr typeOf(const Value& v);
std::string show(const Value& v);

} // namespace bt
