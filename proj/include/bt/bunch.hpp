#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bt/value.hpp"

namespace bt {

// A bunch is the contents of a set, without the package: zero or more
// elements of one type, or the improper bunch of that type. Immutable;
// elements are kept sorted in canonical order with no duplicates, so
// structural equality is representational equality.
class Bunch {
public:
    TypePtr type;
    bool improper = false;
    std::vector<Value> elems;  // canonical order, deduplicated; ignored when improper

    static Bunch null(TypePtr t);
    static Bunch bottom(TypePtr t);  // the improper bunch of type t
    static Bunch unit(Value v);
    static Bunch of(TypePtr t, std::vector<Value> vs);  // sorts + dedupes

    bool isNull() const { return !improper && elems.empty(); }
    bool isImproper() const { return improper; }
    bool isElement() const { return !improper && elems.size() == 1; }
    const Value& theElement() const;  // requires isElement()

private:
    Bunch() = default;
};

bool operator==(const Bunch& a, const Bunch& b);
inline bool operator!=(const Bunch& a, const Bunch& b) { return !(a == b); }

// A , B — union. Absorbs the improper bunch.
Bunch bunchUnion(const Bunch& a, const Bunch& b);

// A ' B — intersection. The improper guard fires before anything else, so
// intersecting the improper bunch with null still yields the improper bunch.
Bunch intersect(const Bunch& a, const Bunch& b);

// A \ B — difference; improper if either side is.
Bunch diff(const Bunch& a, const Bunch& b);

// A : B — sub-bunch. Everything is a sub-bunch of the improper bunch; the
// improper bunch is a sub-bunch of nothing else.
bool subBunch(const Bunch& a, const Bunch& b);

// ¢A — number of elements. Undefined for the improper bunch.
long long cardinality(const Bunch& a);

// {A} — packaging. {improper:T} = improper:SET(T).
Bunch pack(const Bunch& a);

// ~E — unpackaging, lifted over a bunch of sets: the union of their contents.
Bunch unpack(const Bunch& e);

// g ↣ E — guarded bunch. E is taken lazily: when g is false the thunk is
// never run, and the result is null of the stated type.
Bunch guard(bool g, const TypePtr& t, const std::function<Bunch()>& e);

// p ⫢ E — preconditioned bunch, taken eagerly: ⊥ of E's type when p is false.
Bunch precond(bool p, const Bunch& e);

// E ↦ F — maplet, lifted pairwise. Improper absorbs before null does.
Bunch maplet(const Bunch& a, const Bunch& b);

// Pointwise lifting of a scalar operator. A partial operator signals "outside
// my domain" by returning nullopt; such pairs contribute nothing (so the
// result can be null even for non-null operands). Improper absorbs.
Bunch liftBinary(const TypePtr& result, const Bunch& a, const Bunch& b,
                 const std::function<std::optional<Value>(const Value&, const Value&)>& op);
Bunch liftUnary(const TypePtr& result, const Bunch& a,
                const std::function<std::optional<Value>(const Value&)>& op);

// ∮x • body — union of body(v) over the supplied domain of elements.
Bunch comprehension(const std::vector<Value>& domain, const TypePtr& resultType,
                    const std::function<Bunch(const Value&)>& body);

// E ∈ S — lifted membership: every element of E belongs to every set-element
// of S. Vacuously true when E or S is null; false when either is improper.
bool member(const Bunch& e, const Bunch& s);

// Atomic: cannot be split into two non-null proper parts. Elements, null and
// the improper bunch are the atomic bunches.
bool isAtomic(const Bunch& a);

std::string show(const Bunch& a);

} // namespace bt
