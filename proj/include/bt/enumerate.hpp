#pragma once

#include <vector>

#include "bt/bunch.hpp"

namespace bt {

// Bounds for enumerating the elements of a type. INT is only enumerable over
// an explicit range; CHAR over a finite alphabet; SET/PAIR enumeration nests
// up to setDepth. maxCount caps the total number of elements produced and
// defaults to the BT_MAX_ENUM environment variable (or 1e6).
struct EnumCtx {
    long long intLo = 0;
    long long intHi = 9;
    std::string charAlphabet = "abcdefghijklmnopqrstuvwxyz";
    int setDepth = 2;
    std::size_t maxCount = defaultMaxEnum();

    static std::size_t defaultMaxEnum();
};

// All elements of t in canonical order. Throws EnumerationError when the
// type is not finitely enumerable within the context (e.g. STRING, or a
// SET nested deeper than setDepth, or more than maxCount elements).
std::vector<Value> enumerateType(const TypePtr& t, const EnumCtx& ctx);

} // namespace bt
