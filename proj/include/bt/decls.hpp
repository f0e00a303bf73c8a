#pragma once

#include <map>

#include "bt/enumerate.hpp"

namespace bt {

// Session-level declarations: given sets, variable types, INT ranges for
// state variables, and the enumeration bounds.
struct Decls {
    std::map<std::string, TypePtr> varTypes;
    std::map<std::string, std::pair<long long, long long>> intRanges;
    std::vector<TypePtr> givens;
    EnumCtx enumCtx;

    TypePtr typeOfVar(const std::string& name) const {
        auto it = varTypes.find(name);
        return it == varTypes.end() ? nullptr : it->second;
    }

    // The given type whose carrier contains this atom name, if any.
    TypePtr lookupAtom(const std::string& name) const {
        for (const auto& g : givens)
            for (const auto& a : g->carrier)
                if (a == name) return g;
        return nullptr;
    }

    // Enumeration context for one variable: its declared range if it has one.
    EnumCtx ctxFor(const std::string& name) const {
        EnumCtx c = enumCtx;
        auto it = intRanges.find(name);
        if (it != intRanges.end()) {
            c.intLo = it->second.first;
            c.intHi = it->second.second;
        }
        return c;
    }
};

} // namespace bt
