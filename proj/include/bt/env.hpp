#pragma once

#include <map>
#include <string>

#include "bt/bunch.hpp"

namespace bt {

// Variable bindings. Program states bind every variable to an elementary
// bunch; general expression evaluation also allows non-elementary bindings
// (a let-bound bunch, a quantifier probe, ...).
struct Env {
    std::map<std::string, Bunch> vars;

    const Bunch* find(const std::string& name) const {
        auto it = vars.find(name);
        return it == vars.end() ? nullptr : &it->second;
    }

    const Bunch& at(const std::string& name) const {
        if (const Bunch* b = find(name)) return *b;
        throw EvalError("unbound variable '" + name + "'");
    }

    Env with(const std::string& name, Bunch b) const {
        Env e = *this;
        e.vars.insert_or_assign(name, std::move(b));
        return e;
    }

    bool elementary() const {
        for (const auto& [k, v] : vars)
            if (!v.isElement()) return false;
        return true;
    }
};

} // namespace bt
