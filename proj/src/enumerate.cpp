#include "bt/enumerate.hpp"

#include <algorithm>
#include <cstdlib>

namespace bt {

std::size_t EnumCtx::defaultMaxEnum() {
    if (const char* v = std::getenv("BT_MAX_ENUM")) {
        char* end = nullptr;
        unsigned long long n = std::strtoull(v, &end, 10);
        if (end && *end == '\0' && n > 0) return (std::size_t)n;
    }
    return 1000000;
}

static std::vector<Value> enumerate(const TypePtr& t, const EnumCtx& ctx, int depth) {
    std::vector<Value> out;
    auto checkCount = [&](std::size_t n) {
        if (n > ctx.maxCount)
            throw EnumerationError("enumeration of " + show(t) + " exceeds the bound of " +
                                   std::to_string(ctx.maxCount) + " elements");
    };
    switch (t->kind) {
        case TypeKind::Int: {
            if (ctx.intHi < ctx.intLo)
                throw EnumerationError("empty INT enumeration range");
            checkCount((std::size_t)(ctx.intHi - ctx.intLo + 1));
            for (long long i = ctx.intLo; i <= ctx.intHi; ++i) out.push_back(Value::intv(i));
            return out;
        }
        case TypeKind::Bool:
            out.push_back(Value::boolean(false));
            out.push_back(Value::boolean(true));
            return out;
        case TypeKind::Char:
            checkCount(ctx.charAlphabet.size());
            for (char c : ctx.charAlphabet) out.push_back(Value::charv(c));
            std::sort(out.begin(), out.end(),
                      [](const Value& a, const Value& b) { return compareValues(a, b) < 0; });
            return out;
        case TypeKind::String:
            throw EnumerationError("STRING is not finitely enumerable");
        case TypeKind::Given:
            for (const auto& name : t->carrier) out.push_back(Value::atom(name, t));
            return out;
        case TypeKind::Pair: {
            auto ls = enumerate(t->left, ctx, depth);
            auto rs = enumerate(t->right, ctx, depth);
            checkCount(ls.size() * rs.size());
            for (const auto& l : ls)
                for (const auto& r : rs) out.push_back(Value::pairv(l, r));
            std::sort(out.begin(), out.end(),
                      [](const Value& a, const Value& b) { return compareValues(a, b) < 0; });
            return out;
        }
        case TypeKind::Set: {
            if (depth >= ctx.setDepth)
                throw EnumerationError("SET enumeration deeper than the bound of " +
                                       std::to_string(ctx.setDepth));
            auto inner = enumerate(t->left, ctx, depth + 1);
            if (inner.size() > 20)
                throw EnumerationError("powerset of " + std::to_string(inner.size()) +
                                       " elements is too large to enumerate");
            std::size_t n = (std::size_t)1 << inner.size();
            checkCount(n);
            for (std::size_t mask = 0; mask < n; ++mask) {
                std::vector<Value> members;
                for (std::size_t i = 0; i < inner.size(); ++i)
                    if (mask & ((std::size_t)1 << i)) members.push_back(inner[i]);
                out.push_back(Value::setv(Bunch::of(t->left, std::move(members))));
            }
            std::sort(out.begin(), out.end(),
                      [](const Value& a, const Value& b) { return compareValues(a, b) < 0; });
            return out;
        }
    }
    throw EnumerationError("unreachable type kind");
}

std::vector<Value> enumerateType(const TypePtr& t, const EnumCtx& ctx) {
    return enumerate(t, ctx, 0);
}

} // namespace bt
