#include "bt/script.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "bt/model.hpp"
#include "bt/wp.hpp"

namespace bt {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// first word and the rest of the line
std::pair<std::string, std::string> split1(const std::string& s) {
    std::size_t sp = s.find_first_of(" \t");
    if (sp == std::string::npos) return {s, ""};
    return {s.substr(0, sp), trim(s.substr(sp + 1))};
}

// {name} splices the text of a named program, parenthesized
std::string expandPrograms(const std::string& text, const Session& s) {
    std::string out = text;
    for (const auto& [name, prog] : s.programs) {
        std::string key = "{" + name + "}";
        std::string rep = "(" + render(prog) + ")";
        std::size_t at = 0;
        while ((at = out.find(key, at)) != std::string::npos) {
            out.replace(at, key.size(), rep);
            at += rep.size();
        }
    }
    return out;
}

std::string boolWord(bool b) { return b ? "true" : "false"; }

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw EvalError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string axiomLine(const model::AxiomResult& r) {
    std::string line = r.status + " " + r.group + "/" + r.name;
    if (!r.detail.empty()) line += "  (" + r.detail + ")";
    return line;
}

struct DirectiveError : Error {
    using Error::Error;
};

std::string doValidate(const std::string& args, bool& failed) {
    model::ValidateConfig cfg;
    bool lemmas = false;
    std::istringstream in(args);
    std::string w;
    while (in >> w) {
        if (w.rfind("carrier=", 0) == 0) cfg.carrier = std::stoi(w.substr(8));
        else if (w.rfind("depth=", 0) == 0) cfg.depth = std::stoi(w.substr(6));
        else if (w == "improper") cfg.improper = true;
        else if (w == "corrupt-choice") cfg.corruptChoice = true;
        else if (w == "lemmas") lemmas = true;
        else throw DirectiveError("unknown validate option '" + w + "'");
    }
    std::ostringstream out;
    for (const auto& r : model::validateAxioms(cfg)) {
        out << axiomLine(r) << "\n";
        if (r.status == "FAIL") failed = true;
    }
    if (lemmas)
        for (const auto& r : model::lemmaSuite(cfg)) {
            out << axiomLine(r) << "\n";
            if (r.status == "FAIL") failed = true;
        }
    return out.str();
}

const fixpoint::GrammarSystem& grammarOf(Session& s, const std::string& name) {
    auto it = s.grammars.find(name);
    if (it == s.grammars.end()) throw DirectiveError("unknown grammar '" + name + "'");
    return it->second;
}

}  // namespace

Env Session::env() const {
    Env e = bindings;
    for (const auto& [name, type] : decls.varTypes) {
        if (e.find(name)) continue;
        try {
            auto elems = enumerateType(type, decls.ctxFor(name));
            if (!elems.empty()) e.vars.emplace(name, Bunch::unit(elems.front()));
        } catch (const EnumerationError&) {
            // not enumerable and not initialized: leave unbound
        }
    }
    return e;
}

std::string runLine(const std::string& rawLine, Session& s, const std::string& baseDir,
                    bool& failed) {
    std::string line = trim(rawLine);
    if (line.empty() || line[0] == '#') return "";
    auto [word, rest] = split1(line);

    try {
        // --- declarations ------------------------------------------------
        if (word == "given") {
            auto [name, tail] = split1(rest);
            auto eq = split1(tail);
            if (eq.first != "=") throw DirectiveError("given NAME = a, b, ...");
            std::vector<std::string> carrier;
            std::istringstream in(eq.second);
            std::string atom;
            while (std::getline(in, atom, ',')) {
                atom = trim(atom);
                if (atom.empty()) throw DirectiveError("empty atom name");
                carrier.push_back(atom);
            }
            if (carrier.empty()) throw DirectiveError("a given set needs at least one atom");
            s.decls.givens.push_back(Type::given(name, carrier));
            return "";
        }
        if (word == "var") {
            auto [name, tail] = split1(rest);
            auto col = split1(tail);
            if (col.first != ":") throw DirectiveError("var NAME : TYPE");
            TypeAnn ann = parseTypeAnn(col.second, s.decls);
            s.decls.varTypes[name] = ann.type;
            if (ann.range) s.decls.intRanges[name] = *ann.range;
            return "";
        }
        if (word == "let" || word == "init") {
            auto [name, tail] = split1(rest);
            auto eq = split1(tail);
            if (eq.first != "=") throw DirectiveError(word + " NAME = EXPR");
            ExprP e = parseExpr(expandPrograms(eq.second, s), s.decls);
            Env env = s.env();
            typecheckExpr(e, s.decls, scopeFromEnv(env));
            Bunch v = evalExpr(e, env, s.decls);
            if (word == "init") {
                if (!s.decls.typeOfVar(name))
                    throw DirectiveError("init of undeclared variable '" + name + "'");
                if (!v.isElement())
                    throw DirectiveError("init value must be an element, got " + show(v));
            }
            s.bindings.vars.insert_or_assign(name, std::move(v));
            return "";
        }
        if (word == "prog") {
            auto [name, tail] = split1(rest);
            auto eq = split1(tail);
            if (eq.first != "=") throw DirectiveError("prog NAME = PROGRAM");
            CmdP c = parseCmd(expandPrograms(eq.second, s), s.decls);
            typecheckCmd(c, s.decls);
            s.programs[name] = c;
            return "";
        }
        if (word == "grammar") {
            auto [name, tail] = split1(rest);
            auto eq = split1(tail);
            if (eq.first != "=") throw DirectiveError("grammar NAME = FILE");
            std::string path = eq.second;
            if (!path.empty() && path[0] != '/') path = baseDir + "/" + path;
            s.grammars[name] = fixpoint::parseGrammar(readFile(path));
            return "";
        }

        // --- directives ----------------------------------------------------
        if (word == "eval") {
            AnyNode n = parseAny(expandPrograms(rest, s), s.decls);
            Env env = s.env();
            if (n.kind == NodeKind::Expr) {
                typecheckExpr(n.e, s.decls, scopeFromEnv(env));
                return show(evalExpr(n.e, env, s.decls)) + "\n";
            }
            if (n.kind == NodeKind::Pred) {
                typecheckPred(n.p, s.decls, scopeFromEnv(env));
                return boolWord(evalPred(n.p, env, s.decls)) + "\n";
            }
            if (n.kind == NodeKind::Query) {
                typecheckCmd(n.q.prog, s.decls);
                return show(pv(n.q.prog, n.q.expr, env, s.decls)) + "\n";
            }
            throw DirectiveError("eval expects an expression or predicate, not a program");
        }
        if (word == "pred") {
            PredP p = parsePred(expandPrograms(rest, s), s.decls);
            Env env = s.env();
            typecheckPred(p, s.decls, scopeFromEnv(env));
            return boolWord(evalPred(p, env, s.decls)) + "\n";
        }
        if (word == "pv" || word == "expect") {
            PvQuery q = parsePvQuery(expandPrograms(rest, s), s.decls);
            typecheckCmd(q.prog, s.decls);
            Env env = s.env();
            Bunch v = word == "pv" ? pv(q.prog, q.expr, env, s.decls)
                                   : pvExpect(q.prog, q.expr, env, s.decls);
            return show(v) + "\n";
        }
        if (word == "fis") {
            CmdP c = parseCmd(expandPrograms(rest, s), s.decls);
            typecheckCmd(c, s.decls);
            return boolWord(fis(c, s.env(), s.decls)) + "\n";
        }
        if (word == "wpcheck") {
            PvQuery q = parsePvQuery(expandPrograms(rest, s), s.decls);
            typecheckCmd(q.prog, s.decls);
            std::vector<std::string> names;
            for (const auto& [n, t] : s.decls.varTypes) names.push_back(n);
            StateSpace sp = StateSpace::over(names, s.decls);
            LawReport rep = basicLawCheck(q.prog, q.expr, sp, s.decls);
            if (rep.ok) return "ok: " + std::to_string(rep.checked) + " checks\n";
            failed = true;
            std::string out = "FAIL: basic law violated\n";
            for (const auto& v : rep.violations) out += "  " + v + "\n";
            return out;
        }
        if (word == "validate") return doValidate(rest, failed);
        if (word == "chain") {
            auto [name, tail] = split1(rest);
            int n = std::stoi(tail.empty() ? "3" : tail);
            const auto& g = grammarOf(s, name);
            auto res = fixpoint::mutualChain(g, n);
            std::ostringstream out;
            for (std::size_t k = 0; k < res.steps.size(); ++k)
                for (const auto& nt : g.order)
                    out << nt << "[" << (k + 1) << "] = " << show(res.steps[k].at(nt))
                        << "\n";
            if (res.stabilized) out << "stabilized\n";
            return out.str();
        }
        if (word == "member") {
            std::istringstream in(rest);
            std::string name, nt, wordArg;
            int depth = 5;
            in >> name >> nt >> wordArg >> depth;
            if (wordArg.size() >= 2 && wordArg.front() == '"' && wordArg.back() == '"')
                wordArg = wordArg.substr(1, wordArg.size() - 2);
            auto res = fixpoint::memberBounded(grammarOf(s, name), nt, wordArg, depth);
            if (res.found) return "YES at depth " + std::to_string(res.depth) + "\n";
            if (res.definite) return "NO (stabilized at depth " + std::to_string(res.depth) + ")\n";
            return "NO up to depth " + std::to_string(res.depth) + "\n";
        }
        throw DirectiveError("unknown directive '" + word + "'");
    } catch (const Error& ex) {
        failed = true;
        return std::string("error: ") + ex.what() + "\n";
    }
}

ScriptResult runScript(const std::string& text, Session& s, const std::string& baseDir) {
    ScriptResult res;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        bool failed = false;
        res.transcript += runLine(line, s, baseDir, failed);
        if (failed) ++res.failures;
    }
    return res;
}

void repl(std::istream& in, std::ostream& out) {
    Session s;
    std::string line;
    out << "bunch calculus repl; declarations: given/var/let/init/prog/grammar; "
           "directives: eval/pred/pv/expect/fis/wpcheck/validate/chain/member; "
           "quit to leave\n";
    for (;;) {
        out << "bt> " << std::flush;
        if (!std::getline(in, line)) break;
        std::string t = trim(line);
        if (t == "quit" || t == "exit" || t == ":q") break;
        bool failed = false;
        out << runLine(line, s, ".", failed);
    }
}

} // namespace bt
