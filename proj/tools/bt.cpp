// bt — command line front end: evaluation, prospective values, the basic-law
// oracle, axiom validation, grammar fixpoints, scripts, and a repl.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bt/model.hpp"
#include "bt/script.hpp"
#include "bt/wp.hpp"

namespace {

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open file '" << path << "'\n";
        std::exit(2);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool isDeclLine(const std::string& line) {
    std::istringstream in(line);
    std::string w;
    in >> w;
    return w == "given" || w == "var" || w == "let" || w == "init" || w == "prog" ||
           w == "grammar";
}

// Program and space files may open with declaration lines (given/var/init ...);
// the remaining lines are the payload text.
std::string loadWithDecls(const std::string& path, bt::Session& s, int& failures) {
    std::string text = readFile(path);
    std::istringstream in(text);
    std::string line, payload;
    while (std::getline(in, line)) {
        std::string t = line;
        std::size_t b = t.find_first_not_of(" \t\r");
        if (b == std::string::npos || t[b] == '#') continue;
        if (payload.empty() && isDeclLine(t.substr(b))) {
            bool failed = false;
            std::string out = bt::runLine(line, s, ".", failed);
            if (failed) {
                std::cerr << out;
                ++failures;
            }
            continue;
        }
        if (!payload.empty()) payload += "\n";
        payload += line;
    }
    return payload;
}

int runDirective(const std::string& line, bt::Session& s) {
    bool failed = false;
    std::string out = bt::runLine(line, s, ".", failed);
    std::cout << out;
    return failed ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bunch calculus toolkit"};
    app.require_subcommand(1);

    std::string expr, programFile, spaceFile, declsFile, grammarFile, scriptFile;
    std::string word, nt = "ID";
    int chainN = -1, depth = 5, carrier = 2, axDepth = 2;
    bool improper = false, corrupt = false, lemmas = false, json = false, noPrune = false;

    auto* cEval = app.add_subcommand("eval", "evaluate a bunch expression");
    cEval->add_option("expr", expr, "expression text")->required();
    cEval->add_option("--decls", declsFile, "declaration script to load first");

    auto* cPv = app.add_subcommand("pv", "prospective value S <> E");
    cPv->add_option("--program", programFile, "program file")->required();
    cPv->add_option("--expr", expr, "post-expression text")->required();

    auto* cExpect = app.add_subcommand("expect", "probabilistic expectation of S <> E");
    cExpect->add_option("--program", programFile, "program file")->required();
    cExpect->add_option("--expr", expr, "post-expression text")->required();

    auto* cLaw = app.add_subcommand("check-basic-law",
                                    "check z:(S<>E) == <S>(z:E) over a state space");
    cLaw->add_option("--program", programFile, "program file")->required();
    cLaw->add_option("--expr", expr, "post-expression text")->required();
    cLaw->add_option("--space", spaceFile, "state space declaration file")->required();

    auto* cVal = app.add_subcommand("validate", "check the set/bunch axioms in a finite model");
    cVal->add_option("--carrier", carrier, "carrier size per given set");
    cVal->add_option("--depth", axDepth, "term nesting depth");
    cVal->add_flag("--improper", improper, "also run the improper-bunch battery");
    cVal->add_flag("--corrupt-choice", corrupt, "negative control: break choice");
    cVal->add_flag("--lemmas", lemmas, "also check the derived lemmas");
    cVal->add_flag("--json", json, "one JSON object per line");

    auto* cGram = app.add_subcommand("grammar", "fixpoint queries on a grammar file");
    cGram->add_option("--file", grammarFile, "grammar file")->required();
    cGram->add_option("--chain", chainN, "print the first N approximants");
    cGram->add_option("--member", word, "word to test for membership");
    cGram->add_option("--nt", nt, "nonterminal for --member");
    cGram->add_option("--depth", depth, "approximation depth for --member");
    cGram->add_flag("--no-prune", noPrune, "disable prefix pruning in --member");

    auto* cRun = app.add_subcommand("run", "run a script file");
    cRun->add_option("script", scriptFile, "script file")->required();

    auto* cRepl = app.add_subcommand("repl", "interactive session");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cEval) {
            bt::Session s;
            int failures = 0;
            if (!declsFile.empty()) {
                bt::ScriptResult r = bt::runScript(readFile(declsFile), s);
                std::cout << r.transcript;
                failures += r.failures;
            }
            return failures + runDirective("eval " + expr, s);
        }
        if (*cPv || *cExpect) {
            bt::Session s;
            int failures = 0;
            std::string prog = loadWithDecls(programFile, s, failures);
            const char* dir = *cPv ? "pv " : "expect ";
            return failures + runDirective(dir + ("(" + prog + ") <> " + expr), s);
        }
        if (*cLaw) {
            bt::Session s;
            int failures = 0;
            bt::ScriptResult r = bt::runScript(readFile(spaceFile), s);
            std::cout << r.transcript;
            failures += r.failures;
            std::string prog = loadWithDecls(programFile, s, failures);
            return failures +
                   runDirective("wpcheck (" + prog + ") <> " + expr, s);
        }
        if (*cVal) {
            bt::model::ValidateConfig cfg{carrier, axDepth, improper, corrupt};
            auto rs = bt::model::validateAxioms(cfg);
            if (lemmas) {
                auto ls = bt::model::lemmaSuite(cfg);
                rs.insert(rs.end(), ls.begin(), ls.end());
            }
            int failures = 0;
            for (const auto& r : rs) {
                if (r.status == "FAIL") ++failures;
                if (json) {
                    nlohmann::json j{{"group", r.group},
                                     {"name", r.name},
                                     {"status", r.status},
                                     {"detail", r.detail}};
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << r.status << " " << r.group << "/" << r.name;
                    if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
                    std::cout << "\n";
                }
            }
            return failures == 0 ? 0 : 1;
        }
        if (*cGram) {
            auto g = bt::fixpoint::parseGrammar(readFile(grammarFile));
            if (chainN >= 0) {
                auto res = bt::fixpoint::mutualChain(g, chainN);
                for (std::size_t k = 0; k < res.steps.size(); ++k)
                    for (const auto& n : g.order)
                        std::cout << n << "[" << (k + 1)
                                  << "] = " << bt::show(res.steps[k].at(n)) << "\n";
                if (res.stabilized) std::cout << "stabilized\n";
                return 0;
            }
            if (!word.empty()) {
                auto res = bt::fixpoint::memberBounded(g, nt, word, depth, !noPrune);
                if (res.found)
                    std::cout << "YES at depth " << res.depth << "\n";
                else if (res.definite)
                    std::cout << "NO (stabilized at depth " << res.depth << ")\n";
                else
                    std::cout << "NO up to depth " << res.depth << "\n";
                return 0;
            }
            std::cerr << "error: grammar needs --chain or --member\n";
            return 2;
        }
        if (*cRun) {
            bt::Session s;
            std::string baseDir = ".";
            if (auto slash = scriptFile.find_last_of('/'); slash != std::string::npos)
                baseDir = scriptFile.substr(0, slash);
            bt::ScriptResult r = bt::runScript(readFile(scriptFile), s, baseDir);
            std::cout << r.transcript;
            return r.failures == 0 ? 0 : 1;
        }
        if (*cRepl) {
            bt::repl(std::cin, std::cout);
            return 0;
        }
    } catch (const bt::Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
