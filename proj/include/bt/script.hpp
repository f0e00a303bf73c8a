#pragma once

#include <iosfwd>
#include <map>

#include "bt/fixpoint.hpp"
#include "bt/parser.hpp"

namespace bt {

// A session: declarations plus named programs and grammars. Scripts and the
// REPL mutate one session; directives read it.
struct Session {
    Decls decls;
    Env bindings;  // explicit init values and let-bound bunches
    std::map<std::string, CmdP> programs;
    std::map<std::string, fixpoint::GrammarSystem> grammars;

    // The evaluation environment: bindings, with every declared variable
    // not bound explicitly defaulting to the first element of its type.
    Env env() const;
};

struct ScriptResult {
    std::string transcript;
    int failures = 0;
};

// One line: a declaration (given / var / let / init / prog / grammar) or a
// directive (eval / pred / pv / expect / fis / wpcheck / validate / chain /
// member). Returns the transcript lines for the directive ("" for pure
// declarations); parse/eval problems are reported as "error: ..." lines and
// count as failures.
std::string runLine(const std::string& line, Session& s, const std::string& baseDir,
                    bool& failed);

ScriptResult runScript(const std::string& text, Session& s,
                       const std::string& baseDir = ".");

// Interactive loop over the same directives; prompts with "bt> ".
void repl(std::istream& in, std::ostream& out);

} // namespace bt
