#include "bt/parser.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <utility>
#include <vector>

namespace bt {

namespace {

enum class Tok {
    End, Int, CharLit, StrLit, Ident,
    LPar, RPar, LBrace, RBrace,
    Comma, Quote, Backslash, Plus, Minus, Star, Slash, Mod,
    MapletT, Dot, DotDot,
    Lt, Le, Gt, Ge, EqT, Ne,
    Colon, PSub, In, NotIn,
    AndT, OrT, NotT, ImpT, IffT,
    GuardT, PrecondT,
    AssignT, GuardCmdT, ChoiceT, ProbT, PrefT, Semi, Bar, DiamondT,
    ComprT, At, Lam, ForallT, ExistsT, Tilde, CardPrefix, BotT,
    KwSkip, KwAbort, KwMagic, KwIf, KwThen, KwElse, KwEnd, KwNull, KwImproper,
    KwCard, KwTrue, KwFalse, KwT, KwF, KwEqb, KwLtb, KwMemb, KwAndb,
    Reserved,
};

struct Token {
    Tok kind;
    std::string text;
    long long num = 0;
    char ch = 0;
    std::size_t pos = 0;
};

struct Spelling {
    const char* s;
    Tok kind;
};

// Longest spellings first; scanning stops at the first prefix match.
const Spelling kSpellings[] = {
    {"\xe2\x9f\xa9\xe2\x9f\xa9", Tok::PrefT},  // double right angle bracket
    {"<=>", Tok::IffT},  {"<+>", Tok::ProbT},  {"==>", Tok::GuardCmdT},
    {"->>", Tok::GuardT}, {"|->", Tok::MapletT}, {"|>>", Tok::PrecondT},
    {"\xe2\x89\xa1>", Tok::Reserved},          // three-bar arrow
    {"\xe2\x86\xa3", Tok::GuardT},             // guard arrow
    {"\xe2\xab\xa2", Tok::PrecondT},           // precondition turnstile
    {"\xe2\x86\xa6", Tok::MapletT},            // maplet arrow
    {"\xe2\x97\x87", Tok::DiamondT},           // diamond
    {"\xe2\x8a\x93", Tok::ChoiceT},            // square cap
    {"\xe2\x9f\xb9", Tok::GuardCmdT},          // long double arrow
    {"\xe2\x8a\x95", Tok::ProbT},              // circled plus
    {"\xe2\x8a\xa5", Tok::BotT},               // up tack
    {"\xe2\x88\xae", Tok::ComprT},             // contour integral
    {"\xe2\x80\xa2", Tok::At},                 // bullet
    {"\xe2\x88\x80", Tok::ForallT},            // for all
    {"\xe2\x88\x83", Tok::ExistsT},            // exists
    {"\xce\xbb", Tok::Lam},                    // lambda
    {"\xc2\xac", Tok::NotT},                   // not sign
    {"\xc2\xa2", Tok::CardPrefix},             // cent sign
    {"\xe2\x88\x88", Tok::In},                 // element of
    {"\xe2\x88\x89", Tok::NotIn},              // not element of
    {"\xe2\x89\xa0", Tok::Ne},                 // not equal
    {"\xe2\x89\xa4", Tok::Le},                 // less or equal
    {"\xe2\x89\xa5", Tok::Ge},                 // greater or equal
    {"\xe2\x8a\x86", Tok::Colon},              // subset or equal
    {"\xe2\x8a\x82", Tok::PSub},               // proper subset
    {"\xe2\x88\xa7", Tok::AndT},               // logical and
    {"\xe2\x88\xa8", Tok::OrT},                // logical or
    {"\xe2\x87\x92", Tok::ImpT},               // implies
    {"\xe2\x87\x94", Tok::IffT},               // if and only if
    {"\xe2\x88\x87", Tok::Reserved},           // nabla
    {"\xe2\x8a\x91", Tok::Reserved},           // square image or equal
    {"\xe2\x8a\x94", Tok::Reserved},           // square cup
    {"\xe2\x8a\x9e", Tok::Reserved},           // squared plus
    {"\xe2\x88\xa9", Tok::Reserved},           // set intersection
    {"\xe2\x88\xaa", Tok::Reserved},           // set union
    {"\xe2\x86\x92", Tok::Reserved},           // rightwards arrow
    {"\xe2\x89\x9c", Tok::Reserved},           // delta equal
    {"\xe2\x89\xa1", Tok::Reserved},           // identical to
    {"\xce\x9b", Tok::Reserved},               // capital lambda
    {"<=", Tok::Le},  {">=", Tok::Ge},  {"!=", Tok::Ne},  {"!!", Tok::BotT},
    {":=", Tok::AssignT}, {"<>", Tok::DiamondT}, {">>", Tok::PrefT},
    {"[]", Tok::ChoiceT}, {"=>", Tok::ImpT}, {"\\/", Tok::OrT}, {"..", Tok::DotDot},
    {",", Tok::Comma}, {"\\", Tok::Backslash}, {"+", Tok::Plus}, {"-", Tok::Minus},
    {"*", Tok::Star}, {"/", Tok::Slash}, {"%", Tok::ComprT}, {"@", Tok::At},
    {"~", Tok::Tilde}, {"!", Tok::NotT}, {"=", Tok::EqT}, {"<", Tok::Lt},
    {">", Tok::Gt}, {":", Tok::Colon}, {"&", Tok::AndT}, {";", Tok::Semi},
    {"|", Tok::Bar}, {"(", Tok::LPar}, {")", Tok::RPar}, {"{", Tok::LBrace},
    {"}", Tok::RBrace}, {".", Tok::Dot},
};

struct Keyword {
    const char* s;
    Tok kind;
};

const Keyword kKeywords[] = {
    {"in", Tok::In},       {"mod", Tok::Mod},     {"skip", Tok::KwSkip},
    {"abort", Tok::KwAbort}, {"magic", Tok::KwMagic}, {"if", Tok::KwIf},
    {"then", Tok::KwThen}, {"else", Tok::KwElse}, {"end", Tok::KwEnd},
    {"lam", Tok::Lam},     {"forall", Tok::ForallT}, {"exists", Tok::ExistsT},
    {"null", Tok::KwNull}, {"improper", Tok::KwImproper}, {"card", Tok::KwCard},
    {"true", Tok::KwTrue}, {"false", Tok::KwFalse}, {"T", Tok::KwT},
    {"F", Tok::KwF},       {"eqb", Tok::KwEqb},   {"ltb", Tok::KwLtb},
    {"memb", Tok::KwMemb}, {"andb", Tok::KwAndb}, {"pow", Tok::Reserved},
};

bool identStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool identChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0, n = src.size();
    while (i < n) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { ++i; continue; }
        if (c == '#') {  // comment to end of line
            while (i < n && src[i] != '\n') ++i;
            continue;
        }
        Token t;
        t.pos = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            while (i < n && std::isdigit(static_cast<unsigned char>(src[i])))
                v = v * 10 + (src[i++] - '0');
            t.kind = Tok::Int;
            t.num = v;
            out.push_back(t);
            continue;
        }
        if (identStart(c)) {
            std::size_t j = i;
            while (j < n && identChar(src[j])) ++j;
            t.text = src.substr(i, j - i);
            i = j;
            t.kind = Tok::Ident;
            for (const auto& kw : kKeywords)
                if (t.text == kw.s) { t.kind = kw.kind; break; }
            out.push_back(t);
            continue;
        }
        if (c == '\'') {
            // 'x' is a character literal for printable non-space x; any other
            // quote is bunch intersection ("x ' 'a'" intersects with 'a').
            if (i + 2 < n && src[i + 2] == '\'' && src[i + 1] != '\'' &&
                src[i + 1] != ' ') {
                t.kind = Tok::CharLit;
                t.ch = src[i + 1];
                i += 3;
            } else {
                t.kind = Tok::Quote;
                ++i;
            }
            out.push_back(t);
            continue;
        }
        if (c == '"') {
            std::size_t j = i + 1;
            while (j < n && src[j] != '"') ++j;
            if (j >= n) throw ParseError("unterminated string literal", i);
            t.kind = Tok::StrLit;
            t.text = src.substr(i + 1, j - i - 1);
            i = j + 1;
            out.push_back(t);
            continue;
        }
        bool matched = false;
        for (const auto& sp : kSpellings) {
            std::size_t len = std::char_traits<char>::length(sp.s);
            if (src.compare(i, len, sp.s) == 0) {
                t.kind = sp.kind;
                t.text = sp.s;
                i += len;
                matched = true;
                break;
            }
        }
        if (!matched)
            throw ParseError("unexpected character '" + std::string(1, c) + "'", i);
        out.push_back(t);
    }
    Token end;
    end.kind = Tok::End;
    end.pos = n;
    out.push_back(end);
    return out;
}

struct Node {
    NodeKind k;
    ExprP e;
    PredP p;
    CmdP c;
    CmdP qs;
    ExprP qe;
};

Node nE(ExprP e) { return {NodeKind::Expr, std::move(e), nullptr, nullptr, nullptr, nullptr}; }
Node nP(PredP p) { return {NodeKind::Pred, nullptr, std::move(p), nullptr, nullptr, nullptr}; }
Node nC(CmdP c) { return {NodeKind::Cmd, nullptr, nullptr, std::move(c), nullptr, nullptr}; }
Node nQ(CmdP s, ExprP e) { return {NodeKind::Query, nullptr, nullptr, nullptr, std::move(s), std::move(e)}; }

class Parser {
public:
    Parser(std::string text, const Decls& d) : d_(d), ts_(lex(text)) {}

    Node parseAll() {
        Node n = parse(0);
        expect(Tok::End, "end of input");
        return n;
    }

    TypeAnn parseAnnAll() {
        TypeAnn ann = parseAnnTail();
        expect(Tok::End, "end of input");
        return ann;
    }

    ExprP needExpr(const Node& n, std::size_t at) {
        switch (n.k) {
            case NodeKind::Expr: return n.e;
            case NodeKind::Pred:
                throw ParseError("predicate found where a bunch expression is expected "
                                 "(boolean values are written with eqb/ltb/memb/andb or T/F)",
                                 at);
            case NodeKind::Cmd:
                throw ParseError("program found where a bunch expression is expected", at);
            case NodeKind::Query:
                throw ParseError("S <> E is a query; write {S <> E} for its results set", at);
        }
        throw ParseError("internal node kind", at);
    }

    PredP needPred(const Node& n, std::size_t at) {
        switch (n.k) {
            case NodeKind::Pred: return n.p;
            case NodeKind::Expr:
                // a boolean-valued expression e used as a predicate reads as e = T
                return cmp(CmpOp::Eq, n.e, lit(Value::boolean(true)));
            default:
                throw ParseError("predicate expected", at);
        }
    }

    CmdP needCmd(const Node& n, std::size_t at) {
        if (n.k == NodeKind::Cmd) return n.c;
        throw ParseError("program expected", at);
    }

private:
    const Decls& d_;
    std::vector<Token> ts_;
    std::size_t i_ = 0;

    const Token& cur() const { return ts_[i_]; }
    const Token& peek(std::size_t k = 1) const {
        return ts_[std::min(i_ + k, ts_.size() - 1)];
    }
    Token advance() { return ts_[i_++]; }
    bool at(Tok k) const { return cur().kind == k; }
    bool eat(Tok k) {
        if (!at(k)) return false;
        ++i_;
        return true;
    }
    Token expect(Tok k, const std::string& what) {
        if (!at(k)) throw ParseError("expected " + what, cur().pos);
        return advance();
    }

    [[noreturn]] void reserved(const Token& t) {
        throw ParseError("operator '" + t.text + "' is reserved and has no semantics here",
                         t.pos);
    }

    // --- types ---------------------------------------------------------

    TypePtr parseTypeInner() {
        Token t = expect(Tok::Ident, "a type name");
        if (t.text == "INT") return Type::integer();
        if (t.text == "BOOL") return Type::boolean();
        if (t.text == "CHAR") return Type::character();
        if (t.text == "STRING") return Type::string();
        if (t.text == "PAIR") {
            expect(Tok::LPar, "'(' after PAIR");
            TypePtr a = parseTypeInner();
            expect(Tok::Comma, "',' in PAIR(,)");
            TypePtr b = parseTypeInner();
            expect(Tok::RPar, "')'");
            return Type::pair(a, b);
        }
        if (t.text == "SET") {
            expect(Tok::LPar, "'(' after SET");
            TypePtr a = parseTypeInner();
            expect(Tok::RPar, "')'");
            return Type::set(a);
        }
        for (const auto& g : d_.givens)
            if (g->name == t.text) return g;
        throw ParseError("unknown type '" + t.text + "'", t.pos);
    }

    long long signedInt() {
        bool negate = eat(Tok::Minus);
        Token t = expect(Tok::Int, "an integer");
        return negate ? -t.num : t.num;
    }

    // after a consumed ':' in binder position; INT may carry (lo..hi)
    TypeAnn parseAnnTail() {
        TypeAnn ann;
        ann.type = parseTypeInner();
        if (ann.type->kind == TypeKind::Int && eat(Tok::LPar)) {
            long long lo = signedInt();
            expect(Tok::DotDot, "'..' in an INT range");
            long long hi = signedInt();
            expect(Tok::RPar, "')'");
            ann.range = {lo, hi};
        }
        return ann;
    }

    // --- binders -------------------------------------------------------

    Node parseBinder(Tok kind, std::size_t atp) {
        std::vector<std::string> names;
        names.push_back(expect(Tok::Ident, "a bound variable name").text);
        while (eat(Tok::Comma))
            names.push_back(expect(Tok::Ident, "a bound variable name").text);
        TypeAnn ann;
        if (eat(Tok::Colon)) ann = parseAnnTail();
        ExprP inSet;
        if ((kind == Tok::ForallT || kind == Tok::ExistsT) && at(Tok::In)) {
            advance();
            inSet = needExpr(parse(prec::Body), cur().pos);
        }
        expect(Tok::At, "'@' introducing the binder body");
        Node body = parse(prec::Body);
        if (kind == Tok::Lam) {
            if (names.size() != 1)
                throw ParseError("lam binds exactly one variable", atp);
            return nE(lambda(names[0], ann, needExpr(body, atp)));
        }
        if (kind == Tok::ComprT) {
            ExprP e = needExpr(body, atp);
            for (auto it = names.rbegin(); it != names.rend(); ++it)
                e = compr(*it, ann, e);
            return nE(e);
        }
        PredKind q = kind == Tok::ForallT ? PredKind::Forall : PredKind::Exists;
        PredP p = needPred(body, atp);
        for (auto it = names.rbegin(); it != names.rend(); ++it) {
            if (inSet) {
                PredP member = memB(var(*it), inSet);
                p = kind == Tok::ForallT ? pbin(PredKind::Imp, member, p)
                                         : pbin(PredKind::And, member, p);
            }
            p = quant(q, *it, ann, p);
        }
        return nP(p);
    }

    // --- prefix / primary ----------------------------------------------

    Node nud() {
        Token t = advance();
        switch (t.kind) {
            case Tok::Int: return nE(litInt(t.num));
            case Tok::CharLit: return nE(lit(Value::charv(t.ch)));
            case Tok::StrLit: return nE(lit(Value::str(t.text)));
            case Tok::Ident: {
                if (TypePtr g = d_.lookupAtom(t.text)) return nE(lit(Value::atom(t.text, g)));
                return nE(var(t.text));
            }
            case Tok::KwT: return nE(lit(Value::boolean(true)));
            case Tok::KwF: return nE(lit(Value::boolean(false)));
            case Tok::KwTrue: return nP(ptrue());
            case Tok::KwFalse: return nP(pfalse());
            case Tok::KwNull: {
                expect(Tok::Colon, "':' and a type after null");
                return nE(nullLit(parseTypeInner()));
            }
            case Tok::KwImproper:
            case Tok::BotT: {
                expect(Tok::Colon, "':' and a type after the improper bunch");
                return nE(botLit(parseTypeInner()));
            }
            case Tok::KwSkip: return nC(skip());
            case Tok::KwAbort: return nC(abortCmd());
            case Tok::KwMagic: return nC(magicCmd());
            case Tok::LPar: {
                Node n = parse(0);
                expect(Tok::RPar, "')'");
                return n;
            }
            case Tok::LBrace: {
                if (at(Tok::RBrace))
                    throw ParseError("empty braces: the empty set is {null:T}", t.pos);
                Node n = parse(0);
                expect(Tok::RBrace, "'}'");
                if (n.k == NodeKind::Query) return nE(resultsSet(n.qs, n.qe));
                return nE(packE(needExpr(n, t.pos)));
            }
            case Tok::Minus:
                return nE(neg(needExpr(parse(prec::Prefix), t.pos)));
            case Tok::Tilde:
                return nE(unpackE(needExpr(parse(prec::Prefix), t.pos)));
            case Tok::NotT:
                return nP(pnot(needPred(parse(prec::Prefix), t.pos)));
            case Tok::CardPrefix:
                return nE(cardE(needExpr(parse(prec::Prefix), t.pos)));
            case Tok::KwCard: {
                expect(Tok::LPar, "'(' after card");
                ExprP e = needExpr(parse(0), t.pos);
                expect(Tok::RPar, "')'");
                return nE(cardE(e));
            }
            case Tok::KwEqb:
            case Tok::KwLtb:
            case Tok::KwMemb:
            case Tok::KwAndb: {
                BoolFn fn = t.kind == Tok::KwEqb   ? BoolFn::Eqb
                            : t.kind == Tok::KwLtb ? BoolFn::Ltb
                            : t.kind == Tok::KwMemb ? BoolFn::Memb
                                                    : BoolFn::Andb;
                expect(Tok::LPar, "'('");
                ExprP a = needExpr(parse(prec::Bunch), t.pos);
                expect(Tok::Comma, "','");
                ExprP b = needExpr(parse(prec::Bunch), t.pos);
                expect(Tok::RPar, "')'");
                return nE(boolCall(fn, a, b));
            }
            case Tok::KwIf: {
                PredP p = needPred(parse(0), t.pos);
                expect(Tok::KwThen, "'then'");
                Node a = parse(0);
                expect(Tok::KwElse, "'else'");
                Node b = parse(0);
                expect(Tok::KwEnd, "'end'");
                if (a.k == NodeKind::Cmd || b.k == NodeKind::Cmd)
                    return nC(ifC(p, needCmd(a, t.pos), needCmd(b, t.pos)));
                return nE(ifE(p, needExpr(a, t.pos), needExpr(b, t.pos)));
            }
            case Tok::ComprT:
            case Tok::Lam:
            case Tok::ForallT:
            case Tok::ExistsT:
                return parseBinder(t.kind, t.pos);
            case Tok::Reserved:
                reserved(t);
            default:
                throw ParseError("unexpected token", t.pos);
        }
    }

    // --- infix levels ----------------------------------------------------

    static int lbp(Tok k) {
        switch (k) {
            case Tok::LPar:
            case Tok::Dot: return prec::App;
            case Tok::Star:
            case Tok::Slash:
            case Tok::Mod: return prec::MulDiv;
            case Tok::Plus:
            case Tok::Minus: return prec::AddSub;
            case Tok::MapletT: return prec::Maplet;
            case Tok::Comma:
            case Tok::Quote:
            case Tok::Backslash: return prec::Bunch;
            case Tok::Lt:
            case Tok::Le:
            case Tok::Gt:
            case Tok::Ge: return prec::Rel;
            case Tok::EqT:
            case Tok::Ne: return prec::Equal;
            case Tok::Colon:
            case Tok::PSub:
            case Tok::In:
            case Tok::NotIn: return prec::Member;
            case Tok::AndT: return prec::AndP;
            case Tok::OrT: return prec::OrP;
            case Tok::ImpT: return prec::ImpP;
            case Tok::IffT: return prec::IffP;
            case Tok::GuardT:
            case Tok::PrecondT: return prec::Guard;
            case Tok::AssignT: return prec::Assign;
            case Tok::GuardCmdT: return prec::GuardCmd;
            case Tok::ChoiceT:
            case Tok::ProbT: return prec::ChoiceCmd;
            case Tok::PrefT: return prec::PrefCmd;
            case Tok::Semi: return prec::SeqCmd;
            case Tok::Bar: return prec::PreCmd;
            case Tok::DiamondT: return prec::Diamond;
            default: return 0;
        }
    }

    std::vector<std::string> targetsOf(const Node& n, std::size_t at) {
        if (n.k != NodeKind::Expr)
            throw ParseError("assignment target must be a variable list", at);
        std::vector<std::string> out;
        std::function<void(const ExprP&)> walk = [&](const ExprP& e) {
            if (e->kind == ExprKind::Union) {
                walk(e->a);
                walk(e->b);
                return;
            }
            if (e->kind != ExprKind::Var)
                throw ParseError(
                    "assignment target must be a variable (parallel assignment is x,y := e,f)",
                    at);
            out.push_back(e->name);
        };
        walk(n.e);
        return out;
    }

    Node led(const Token& t, Node left) {
        std::size_t atp = t.pos;
        switch (t.kind) {
            case Tok::LPar: {
                ExprP f = needExpr(left, atp);
                ExprP arg = needExpr(parse(prec::Bunch), atp);
                while (eat(Tok::Comma))
                    arg = binop(ExprKind::MapletE, arg, needExpr(parse(prec::Bunch), atp));
                expect(Tok::RPar, "')'");
                return nE(apply(f, arg));
            }
            case Tok::Dot:
                return nE(wapply(needExpr(left, atp), needExpr(parse(prec::App), atp)));
            case Tok::Star:
                return nE(arith(ArithOp::Mul, needExpr(left, atp),
                                needExpr(parse(prec::MulDiv), atp)));
            case Tok::Slash:
                return nE(arith(ArithOp::Div, needExpr(left, atp),
                                needExpr(parse(prec::MulDiv), atp)));
            case Tok::Mod:
                return nE(arith(ArithOp::Mod, needExpr(left, atp),
                                needExpr(parse(prec::MulDiv), atp)));
            case Tok::Plus:
                return nE(arith(ArithOp::Add, needExpr(left, atp),
                                needExpr(parse(prec::AddSub), atp)));
            case Tok::Minus:
                return nE(arith(ArithOp::Sub, needExpr(left, atp),
                                needExpr(parse(prec::AddSub), atp)));
            case Tok::MapletT:
                return nE(binop(ExprKind::MapletE, needExpr(left, atp),
                                needExpr(parse(prec::Maplet), atp)));
            case Tok::Comma:
                return nE(binop(ExprKind::Union, needExpr(left, atp),
                                needExpr(parse(prec::Bunch), atp)));
            case Tok::Quote:
                return nE(binop(ExprKind::IntersectE, needExpr(left, atp),
                                needExpr(parse(prec::Bunch), atp)));
            case Tok::Backslash:
                return nE(binop(ExprKind::DiffE, needExpr(left, atp),
                                needExpr(parse(prec::Bunch), atp)));
            case Tok::Lt:
            case Tok::Le:
            case Tok::Gt:
            case Tok::Ge: {
                CmpOp op = t.kind == Tok::Lt   ? CmpOp::Lt
                           : t.kind == Tok::Le ? CmpOp::Le
                           : t.kind == Tok::Gt ? CmpOp::Gt
                                               : CmpOp::Ge;
                return nP(cmp(op, needExpr(left, atp), needExpr(parse(prec::Rel + 1), atp)));
            }
            case Tok::EqT:
                return nP(cmp(CmpOp::Eq, needExpr(left, atp),
                              needExpr(parse(prec::Equal + 1), atp)));
            case Tok::Ne:
                return nP(cmp(CmpOp::Ne, needExpr(left, atp),
                              needExpr(parse(prec::Equal + 1), atp)));
            case Tok::Colon:
                return nP(subB(needExpr(left, atp), needExpr(parse(prec::Member + 1), atp)));
            case Tok::PSub: {
                ExprP a = needExpr(left, atp);
                ExprP b = needExpr(parse(prec::Member + 1), atp);
                return nP(pbin(PredKind::And, subB(a, b), pnot(cmp(CmpOp::Eq, a, b))));
            }
            case Tok::In:
                return nP(memB(needExpr(left, atp), needExpr(parse(prec::Member + 1), atp)));
            case Tok::NotIn:
                return nP(pnot(
                    memB(needExpr(left, atp), needExpr(parse(prec::Member + 1), atp))));
            case Tok::AndT:
                return nP(pbin(PredKind::And, needPred(left, atp),
                               needPred(parse(prec::AndP), atp)));
            case Tok::OrT:
                return nP(pbin(PredKind::Or, needPred(left, atp),
                               needPred(parse(prec::OrP), atp)));
            case Tok::ImpT:
                return nP(pbin(PredKind::Imp, needPred(left, atp),
                               needPred(parse(prec::ImpP - 1), atp)));
            case Tok::IffT:
                return nP(pbin(PredKind::Iff, needPred(left, atp),
                               needPred(parse(prec::IffP), atp)));
            case Tok::GuardT:
                return nE(guardE(needPred(left, atp), needExpr(parse(prec::Guard - 1), atp)));
            case Tok::PrecondT:
                return nE(
                    precondE(needPred(left, atp), needExpr(parse(prec::Guard - 1), atp)));
            case Tok::AssignT: {
                std::vector<std::string> targets = targetsOf(left, atp);
                ExprP rhs = needExpr(parse(prec::Assign), atp);
                std::vector<ExprP> parts;
                if (targets.size() == 1) {
                    parts.push_back(rhs);
                } else {
                    // split at the top-most commas, one per extra target,
                    // so parenthesized bunch components stay whole
                    std::vector<ExprP> rev;
                    ExprP at = rhs;
                    for (std::size_t k = targets.size(); k > 1; --k) {
                        if (at->kind != ExprKind::Union)
                            throw ParseError("assignment arity mismatch", atp);
                        rev.push_back(at->b);
                        at = at->a;
                    }
                    rev.push_back(at);
                    parts.assign(rev.rbegin(), rev.rend());
                }
                return nC(assign(std::move(targets), std::move(parts)));
            }
            case Tok::GuardCmdT:
                return nC(guardC(needPred(left, atp),
                                 needCmd(parse(prec::GuardCmd - 1), atp)));
            case Tok::ChoiceT:
                return nC(choice(needCmd(left, atp), needCmd(parse(prec::ChoiceCmd), atp)));
            case Tok::ProbT: {
                Token n = expect(Tok::Int, "a probability literal after <+>");
                long long num = n.num, den = 1;
                if (at(Tok::Slash) && peek().kind == Tok::Int) {
                    advance();
                    den = expect(Tok::Int, "denominator").num;
                }
                Rat r(num, den);
                if (r < Rat(0) || r > Rat(1))
                    throw ParseError("probability must lie in [0,1]", n.pos);
                return nC(prob(r, needCmd(left, atp), needCmd(parse(prec::ChoiceCmd), atp)));
            }
            case Tok::PrefT:
                return nC(pref(needCmd(left, atp), needCmd(parse(prec::PrefCmd), atp)));
            case Tok::Semi:
                return nC(seq(needCmd(left, atp), needCmd(parse(prec::SeqCmd), atp)));
            case Tok::Bar:
                return nC(pre(needPred(left, atp), needCmd(parse(prec::PreCmd - 1), atp)));
            case Tok::DiamondT:
                return nQ(needCmd(left, atp), needExpr(parse(prec::Diamond - 1), atp));
            case Tok::Reserved:
                reserved(t);
            default:
                throw ParseError("unexpected token", t.pos);
        }
    }

    Node parse(int minbp) {
        Node left = nud();
        while (lbp(cur().kind) > minbp) {
            Token t = advance();
            left = led(t, std::move(left));
        }
        if (at(Tok::Reserved)) reserved(cur());
        return left;
    }
};

}  // namespace

ExprP parseExpr(const std::string& text, const Decls& d) {
    Parser p(text, d);
    Node n = p.parseAll();
    return p.needExpr(n, 0);
}

PredP parsePred(const std::string& text, const Decls& d) {
    Parser p(text, d);
    Node n = p.parseAll();
    return p.needPred(n, 0);
}

CmdP parseCmd(const std::string& text, const Decls& d) {
    Parser p(text, d);
    Node n = p.parseAll();
    return p.needCmd(n, 0);
}

PvQuery parsePvQuery(const std::string& text, const Decls& d) {
    Parser p(text, d);
    Node n = p.parseAll();
    if (n.k != NodeKind::Query)
        throw ParseError("expected a query of the form S <> E", 0);
    return {n.qs, n.qe};
}

AnyNode parseAny(const std::string& text, const Decls& d) {
    Parser p(text, d);
    Node n = p.parseAll();
    AnyNode out;
    out.kind = n.k;
    out.e = n.e;
    out.p = n.p;
    out.c = n.c;
    if (n.k == NodeKind::Query) out.q = {n.qs, n.qe};
    return out;
}

TypePtr parseType(const std::string& text, const Decls& d) {
    TypeAnn ann = parseTypeAnn(text, d);
    if (ann.range)
        throw ParseError("a plain type cannot carry a range", 0);
    return ann.type;
}

TypeAnn parseTypeAnn(const std::string& text, const Decls& d) {
    Parser p(text, d);
    return p.parseAnnAll();
}

} // namespace bt
