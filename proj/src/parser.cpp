#include "cdk/parser.hpp"

#include <cctype>
#include <set>

#include "cdk/errors.hpp"

namespace cdk {

namespace {

enum class Tok {
  End,
  Ident,     // [A-Za-z][A-Za-z0-9_]*
  LBrace,
  RBrace,
  LParen,
  RParen,
  LBrack,
  RBrack,
  Comma,
  Semi,
  Colon,
  Dot,
  Lt,
  Gt,
  Bang,
  Amp,
  Pipe,
  Tilde,
  Arrow,    // ->
  IffTok,   // <->
  Leq,      // <=
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }
  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    current_.pos = i_;
    if (i_ >= text_.size()) {
      current_ = {Tok::End, "", i_};
      return;
    }
    char c = text_[i_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
        ++j;
      current_ = {Tok::Ident, text_.substr(i_, j - i_), i_};
      i_ = j;
      return;
    }
    auto two = text_.substr(i_, 2);
    auto three = text_.substr(i_, 3);
    if (three == "<->") {
      current_ = {Tok::IffTok, three, i_};
      i_ += 3;
      return;
    }
    if (two == "<=") {
      current_ = {Tok::Leq, two, i_};
      i_ += 2;
      return;
    }
    if (two == "->") {
      current_ = {Tok::Arrow, two, i_};
      i_ += 2;
      return;
    }
    Tok k;
    switch (c) {
      case '{': k = Tok::LBrace; break;
      case '}': k = Tok::RBrace; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '[': k = Tok::LBrack; break;
      case ']': k = Tok::RBrack; break;
      case ',': k = Tok::Comma; break;
      case ';': k = Tok::Semi; break;
      case ':': k = Tok::Colon; break;
      case '.': k = Tok::Dot; break;
      case '<': k = Tok::Lt; break;
      case '>': k = Tok::Gt; break;
      case '!': k = Tok::Bang; break;
      case '&': k = Tok::Amp; break;
      case '|': k = Tok::Pipe; break;
      case '~': k = Tok::Tilde; break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "' at position " +
                             std::to_string(i_),
                         i_);
    }
    current_ = {k, std::string(1, c), i_};
    ++i_;
  }

  const std::string& text_;
  std::size_t i_ = 0;
  Token current_;
};

bool agent_token_shape(const std::string& s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  for (char c : s)
    if (!(std::islower(static_cast<unsigned char>(c)) ||
          std::isdigit(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

bool prop_token_shape(const std::string& s) {
  return agent_token_shape(s) && s[0] >= 'p' && s[0] <= 'z';
}

class Parser {
 public:
  Parser(const std::string& text, const ParseContext& ctx) : lex_(text), ctx_(ctx) {}

  Formula parse() {
    Formula f = parse_iff();
    expect(Tok::End, "end of input");
    check_disjointness();
    return f;
  }

  ParsedAction parse_action_only() {
    ParsedAction a = parse_action_inner();
    expect(Tok::End, "end of input");
    check_disjointness();
    return a;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) {
    const Token& t = lex_.peek();
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError("expected " + expected + " but found " + got + " at position " +
                         std::to_string(t.pos),
                     t.pos);
  }

  Token expect(Tok k, const std::string& what) {
    if (lex_.peek().kind != k) fail(what);
    return lex_.take();
  }

  bool accept(Tok k) {
    if (lex_.peek().kind == k) {
      lex_.take();
      return true;
    }
    return false;
  }

  Sym agent_token() {
    Token t = expect(Tok::Ident, "agent name");
    if (!agent_token_shape(t.text)) throw ParseError("invalid agent token: " + t.text, t.pos);
    Sym a = intern(t.text);
    if (ctx_.universe && !ctx_.universe->contains(a))
      throw SemanticError("unknown agent: " + t.text);
    seen_agents_.insert(t.text);
    return a;
  }

  Group parse_group() {
    Token open = expect(Tok::LBrace, "'{'");
    if (lex_.peek().kind == Tok::RBrace)
      throw SemanticError("empty group at position " + std::to_string(open.pos));
    std::vector<Sym> members;
    members.push_back(agent_token());
    while (accept(Tok::Comma)) members.push_back(agent_token());
    expect(Tok::RBrace, "'}'");
    return Group(std::move(members));
  }

  GroupFamily parse_family() {
    Token open = expect(Tok::LBrace, "'{'");
    if (lex_.peek().kind == Tok::RBrace)
      throw SemanticError("empty family at position " + std::to_string(open.pos));
    std::vector<Group> groups;
    groups.push_back(parse_group());
    while (accept(Tok::Comma)) groups.push_back(parse_group());
    expect(Tok::RBrace, "'}'");
    return GroupFamily(std::move(groups));
  }

  ReadingMap parse_readmap() {
    Token t = expect(Tok::Ident, "reading map (pub/res/grp/share/map)");
    if (t.text == "pub") return ReadingMap::pub(parse_group());
    if (t.text == "res") return ReadingMap::res(parse_group());
    if (t.text == "grp") {
      expect(Tok::LParen, "'('");
      std::vector<Group> gs;
      gs.push_back(parse_group());
      while (accept(Tok::Semi)) gs.push_back(parse_group());
      expect(Tok::RParen, "')'");
      return ReadingMap::grp(std::move(gs));
    }
    if (t.text == "share") {
      expect(Tok::LParen, "'('");
      Group readers = parse_group();
      expect(Tok::Colon, "':'");
      Group sources = parse_group();
      expect(Tok::RParen, "')'");
      return ReadingMap::share(std::move(readers), std::move(sources));
    }
    if (t.text == "map") {
      expect(Tok::LParen, "'('");
      std::map<std::string, Group> entries;
      do {
        Token at = expect(Tok::Ident, "agent name");
        if (!agent_token_shape(at.text))
          throw ParseError("invalid agent token: " + at.text, at.pos);
        if (ctx_.universe && !ctx_.universe->contains(intern(at.text)))
          throw SemanticError("unknown agent: " + at.text);
        seen_agents_.insert(at.text);
        expect(Tok::Colon, "':'");
        entries[at.text] = parse_group();
      } while (accept(Tok::Comma));
      expect(Tok::RParen, "')'");
      return ReadingMap::table(std::move(entries));
    }
    throw ParseError("unknown reading map form: " + t.text, t.pos);
  }

  ParsedAction parse_action_inner() {
    ParsedAction out;
    if (accept(Tok::Bang)) {
      out.reading = parse_readmap();
      return out;
    }
    Token model = expect(Tok::Ident, "event model id");
    expect(Tok::Dot, "'.'");
    Token event = expect(Tok::Ident, "event id");
    if (!ctx_.registry || !ctx_.registry->count(model.text))
      throw SemanticError("unknown event model: " + model.text);
    if (!ctx_.registry->at(model.text)->has_event(event.text))
      throw SemanticError("unknown event " + event.text + " in model " + model.text);
    out.event_model = model.text;
    out.event_id = event.text;
    return out;
  }

  Formula parse_iff() {
    Formula f = parse_impl();
    while (accept(Tok::IffTok)) f = mk_iff(f, parse_impl());
    return f;
  }

  Formula parse_impl() {
    Formula f = parse_disj();
    if (accept(Tok::Arrow)) return mk_implies(f, parse_impl());
    return f;
  }

  Formula parse_disj() {
    Formula f = parse_conj();
    while (accept(Tok::Pipe)) f = mk_or(f, parse_conj());
    return f;
  }

  Formula parse_conj() {
    Formula f = parse_unary();
    while (accept(Tok::Amp)) f = mk_and(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::Tilde:
        lex_.take();
        return mk_not(parse_unary());
      case Tok::LBrace: {
        Group b = parse_group();
        expect(Tok::Leq, "'<='");
        Group c = parse_group();
        return mk_comp(std::move(b), std::move(c));
      }
      case Tok::LBrack: {
        lex_.take();
        ParsedAction a = parse_action_inner();
        expect(Tok::RBrack, "']'");
        Formula body = parse_unary();
        return a.reading ? mk_semipub(*a.reading, std::move(body))
                         : mk_event(a.event_model, a.event_id, std::move(body));
      }
      case Tok::Lt: {
        // Diamond synonym: updates are total and deterministic.
        lex_.take();
        ParsedAction a = parse_action_inner();
        expect(Tok::Gt, "'>'");
        Formula body = parse_unary();
        return a.reading ? mk_semipub(*a.reading, std::move(body))
                         : mk_event(a.event_model, a.event_id, std::move(body));
      }
      case Tok::LParen: {
        lex_.take();
        Formula f = parse_iff();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Ident: {
        Token id = lex_.take();
        if (id.text == "true") return mk_true();
        if (id.text == "false") return mk_false();
        if (id.text == "K") return mk_K(agent_token(), parse_unary());
        if (id.text == "D") return mk_D(parse_group(), parse_unary());
        if (id.text == "C") return mk_C(parse_group(), parse_unary());
        if (id.text == "Cd") return mk_Cd(parse_family(), parse_unary());
        if (!prop_token_shape(id.text))
          throw ParseError("expected a proposition ([p-z]...) but found '" + id.text + "'",
                           id.pos);
        if (ctx_.universe && ctx_.universe->contains(intern(id.text)))
          throw ParseError("'" + id.text + "' is a declared agent, not a proposition", id.pos);
        seen_props_.insert(id.text);
        return mk_atom(id.text);
      }
      default:
        fail("a formula");
    }
  }

  void check_disjointness() {
    for (const auto& p : seen_props_)
      if (seen_agents_.count(p))
        throw ParseError("token '" + p + "' used both as agent and proposition", 0);
  }

  Lexer lex_;
  const ParseContext& ctx_;
  std::set<std::string> seen_agents_;
  std::set<std::string> seen_props_;
};

}  // namespace

Formula parse_formula(const std::string& text, const ParseContext& ctx) {
  if (text.empty()) throw ParseError("empty formula", 0);
  Parser p(text, ctx);
  return p.parse();
}

ParsedAction parse_action(const std::string& text, const ParseContext& ctx) {
  if (text.empty()) throw ParseError("empty action", 0);
  Parser p(text, ctx);
  return p.parse_action_only();
}

}  // namespace cdk
