#include <cctype>
#include <cstdio>
#include <cstdlib>

#include "qclock/diagram.hpp"

namespace qclock::diagram {

namespace {

struct Token {
  enum class Kind { kIdent, kNumber, kSemi, kStar, kLParen, kRParen, kComma,
                    kEnd };
  Kind kind;
  std::string text;
  double value = 0.0;
  SourcePos pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[i_])))
      bump();
    tok_.pos = {line_, col_};
    if (i_ >= src_.size()) {
      tok_.kind = Token::Kind::kEnd;
      tok_.text = "<end>";
      return;
    }
    const char c = src_[i_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string ident;
      while (i_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[i_])) ||
              src_[i_] == '_')) {
        ident.push_back(src_[i_]);
        bump();
      }
      tok_.kind = Token::Kind::kIdent;
      tok_.text = std::move(ident);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      std::size_t start = i_;
      if (c == '-' || c == '+') bump();
      if (i_ >= src_.size() ||
          !std::isdigit(static_cast<unsigned char>(src_[i_])))
        throw SyntaxError("expected a number", tok_.pos.line, tok_.pos.col);
      while (i_ < src_.size() &&
             (std::isdigit(static_cast<unsigned char>(src_[i_])) ||
              src_[i_] == '.' || src_[i_] == 'e' || src_[i_] == 'E' ||
              ((src_[i_] == '-' || src_[i_] == '+') &&
               (src_[i_ - 1] == 'e' || src_[i_ - 1] == 'E'))))
        bump();
      tok_.kind = Token::Kind::kNumber;
      tok_.text = src_.substr(start, i_ - start);
      tok_.value = std::strtod(tok_.text.c_str(), nullptr);
      return;
    }
    switch (c) {
      case ';': tok_.kind = Token::Kind::kSemi; break;
      case '*': tok_.kind = Token::Kind::kStar; break;
      case '(': tok_.kind = Token::Kind::kLParen; break;
      case ')': tok_.kind = Token::Kind::kRParen; break;
      case ',': tok_.kind = Token::Kind::kComma; break;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'",
                          line_, col_);
    }
    tok_.text = std::string(1, c);
    bump();
  }

  void bump() {
    if (src_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  const std::string& src_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

struct GeneratorInfo {
  int arity;       // numeric arguments
  bool int_args;
};

const GeneratorInfo* generator_info(const std::string& name) {
  static const std::vector<std::pair<std::string, GeneratorInfo>> table = {
      {"zmult", {0, false}},   {"zunit", {0, false}},
      {"zcomult", {0, false}}, {"zcounit", {0, false}},
      {"xmult", {0, false}},   {"xunit", {0, false}},
      {"xcomult", {0, false}}, {"xcounit", {0, false}},
      {"antipode", {0, false}}, {"swap", {0, false}},
      {"cup", {0, false}},     {"cap", {0, false}},
      {"sysalg", {0, false}},  {"sysid", {0, false}},
      {"id", {1, true}},       {"tstate", {1, true}},
      {"estate", {1, true}},   {"scalar", {2, false}},
  };
  for (const auto& [n, info] : table)
    if (n == name) return &info;
  return nullptr;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) {}

  TermPtr parse_term() {
    TermPtr t = parse_seq();
    const Token& end = lex_.peek();
    if (end.kind != Token::Kind::kEnd)
      throw SyntaxError("unexpected '" + end.text + "' after term",
                        end.pos.line, end.pos.col);
    return t;
  }

 private:
  TermPtr parse_seq() {
    TermPtr left = parse_par();
    while (lex_.peek().kind == Token::Kind::kSemi) {
      Token op = lex_.take();
      TermPtr right = parse_par();
      auto node = std::make_shared<Term>();
      node->kind = Term::Kind::kSeq;
      node->a = left;
      node->b = right;
      node->pos = op.pos;
      left = node;
    }
    return left;
  }

  TermPtr parse_par() {
    TermPtr left = parse_atom();
    while (lex_.peek().kind == Token::Kind::kStar) {
      Token op = lex_.take();
      TermPtr right = parse_atom();
      auto node = std::make_shared<Term>();
      node->kind = Term::Kind::kPar;
      node->a = left;
      node->b = right;
      node->pos = op.pos;
      left = node;
    }
    return left;
  }

  TermPtr parse_atom() {
    const Token tok = lex_.take();
    if (tok.kind == Token::Kind::kLParen) {
      TermPtr inner = parse_seq();
      expect(Token::Kind::kRParen, ")");
      return inner;
    }
    if (tok.kind != Token::Kind::kIdent)
      throw SyntaxError("expected a generator, 'dag' or '(', got '" +
                            tok.text + "'",
                        tok.pos.line, tok.pos.col);
    if (tok.text == "dag") {
      expect(Token::Kind::kLParen, "(");
      TermPtr inner = parse_seq();
      expect(Token::Kind::kRParen, ")");
      auto node = std::make_shared<Term>();
      node->kind = Term::Kind::kDag;
      node->a = inner;
      node->pos = tok.pos;
      return node;
    }
    const GeneratorInfo* info = generator_info(tok.text);
    if (info == nullptr)
      throw UnknownGenerator("unknown generator '" + tok.text + "'",
                             tok.pos.line, tok.pos.col);
    auto node = std::make_shared<Term>();
    node->kind = Term::Kind::kGen;
    node->gen = tok.text;
    node->pos = tok.pos;
    if (info->arity > 0) {
      expect(Token::Kind::kLParen, "(");
      for (int i = 0; i < info->arity; ++i) {
        if (i > 0) expect(Token::Kind::kComma, ",");
        const Token num = lex_.take();
        if (num.kind != Token::Kind::kNumber)
          throw SyntaxError("'" + tok.text + "' expects numeric arguments",
                            num.pos.line, num.pos.col);
        node->args.push_back(num.value);
      }
      expect(Token::Kind::kRParen, ")");
    }
    return node;
  }

  void expect(Token::Kind kind, const std::string& what) {
    const Token t = lex_.take();
    if (t.kind != kind)
      throw SyntaxError("expected '" + what + "', got '" + t.text + "'",
                        t.pos.line, t.pos.col);
  }

  Lexer lex_;
};

std::string format_arg(double v) {
  if (v == static_cast<double>(static_cast<long long>(v)))
    return std::to_string(static_cast<long long>(v));
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print_into(const TermPtr& t, std::string& out) {
  switch (t->kind) {
    case Term::Kind::kGen: {
      out += t->gen;
      if (!t->args.empty()) {
        out += "(";
        for (std::size_t i = 0; i < t->args.size(); ++i) {
          if (i) out += ",";
          out += format_arg(t->args[i]);
        }
        out += ")";
      }
      return;
    }
    case Term::Kind::kDag:
      out += "dag(";
      print_into(t->a, out);
      out += ")";
      return;
    case Term::Kind::kPar: {
      auto child = [&](const TermPtr& c, bool right) {
        const bool paren =
            c->kind == Term::Kind::kSeq ||
            (right && c->kind == Term::Kind::kPar);
        if (paren) out += "(";
        print_into(c, out);
        if (paren) out += ")";
      };
      child(t->a, false);
      out += " * ";
      child(t->b, true);
      return;
    }
    case Term::Kind::kSeq: {
      auto child = [&](const TermPtr& c, bool right) {
        const bool paren = right && c->kind == Term::Kind::kSeq;
        if (paren) out += "(";
        print_into(c, out);
        if (paren) out += ")";
      };
      child(t->a, false);
      out += " ; ";
      child(t->b, true);
      return;
    }
  }
}

}  // namespace

TermPtr parse(const std::string& src) { return Parser(src).parse_term(); }

std::string print(const TermPtr& t) {
  std::string out;
  print_into(t, out);
  return out;
}

bool structurally_equal(const TermPtr& a, const TermPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::kGen:
      return a->gen == b->gen && a->args == b->args;
    case Term::Kind::kDag:
      return structurally_equal(a->a, b->a);
    default:
      return structurally_equal(a->a, b->a) && structurally_equal(a->b, b->b);
  }
}

}  // namespace qclock::diagram
