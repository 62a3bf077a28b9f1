// SPDX-License-Identifier: Apache-2.0
#include "io/netio.hpp"

#include <cctype>
#include <sstream>

namespace pnet {

namespace {

struct Token {
  enum Kind { Open, Close, Atom, End } kind;
  std::string text;
  int line, col;
};

struct Lexer {
  const std::string& src;
  std::size_t pos = 0;
  int line = 1, col = 1;
  Token peeked{Token::End, "", 0, 0};
  bool has_peek = false;

  explicit Lexer(const std::string& s) : src(s) {}

  void advance(char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }

  Token lex() {
    while (pos < src.size() && std::isspace((unsigned char)src[pos])) {
      advance(src[pos]);
      ++pos;
    }
    if (pos >= src.size()) return {Token::End, "", line, col};
    int l = line, c = col;
    char ch = src[pos];
    if (ch == '(' || ch == ')') {
      advance(ch);
      ++pos;
      return {ch == '(' ? Token::Open : Token::Close, std::string(1, ch), l, c};
    }
    std::string text;
    while (pos < src.size() && !std::isspace((unsigned char)src[pos]) && src[pos] != '(' &&
           src[pos] != ')') {
      text += src[pos];
      advance(src[pos]);
      ++pos;
    }
    return {Token::Atom, text, l, c};
  }

  Token next() {
    if (has_peek) {
      has_peek = false;
      return peeked;
    }
    return lex();
  }

  Token peek() {
    if (!has_peek) {
      peeked = lex();
      has_peek = true;
    }
    return peeked;
  }

  [[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw Error(Err::Parse, std::to_string(t.line) + ":" + std::to_string(t.col) + ": " + msg);
  }

  void expect_open() {
    Token t = next();
    if (t.kind != Token::Open) fail(t, "expected '('");
  }
  void expect_close() {
    Token t = next();
    if (t.kind != Token::Close) fail(t, "expected ')'");
  }
  std::string expect_atom(const std::string& what) {
    Token t = next();
    if (t.kind != Token::Atom) fail(t, "expected " + what);
    return t.text;
  }
  void expect_keyword(const std::string& kw) {
    Token t = next();
    if (t.kind != Token::Atom || t.text != kw) fail(t, "expected '" + kw + "'");
  }
};

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit((unsigned char)c)) return false;
  return true;
}

// id := seg | seg '.' NUM '.' id | '(' id ')' '.' NUM '.' id
struct IdParser {
  const std::string& s;
  std::size_t pos = 0;
  explicit IdParser(const std::string& str) : s(str) {}

  [[noreturn]] void fail(const std::string& msg) {
    throw Error(Err::Parse, "bad identifier '" + s + "': " + msg);
  }

  std::string segment() {
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != '.' && s[pos] != '(' && s[pos] != ')' && s[pos] != ':')
      ++pos;
    if (pos == start) fail("empty segment");
    return s.substr(start, pos - start);
  }

  PortId parse_id() {
    PortId box;
    if (pos < s.size() && s[pos] == '(') {
      ++pos;
      box = parse_id();
      if (pos >= s.size() || s[pos] != ')') fail("missing ')'");
      ++pos;
    } else {
      std::string seg = segment();
      if (all_digits(seg)) fail("identifier cannot be numeric");
      box = PortId::atom(seg);
    }
    if (pos < s.size() && s[pos] == '.') {
      std::size_t save = pos;
      ++pos;
      std::string num = segment();
      if (!all_digits(num) || pos >= s.size() || s[pos] != '.') {
        pos = save;
        return box;
      }
      ++pos;
      PortId inner = parse_id();
      return PortId::copy(box, std::stoull(num), inner);
    }
    return box;
  }
};

std::string render_id(const PortId& p) { return p.str(); }

std::string render_path(const PortPath& p) {
  std::string out;
  for (auto& b : p.boxes) out += render_id(b) + ":";
  return out + render_id(p.port);
}

}  // namespace

PortId parse_port_id(const std::string& token) {
  IdParser ip(token);
  PortId p = ip.parse_id();
  if (ip.pos != token.size()) ip.fail("trailing characters");
  return p;
}

PortPath parse_port_path(const std::string& token) {
  PortPath path;
  IdParser ip(token);
  while (true) {
    PortId id = ip.parse_id();
    if (ip.pos < token.size() && token[ip.pos] == ':') {
      ++ip.pos;
      path.boxes.push_back(id);
      continue;
    }
    if (ip.pos != token.size()) ip.fail("trailing characters");
    path.port = id;
    return path;
  }
}

namespace {

Net parse_net_body(Lexer& lx);

void parse_ports(Lexer& lx, Net& net) {
  lx.expect_open();
  lx.expect_keyword("ports");
  while (lx.peek().kind == Token::Open) {
    lx.expect_open();
    PortId p = parse_port_id(lx.expect_atom("port id"));
    std::string lab = lx.expect_atom("label");
    auto l = label_from_name(lab);
    if (!l) lx.fail(lx.peek(), "unknown label '" + lab + "'");
    if (!net.ground.labels.emplace(p, *l).second)
      lx.fail(lx.peek(), "duplicate port '" + p.str() + "'");
    lx.expect_close();
  }
  lx.expect_close();
}

void parse_wires(Lexer& lx, Net& net) {
  lx.expect_open();
  lx.expect_keyword("wires");
  while (lx.peek().kind == Token::Open) {
    lx.expect_open();
    PortId src = parse_port_id(lx.expect_atom("wire source"));
    lx.expect_keyword("->");
    PortId dst = parse_port_id(lx.expect_atom("wire target"));
    bool left = false;
    if (lx.peek().kind == Token::Atom && lx.peek().text == ":left") {
      lx.next();
      left = true;
    }
    Token close = lx.next();
    if (close.kind != Token::Close) lx.fail(close, "expected ')'");
    if (!net.ground.labels.count(src) || !net.ground.labels.count(dst))
      lx.fail(close, "wire uses undeclared port");
    if (!net.ground.wires.emplace(src, dst).second) lx.fail(close, "port wired twice: " + src.str());
    if (left) {
      if (!is_multiplicative(net.ground.labels.at(dst)))
        lx.fail(close, "left marker on a wire into a non-multiplicative port");
      net.ground.lefts.insert(src);
    }
  }
  lx.expect_close();
}

void parse_pairs(Lexer& lx, const char* kw, Net& net, std::set<PortPair>& out) {
  lx.expect_open();
  lx.expect_keyword(kw);
  while (lx.peek().kind == Token::Open) {
    lx.expect_open();
    PortId a = parse_port_id(lx.expect_atom("port id"));
    PortId b = parse_port_id(lx.expect_atom("port id"));
    Token close = lx.next();
    if (close.kind != Token::Close) lx.fail(close, "expected ')'");
    if (!net.ground.labels.count(a) || !net.ground.labels.count(b))
      lx.fail(close, std::string(kw) + " pair uses undeclared port");
    out.insert(PortPair::make(a, b));
  }
  lx.expect_close();
}

void parse_boxes(Lexer& lx, Net& net) {
  lx.expect_open();
  lx.expect_keyword("boxes");
  while (lx.peek().kind == Token::Open) {
    lx.expect_open();
    lx.expect_keyword("box");
    PortId o = parse_port_id(lx.expect_atom("box id"));
    if (!net.ground.labels.count(o)) lx.fail(lx.peek(), "box port undeclared: " + o.str());
    Net content = parse_net_body(lx);
    lx.expect_open();
    lx.expect_keyword("doors");
    std::map<PortPath, PortId> doors;
    while (lx.peek().kind == Token::Open) {
      lx.expect_open();
      PortPath from = parse_port_path(lx.expect_atom("door conclusion"));
      lx.expect_keyword("->");
      PortId to = parse_port_id(lx.expect_atom("door target"));
      lx.expect_close();
      doors.emplace(from, to);
    }
    lx.expect_close();  // doors
    lx.expect_close();  // box
    net.contents.emplace(o, std::move(content));
    net.doors.emplace(o, std::move(doors));
  }
  lx.expect_close();
}

Net parse_net_body(Lexer& lx) {
  Net net;
  lx.expect_open();
  lx.expect_keyword("net");
  parse_ports(lx, net);
  parse_wires(lx, net);
  parse_pairs(lx, "axioms", net, net.ground.axioms);
  parse_pairs(lx, "cuts", net, net.ground.cuts);
  parse_boxes(lx, net);
  lx.expect_close();
  return net;
}

void write_net(std::ostream& out, const Net& s, int indent) {
  std::string pad(indent, ' ');
  out << pad << "(net\n" << pad << " (ports";
  for (auto& [p, l] : s.ground.labels) out << " (" << render_id(p) << " " << label_name(l) << ")";
  out << ")\n" << pad << " (wires";
  for (auto& [w, t] : s.ground.wires) {
    out << " (" << render_id(w) << " -> " << render_id(t);
    if (s.ground.lefts.count(w)) out << " :left";
    out << ")";
  }
  out << ")\n" << pad << " (axioms";
  for (auto& a : s.ground.axioms) out << " (" << render_id(a.a) << " " << render_id(a.b) << ")";
  out << ")\n" << pad << " (cuts";
  for (auto& c : s.ground.cuts) out << " (" << render_id(c.a) << " " << render_id(c.b) << ")";
  out << ")\n" << pad << " (boxes";
  for (auto& [o, c] : s.contents) {
    out << "\n" << pad << "  (box " << render_id(o) << "\n";
    write_net(out, c, indent + 3);
    out << "\n" << pad << "   (doors";
    auto d = s.doors.find(o);
    if (d != s.doors.end())
      for (auto& [path, tgt] : d->second)
        out << " (" << render_path(path) << " -> " << render_id(tgt) << ")";
    out << "))";
  }
  out << "))";
}

}  // namespace

Net parse_net(const std::string& text) {
  Lexer lx(text);
  Net net = parse_net_body(lx);
  Token t = lx.next();
  if (t.kind != Token::End) lx.fail(t, "trailing input");
  return net;
}

std::string serialize_net(const Net& s) {
  std::ostringstream out;
  write_net(out, s, 0);
  out << "\n";
  return out.str();
}

std::string point_to_string(const Point& x) {
  std::string out = "(point";
  for (auto& [p, v] : x.singles) out += "\n (" + p.str() + " " + v.str() + ")";
  for (auto& [p, bag] : x.bags) {
    out += "\n (" + p.str() + " [";
    bool first = true;
    for (auto& v : bag) {
      if (!first) out += " ";
      out += v.str();
      first = false;
    }
    out += "])";
  }
  return out + ")";
}

}  // namespace pnet
