#include "segre/expr.hpp"

#include <cctype>
#include <sstream>

namespace segre {

ParseError::ParseError(std::size_t offset, std::string expected)
    : std::runtime_error("parse error at byte " + std::to_string(offset) +
                         ": expected " + expected),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw ParseError(pos, std::string("'") + c + "'");
  }
  bool eat_word(const char* w) {
    skip_ws();
    std::size_t i = 0;
    while (w[i] != '\0') {
      if (pos + i >= s.size() || s[pos + i] != w[i]) return false;
      ++i;
    }
    pos += i;
    return true;
  }

  long long integer() {
    skip_ws();
    const std::size_t start = pos;
    long long sign = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -1;
      ++pos;
    }
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError(pos, "integer");
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > (1LL << 40)) throw ParseError(start, "smaller integer");
      ++pos;
    }
    return sign * v;
  }
};

// The contents of O(...) / Omega(...): a signed F/L combination like
// `2F-3L`, a pair `a,b`, or a bare integer k standing for kH.
DivisorClass divisor_body(Cursor& c) {
  DivisorClass d{0, 0};
  bool saw_symbol = false;
  bool first = true;
  while (true) {
    c.skip_ws();
    long long sign = 1;
    if (c.eat('-')) sign = -1;
    else if (c.eat('+')) sign = 1;
    else if (!first)
      break;

    long long coef = 1;
    bool have_digits = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      const std::size_t save = c.pos;
      coef = c.integer();
      (void)save;
      have_digits = true;
    }
    const char nxt = c.peek();
    if (nxt == 'F') {
      ++c.pos;
      d.a += sign * coef;
      saw_symbol = true;
    } else if (nxt == 'L') {
      ++c.pos;
      d.b += sign * coef;
      saw_symbol = true;
    } else if (have_digits && !saw_symbol && first) {
      const long long k = sign * coef;
      if (c.eat(',')) {
        const long long b = c.integer();
        return {k, b};
      }
      return {k, k};  // bare integer: k copies of H
    } else {
      throw ParseError(c.pos, "'F' or 'L'");
    }
    first = false;
  }
  return d;
}

DivisorClass parenthesized_divisor(Cursor& c) {
  c.expect('(');
  DivisorClass d = divisor_body(c);
  c.expect(')');
  return d;
}

BuildingBlock atom(Cursor& c) {
  BuildingBlock b;
  if (c.eat_word("Omega")) {
    b = BuildingBlock{BlockKind::OmegaPi, parenthesized_divisor(c)};
  } else if (c.eat_word("O")) {
    b = BuildingBlock{BlockKind::LineBundle, parenthesized_divisor(c)};
  } else if (c.eat_word("L")) {
    b = line_bundle(1, -1);
  } else {
    throw ParseError(c.pos, "'O(', 'Omega(' or 'L'");
  }
  while (c.peek() == '(') {  // twist suffixes (t), meaning (x) O(tH)
    ++c.pos;
    const long long t = c.integer();
    c.expect(')');
    b = b.twist({t, t});
  }
  return b;
}

void add_part(FormalSheaf& s, const BuildingBlock& b, long long m) {
  for (auto& [blk, mult] : s.parts)
    if (blk == b) {
      mult += m;
      return;
    }
  s.parts.emplace_back(b, m);
}

FormalSheaf sum(Cursor& c) {
  FormalSheaf s;
  while (true) {
    c.skip_ws();
    long long m = 1;
    const std::size_t save = c.pos;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      const long long v = c.integer();
      if (c.eat('*')) {
        if (v <= 0) throw ParseError(save, "positive multiplicity");
        m = v;
      } else {
        c.pos = save;  // a bare integer here is not a term
      }
    }
    add_part(s, atom(c), m);
    if (!c.eat('+')) break;
  }
  return s;
}

Sheaf expr(Cursor& c) {
  c.skip_ws();
  const std::size_t save = c.pos;
  if (c.eat_word("ext")) {
    if (c.peek() == '(') {
      ++c.pos;
      FormalSheaf sub = sum(c);
      c.expect(';');
      FormalSheaf quot = sum(c);
      c.expect(')');
      ExtensionSheaf e{std::move(sub), std::move(quot)};
      while (c.peek() == '(') {
        ++c.pos;
        const long long t = c.integer();
        c.expect(')');
        e = e.twist({t, t});
      }
      return e;
    }
    c.pos = save;
  }
  return sum(c);
}

void print_block(std::ostream& os, const BuildingBlock& b) {
  os << (b.kind == BlockKind::OmegaPi ? "Omega(" : "O(") << b.d.a << ","
     << b.d.b << ")";
}

void print_formal(std::ostream& os, const FormalSheaf& s) {
  bool first = true;
  for (const auto& [blk, m] : s.parts) {
    if (!first) os << " + ";
    first = false;
    if (m != 1) os << m << "*";
    print_block(os, blk);
  }
}

}  // namespace

Sheaf parse_sheaf_expr(const std::string& input) {
  Cursor c{input};
  Sheaf s = expr(c);
  if (!c.at_end()) throw ParseError(c.pos, "end of input");
  return s;
}

std::string print_sheaf_expr(const Sheaf& s) {
  std::ostringstream os;
  if (const auto* f = std::get_if<FormalSheaf>(&s)) {
    print_formal(os, *f);
  } else {
    const auto& e = std::get<ExtensionSheaf>(s);
    os << "ext(";
    print_formal(os, e.sub);
    os << "; ";
    print_formal(os, e.quot);
    os << ")";
  }
  return os.str();
}

}  // namespace segre
