#include "banet/funcparse.hpp"

#include <algorithm>
#include <cctype>

#include "banet/xorcirculant.hpp"

namespace banet {

namespace {

constexpr std::uint64_t kLowHalfMask[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};

struct Token {
  enum class Kind { Int, Var, Not, And, Or, Xor, LParen, RParen, Colon, Eq, End };
  Kind kind = Kind::End;
  long long number = 0;
  int column = 1;
};

class LineLexer {
 public:
  LineLexer(std::string_view line, int line_no) : line_(line), line_no_(line_no) {
    advance();
  }

  const Token& current() const { return token_; }
  int line_no() const { return line_no_; }

  Token take() {
    Token t = token_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& message, int column) const {
    throw ParseError(message, line_no_, column);
  }
  [[noreturn]] void fail(const std::string& message) const {
    fail(message, token_.column);
  }

 private:
  void advance() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t')) ++pos_;
    token_.column = static_cast<int>(pos_) + 1;
    if (pos_ >= line_.size()) {
      token_.kind = Token::Kind::End;
      return;
    }
    const char c = line_[pos_];
    switch (c) {
      case '!': token_.kind = Token::Kind::Not; ++pos_; return;
      case '&': token_.kind = Token::Kind::And; ++pos_; return;
      case '|': token_.kind = Token::Kind::Or; ++pos_; return;
      case '^': token_.kind = Token::Kind::Xor; ++pos_; return;
      case '(': token_.kind = Token::Kind::LParen; ++pos_; return;
      case ')': token_.kind = Token::Kind::RParen; ++pos_; return;
      case ':': token_.kind = Token::Kind::Colon; ++pos_; return;
      case '=': token_.kind = Token::Kind::Eq; ++pos_; return;
      default: break;
    }
    if (c >= '0' && c <= '9') {
      long long value = 0;
      std::size_t start = pos_;
      while (pos_ < line_.size() && line_[pos_] >= '0' && line_[pos_] <= '9') {
        value = value * 10 + (line_[pos_] - '0');
        if (pos_ - start > 9) fail("integer too large", static_cast<int>(start) + 1);
        ++pos_;
      }
      token_.kind = Token::Kind::Int;
      token_.number = value;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < line_.size() &&
             (std::isalnum(static_cast<unsigned char>(line_[pos_])))) {
        ++pos_;
      }
      std::string word(line_.substr(start, pos_ - start));
      std::transform(word.begin(), word.end(), word.begin(),
                     [](unsigned char ch) { return std::tolower(ch); });
      if (word == "not") { token_.kind = Token::Kind::Not; return; }
      if (word == "and") { token_.kind = Token::Kind::And; return; }
      if (word == "or") { token_.kind = Token::Kind::Or; return; }
      if (word == "xor") { token_.kind = Token::Kind::Xor; return; }
      if (word == "n") { token_.kind = Token::Kind::Var, token_.number = -1; return; }
      if (word.size() > 1 && word[0] == 'x' &&
          std::all_of(word.begin() + 1, word.end(),
                      [](char d) { return d >= '0' && d <= '9'; })) {
        if (word.size() > 10) fail("variable index too large", token_.column);
        token_.kind = Token::Kind::Var;
        token_.number = std::stoll(word.substr(1));
        return;
      }
      fail("unknown word '" + word + "'", token_.column);
    }
    fail(std::string("unexpected character '") + c + "'", token_.column);
  }

  std::string_view line_;
  int line_no_;
  std::size_t pos_ = 0;
  Token token_;
};

class ExprParser {
 public:
  ExprParser(LineLexer& lexer, int n) : lexer_(lexer), n_(n) {}

  Expr parse() {
    Expr e = parse_or();
    if (lexer_.current().kind != Token::Kind::End) {
      lexer_.fail("unexpected token after expression");
    }
    return e;
  }

 private:
  Expr parse_or() { return parse_chain(Token::Kind::Or, Expr::Op::Or, [this] { return parse_xor(); }); }
  Expr parse_xor() { return parse_chain(Token::Kind::Xor, Expr::Op::Xor, [this] { return parse_and(); }); }
  Expr parse_and() { return parse_chain(Token::Kind::And, Expr::Op::And, [this] { return parse_unary(); }); }

  template <typename Sub>
  Expr parse_chain(Token::Kind separator, Expr::Op op, Sub sub) {
    Expr first = sub();
    if (lexer_.current().kind != separator) return first;
    Expr chain;
    chain.op = op;
    chain.args.push_back(std::move(first));
    while (lexer_.current().kind == separator) {
      lexer_.take();
      chain.args.push_back(sub());
    }
    return chain;
  }

  Expr parse_unary() {
    if (lexer_.current().kind == Token::Kind::Not) {
      lexer_.take();
      Expr e;
      e.op = Expr::Op::Not;
      e.args.push_back(parse_unary());
      return e;
    }
    return parse_atom();
  }

  Expr parse_atom() {
    const Token t = lexer_.current();
    switch (t.kind) {
      case Token::Kind::Int: {
        lexer_.take();
        if (t.number != 0 && t.number != 1) {
          lexer_.fail("constants are 0 and 1", t.column);
        }
        Expr e;
        e.op = Expr::Op::Const;
        e.value = t.number == 1;
        return e;
      }
      case Token::Kind::Var: {
        lexer_.take();
        if (t.number < 0) {
          lexer_.fail("'n' is only valid in the size declaration", t.column);
        }
        if (t.number >= n_) {
          lexer_.fail("variable index " + std::to_string(t.number) +
                          " out of range (n=" + std::to_string(n_) + ")",
                      t.column);
        }
        Expr e;
        e.op = Expr::Op::Var;
        e.var = static_cast<int>(t.number);
        return e;
      }
      case Token::Kind::LParen: {
        lexer_.take();
        Expr e = parse_or();
        if (lexer_.current().kind != Token::Kind::RParen) {
          lexer_.fail("expected ')'");
        }
        lexer_.take();
        return e;
      }
      default:
        lexer_.fail("expected a variable, constant or '('");
    }
  }

  LineLexer& lexer_;
  int n_;
};

struct SourceLine {
  std::string_view text;
  int number;
};

std::vector<SourceLine> significant_lines(std::string_view text) {
  std::vector<SourceLine> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find('\n', pos);
    std::string_view line = end == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, end - pos);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') {
      lines.push_back({line, number});
    }
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return lines;
}

void mark(std::vector<Polarity>& out, int var, Polarity p) {
  Polarity& slot = out[static_cast<std::size_t>(var)];
  if (slot == Polarity::Absent) {
    slot = p;
  } else if (slot != p) {
    slot = Polarity::Mixed;
  }
}

void walk_polarities(const Expr& e, bool negated, bool under_xor,
                     std::vector<Polarity>& out) {
  switch (e.op) {
    case Expr::Op::Const:
      return;
    case Expr::Op::Var:
      mark(out, e.var,
           under_xor ? Polarity::Mixed
                     : (negated ? Polarity::Negative : Polarity::Positive));
      return;
    case Expr::Op::Not:
      walk_polarities(e.args[0], !negated, under_xor, out);
      return;
    case Expr::Op::Xor:
      for (const Expr& a : e.args) walk_polarities(a, negated, true, out);
      return;
    default:
      for (const Expr& a : e.args) walk_polarities(a, negated, under_xor, out);
      return;
  }
}

}  // namespace

bool Expr::eval(std::uint64_t code) const {
  switch (op) {
    case Op::Const:
      return value;
    case Op::Var:
      return (code >> var) & 1u;
    case Op::Not:
      return !args[0].eval(code);
    case Op::And:
      for (const Expr& a : args) {
        if (!a.eval(code)) return false;
      }
      return true;
    case Op::Or:
      for (const Expr& a : args) {
        if (a.eval(code)) return true;
      }
      return false;
    case Op::Xor: {
      bool acc = false;
      for (const Expr& a : args) acc ^= a.eval(code);
      return acc;
    }
  }
  return false;
}

NetworkSource parse_source(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) {
    throw ParseError("missing 'n=<size>' declaration", 1, 1);
  }

  LineLexer header(lines[0].text, lines[0].number);
  {
    const Token name = header.take();
    if (name.kind != Token::Kind::Var || name.number != -1) {
      header.fail("expected 'n=<size>'", name.column);
    }
    if (header.take().kind != Token::Kind::Eq) {
      header.fail("expected '=' after 'n'");
    }
  }
  const Token size_token = header.take();
  if (size_token.kind != Token::Kind::Int) {
    header.fail("expected an integer network size", size_token.column);
  }
  if (header.current().kind != Token::Kind::End) {
    header.fail("unexpected token after network size");
  }
  if (size_token.number < 1) {
    throw ParseError("network size must be at least 1", lines[0].number,
                     size_token.column);
  }
  if (size_token.number > kMaxTableSize) {
    throw CapacityError("parsed networks are truth-table backed, capped at n <= " +
                        std::to_string(kMaxTableSize) + ", got n = " +
                        std::to_string(size_token.number));
  }
  const int n = static_cast<int>(size_token.number);

  NetworkSource source;
  source.n = n;
  source.lines.assign(static_cast<std::size_t>(n), Expr{});
  std::vector<bool> defined(static_cast<std::size_t>(n), false);

  for (std::size_t li = 1; li < lines.size(); ++li) {
    LineLexer lexer(lines[li].text, lines[li].number);
    const Token index = lexer.take();
    if (index.kind != Token::Kind::Int) {
      lexer.fail("expected an automaton index", index.column);
    }
    if (index.number >= n) {
      lexer.fail("automaton index " + std::to_string(index.number) +
                     " out of range (n=" + std::to_string(n) + ")",
                 index.column);
    }
    const int automaton = static_cast<int>(index.number);
    if (defined[automaton]) {
      lexer.fail("duplicate definition of automaton " + std::to_string(automaton),
                 index.column);
    }
    const Token colon = lexer.take();
    if (colon.kind != Token::Kind::Colon) {
      lexer.fail("expected ':' after the automaton index", colon.column);
    }
    source.lines[automaton] = ExprParser(lexer, n).parse();
    defined[automaton] = true;
  }

  for (int i = 0; i < n; ++i) {
    if (!defined[i]) {
      throw ParseError("automaton " + std::to_string(i) + " has no definition",
                       lines.back().number, 1);
    }
  }
  return source;
}

Network compile_source(const NetworkSource& source) {
  const std::uint64_t count = std::uint64_t{1} << source.n;
  std::vector<LocalFunction> functions;
  functions.reserve(source.lines.size());
  for (const Expr& line : source.lines) {
    std::vector<bool> outputs(count, false);
    for (std::uint64_t code = 0; code < count; ++code) {
      outputs[code] = line.eval(code);
    }
    functions.push_back(LocalFunction::from_bits(source.n, outputs));
  }
  return Network(std::move(functions));
}

Network parse_network(std::string_view text) {
  return compile_source(parse_source(text));
}

std::string format_network(const Network& net) {
  const int n = net.size();
  std::string out = "n=" + std::to_string(n) + "\n";
  for (int i = 0; i < n; ++i) {
    out += std::to_string(i);
    out += ": ";
    // Zhegalkin coefficients by a Moebius transform over GF(2); a set
    // coefficient at S contributes the conjunction of the variables of S.
    std::vector<std::uint64_t> anf = net.function(i).table();
    for (int j = 0; j < n; ++j) {
      if (j < 6) {
        const int step = 1 << j;
        for (auto& w : anf) w ^= (w & kLowHalfMask[j]) << step;
      } else {
        const std::size_t stride = std::size_t{1} << (j - 6);
        for (std::size_t base = 0; base < anf.size(); base += 2 * stride) {
          for (std::size_t q = 0; q < stride; ++q) {
            anf[base + q + stride] ^= anf[base + q];
          }
        }
      }
    }
    std::string expr;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      if (!((anf[s >> 6] >> (s & 63)) & 1u)) continue;
      if (!expr.empty()) expr += " ^ ";
      if (s == 0) {
        expr += '1';
      } else {
        bool first = true;
        for (int j = 0; j < n; ++j) {
          if ((s >> j) & 1u) {
            if (!first) expr += " & ";
            expr += 'x';
            expr += std::to_string(j);
            first = false;
          }
        }
      }
    }
    out += expr.empty() ? "0" : expr;
    out += '\n';
  }
  return out;
}

Network load_network(std::string_view text) {
  const auto lines = significant_lines(text);
  if (!lines.empty() && lines[0].text.substr(0, 9) == "circulant") {
    if (lines.size() > 1) {
      throw ParseError("circulant spec files hold a single line",
                       lines[1].number, 1);
    }
    return make_circulant(CirculantSpec::parse(lines[0].text));
  }
  return parse_network(text);
}

std::vector<Polarity> literal_polarities(const NetworkSource& source,
                                         int automaton) {
  if (automaton < 0 || automaton >= source.n) {
    throw DomainError("automaton index " + std::to_string(automaton) +
                      " out of range for size " + std::to_string(source.n));
  }
  std::vector<Polarity> out(static_cast<std::size_t>(source.n), Polarity::Absent);
  walk_polarities(source.lines[automaton], false, false, out);
  return out;
}

const char* to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::Increasing:
      return "increasing";
    case Monotonicity::Decreasing:
      return "decreasing";
    case Monotonicity::Independent:
      return "independent";
    default:
      return "non-monotone";
  }
}

Monotonicity local_monotonicity(const LocalFunction& f, int j) {
  std::optional<MonotonicityWitness> ignored;
  return local_monotonicity(f, j, ignored);
}

Monotonicity local_monotonicity(const LocalFunction& f, int j,
                                std::optional<MonotonicityWitness>& witness) {
  witness.reset();
  const int n = f.arity();
  if (j < 0 || j >= n) {
    throw DomainError("variable index " + std::to_string(j) +
                      " out of range for arity " + std::to_string(n));
  }
  const std::uint64_t bit = std::uint64_t{1} << j;
  bool raises = false;
  bool lowers = false;
  std::uint64_t raise_at = 0;
  std::uint64_t lower_at = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    if (code & bit) continue;
    const bool low = f.eval(code);
    const bool high = f.eval(code | bit);
    if (!low && high && !raises) {
      raises = true;
      raise_at = code;
    } else if (low && !high && !lowers) {
      lowers = true;
      lower_at = code;
    }
    if (raises && lowers) break;
  }
  if (raises && lowers) {
    witness = MonotonicityWitness{raise_at, lower_at};
    return Monotonicity::NonMonotone;
  }
  if (raises) return Monotonicity::Increasing;
  if (lowers) return Monotonicity::Decreasing;
  return Monotonicity::Independent;
}

MonotonicityReport network_monotone(const Network& net) {
  const int n = net.size();
  MonotonicityReport report;
  report.n = n;
  report.classes.assign(static_cast<std::size_t>(n) * n, Monotonicity::Independent);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::optional<MonotonicityWitness> witness;
      const Monotonicity m = local_monotonicity(net.function(i), j, witness);
      report.classes[static_cast<std::size_t>(i) * n + j] = m;
      if (m == Monotonicity::NonMonotone) {
        report.monotone = false;
        report.witnesses.emplace_back(i, j, *witness);
      }
    }
  }
  return report;
}

}  // namespace banet
