#include "moddeg/problem_file.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "moddeg/monomial_submodule.hpp"

namespace moddeg {

namespace {

[[noreturn]] void parse_fail(int line, int col, const std::string& msg) {
  fail("parse-error",
       "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " +
           msg);
}

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trimmed(item));
  return out;
}

struct Token {
  enum Kind { Number, Ident, Caret, Star, Plus, Minus, Slash, End } kind;
  std::string text;
  int col;
};

std::vector<Token> tokenize(const std::string& line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() &&
             std::isdigit(static_cast<unsigned char>(line[j])))
        ++j;
      out.push_back({Token::Number, line.substr(i, j - i), col});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) ||
              line[j] == '_'))
        ++j;
      out.push_back({Token::Ident, line.substr(i, j - i), col});
      i = j;
    } else {
      Token::Kind k;
      switch (c) {
        case '^': k = Token::Caret; break;
        case '*': k = Token::Star; break;
        case '+': k = Token::Plus; break;
        case '-': k = Token::Minus; break;
        case '/': k = Token::Slash; break;
        default:
          parse_fail(lineno, col,
                     std::string("unexpected character '") + c + "'");
      }
      out.push_back({k, std::string(1, c), col});
      ++i;
    }
  }
  out.push_back({Token::End, "", static_cast<int>(line.size()) + 1});
  return out;
}

class GenParser {
 public:
  GenParser(const RingContext& ring, const FreeModuleShape& shape, int lineno)
      : ring_(ring), shape_(shape), lineno_(lineno) {
    for (int i = 0; i < ring.nvars; ++i)
      vars_[ring.names[static_cast<std::size_t>(i)]] = i;
  }

  RawGen parse(const std::string& line) {
    toks_ = tokenize(line, lineno_);
    pos_ = 0;
    RawGen gen;
    int sign = 1;
    if (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      sign = peek().kind == Token::Minus ? -1 : 1;
      ++pos_;
    }
    while (true) {
      gen.terms.push_back(parse_term(sign));
      if (peek().kind == Token::End) break;
      if (peek().kind == Token::Plus || peek().kind == Token::Minus) {
        sign = peek().kind == Token::Minus ? -1 : 1;
        ++pos_;
      } else {
        parse_fail(lineno_, peek().col, "expected '+', '-' or end of line");
      }
    }
    return gen;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  Int parse_number() {
    if (peek().kind != Token::Number)
      parse_fail(lineno_, peek().col, "expected a number");
    // Strip leading zeros: cpp_int's string constructor reads them as an
    // octal prefix.
    std::string digits = peek().text;
    std::size_t nz = digits.find_first_not_of('0');
    digits = nz == std::string::npos ? "0" : digits.substr(nz);
    Int v(digits);
    ++pos_;
    return v;
  }

  RawTerm parse_term(int sign) {
    RawTerm t;
    t.mono = Monomial(ring_.nvars);
    t.num = sign;
    int comp = -1;
    bool expect_factor = true;
    while (expect_factor) {
      const Token& tok = peek();
      if (tok.kind == Token::Number) {
        t.num *= parse_number();
        if (peek().kind == Token::Slash) {
          ++pos_;
          Int d = parse_number();
          if (d == 0) parse_fail(lineno_, peek().col, "zero denominator");
          t.den *= d;
        }
      } else if (tok.kind == Token::Ident) {
        int col = tok.col;
        std::string name = tok.text;
        ++pos_;
        auto it = vars_.find(name);
        if (it != vars_.end()) {
          long long e = 1;
          if (peek().kind == Token::Caret) {
            ++pos_;
            Int ev = parse_number();
            if (ev < 0 || ev > 1000000)
              parse_fail(lineno_, col, "exponent out of range");
            e = ev.convert_to<long long>();
          }
          t.mono = t.mono.times(Monomial::variable(
              ring_.nvars, it->second, static_cast<std::uint32_t>(e)));
        } else if (name.size() > 1 && name[0] == 'e' &&
                   std::all_of(name.begin() + 1, name.end(), [](char c) {
                     return std::isdigit(static_cast<unsigned char>(c));
                   })) {
          long long kll = 0;
          try {
            kll = std::stoll(name.substr(1));
          } catch (const std::exception&) {
            kll = shape_.rank() + 1;  // force the range error below
          }
          int k = static_cast<int>(std::min<long long>(kll, 1 << 20));
          if (k < 1 || k > shape_.rank())
            parse_fail(lineno_, col,
                       "component marker " + name + " outside rank " +
                           std::to_string(shape_.rank()));
          if (comp != -1)
            parse_fail(lineno_, col, "more than one component marker in a term");
          if (peek().kind == Token::Caret)
            parse_fail(lineno_, col, "component markers cannot carry exponents");
          comp = k - 1;
        } else {
          throw Error("unknown-variable",
                      "line " + std::to_string(lineno_) + ", col " +
                          std::to_string(col) + ": unknown variable '" + name +
                          "'");
        }
      } else {
        parse_fail(lineno_, tok.col, "expected a coefficient, variable or "
                                     "component marker");
      }
      if (peek().kind == Token::Star) {
        ++pos_;
      } else {
        expect_factor = false;
      }
    }
    if (comp == -1) {
      if (shape_.rank() > 1)
        parse_fail(lineno_, peek().col,
                   "component marker required when rank > 1");
      comp = 0;
    }
    t.comp = comp;
    return t;
  }

  const RingContext& ring_;
  const FreeModuleShape& shape_;
  int lineno_;
  std::map<std::string, int> vars_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

long long checked_ll(const std::string& s, int lineno, const std::string& what) {
  try {
    return std::stoll(s);
  } catch (const std::exception&) {
    parse_fail(lineno, 1, "bad " + what + " '" + s + "'");
  }
}

std::uint64_t checked_ull(const std::string& s, int lineno,
                          const std::string& what) {
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    parse_fail(lineno, 1, "bad " + what + " '" + s + "'");
  }
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  std::vector<std::string> lines = split(text, '\n');
  std::optional<std::vector<std::string>> names;
  FieldSpec field = FieldSpec::rationals();
  std::vector<long long> twists = {0};
  ProblemFile pf;
  std::vector<std::pair<int, std::string>> gen_lines;
  bool in_gens = false;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    int lineno = static_cast<int>(li) + 1;
    std::string line = lines[li];
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    line = trimmed(line);
    if (line.empty()) continue;
    if (in_gens) {
      gen_lines.emplace_back(lineno, line);
      continue;
    }
    std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      parse_fail(lineno, 1, "expected 'key: value' before the gens section");
    std::string key = trimmed(line.substr(0, colon));
    std::string value = trimmed(line.substr(colon + 1));
    if (key == "ring") {
      auto vs = split(value, ',');
      if (vs.empty() || vs[0].empty())
        parse_fail(lineno, 1, "empty variable list");
      names = vs;
    } else if (key == "char") {
      if (!is_integer(value)) parse_fail(lineno, 1, "bad characteristic");
      long long p = checked_ll(value, lineno, "characteristic");
      if (p < 0 || p > 0xffffffffLL)
        parse_fail(lineno, 1, "characteristic out of range");
      field = p == 0 ? FieldSpec::rationals()
                     : FieldSpec::prime(static_cast<std::uint32_t>(p));
    } else if (key == "twists") {
      if (value.size() < 2 || value.front() != '[' || value.back() != ']')
        parse_fail(lineno, 1, "twists must be a bracketed list");
      auto vs = split(value.substr(1, value.size() - 2), ',');
      twists.clear();
      for (const auto& v : vs) {
        if (!is_integer(v)) parse_fail(lineno, 1, "bad twist '" + v + "'");
        twists.push_back(checked_ll(v, lineno, "twist"));
      }
      if (twists.empty()) parse_fail(lineno, 1, "twists list is empty");
    } else if (key == "seed") {
      if (!is_integer(value) || value[0] == '-')
        parse_fail(lineno, 1, "bad seed");
      pf.seed = checked_ull(value, lineno, "seed");
    } else if (key == "trials") {
      if (!is_integer(value)) parse_fail(lineno, 1, "bad trials");
      pf.trials = static_cast<int>(checked_ll(value, lineno, "trials"));
    } else if (key == "degree-cap") {
      if (!is_integer(value)) parse_fail(lineno, 1, "bad degree-cap");
      pf.degree_cap = static_cast<int>(checked_ll(value, lineno, "degree-cap"));
    } else if (key == "gens") {
      if (!value.empty()) parse_fail(lineno, 1, "gens: takes no inline value");
      in_gens = true;
    } else {
      parse_fail(lineno, 1, "unknown key '" + key + "'");
    }
  }
  if (!names) fail("parse-error", "missing 'ring:' declaration");

  pf.ring = RingContext::make(*names, field);
  pf.shape = FreeModuleShape::make(twists);
  if (pf.shape.rank() > 1) {
    for (const auto& v : pf.ring.names)
      if (v.size() > 1 && v[0] == 'e' &&
          std::all_of(v.begin() + 1, v.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          }))
        fail("parse-error", "variable name '" + v +
                                "' collides with component marker syntax");
  }

  for (const auto& [lineno, line] : gen_lines) {
    GenParser gp(pf.ring, pf.shape, lineno);
    RawGen g = gp.parse(line);
    // Homogeneity: all terms of one generator share the total degree.
    long long deg = -1;
    for (const auto& t : g.terms) {
      if (t.num == 0) continue;
      long long d = t.mono.degree() +
                    pf.shape.twists[static_cast<std::size_t>(t.comp)];
      if (deg == -1) deg = d;
      if (d != deg)
        throw Error("inhomogeneous", "line " + std::to_string(lineno) +
                                         ": generator is not homogeneous");
    }
    pf.gens.push_back(std::move(g));
  }
  return pf;
}

namespace {

std::string format_coeff(const Int& num, const Int& den, bool has_mono) {
  std::string s;
  Int n = num;
  if (n < 0) {
    s += "-";
    n = -n;
  }
  bool unit = (n == 1 && den == 1);
  if (!unit || !has_mono) {
    s += n.str();
    if (den != 1) s += "/" + den.str();
    if (has_mono) s += "*";
  }
  return s;
}

std::string format_gen(const ProblemFile& pf, const RawGen& g) {
  // Combine like terms and order them descending under revlex.
  std::map<FMonomial, std::pair<Int, Int>> combined;  // mono -> num/den
  for (const auto& t : g.terms) {
    auto& [num, den] = combined.try_emplace({t.mono, t.comp},
                                            std::make_pair(Int(0), Int(1)))
                           .first->second;
    // num/den + t.num/t.den
    num = num * t.den + t.num * den;
    den = den * t.den;
    if (num != 0) {
      Int g2 = gcd(Int(abs(num)), den);
      if (g2 > 1) {
        num /= g2;
        den /= g2;
      }
    }
  }
  std::vector<std::pair<FMonomial, std::pair<Int, Int>>> terms;
  for (auto& kv : combined)
    if (kv.second.first != 0) terms.push_back(kv);
  if (terms.empty()) return "0";
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    return compare_terms(TermOrder::RevlexModule, a.first, b.first,
                         pf.shape) > 0;
  });
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [mono, coeff] = terms[i];
    Int num = coeff.first;
    if (i > 0) {
      s += num < 0 ? " - " : " + ";
      if (num < 0) num = -num;
    }
    std::string ms = mono.str(pf.ring, pf.shape);
    bool has_mono = !(ms == "1");
    s += format_coeff(num, coeff.second, has_mono);
    if (has_mono) s += ms;
  }
  return s;
}

}  // namespace

std::string format_problem(const ProblemFile& pf) {
  std::string s = "ring: ";
  for (std::size_t i = 0; i < pf.ring.names.size(); ++i) {
    if (i) s += ",";
    s += pf.ring.names[i];
  }
  s += "\nchar: ";
  s += pf.ring.field.kind == FieldKind::Rationals
           ? "0"
           : std::to_string(pf.ring.field.p);
  s += "\ntwists: [";
  for (std::size_t i = 0; i < pf.shape.twists.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(pf.shape.twists[i]);
  }
  s += "]\n";
  if (pf.seed) s += "seed: " + std::to_string(*pf.seed) + "\n";
  if (pf.trials) s += "trials: " + std::to_string(*pf.trials) + "\n";
  if (pf.degree_cap) s += "degree-cap: " + std::to_string(*pf.degree_cap) + "\n";
  s += "gens:\n";
  for (const auto& g : pf.gens) s += format_gen(pf, g) + "\n";
  return s;
}

ProblemFile problem_from_submodule(const MonomialSubmodule& U) {
  ProblemFile pf;
  pf.ring = U.ring();
  pf.shape = U.shape();
  for (const auto& g : U.gens()) {
    RawGen rg;
    rg.terms.push_back({1, 1, g.mono, g.comp});
    pf.gens.push_back(std::move(rg));
  }
  return pf;
}

}  // namespace moddeg
