#include "holo/io.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <regex>
#include <sstream>

#include "holo/error.hpp"
#include "json.hpp"

namespace holo {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

}  // namespace

std::vector<Rational> SequenceFile::values() const {
  std::vector<Rational> v;
  for (const auto& e : entries) v.push_back(e.value);
  return v;
}

SequenceFile parse_sequence(std::string_view text) {
  SequenceFile seq;
  bool decided = false;
  auto lines = lines_of(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::string line = trim(lines[ln]);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream in(line);
    std::vector<std::string> tok;
    for (std::string t; in >> t;) tok.push_back(t);
    const std::string where = "line " + std::to_string(ln + 1);
    if (tok.size() > 2) parse_error(where + ": expected one or two columns");
    SequenceFormat f = tok.size() == 2 ? SequenceFormat::BFile : SequenceFormat::Plain;
    if (decided && f != seq.format) parse_error(where + ": mixed plain and b-file lines");
    seq.format = f;
    decided = true;
    SequenceEntry e;
    try {
      e.value = parse_rational(tok.back());
      if (f == SequenceFormat::BFile) {
        Rational idx = parse_rational(tok[0]);
        if (!is_integer(idx) || !idx.get_num().fits_slong_p()) parse_error(where + ": bad index");
        e.index = idx.get_num().get_si();
      }
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::ParseError) throw;
      std::string msg = err.what();
      const std::string prefix = "ParseError: ";
      if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
      parse_error(where + ": " + msg);
    }
    if (e.index && !seq.entries.empty() && *e.index != *seq.entries.back().index + 1)
      throw Error(ErrorKind::NonContiguousIndices, where + ": index " + std::to_string(*e.index) + " follows " +
                                                       std::to_string(*seq.entries.back().index));
    seq.entries.push_back(e);
  }
  return seq;
}

std::string format_sequence(const SequenceFile& seq) {
  std::string out;
  for (const auto& e : seq.entries) {
    if (seq.format == SequenceFormat::BFile) out += std::to_string(e.index.value_or(0)) + " ";
    out += to_string(e.value) + "\n";
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, std::string& var) : s_(s), var_(var) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
  std::string& var_;

  [[noreturn]] void fail(const std::string& what) {
    parse_error("in \"" + std::string(s_) + "\" at " + std::to_string(i_) + ": " + what);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  static bool starts_base(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(' ||
           c == '_';
  }

  Poly expr() {
    Poly p = term();
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') return p;
      ++i_;
      Poly t = term();
      p = c == '+' ? p + t : p - t;
    }
  }

  Poly term() {
    Poly p = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++i_;
        p = p * factor();
      } else if (c == '/') {
        ++i_;
        Poly d = factor();
        if (d.degree() != 0) fail("division by a non-constant");
        p = p * Rational(1 / d[0]);
      } else if (starts_base(c)) {
        p = p * factor();
      } else {
        return p;
      }
    }
  }

  Poly factor() {
    char c = peek();
    if (c == '-') {
      ++i_;
      return -factor();
    }
    if (c == '+') {
      ++i_;
      return factor();
    }
    Poly b = base();
    if (peek() == '^') {
      ++i_;
      skip();
      std::size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (st == i_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(s_.substr(st, i_ - st)));
      Poly r{1};
      for (unsigned long k = 0; k < e; ++k) r = r * b;
      return r;
    }
    return b;
  }

  Poly base() {
    char c = peek();
    if (c == '(') {
      ++i_;
      Poly p = expr();
      if (peek() != ')') fail("expected ')'");
      ++i_;
      return p;
    }
    std::size_t st = i_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return Poly{Rational(Integer(std::string(s_.substr(st, i_ - st))))};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      std::string id(s_.substr(st, i_ - st));
      if (var_.empty()) var_ = id;
      if (id != var_) fail("unknown variable " + id + " (expected " + var_ + ")");
      return Poly::x();
    }
    fail(c ? "unexpected '" + std::string(1, c) + "'" : "unexpected end");
  }
};

}  // namespace

Poly parse_poly(std::string_view text, std::string& var) { return PolyParser(text, var).parse(); }

namespace {

std::string derivative_atom(long k, const std::string& var) {
  if (k == 0) return "y(" + var + ")";
  if (k <= 3) return "y" + std::string(static_cast<std::size_t>(k), '\'') + "(" + var + ")";
  return "y^(" + std::to_string(k) + ")(" + var + ")";
}

std::string shift_atom(long k, const std::string& var) {
  return k == 0 ? "u(" + var + ")" : "u(" + var + "+" + std::to_string(k) + ")";
}

std::string alg_atom(long k) { return k == 1 ? "y" : "y^" + std::to_string(k); }

std::string pretty_lhs(const std::vector<Poly>& coeffs, const std::string& var,
                       const std::function<std::string(long)>& atom, bool bare_constant) {
  std::string s;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    std::string c = "(" + to_string(coeffs[i], var) + ")";
    if (i == 0 && bare_constant)
      s += c;
    else if (coeffs[i] == Poly{1})
      s += atom(static_cast<long>(i));
    else
      s += c + "*" + atom(static_cast<long>(i));
  }
  return s.empty() ? "0" : s;
}

json poly_list(const std::vector<Poly>& ps, const std::string& var) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(to_string(p, var));
  return a;
}

json rational_list(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

Rational json_rational(const json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  parse_error("expected a rational as string or integer, got " + j.dump());
}

Poly json_poly(const json& j, std::string& var) {
  if (j.is_string()) return parse_poly(j.get<std::string>(), var);
  if (j.is_number_integer()) return Poly{json_rational(j)};
  if (j.is_array()) {
    std::vector<Rational> c;
    for (const auto& e : j) c.push_back(json_rational(e));
    return Poly(c);
  }
  parse_error("expected a polynomial, got " + j.dump());
}

}  // namespace

std::string format_relation(const Relation& rel, FormatMode mode) {
  if (mode == FormatMode::Json) {
    json j;
    if (const auto* r = std::get_if<Recurrence>(&rel)) {
      j["kind"] = "rec";
      j["variable"] = r->var;
      j["coefficients"] = poly_list(r->coeffs, r->var);
      j["initial"] = rational_list(r->initial);
      if (!r->homogeneous()) j["inhomogeneous"] = to_string(r->inhomogeneous, r->var);
    } else if (const auto* d = std::get_if<DiffEquation>(&rel)) {
      j["kind"] = "ode";
      j["variable"] = d->var;
      j["coefficients"] = poly_list(d->coeffs, d->var);
      j["initial"] = rational_list(d->initial);
      if (!d->homogeneous()) j["inhomogeneous"] = to_string(d->inhomogeneous, d->var);
    } else {
      const auto& a = std::get<AlgebraicEquation>(rel);
      j["kind"] = "alg";
      j["variable"] = a.var;
      j["coefficients_y"] = poly_list(a.coeffs_y, a.var);
      j["seed"] = to_string(a.seed);
    }
    return j.dump(2) + "\n";
  }
  std::string out;
  if (const auto* r = std::get_if<Recurrence>(&rel)) {
    out = pretty_lhs(r->coeffs, r->var, [&](long k) { return shift_atom(k, r->var); }, false) + " = " +
          to_string(r->inhomogeneous, r->var) + "\n";
    for (std::size_t i = 0; i < r->initial.size(); ++i)
      out += "u(" + std::to_string(i) + ") = " + to_string(r->initial[i]) + "\n";
  } else if (const auto* d = std::get_if<DiffEquation>(&rel)) {
    out = pretty_lhs(d->coeffs, d->var, [&](long k) { return derivative_atom(k, d->var); }, false) + " = " +
          to_string(d->inhomogeneous, d->var) + "\n";
    for (std::size_t i = 0; i < d->initial.size(); ++i)
      out += "[" + d->var + "^" + std::to_string(i) + "]y(" + d->var + ") = " + to_string(d->initial[i]) + "\n";
  } else {
    const auto& a = std::get<AlgebraicEquation>(rel);
    out = pretty_lhs(a.coeffs_y, a.var, alg_atom, true) + " = 0\n";
    out += "y(0) = " + to_string(a.seed) + "\n";
  }
  return out;
}

Relation parse_relation_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind")) parse_error("relation object needs a \"kind\" field");
  const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  std::string var = j.contains("variable") ? j["variable"].get<std::string>() : "";
  auto polys = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_array()) parse_error(std::string("missing array \"") + key + "\"");
    std::vector<Poly> ps;
    for (const auto& e : j[key]) ps.push_back(json_poly(e, var));
    return ps;
  };
  auto rationals = [&](const char* key) {
    std::vector<Rational> v;
    if (j.contains(key))
      for (const auto& e : j[key]) v.push_back(json_rational(e));
    return v;
  };
  if (kind == "rec" || kind == "ode") {
    auto coeffs = polys("coefficients");
    Poly rhs = j.contains("inhomogeneous") ? json_poly(j["inhomogeneous"], var) : Poly{};
    auto init = rationals("initial");
    if (kind == "rec") {
      Recurrence r;
      r.coeffs = coeffs;
      r.inhomogeneous = rhs;
      r.initial = init;
      r.var = var.empty() ? "n" : var;
      return r;
    }
    DiffEquation d;
    d.coeffs = coeffs;
    d.inhomogeneous = rhs;
    d.initial = init;
    d.var = var.empty() ? "x" : var;
    return d;
  }
  if (kind == "alg") {
    AlgebraicEquation a;
    a.coeffs_y = polys("coefficients_y");
    if (!j.contains("seed")) parse_error("algebraic relation needs a \"seed\"");
    a.seed = json_rational(j["seed"]);
    a.var = var.empty() ? "x" : var;
    return a;
  }
  parse_error("unknown kind \"" + kind + "\"");
}

namespace {

enum class AtomKind { None, Shift, Deriv, Power };

struct Term {
  Poly coeff;
  AtomKind kind = AtomKind::None;
  long order = 0;
  std::string var;
};

std::vector<std::pair<int, std::string>> split_terms(const std::string& s) {
  std::vector<std::pair<int, std::string>> out;
  int depth = 0, sign = 1;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || c == '-')) {
      std::string t = trim(cur);
      if (t.empty()) {
        if (c == '-') sign = -sign;
        continue;
      }
      if (t.back() != '*' && t.back() != '^') {
        out.push_back({sign, t});
        cur.clear();
        sign = c == '-' ? -1 : 1;
        continue;
      }
    }
    cur += c;
  }
  if (!trim(cur).empty()) out.push_back({sign, trim(cur)});
  return out;
}

Term parse_term(int sign, const std::string& body, std::string& coeff_var) {
  static const std::regex atom(
      R"(^(?:(.*)\*)?\s*(?:u\(\s*([A-Za-z_]\w*)\s*(?:\+\s*(\d+))?\s*\)|y('*)\(\s*([A-Za-z_]\w*)\s*\)|y\^\((\d+)\)\(\s*([A-Za-z_]\w*)\s*\)|y(?:\^(\d+))?)\s*$)");
  std::smatch m;
  Term t;
  std::string coeff = body;
  if (std::regex_match(body, m, atom)) {
    coeff = m[1].matched ? m[1].str() : "1";
    if (m[2].matched) {
      t.kind = AtomKind::Shift;
      t.var = m[2];
      t.order = m[3].matched ? std::stol(m[3]) : 0;
    } else if (m[5].matched) {
      t.kind = AtomKind::Deriv;
      t.var = m[5];
      t.order = static_cast<long>(m[4].length());
    } else if (m[6].matched) {
      t.kind = AtomKind::Deriv;
      t.var = m[7];
      t.order = std::stol(m[6]);
    } else {
      t.kind = AtomKind::Power;
      t.order = m[8].matched ? std::stol(m[8]) : 1;
    }
    if (trim(coeff).empty()) parse_error("empty coefficient in \"" + body + "\"");
  }
  if (!t.var.empty()) {
    if (coeff_var.empty()) coeff_var = t.var;
    if (coeff_var != t.var) parse_error("mixed variables " + coeff_var + " and " + t.var);
  }
  t.coeff = parse_poly(coeff, coeff_var) * Rational(sign);
  return t;
}

}  // namespace

Relation parse_relation_pretty(std::string_view text) {
  std::vector<std::string> lines;
  for (const auto& l : lines_of(text)) {
    std::string t = trim(l);
    if (!t.empty() && t[0] != '#') lines.push_back(t);
  }
  if (lines.empty()) parse_error("no equation");
  const std::string& eq = lines[0];
  auto pos = eq.find('=');
  if (pos == std::string::npos || eq.find('=', pos + 1) != std::string::npos)
    parse_error("equation needs exactly one '='");
  std::string var;
  std::vector<Term> terms;
  for (const auto& [sign, body] : split_terms(eq.substr(0, pos))) terms.push_back(parse_term(sign, body, var));
  AtomKind kind = AtomKind::None;
  for (const auto& t : terms) {
    if (t.kind == AtomKind::None) continue;
    if (kind != AtomKind::None && kind != t.kind) parse_error("mixed unknowns in \"" + eq + "\"");
    kind = t.kind;
  }
  if (kind == AtomKind::None) parse_error("no unknown in \"" + eq + "\"");
  Poly rhs = parse_poly(eq.substr(pos + 1), var);
  std::vector<Poly> coeffs;
  for (const auto& t : terms) {
    long idx = t.kind == AtomKind::None ? 0 : t.order;
    if (t.kind == AtomKind::None && kind != AtomKind::Power) parse_error("term without unknown in \"" + eq + "\"");
    if (static_cast<long>(coeffs.size()) <= idx) coeffs.resize(static_cast<std::size_t>(idx) + 1);
    coeffs[static_cast<std::size_t>(idx)] += t.coeff;
  }
  if (var.empty()) var = kind == AtomKind::Shift ? "n" : "x";

  std::map<long, Rational> init;
  std::optional<Rational> seed;
  static const std::regex rec_init(R"(^u\(\s*(\d+)\s*\)\s*=\s*(.+)$)");
  static const std::regex ode_init(R"(^\[\s*[A-Za-z_]\w*\s*\^\s*(\d+)\s*\]\s*y\(\s*[A-Za-z_]\w*\s*\)\s*=\s*(.+)$)");
  static const std::regex alg_init(R"(^y\(\s*0\s*\)\s*=\s*(.+)$)");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::smatch m;
    const std::string& l = lines[i];
    if (kind == AtomKind::Shift && std::regex_match(l, m, rec_init)) {
      init[std::stol(m[1])] = parse_rational(trim(m[2].str()));
    } else if (kind == AtomKind::Deriv && std::regex_match(l, m, ode_init)) {
      init[std::stol(m[1])] = parse_rational(trim(m[2].str()));
    } else if (kind == AtomKind::Power && std::regex_match(l, m, alg_init)) {
      seed = parse_rational(trim(m[1].str()));
    } else {
      parse_error("line \"" + l + "\" is not an initial value of this relation");
    }
  }
  std::vector<Rational> initial;
  for (const auto& [k, v] : init) {
    if (k != static_cast<long>(initial.size())) parse_error("initial values must start at 0 without gaps");
    initial.push_back(v);
  }
  if (kind == AtomKind::Shift) {
    Recurrence r;
    r.coeffs = coeffs;
    r.initial = initial;
    r.inhomogeneous = rhs;
    r.var = var;
    return r;
  }
  if (kind == AtomKind::Deriv) {
    DiffEquation d;
    d.coeffs = coeffs;
    d.initial = initial;
    d.inhomogeneous = rhs;
    d.var = var;
    return d;
  }
  AlgebraicEquation a;
  coeffs[0] -= rhs;
  a.coeffs_y = coeffs;
  a.var = var;
  if (!seed) parse_error("algebraic relation needs a line \"y(0) = value\"");
  a.seed = *seed;
  return a;
}

Relation parse_relation(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_relation_json(text) : parse_relation_pretty(text);
  }
  parse_error("empty relation");
}

namespace {

json report_body(const GuessReport& r) {
  json j;
  j["found"] = r.found();
  if (r.rec) {
    j["relation"] = json::parse(format_relation(*r.rec, FormatMode::Json));
    j["pretty"] = format_relation(*r.rec, FormatMode::Pretty);
  } else if (r.ode) {
    j["relation"] = json::parse(format_relation(*r.ode, FormatMode::Json));
    j["pretty"] = format_relation(*r.ode, FormatMode::Pretty);
  } else if (r.alg) {
    j["relation"] = json::parse(format_relation(*r.alg, FormatMode::Json));
    j["pretty"] = format_relation(*r.alg, FormatMode::Pretty);
  }
  j["series"] = to_string(r.series_used);
  j["validated"] = r.validated;
  j["primes"] = r.primes;
  j["skipped_primes"] = r.skipped_primes;
  json trace = json::array();
  for (const auto& e : r.trace)
    trace.push_back({{"order", e.order}, {"degree", e.degree}, {"phase", e.phase}, {"outcome", e.outcome}});
  j["trace"] = trace;
  return j;
}

}  // namespace

std::string report_json(const GuessReport& report) { return report_body(report).dump(2) + "\n"; }

std::string report_text(const GuessReport& report) {
  std::string out;
  if (report.rec) out = format_relation(*report.rec, FormatMode::Pretty);
  if (report.ode) out = format_relation(*report.ode, FormatMode::Pretty);
  if (report.alg) out = format_relation(*report.alg, FormatMode::Pretty);
  if (!report.found()) out = "no relation found\n";
  std::size_t rejected = 0, empty = 0;
  for (const auto& e : report.trace) {
    rejected += e.outcome == "rejected";
    empty += e.outcome == "no-kernel";
  }
  out += "# series " + to_string(report.series_used) + ", " + std::to_string(report.trace.size()) +
         " cells tried (" + std::to_string(empty) + " without kernel, " + std::to_string(rejected) +
         " rejected), " + std::to_string(report.validated) + " held-out terms checked\n";
  return out;
}

std::string report_json(const CaseReport& report) {
  json j;
  j["name"] = report.name;
  j["pass"] = report.passed();
  json cps = json::array();
  for (const auto& c : report.checkpoints)
    cps.push_back({{"label", c.label}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
  j["checkpoints"] = cps;
  j["notes"] = report.notes;
  return j.dump(2) + "\n";
}

}  // namespace holo
