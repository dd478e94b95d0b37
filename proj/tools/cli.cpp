#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "holo/casestudy.hpp"
#include "holo/closure.hpp"
#include "holo/convert.hpp"
#include "holo/error.hpp"
#include "holo/eval.hpp"
#include "holo/guess.hpp"
#include "holo/io.hpp"
#include "holo/ore.hpp"

namespace holo {

namespace {

struct Options {
  bool json = false;
  long max_order = 24;
  long max_degree = -1;
  long validate = 5;
  long margin = 3;
  std::string path = "modular";
  std::string series = "ogf";
  long seed_terms = -1;
  std::string a = "1/2";
  std::string ratio;
  long n = 10;
  long threshold = 32;
  std::vector<std::string> files;
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::NonContiguousIndices:
      return kExitParse;
    case ErrorKind::Internal:
    case ErrorKind::ReconstructionFailed:
    case ErrorKind::UnluckyPrimeExhaustion:
    case ErrorKind::NoReconstruction:
    case ErrorKind::DuplicatePrime:
      return kExitInternal;
    default:
      return kExitInvalid;
  }
}

class Runner {
 public:
  Runner(const Options& o, std::istream& in, std::ostream& out) : o_(o), in_(in), out_(out) {}

  std::string read(const std::string& path) {
    if (path == "-") {
      std::ostringstream s;
      s << in_.rdbuf();
      return s.str();
    }
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  }

  Relation relation(std::size_t i) {
    if (i >= o_.files.size()) throw Error(ErrorKind::InvalidInput, "missing relation file argument");
    return parse_relation(read(o_.files[i]));
  }

  void emit(const Relation& r) { out_ << format_relation(r, o_.json ? FormatMode::Json : FormatMode::Pretty); }

  void emit(const OreOperator& op) {
    if (o_.json) {
      if (op.kind() == OreKind::Shift)
        emit(recurrence_from_op(op));
      else
        emit(diffeq_from_op(op));
    } else {
      out_ << to_pretty(op) << "\n";
    }
  }

  void emit_terms(const std::vector<Rational>& v, long offset) {
    if (o_.json) {
      out_ << "{\n  \"offset\": " << offset << ",\n  \"terms\": [";
      for (std::size_t i = 0; i < v.size(); ++i) out_ << (i ? ", " : "") << "\"" << to_string(v[i]) << "\"";
      out_ << "]\n}\n";
      return;
    }
    SequenceFile s;
    for (const auto& q : v) s.entries.push_back({std::nullopt, q});
    out_ << format_sequence(s);
  }

  GuessConfig config() const {
    GuessConfig c;
    c.max_order = o_.max_order;
    c.max_degree = o_.max_degree;
    c.validation = o_.validate;
    c.margin = o_.margin;
    if (o_.path == "modular")
      c.path = ArithPath::Modular;
    else if (o_.path == "rational")
      c.path = ArithPath::Rational;
    else
      throw Error(ErrorKind::InvalidInput, "--path must be modular or rational");
    if (o_.series == "ogf")
      c.series = SeriesType::Ordinary;
    else if (o_.series == "egf")
      c.series = SeriesType::Exponential;
    else if (o_.series == "auto")
      c.series = SeriesType::Auto;
    else
      throw Error(ErrorKind::InvalidInput, "--series must be ogf, egf or auto");
    c.validate();
    return c;
  }

  int guess(const std::string& which) {
    if (o_.files.empty()) throw Error(ErrorKind::InvalidInput, "missing sequence file argument");
    std::vector<Rational> terms = parse_sequence(read(o_.files[0])).values();
    if (o_.seed_terms >= 0 && static_cast<std::size_t>(o_.seed_terms) < terms.size())
      terms.resize(static_cast<std::size_t>(o_.seed_terms));
    GuessConfig c = config();
    GuessReport r = which == "rec" ? guess_rec(terms, c) : which == "ode" ? guess_diffeq(terms, c) : guess_algeq(terms, c);
    out_ << (o_.json ? report_json(r) : report_text(r));
    return r.found() ? kExitOk : kExitNoRelation;
  }

  int convert(const std::string& which) {
    Relation r = relation(0);
    if (which == "rec2ode") {
      emit(rec_to_diffeq(as<Recurrence>(r, "rec2ode needs a recurrence")));
    } else if (which == "ode2rec") {
      emit(diffeq_to_rec(as<DiffEquation>(r, "ode2rec needs a differential equation")));
    } else if (which == "alg2ode") {
      emit(algeq_to_diffeq(as<AlgebraicEquation>(r, "alg2ode needs an algebraic equation")));
    } else if (const auto* rec = std::get_if<Recurrence>(&r)) {
      emit(homogenize_rec(*rec).relation);
    } else if (const auto* d = std::get_if<DiffEquation>(&r)) {
      emit(homogenize_diffeq(*d).relation);
    } else {
      throw Error(ErrorKind::InvalidInput, "homogenize needs a recurrence or differential equation");
    }
    return kExitOk;
  }

  int closure(const std::string& which) {
    Relation a = relation(0);
    if (which == "scale") {
      if (o_.ratio.empty()) throw Error(ErrorKind::InvalidInput, "scale needs --ratio");
      emit(geometric_scale(as<Recurrence>(a, "scale needs a recurrence"), parse_rational(o_.ratio)));
      return kExitOk;
    }
    Relation b = relation(1);
    if (a.index() != b.index() || std::holds_alternative<AlgebraicEquation>(a))
      throw Error(ErrorKind::KindMismatch, "closure needs two recurrences or two differential equations");
    if (const auto* ra = std::get_if<Recurrence>(&a)) {
      const auto& rb = std::get<Recurrence>(b);
      emit(which == "add" ? rec_add(*ra, rb) : rec_mul(*ra, rb));
    } else {
      const auto& da = std::get<DiffEquation>(a);
      const auto& db = std::get<DiffEquation>(b);
      emit(which == "add" ? diffeq_add(da, db) : diffeq_mul(da, db));
    }
    return kExitOk;
  }

  int ore(const std::string& which) {
    OreOperator a = op_of(relation(0)), b = op_of(relation(1));
    if (which == "gcrd") {
      emit(gcrd(a, b));
    } else if (which == "lclm") {
      emit(lclm(a, b));
    } else {
      DivMod dm = right_divmod(a, b);
      if (o_.json) {
        out_ << "{\"quotient\": ";
        emit(dm.quotient);
        out_ << ", \"remainder\": ";
        emit(dm.remainder);
        out_ << "}\n";
      } else {
        out_ << "quotient: " << to_pretty(dm.quotient) << "\nremainder: " << to_pretty(dm.remainder) << "\n";
      }
    }
    return kExitOk;
  }

  int eval(const std::string& which) {
    if (o_.n < 0) throw Error(ErrorKind::InvalidInput, "-n must be nonnegative");
    Relation r = relation(0);
    auto n = static_cast<std::size_t>(o_.n);
    if (which == "unroll") {
      emit_terms(unroll(as<Recurrence>(r, "unroll needs a recurrence"), n), 0);
    } else if (which == "nth") {
      Rational v = nth_term(as<Recurrence>(r, "nth needs a recurrence"), n, o_.threshold);
      if (o_.json)
        out_ << "{\n  \"n\": " << n << ",\n  \"value\": \"" << to_string(v) << "\"\n}\n";
      else
        out_ << to_string(v) << "\n";
    } else if (const auto* d = std::get_if<DiffEquation>(&r)) {
      emit_terms(series_from_diffeq(*d, n), 0);
    } else if (const auto* a = std::get_if<AlgebraicEquation>(&r)) {
      emit_terms(series_from_algeq(*a, n), 0);
    } else {
      throw Error(ErrorKind::InvalidInput, "series needs a differential or algebraic equation");
    }
    return kExitOk;
  }

  int case_study(const std::string& which) {
    CaseReport rep = which == "yang-zagier"       ? run_yang_zagier()
                     : which == "yang-zagier-alg" ? run_yang_zagier_algebraicity()
                                                  : run_iso(parse_rational(o_.a));
    out_ << (o_.json ? report_json(rep) : to_text(rep));
    return rep.passed() ? kExitOk : kExitInternal;
  }

 private:
  const Options& o_;
  std::istream& in_;
  std::ostream& out_;

  template <class T>
  static const T& as(const Relation& r, const char* what) {
    if (const auto* p = std::get_if<T>(&r)) return *p;
    throw Error(ErrorKind::KindMismatch, what);
  }

  static OreOperator op_of(const Relation& r) {
    if (const auto* rec = std::get_if<Recurrence>(&r)) return rec->op();
    if (const auto* d = std::get_if<DiffEquation>(&r)) return d->op();
    throw Error(ErrorKind::KindMismatch, "operators come from recurrences or differential equations");
  }
};

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Guessing, closure, conversion and evaluation of holonomic sequences and functions", "holo"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Machine readable output");
  app.add_option("--max-order", o.max_order, "Largest order (or y-degree) tried when guessing");
  app.add_option("--max-degree", o.max_degree, "Largest coefficient degree tried; -1 lets the data decide");
  app.add_option("--validate", o.validate, "Held-out terms used to check a guess");
  app.add_option("--margin", o.margin, "Equations required beyond the number of unknowns");
  app.add_option("--path", o.path, "Linear algebra: modular or rational");
  app.add_option("--seed-terms", o.seed_terms, "Use only the first N input terms");

  auto file_args = [&](CLI::App* c, int count) {
    c->add_option("files", o.files, "Input files ('-' for stdin)")->expected(count)->required();
  };

  std::vector<std::pair<std::string, CLI::App*>> guessers;
  for (const char* g : {"guess-rec", "guess-ode", "guess-alg"}) {
    auto* c = app.add_subcommand(g, std::string("Guess a ") +
                                        (g[6] == 'r' ? "recurrence" : g[6] == 'o' ? "differential equation"
                                                                                   : "polynomial equation") +
                                        " from terms (plain or b-file)");
    file_args(c, 1);
    if (g[6] != 'a') c->add_option("--series", o.series, "ogf, egf or auto");
    guessers.push_back({g, c});
  }

  auto group = [&](const std::string& name, const std::string& desc,
                   const std::vector<std::tuple<std::string, std::string, int>>& subs) {
    auto* c = app.add_subcommand(name, desc);
    c->require_subcommand(1);
    std::vector<std::pair<std::string, CLI::App*>> out;
    for (const auto& [s, d, k] : subs) {
      auto* sc = c->add_subcommand(s, d);
      if (k > 0) file_args(sc, k);
      out.push_back({s, sc});
    }
    return std::make_pair(c, out);
  };

  auto convert = group("convert", "Convert between relation types",
                       {{"rec2ode", "Recurrence to differential equation of the generating function", 1},
                        {"ode2rec", "Differential equation to coefficient recurrence", 1},
                        {"alg2ode", "Polynomial equation to differential equation", 1},
                        {"homogenize", "Remove the inhomogeneous part", 1}});
  auto closure = group("closure", "Closure properties",
                       {{"add", "Relation of the sum", 2}, {"mul", "Relation of the product", 2},
                        {"scale", "Recurrence of u(n) w^n", 1}});
  for (auto& [s, sc] : closure.second)
    if (s == "scale") sc->add_option("--ratio", o.ratio, "The rational w")->required();
  auto ore = group("ore", "Operator arithmetic",
                   {{"gcrd", "Greatest common right divisor", 2},
                    {"lclm", "Least common left multiple", 2},
                    {"divmod", "Right division with remainder", 2}});
  auto eval = group("eval", "Evaluation",
                    {{"unroll", "First N terms of a recurrence", 1},
                     {"nth", "Term N of a recurrence by binary splitting", 1},
                     {"series", "First N coefficients of a differential or polynomial equation", 1}});
  for (auto& [s, sc] : eval.second) {
    sc->add_option("-n", o.n, "Number of terms, or the index for nth");
    if (s == "nth") sc->add_option("--threshold", o.threshold, "Leaf size of the splitting");
  }
  auto cases = group("case", "Case studies",
                     {{"yang-zagier", "Recurrences and differential equations of a_n", 0},
                      {"yang-zagier-alg", "Algebraicity of the twelfth powers", 0},
                      {"iso", "Derivative identity for w_a at a fixed a", 0}});
  for (auto& [s, sc] : cases.second)
    if (s == "iso") sc->add_option("--a", o.a, "Rational parameter a");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? kExitOk : kExitInvalid;
  }

  Runner run(o, in, out);
  try {
    for (auto& [g, c] : guessers)
      if (c->parsed()) return run.guess(g.substr(6));
    for (auto& [s, c] : convert.second)
      if (c->parsed()) return run.convert(s);
    for (auto& [s, c] : closure.second)
      if (c->parsed()) return run.closure(s);
    for (auto& [s, c] : ore.second)
      if (c->parsed()) return run.ore(s);
    for (auto& [s, c] : eval.second)
      if (c->parsed()) return run.eval(s);
    for (auto& [s, c] : cases.second)
      if (c->parsed()) return run.case_study(s);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  err << "no command given\n";
  return kExitInvalid;
}

}  // namespace holo
