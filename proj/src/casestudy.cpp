#include "holo/casestudy.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "holo/closure.hpp"
#include "holo/convert.hpp"
#include "holo/error.hpp"
#include "holo/eval.hpp"
#include "holo/guess.hpp"
#include "holo/ore.hpp"

namespace holo {

bool CaseReport::passed() const {
  if (checkpoints.empty()) return false;
  for (const auto& c : checkpoints)
    if (!c.pass) return false;
  return true;
}

void CaseReport::check(const std::string& label, const std::string& expected, const std::string& computed) {
  check(label, expected, computed, expected == computed);
}

void CaseReport::check(const std::string& label, const std::string& expected, const std::string& computed,
                       bool pass) {
  checkpoints.push_back({label, expected, computed, pass});
}

namespace {

std::string clip(const std::string& s) { return s.size() <= 160 ? s : s.substr(0, 157) + "..."; }

}  // namespace

std::string to_text(const CaseReport& report) {
  std::ostringstream out;
  out << report.name << ": " << (report.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : report.checkpoints) {
    out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.label << ": " << clip(c.computed) << "\n";
    if (!c.pass) out << "         expected: " << clip(c.expected) << "\n";
  }
  for (const auto& n : report.notes) out << "  note: " << n << "\n";
  return out.str();
}

namespace {

using Clock = std::chrono::steady_clock;

void guarded(CaseReport& report, const std::string& label, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report.check(label, "completes", e.what(), false);
  }
}

Rational power(long base, unsigned long e) {
  Integer z;
  mpz_ui_pow_ui(z.get_mpz_t(), static_cast<unsigned long>(base), e);
  return Rational(z);
}

std::string text(const Recurrence& r) { return to_pretty(canonical(r).op()); }
std::string text(const DiffEquation& d) { return to_pretty(canonical(d).op()); }
std::string text(const OreOperator& op) { return to_pretty(op.canonical()); }

std::string join(const std::vector<Rational>& v, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n && i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s;
}

std::string pair(long a, long b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; }

const Poly n_{0, 1};

Poly lin(long a, long b) { return Poly{Rational(b), Rational(a)}; }

// c_n + p_2(n+3) c_{n+1} + p_1(n+3) c_{n+2} + p_0(n+3) c_{n+3} = 0.
Recurrence rec_c() {
  Poly p0 = Rational(80352000) * n_ * lin(5, -1) * lin(5, -2) * lin(5, -4);
  Poly p1 = Rational(25) * Poly{14092603, -39189168, 39118320, -16588800, 2592000};
  Poly p2 = Rational(20) * Poly{19739, -18900, 4500};
  Recurrence r;
  r.coeffs = {Poly{1}, p2.shift(3), p1.shift(3), p0.shift(3)};
  r.initial = {Rational(1), make_rational(-161, 248832),
               Rational(26605753) / (power(2, 23) * power(3, 12) * power(5, 2))};
  return r;
}

Recurrence shifted_pochhammer(const Rational& s) {
  Recurrence r;
  r.coeffs = {Poly{s, Rational(1)}, Poly{-1}};
  r.initial = {Rational(1)};
  return r;
}

Rational yz_ratio() { return power(2, 10) * power(3, 5) * power(5, 4); }

Recurrence golden_closure_rec() {
  Recurrence r;
  Poly p3 = Rational(31) * lin(1, 3) * lin(5, 11);
  Poly p2 = Rational(60) * Poly{10644379, 27559152, 29787120, 14515200, 2592000};
  Poly p1 = power(2, 14) * power(3, 6) * power(5, 2) * lin(5, 8) * lin(5, 9) * Poly{3539, 8100, 4500};
  Poly p0 = power(2, 22) * power(3, 11) * power(5, 3) * lin(5, 8) * lin(5, 3) * lin(5, 9) * lin(5, 4);
  r.coeffs = {p0, p1, p2, p3};
  return r;
}

Poly golden_guess_rec_leading() { return lin(5, 6) * lin(1, 2) * lin(60, 43); }

Recurrence golden_guess_rec() {
  Recurrence r;
  Poly p1 = Rational(300) * Poly{290603, 836940, 759600, 216000};
  Poly p0 = power(2, 12) * power(3, 6) * power(5, 2) * lin(5, 4) * lin(5, 3) * lin(60, 103);
  r.coeffs = {p0, p1, golden_guess_rec_leading()};
  return r;
}

DiffEquation golden_guess_ode() {
  DiffEquation d;
  Poly q2 = Rational(5) * Poly{0, 1} * lin(302400, -31) * Poly{1, 216000, 373248000};
  Poly q1{-31, -61473600, 64571904000, 1354442342400000};
  Poly q0 = Rational(300) * Poly{-4991, -240974784, 902961561600};
  d.coeffs = {q0, q1, q2};
  return d;
}

}  // namespace

CaseReport run_yang_zagier() {
  CaseReport rep;
  rep.name = "yang-zagier";
  auto t0 = Clock::now();
  const std::vector<Rational> golden_terms{Rational(1), Rational(-48300), Rational(7981725900),
                                           Rational(Integer("-1469166887370000"))};
  guarded(rep, "pipeline", [&] {
    Recurrence c = rec_c();
    Recurrence a = geometric_scale(
        rec_mul(rec_mul(c, shifted_pochhammer(Rational(3, 5))), shifted_pochhammer(Rational(4, 5))), yz_ratio());
    rep.check("closure_rec", text(golden_closure_rec()), text(a));
    Recurrence ca = canonical(a);
    rep.check("closure_rec_leading", to_string(canonical(golden_closure_rec()).coeffs.back(), "n"), to_string(ca.coeffs.back(), "n"));
    rep.check("closure_rec_trailing", to_string(canonical(golden_closure_rec()).coeffs.front(), "n"), to_string(ca.coeffs.front(), "n"));

    const std::size_t N = 51;
    std::vector<Rational> terms = unroll(a, N);
    rep.check("a_terms", join(golden_terms, 4), join(terms, 4));
    std::vector<Rational> cs = unroll(c, N), direct(N);
    Rational w = 1;
    for (std::size_t i = 0; i < N; ++i, w *= yz_ratio()) {
      long k = static_cast<long>(i);
      direct[i] = cs[i] * rising_factorial(Rational(3, 5), k) * rising_factorial(Rational(4, 5), k) * w;
    }
    rep.check("a_terms_direct", join(direct, N), join(terms, N));

    GuessReport gr = guess_rec(terms);
    if (!gr.rec) throw Error(ErrorKind::Internal, "no recurrence guessed from 51 terms");
    rep.check("guess_rec", text(golden_guess_rec()), text(*gr.rec));
    rep.check("guess_rec_leading", to_string(canonical(golden_guess_rec()).coeffs.back(), "n"),
              to_string(canonical(*gr.rec).coeffs.back(), "n"));

    DiffEquation deq_a = rec_to_diffeq(a);
    DiffEquation deq_g = rec_to_diffeq(*gr.rec);
    rep.check("rec_to_diffeq_orders", pair(4, 3), pair(deq_a.order(), deq_g.order()));
    OreOperator L = lclm(deq_a.op(), deq_g.op());
    Recurrence back = diffeq_to_rec(diffeq_from_op(L));
    rep.check("lclm_closure_rec", text(golden_closure_rec()), text(back));

    GuessReport go = guess_diffeq(terms);
    if (!go.ode) throw Error(ErrorKind::Internal, "no differential equation guessed from 51 terms");
    rep.check("guess_ode", text(golden_guess_ode()), text(*go.ode));
    rep.check("gcrd_guess_ode", text(golden_guess_ode()), text(gcrd(deq_a.op(), go.ode->op())));

    Recurrence r7 = diffeq_to_rec(*go.ode);
    std::vector<Rational> s7 = series_from_diffeq(*go.ode, 11);
    rep.check("guess_ode_terms", join(terms, 11), join(s7, 11));
    rep.check("order_table", "closure: " + pair(3, 4) + ", guess-rec: " + pair(2, 3) + ", guess-ode: " + pair(3, 2),
              "closure: " + pair(a.order(), deq_a.order()) + ", guess-rec: " + pair(gr.rec->order(), deq_g.order()) +
                  ", guess-ode: " + pair(r7.order(), go.ode->order()));
  });
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

namespace {

Rational dy_at_zero(const AlgebraicEquation& p, const Rational& y) {
  Rational s = 0, pw = 1;
  for (long i = 1; i <= p.degree_y(); ++i) {
    s += Rational(i) * p.coeffs_y[i][0] * pw;
    pw *= y;
  }
  return s;
}

std::string vanishing(const AlgebraicEquation& p, const std::vector<Rational>& s, std::size_t n) {
  auto r = p.substitute(s, n);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] != 0) return "nonzero at x^" + std::to_string(i);
  return "0 mod x^" + std::to_string(n);
}

std::string degrees(long dy, long dx) { return "deg_y " + std::to_string(dy) + ", deg_x " + std::to_string(dx); }

// Certifies P against the differential equation of f^12 and its series.
void certify(CaseReport& rep, const std::string& tag, const AlgebraicEquation& p, const DiffEquation& pow_deq,
             const std::vector<Rational>& s, long dy, long dx) {
  rep.check(tag + "degrees", degrees(dy, dx), degrees(p.degree_y(), p.degree_x()));
  rep.check(tag + "seed", "nonzero", dy_at_zero(p, Rational(1)) != 0 ? "nonzero" : "zero");
  std::size_t depth = std::min<std::size_t>(100, s.size());
  rep.check(tag + "annihilation", "0 mod x^" + std::to_string(depth), vanishing(p, s, depth));
  DiffEquation de = algeq_to_diffeq(p);
  DiffEquation h = homogenize_diffeq(de).relation;
  OreOperator target = pow_deq.op().canonical();
  OreOperator g = gcrd(h.op(), pow_deq.op());
  std::string want = "ODE of f^12 (order " + std::to_string(target.order()) + ")";
  rep.check(tag + "gcrd", want, g == target ? want : "order " + std::to_string(g.order()) + " operator");
  std::vector<Rational> t = series_from_diffeq(de, s.size());
  rep.check(tag + "initial", join(s, 8), join(t, 8), t == s);
}

}  // namespace

CaseReport run_yang_zagier_algebraicity(std::size_t terms) {
  CaseReport rep;
  rep.name = "yang-zagier-algebraicity";
  auto t0 = Clock::now();
  guarded(rep, "pipeline", [&] {
    NamedSeries f1 = named_series(two_f1(Rational(-1, 60), Rational(11, 60), Rational(2, 3)), terms);
    DiffEquation pow1 = diffeq_pow(f1.deq, 12);
    std::vector<Rational> s1 = series_from_diffeq(pow1, terms);
    std::vector<Rational> direct{Rational(1)};
    for (int k = 0; k < 12; ++k) direct = series_mul(direct, f1.terms, terms);
    rep.check("f1_power_series", join(direct, terms), join(s1, terms));

    GuessReport g = guess_algeq(s1);
    if (!g.alg) throw Error(ErrorKind::Internal, "no algebraic equation guessed for f1^12");
    const AlgebraicEquation& P = *g.alg;
    certify(rep, "f1_", P, pow1, s1, 20, 4);

    NamedSeries f2 = named_series(two_f1(Rational(19, 60), Rational(31, 60), Rational(4, 3)), terms);
    DiffEquation pow2 = diffeq_pow(f2.deq, 12);
    std::vector<Rational> s2 = series_from_diffeq(pow2, terms);
    if (!guess_algeq(s2).found())
      rep.notes.push_back("f2^12 has no annihilating polynomial small enough for " + std::to_string(terms) +
                          " terms; its polynomial is obtained from the one of f1^12");
    // x^(1/3) f2 solves the equation of f1, so lambda x^4 f2^12 is a root of P.
    if (P.coeffs_y.size() < 2 || P.coeffs_y[1][0] == 0) throw Error(ErrorKind::Internal, "unexpected shape of P");
    Rational lambda = -P.coeffs_y[0][4] / P.coeffs_y[1][0];
    AlgebraicEquation Q;
    Q.seed = 1;
    Rational lp = 1;
    long val = -1;
    for (long i = 0; i <= P.degree_y(); ++i) {
      Q.coeffs_y.push_back(P.coeffs_y[i].shift_up(static_cast<std::size_t>(4 * i)) * lp);
      lp *= lambda;
      const Poly& c = Q.coeffs_y.back();
      for (long k = 0; k <= c.degree(); ++k)
        if (c[k] != 0) {
          val = val < 0 ? k : std::min(val, k);
          break;
        }
    }
    for (auto& c : Q.coeffs_y)
      if (!c.is_zero())
        c = Poly(std::vector<Rational>(c.coeffs().begin() + std::min<long>(val, c.degree() + 1), c.coeffs().end()));
    std::vector<Rational> shifted(terms, Rational(0));
    for (std::size_t i = 0; i + 4 < terms; ++i) shifted[i + 4] = lambda * s2[i];
    rep.check("f2_conjugate_root", "0 mod x^" + std::to_string(terms), vanishing(P, shifted, terms));
    certify(rep, "f2_", Q, pow2, s2, 20, 76);
  });
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

CaseReport run_iso(const Rational& a) {
  if (a == 0 || a == 1) throw Error(ErrorKind::InvalidParameter, "a must differ from 0 and 1");
  CaseReport rep;
  rep.name = "iso a=" + to_string(a);
  auto t0 = Clock::now();
  const std::size_t N = 50;
  guarded(rep, "pipeline", [&] {
    NamedSeries F = named_series(two_f1(-a, -a, Rational(1)), N + 1);
    DiffEquation dF = diffeq_apply(F.deq, {Poly{}, Poly{1, 1}});
    DiffEquation aF = F.deq;
    for (auto& v : aF.initial) v *= -a;
    DiffEquation e;
    e.coeffs = {Poly{-2 * a}, Poly{1, -1}};
    e.initial = {Rational(1)};
    DiffEquation L = diffeq_mul(diffeq_add(dF, aF), e);
    Rational scale = 1 / (a * (a - 1));
    for (auto& v : L.initial) v *= scale;
    rep.check("L_order", "4", std::to_string(L.order()));

    std::vector<Rational> h = series_from_diffeq(L, N);
    std::vector<Rational> direct(N);
    for (std::size_t n = 0; n < N; ++n) {
      Rational s = 0;
      for (std::size_t k = 0; k <= n; ++k) {
        Rational g = Rational(static_cast<long>(k) + 1) * F.terms[k + 1] + Rational(static_cast<long>(k)) * F.terms[k] -
                     a * F.terms[k];
        s += g * rising_factorial(2 * a, static_cast<long>(n - k)) / Rational(factorial(n - k));
      }
      direct[n] = s * scale;
    }
    rep.check("lhs_series", join(direct, N), join(h, N));
    rep.check("h_coefficients", join({Rational(1), (a + 1) * a / 2, (a + 2) * (a + 1) * (a + 1) * a / 12}, 3),
              join(h, 3));

    DiffEquation Lg;
    Lg.coeffs = {Poly{a * (a + 1)}, Poly{Rational(-2), 2 * (a + 1)}, Poly{0, -1, 1}};
    GuessReport go = guess_diffeq(h);
    // For integer a the series is rational and the guess is a proper right factor.
    if (go.ode && text(*go.ode) != text(Lg)) {
      bool factor = right_divmod(Lg.op(), go.ode->op()).remainder.is_zero();
      rep.check("l_guess", "right factor of " + text(Lg), text(*go.ode), factor);
    } else {
      rep.check("l_guess", text(Lg), go.ode ? text(*go.ode) : "none");
    }
    rep.check("gcrd", text(Lg), text(gcrd(L.op(), Lg.op())));
    std::size_t depth = required_initial_count(diffeq_to_rec(L));
    rep.check("uniqueness_depth", "at most " + std::to_string(N), std::to_string(depth), depth <= N);

    std::vector<Rational> rhs = named_series(two_f1(a, a + 1, Rational(2)), N).terms;
    rep.check("series_agree", join(rhs, N), join(h, N));

    Recurrence want;
    want.coeffs = {Rational(-1) * (n_ + Poly{a + 1}) * (n_ + Poly{a}), lin(1, 2) * lin(1, 1)};
    std::vector<Rational> ten(h.begin(), h.begin() + 10);
    GuessReport gr = guess_rec(ten);
    rep.check("rec_guess", text(want), gr.rec ? text(*gr.rec) : "none");

    if (a > 0) {
      bool nonneg = true;
      for (const auto& v : rhs) nonneg = nonneg && v >= 0;
      rep.check("nonnegative", "all " + std::to_string(N) + " coefficients >= 0",
                nonneg ? "all " + std::to_string(N) + " coefficients >= 0" : "negative coefficient");
    }
    rep.notes.push_back("checked at a = " + to_string(a) + " only; no statement for symbolic a");
  });
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

}  // namespace holo
