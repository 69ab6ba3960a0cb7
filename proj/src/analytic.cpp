#include "packdense/analytic.hpp"

#include <cctype>
#include <stdexcept>

namespace packdense {

namespace {

mpz_class pow_z(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational pow_q(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), base.get_num_mpz_t(), e);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), base.get_den_mpz_t(), e);
  return r;
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// v^e / e! for an integer v (possibly negative).
Rational power_over_factorial(std::int64_t v, unsigned long e) {
  Rational r(pow_z(mpz_class(static_cast<long>(v)), e), factorial(e));
  r.canonicalize();
  return r;
}

Rational pow2_neg(int bits) {
  Rational r(mpz_class(1), pow_z(mpz_class(2), static_cast<unsigned long>(bits)));
  return r;
}

Rational interval_width_limit(int bits) { return pow2_neg(bits); }

}  // namespace

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidInput("zero denominator");
  Rational r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

Rational to_rational(Int128 v) {
  // Int128 -> decimal string -> mpz; cheap enough outside tight loops
  return Rational(mpz_class(to_string(v), 10));
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw InvalidInput("empty number");
  const auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      Rational r(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
      if (r.get_den() == 0) throw InvalidInput("zero denominator in '" + s + "'");
      r.canonicalize();
      return r;
    }
  } catch (const std::invalid_argument&) {
    throw InvalidInput("invalid number '" + s + "'");
  }
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  mpz_class mantissa = 0;
  long exponent = 0;
  bool any_digit = false;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    mantissa = mantissa * 10 + (s[pos++] - '0');
    any_digit = true;
  }
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      mantissa = mantissa * 10 + (s[pos++] - '0');
      --exponent;
      any_digit = true;
    }
  }
  if (!any_digit) throw InvalidInput("invalid number '" + s + "'");
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    bool exp_negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) exp_negative = s[pos++] == '-';
    long e = 0;
    bool exp_digit = false;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      e = e * 10 + (s[pos++] - '0');
      exp_digit = true;
      if (e > 100000) throw InvalidInput("exponent too large in '" + s + "'");
    }
    if (!exp_digit) throw InvalidInput("invalid exponent in '" + s + "'");
    exponent += exp_negative ? -e : e;
  }
  if (pos != s.size()) throw InvalidInput("invalid number '" + s + "'");
  Rational r(mantissa);
  if (exponent > 0) r *= pow_z(10, static_cast<unsigned long>(exponent));
  if (exponent < 0) r /= pow_z(10, static_cast<unsigned long>(-exponent));
  return negative ? Rational(-r) : r;
}

std::string to_fixed(const Rational& q, int places) {
  if (places < 0) throw InvalidInput("decimal places must be non-negative");
  const mpz_class scale = pow_z(10, static_cast<unsigned long>(places));
  const Rational scaled = abs(q) * scale + Rational(1, 2);
  const mpz_class units = scaled.get_num() / scaled.get_den();
  std::string d = units.get_str();
  if (d.size() <= static_cast<std::size_t>(places)) d.insert(0, static_cast<std::size_t>(places) + 1 - d.size(), '0');
  std::string out = (q < 0 && units != 0) ? "-" : "";
  out += d.substr(0, d.size() - static_cast<std::size_t>(places));
  if (places > 0) out += "." + d.substr(d.size() - static_cast<std::size_t>(places));
  return out;
}

std::string to_decimal(const Rational& q, int significant) {
  if (significant < 1) throw InvalidInput("significant digits must be positive");
  if (q == 0) return "0";
  Rational a = abs(q);
  // decimal exponent e with 10^e <= a < 10^(e+1)
  long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
  auto ten_pow = [](long p) {
    return p >= 0 ? Rational(pow_z(10, static_cast<unsigned long>(p)))
                  : Rational(mpz_class(1), pow_z(10, static_cast<unsigned long>(-p)));
  };
  while (a < ten_pow(e)) --e;
  while (a >= ten_pow(e + 1)) ++e;
  const Rational scaled = a * ten_pow(significant - 1 - e) + Rational(1, 2);
  mpz_class digits = scaled.get_num() / scaled.get_den();
  if (digits == pow_z(10, static_cast<unsigned long>(significant))) {
    digits /= 10;
    ++e;
  }
  const std::string d = digits.get_str();
  std::string out = q < 0 ? "-" : "";
  if (e < -20 || e > 40) {
    out += d.substr(0, 1);
    if (d.size() > 1) out += "." + d.substr(1);
    out += "e" + std::to_string(e);
  } else if (e < 0) {
    out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + d;
  } else if (e + 1 >= significant) {
    out += d + std::string(static_cast<std::size_t>(e + 1 - significant), '0');
  } else {
    out += d.substr(0, static_cast<std::size_t>(e + 1)) + "." + d.substr(static_cast<std::size_t>(e + 1));
  }
  return out;
}

RationalInterval scale(const RationalInterval& iv, const Rational& s) {
  if (s >= 0) return {iv.lo * s, iv.hi * s};
  return {iv.hi * s, iv.lo * s};
}

RationalInterval shift(const RationalInterval& iv, const Rational& s) { return {iv.lo + s, iv.hi + s}; }

Rational f_ell_at(int ell, const Rational& x) {
  return Rational(ell) * pow_q(x, static_cast<unsigned long>(ell + 1)) - Rational(ell + 1) * x + 1;
}

Rational beta_map(int ell, const Rational& x) {
  return Rational(ell) * x * pow_q(Rational(1) - x, static_cast<unsigned long>(ell - 1));
}

AlphaBisector::AlphaBisector(int ell) : ell_(ell) {
  if (ell < 2) throw InvalidInput("ell must be at least 2");
  alpha_.lo = make_rational(1, ell + 1);
  alpha_.hi = make_rational(1, ell);
  if (!(f_ell_at(ell, alpha_.lo) > 0 && f_ell_at(ell, alpha_.hi) < 0)) {
    throw std::logic_error("f_ell does not change sign on [1/(ell+1), 1/ell]");
  }
}

void AlphaBisector::step() {
  const Rational mid = (alpha_.lo + alpha_.hi) / 2;
  const int s = sgn(f_ell_at(ell_, mid));
  if (s > 0) {
    alpha_.lo = mid;
  } else if (s < 0) {
    alpha_.hi = mid;
  } else {
    // f_ell has no rational root in the open bracket; kept for completeness
    alpha_.lo = alpha_.hi = mid;
  }
}

RationalInterval AlphaBisector::beta() const { return {beta_map(ell_, alpha_.lo), beta_map(ell_, alpha_.hi)}; }

namespace {

// Both ends clear of the initial bracket [1/(ell+1), 1/ell].
bool strictly_inside(const RationalInterval& a, int ell) {
  return a.lo > Rational(1, ell + 1) && a.hi < Rational(1, ell);
}

}  // namespace

RationalInterval alpha_enclosure(int ell, const Rational& tol) {
  if (tol <= 0) throw InvalidInput("tolerance must be positive");
  AlphaBisector b(ell);
  while (b.alpha().width() > tol || !strictly_inside(b.alpha(), ell)) b.step();
  return b.alpha();
}

ConstantEnclosure enclose_constants(int ell, const Rational& tol) {
  if (tol <= 0) throw InvalidInput("tolerance must be positive");
  AlphaBisector b(ell);
  while (b.alpha().width() > tol || !strictly_inside(b.alpha(), ell)) b.step();
  RationalInterval beta = b.beta();
  while (beta.width() > tol) {
    b.step();
    beta = b.beta();
  }
  return {b.alpha(), beta};
}

RationalInterval beta_enclosure(int ell, const Rational& tol) { return enclose_constants(ell, tol).beta; }

Verdict check_beta_identity(int ell, const ConstantEnclosure& e) {
  const auto le = static_cast<unsigned long>(ell);
  // beta alpha^ell grows with both; (1-alpha)^ell shrinks with alpha
  const RationalInterval rhs{e.beta.lo * pow_q(e.alpha.lo, le) + pow_q(1 - e.alpha.hi, le),
                             e.beta.hi * pow_q(e.alpha.hi, le) + pow_q(1 - e.alpha.lo, le)};
  return e.beta.overlaps(rhs) ? Verdict::Pass : Verdict::Fail;
}

Verdict check_beta_identity(int ell, const Rational& tol) { return check_beta_identity(ell, enclose_constants(ell, tol)); }

bool sampled_beta_max_check(int ell, const RationalInterval& beta) {
  for (int step = 0; step <= 100; ++step) {
    const Rational g = make_rational(step, 100);
    Rational geometric = 0;
    for (int p = 0; p <= ell; ++p) geometric += pow_q(g, static_cast<unsigned long>(p));
    const Rational value = Rational(ell + 1) * g * pow_q(1 - g, static_cast<unsigned long>(ell - 1)) / geometric;
    if (value > beta.hi) return false;
  }
  return true;
}

ConstantLadder::ConstantLadder(int ell) : ell_(ell) {
  AlphaBisector b(ell);
  levels_.reserve(kFloorBits - kStartBits + 1);
  for (int bits = kStartBits; bits <= kFloorBits; ++bits) {
    const Rational limit = interval_width_limit(bits);
    while (b.alpha().width() > limit) b.step();
    RationalInterval beta = b.beta();
    while (beta.width() > limit) {
      b.step();
      beta = b.beta();
    }
    levels_.push_back({b.alpha(), beta});
  }
}

const ConstantEnclosure& ConstantLadder::at(int bits) const {
  if (bits < kStartBits || bits > kFloorBits) throw InvalidInput("ladder level out of range");
  return levels_[static_cast<std::size_t>(bits - kStartBits)];
}

std::string_view bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::MainLower: return "main_lower";
    case BoundKind::MainUpper: return "main_upper";
    case BoundKind::DiffLower: return "diff_lower";
    case BoundKind::DiffUpperStrict: return "diff_upper_strict";
    case BoundKind::DiffUpperWeak: return "diff_upper_weak";
    case BoundKind::KnUpperBruce: return "kn_upper_bruce";
    case BoundKind::KnUpperL2: return "kn_upper_l2";
    case BoundKind::KnLowerMartin: return "kn_lower_martin";
    case BoundKind::CrudeLower: return "crude_lower";
    case BoundKind::CrudeUpper: return "crude_upper";
    case BoundKind::Conj1M: return "conj1_M";
    case BoundKind::Conj1K: return "conj1_k";
    case BoundKind::Conj2K: return "conj2_k";
    case BoundKind::GeneralLower: return "general_lower";
    case BoundKind::Conj4: return "conj4";
    case BoundKind::WindowUpper: return "window_upper";
    case BoundKind::WindowLower: return "window_lower";
    case BoundKind::Technical: return "technical";
  }
  return "?";
}

AffineForm affine_form(const BoundExpr& e) {
  const int ell = e.ell;
  const std::int64_t n = e.n;
  const auto le = static_cast<unsigned long>(ell);
  const int L = e.L == 0 ? ell + 1 : e.L;
  auto beta_times = [](Rational c) { return AffineForm{Constant::Beta, std::move(c), 0}; };
  auto alpha_affine = [](std::int64_t c, Rational off) {
    return AffineForm{Constant::Alpha, Rational(static_cast<long>(c)), std::move(off)};
  };
  switch (e.kind) {
    case BoundKind::MainLower: return beta_times(power_over_factorial(n - ell, le + 1));
    case BoundKind::MainUpper: return beta_times(power_over_factorial(n + (ell == 2 ? 1 : 0), le + 1));
    case BoundKind::DiffLower: return beta_times(power_over_factorial(n - ell, le));
    case BoundKind::DiffUpperStrict: return beta_times(power_over_factorial(n - 1, le));
    case BoundKind::DiffUpperWeak: return beta_times(power_over_factorial(n, 2));
    case BoundKind::KnUpperBruce: return alpha_affine(n - ell, 1);
    case BoundKind::KnUpperL2: return alpha_affine(n, make_rational(1, 2));
    case BoundKind::KnLowerMartin: return alpha_affine(n - ell, -1);
    case BoundKind::CrudeLower: return {Constant::None, 0, make_rational(n - ell, ell + 1)};
    case BoundKind::CrudeUpper: return {Constant::None, 0, make_rational(n, ell)};
    case BoundKind::Conj1M: return beta_times(power_over_factorial(n, 3));
    case BoundKind::Conj1K: return alpha_affine(n - 2, 1);
    case BoundKind::Conj2K: return alpha_affine(n - ell, 0);
    case BoundKind::GeneralLower:
      return beta_times(power_over_factorial(n - L + 1, static_cast<unsigned long>(L)));
    case BoundKind::Conj4: return beta_times(power_over_factorial(n, static_cast<unsigned long>(L)));
    case BoundKind::WindowUpper: return alpha_affine(n, make_rational(1, 4));
    case BoundKind::WindowLower: return alpha_affine(n, -2);
    case BoundKind::Technical: {
      const std::int64_t k = e.k;
      Rational coef = power_over_factorial(k, le) - power_over_factorial(k - ell + 1, le);
      Rational offset = power_over_factorial(n - k - ell, le) -
                        Rational(mpz_class(to_string(binomial(n - k - 1, ell)), 10));
      return {Constant::Beta, std::move(coef), std::move(offset)};
    }
  }
  throw std::logic_error("unknown bound kind");
}

RationalInterval eval_bound(const BoundExpr& expr, const ConstantLadder& ladder, int bits) {
  if (ladder.ell() != expr.ell) throw InvalidInput("ladder built for a different ell");
  const AffineForm form = affine_form(expr);
  if (form.constant == Constant::None || form.coef == 0) return {form.offset, form.offset};
  const ConstantEnclosure& c = ladder.at(bits);
  const RationalInterval& base = form.constant == Constant::Alpha ? c.alpha : c.beta;
  return shift(scale(base, form.coef), form.offset);
}

std::string_view relation_symbol(Relation rel) {
  switch (rel) {
    case Relation::LessEq: return "<=";
    case Relation::Less: return "<";
    case Relation::GreaterEq: return ">=";
    case Relation::Greater: return ">";
  }
  return "?";
}

Comparison compare(const Rational& value, Relation rel, const BoundExpr& expr, const ConstantLadder& ladder) {
  const bool upper = rel == Relation::LessEq || rel == Relation::Less;
  Comparison out;
  for (int bits = ConstantLadder::kStartBits; bits <= ConstantLadder::kFloorBits; ++bits) {
    out.bound = eval_bound(expr, ladder, bits);
    out.bits = bits;
    if (out.bound.degenerate()) {
      const Rational& b = out.bound.lo;
      bool holds = false;
      switch (rel) {
        case Relation::LessEq: holds = value <= b; break;
        case Relation::Less: holds = value < b; break;
        case Relation::GreaterEq: holds = value >= b; break;
        case Relation::Greater: holds = value > b; break;
      }
      out.decision = holds ? Decision::True : Decision::False;
      return out;
    }
    if (value < out.bound.lo) {
      out.decision = upper ? Decision::True : Decision::False;
      return out;
    }
    if (value > out.bound.hi) {
      out.decision = upper ? Decision::False : Decision::True;
      return out;
    }
  }
  out.decision = Decision::Undecidable;
  return out;
}

}  // namespace packdense
