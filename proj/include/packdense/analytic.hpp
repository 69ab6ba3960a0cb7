#ifndef PACKDENSE_ANALYTIC_HPP
#define PACKDENSE_ANALYTIC_HPP

// Certified enclosures of alpha (the root of f_ell(x) = ell x^(ell+1) - (ell+1) x + 1
// in (1/(ell+1), 1/ell)) and beta = ell alpha (1-alpha)^(ell-1), plus exact
// evaluation of the bound expressions the verifier compares against.
//
// All arithmetic is exact (GMP rationals). Doubles appear only in display.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "packdense/checked_int.hpp"
#include "packdense/verdict.hpp"

namespace packdense {

using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);
Rational to_rational(Int128 v);

/// Parses "1e-12", "0.0001", "3/7" or a plain integer into an exact value.
Rational parse_rational(std::string_view text);

/// Decimal rendering with `significant` significant digits (round half up).
std::string to_decimal(const Rational& q, int significant);

/// Fixed-point rendering with `places` digits after the point (round half up in magnitude).
std::string to_fixed(const Rational& q, int places);

struct RationalInterval {
  Rational lo;
  Rational hi;

  [[nodiscard]] Rational width() const { return hi - lo; }
  [[nodiscard]] bool degenerate() const { return lo == hi; }
  [[nodiscard]] bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  [[nodiscard]] bool overlaps(const RationalInterval& o) const { return lo <= o.hi && o.lo <= hi; }
};

/// Multiply by an exact scalar of either sign.
RationalInterval scale(const RationalInterval& iv, const Rational& s);
RationalInterval shift(const RationalInterval& iv, const Rational& s);

Rational f_ell_at(int ell, const Rational& x);

/// x -> ell x (1-x)^(ell-1); increasing on [0, 1/ell].
Rational beta_map(int ell, const Rational& x);

/// Bisection on f_ell from the bracket [1/(ell+1), 1/ell]. Throws
/// std::logic_error if that bracket does not have the expected signs.
class AlphaBisector {
 public:
  explicit AlphaBisector(int ell);

  void step();
  [[nodiscard]] const RationalInterval& alpha() const { return alpha_; }
  [[nodiscard]] RationalInterval beta() const;
  [[nodiscard]] int ell() const { return ell_; }

 private:
  int ell_;
  RationalInterval alpha_;
};

/// alpha enclosure with f(lo) > 0 > f(hi) and hi - lo <= tol.
RationalInterval alpha_enclosure(int ell, const Rational& tol);

/// beta enclosure of width <= tol, the image of a refined alpha enclosure.
RationalInterval beta_enclosure(int ell, const Rational& tol);

struct ConstantEnclosure {
  RationalInterval alpha;
  RationalInterval beta;
};

/// Both enclosures refined until each has width <= tol.
ConstantEnclosure enclose_constants(int ell, const Rational& tol);

/// Overlap test of beta against beta alpha^ell + (1-alpha)^ell.
Verdict check_beta_identity(int ell, const Rational& tol);
Verdict check_beta_identity(int ell, const ConstantEnclosure& enclosure);

/// Samples gamma = 0, 1/100, ..., 1 and checks that
/// (ell+1) gamma (1-gamma)^(ell-1) / (1 + gamma + ... + gamma^ell) <= beta.hi.
bool sampled_beta_max_check(int ell, const RationalInterval& beta);

/// Nested enclosures at widths 2^-60, 2^-61, ..., 2^-200. Immutable once built.
class ConstantLadder {
 public:
  static constexpr int kStartBits = 60;
  static constexpr int kFloorBits = 200;

  explicit ConstantLadder(int ell);

  [[nodiscard]] int ell() const { return ell_; }
  /// bits in [kStartBits, kFloorBits]; both intervals have width <= 2^-bits.
  [[nodiscard]] const ConstantEnclosure& at(int bits) const;

 private:
  int ell_;
  std::vector<ConstantEnclosure> levels_;
};

enum class BoundKind {
  MainLower,        // beta (n-ell)^(ell+1) / (ell+1)!
  MainUpper,        // beta (n + [ell==2])^(ell+1) / (ell+1)!
  DiffLower,        // beta (n-ell)^ell / ell!
  DiffUpperStrict,  // beta (n-1)^ell / ell!
  DiffUpperWeak,    // beta n^2 / 2
  KnUpperBruce,     // alpha (n-ell) + 1
  KnUpperL2,        // alpha n + 1/2
  KnLowerMartin,    // alpha (n-ell) - 1
  CrudeLower,       // (n-ell) / (ell+1)
  CrudeUpper,       // n / ell
  Conj1M,           // beta n^3 / 3!
  Conj1K,           // alpha (n-2) + 1
  Conj2K,           // alpha (n-ell)
  GeneralLower,     // beta (n-L+1)^L / L!
  Conj4,            // beta n^L / L!
  WindowUpper,      // alpha n + 1/4
  WindowLower,      // alpha n - 2
  Technical,        // beta (k^ell - (k-ell+1)^ell)/ell! + (n-k-ell)^ell/ell! - C(n-k-1, ell)
};

std::string_view bound_kind_name(BoundKind kind);

struct BoundExpr {
  BoundKind kind = BoundKind::MainLower;
  int ell = 2;
  std::int64_t n = 0;
  std::int64_t k = 0;  // Technical only
  int L = 0;           // GeneralLower / Conj4; 0 means ell+1
};

enum class Constant { None, Alpha, Beta };

/// Every bound is coef * constant + offset with exact coef and offset.
struct AffineForm {
  Constant constant = Constant::None;
  Rational coef;
  Rational offset;
};

AffineForm affine_form(const BoundExpr& expr);

/// Conservative interval for the bound, using the ladder level `bits`.
RationalInterval eval_bound(const BoundExpr& expr, const ConstantLadder& ladder,
                            int bits = ConstantLadder::kStartBits);

enum class Relation { LessEq, Less, GreaterEq, Greater };

std::string_view relation_symbol(Relation rel);

enum class Decision { True, False, Undecidable };

struct Comparison {
  Decision decision = Decision::Undecidable;
  RationalInterval bound;  // interval at the level that decided (or the floor)
  int bits = ConstantLadder::kStartBits;
};

/// Decides `value rel bound`. Starts at width 2^-60 and halves the width until
/// value falls strictly outside the interval (or the interval is a single
/// exact point); at 2^-200 without a decision the result is Undecidable.
Comparison compare(const Rational& value, Relation rel, const BoundExpr& expr, const ConstantLadder& ladder);

}  // namespace packdense

#endif  // PACKDENSE_ANALYTIC_HPP
