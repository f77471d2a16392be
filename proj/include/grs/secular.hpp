#ifndef GRS_SECULAR_HPP
#define GRS_SECULAR_HPP

#include <cstddef>
#include <optional>
#include <vector>

namespace grs {

/// Hurwitz zeta sum_{n>=a} n^{-s} for large real a, via Euler-Maclaurin with
/// two Bernoulli terms. Requires s > 1 and a >= 10.
double hurwitz_zeta_tail(double s, double a);

/// Omitted-series data for an evaluation: a numeric estimate of the omitted
/// sum plus a certified half-width around it. `estimate = 0` with a coarse
/// half-width means the policy could only bound, not evaluate, the tail.
struct TailInterval {
  double estimate = 0.0;
  double half_width = 0.0;
  bool known = false;
};

/// Weights/poles data for F(mu) = sum_n w_n / (1 - mu s_n).
/// Poles sit at mu = 1/s_n; the strictly increasing scales interlace them.
class SecularProblem {
 public:
  /// Special family: w_m = m^{-delta}, s_m = m for m = 1..terms, with a
  /// closed-form tail policy (valid once mu (terms+1) >= 2).
  static SecularProblem delta_family(double delta, std::size_t terms);

  /// Finite explicit problem; the truncation is the problem, tail is zero.
  static SecularProblem from_terms(std::vector<double> weights,
                                   std::vector<double> scales);

  std::size_t terms() const { return weights_.size(); }
  double weight(std::size_t n) const { return weights_[n]; }
  const std::vector<double>& weights() const { return weights_; }
  double scale(std::size_t n) const;
  std::optional<double> delta() const { return delta_; }
  bool has_tail_policy() const { return delta_.has_value() || explicit_; }

  /// Tail of F beyond the materialized terms.
  TailInterval f_tail(double mu) const;
  /// Tail of the normalization sum sum w_n s_n / (1 - mu s_n)^2.
  TailInterval c_tail(double mu) const;

 private:
  SecularProblem() = default;
  std::vector<double> weights_;
  std::vector<double> scales_;   // empty for the delta family (s_n = n+1)
  std::optional<double> delta_;
  bool explicit_ = false;
};

struct FValue {
  double value = 0.0;        // partial sum plus tail estimate
  double tail_lo = 0.0;      // certified interval around the tail estimate
  double tail_hi = 0.0;
  bool tail_known = false;
};

/// F(mu) = sum_n w_n / (1 - mu s_n), with the tail policy folded in.
/// Throws on pole proximity (|mu - 1/s_n| < 1e-13).
FValue evaluate_F(const SecularProblem& p, double mu);

/// F and F'(mu) = sum w_n s_n / (1 - mu s_n)^2 in one pass.
struct FDValue {
  double f = 0.0;
  double df = 0.0;
};
FDValue evaluate_F_dF(const SecularProblem& p, double mu);

struct Bracket {
  double lo;
  double hi;
};

/// Root brackets (1/s_{j+1}, 1/s_j), j = 0..count-1, shrunk inward by
/// 1e-12 * width. F increases strictly from -inf to +inf across each.
std::vector<Bracket> brackets(const SecularProblem& p, std::size_t count);

struct RootRecord {
  double mu = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double residual = 0.0;     // |F(mu)| including tail estimate
  double tail_bound = 0.0;   // certified tail half-width at the root
  int iterations = 0;
};

struct RootSet {
  std::vector<RootRecord> roots;  // decreasing mu, root k in bracket k
};

/// Safeguarded Newton/bisection per bracket until width <= tol.
RootSet solve_roots(const SecularProblem& p, std::size_t count, double tol);

struct Normalization {
  double c = 0.0;
  double uncertainty = 0.0;  // half-width induced by the tail interval
};

/// c_k = (sum_n |chi_n|^2 cosh^4(alpha_n) / (1 - mu s_n)^2)^{-1/2} at a
/// certified root; the summand weight is w_n s_n.
Normalization normalization_c(const SecularProblem& p, double mu);

}  // namespace grs

#endif
