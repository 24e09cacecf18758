#pragma once

#include "fbessel/kernels.hpp"
#include "fbessel/quad.hpp"
#include "fbessel/test_function.hpp"

namespace fbessel {

/// The multiplicative gamma-ratio factor m(s) with
/// (IB^alpha f)*(s) = m(s) f*(s + 2 alpha)  (direction Integral) or
/// (DB^alpha f)*(s) = m(s) f*(s - 2 alpha)  (direction Derivative).
struct MellinSymbol {
    enum class Direction { Integral, Derivative };

    OperatorParams params;
    Direction direction;
    /// Whether s <= 0 arguments are admitted (pole-avoidance probes into
    /// (nu-1, 0]); by default the integral symbol requires s > max(nu-1, 0).
    bool allow_negative_s = false;

    double operator()(double s) const;
};

/// Mellin transform f*(s) = int_0^inf x^(s-1) f(x) dx.  Compact support goes
/// through the adaptive rule; decaying functions add a singular (0,1] piece
/// and truncation doubling of the tail.
double mellin_transform(const TestFunction& f, double s, const QuadSpec& spec);

/// Symbol of the fractional Bessel integral,
///   2^(-2a) G(s/2) G(s/2-(nu-1)/2) / (G(a+s/2-(nu-1)/2) G(a+s/2)),
/// rejecting s <= max(nu-1, 0) unless allow_negative_s permits a pole-free
/// probe into (nu-1, 0].
double mellin_symbol_ib(double s, const OperatorParams& p,
                        bool allow_negative_s = false);

/// Symbol of the fractional Bessel derivative,
///   2^(2a) G(s/2) G(s/2-(nu-1)/2) / (G(s/2-a-(nu-1)/2) G(s/2-a)).
double mellin_symbol_db(double s, const OperatorParams& p);

/// Ratio [m_IB(s;alpha) m_IB(s+2 alpha;beta)] / m_IB(s;alpha+beta); equals 1
/// up to floating round-off (the index law).
double symbol_semigroup_check(double s, double alpha, double beta, double nu);

/// Mellin transform of a pointwise-only operator output F over (0, hi]:
/// adaptive integral on [cut, hi] plus a two-term algebraic tail model
/// A x^e1 + B x^e2 fitted at {cut, 2 cut} and integrated over (0, cut).
/// e1/e2 are the two leading exponents of F at 0 (for IB f: sorted
/// {1-nu, 0}).
double mellin_of_pointwise(const std::function<double(double)>& F, double s,
                           double hi, double e1, double e2, double cut,
                           const QuadSpec& spec);

} // namespace fbessel
