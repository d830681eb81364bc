#pragma once

#include "chatelet/constructor.hpp"
#include "chatelet/cubic.hpp"
#include "chatelet/gaussian.hpp"
#include "chatelet/poly.hpp"
#include "chatelet/theta.hpp"

#include <stdexcept>

namespace chatelet {

/// u^2 + v^2 disagrees with p(n) for a constructed solution. Always a bug.
class TransferMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// P1 = prod over the roots theta_j of p of (omega1 + i omega2)(theta_j),
/// computed as the resultant of p with the Gaussian quadratic
/// (omega1 + i omega2)(t). Its norm equals the norm of omega1^2 + omega2^2.
inline GaussianInteger gaussian_norm_product(const CubicPoly& p, const ThetaElem& omega1,
                                             const ThetaElem& omega2) {
  const GaussPoly monic_p{GaussianInteger(p.a0), GaussianInteger(p.a1), GaussianInteger(p.a2),
                          GaussianInteger(Int(1))};
  const GaussPoly section{GaussianInteger(omega1.c0, omega2.c0),
                          GaussianInteger(omega1.c1, omega2.c1),
                          GaussianInteger(omega1.c2, omega2.c2)};
  return resultant(monic_p, section);
}

/// Turns omega1^2 + omega2^2 = n - theta into p(n) = u^2 + v^2.
inline GaussianInteger certify_transfer(const CubicPoly& p, const Solution& s) {
  GaussianInteger uv = gaussian_norm_product(p, s.omega1, s.omega2);
  const Int value = p(s.n);
  if (uv.norm() != value) {
    throw TransferMismatch("u^2 + v^2 = " + to_string(uv.norm()) + " but p(" + to_string(s.n) +
                           ") = " + to_string(value));
  }
  return uv;
}

}  // namespace chatelet
