#pragma once

#include "wl2/coxeter.hpp"
#include "wl2/growth.hpp"
#include "wl2/linalg.hpp"

#include <vector>

namespace wl2 {

// The |W_T|-dimensional deformed group algebra of a finite W_T with basis e_w,
// inner product <e_w, e_v> = q_w [w = v], and multiplication
//   e_w e_s = e_ws                          if l(ws) > l(w)
//   e_w e_s = q_s e_ws + (q_s - 1) e_w      otherwise.
// Basis elements follow the ShortLex order of sys.enumerator(T).
class HeckeShadow {
public:
    HeckeShadow(const CoxeterSystem& sys, GenSet T, const WeightVector& q);

    int dim() const { return n_; }
    GenSet generators() const { return T_; }
    const std::vector<Rational>& weights() const { return qw_; }  // q_w per basis element

    // Coefficients of the product a*b.
    std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const;
    // Matrix of x -> x*h on coefficient columns.
    MatrixQ right_multiplication(const std::vector<Rational>& h) const;

    // h_U = (1 / W_U(q^{-1})) sum over w in W_U of (-1)^l(w) q_w^{-1} e_w, for U inside T.
    std::vector<Rational> idempotent(GenSet U) const;
    // <e_1 h, e_1>.
    Rational trace(const std::vector<Rational>& h) const { return h[0] * qw_[0]; }

    bool self_adjoint(const MatrixQ& A) const;  // <Ax, y> = <x, Ay>
    // Dimension of the intersection of the images of x -> x h_s over s in U.
    int image_intersection_dim(GenSet U) const;

private:
    std::vector<Rational> times_generator(const std::vector<Rational>& x, int s) const;

    const CoxeterSystem* sys_;
    GenSet T_;
    int n_;
    std::vector<Rational> qw_;
    std::vector<Rational> qs_;  // weight per generator
};

}  // namespace wl2
