#include "wl2/hecke.hpp"

#include "wl2/enumeration.hpp"

namespace wl2 {

HeckeShadow::HeckeShadow(const CoxeterSystem& sys, GenSet T, const WeightVector& q) : sys_(&sys), T_(T) {
    if (!sys.is_spherical(T)) throw InputError("subset " + sys.set_str(T) + " is not spherical");
    if (static_cast<int>(q.size()) != sys.num_classes()) throw InputError("weight vector has the wrong length");
    Enumerator& en = sys.enumerator(T);
    en.extend_to(1 << 20);
    n_ = static_cast<int>(en.size());
    for (int w = 0; w < n_; ++w) qw_.push_back(weight_of(sys, q, en.class_exponent(w)));
    for (int s = 0; s < sys.rank(); ++s) qs_.push_back(q[sys.class_of(s)]);
}

std::vector<Rational> HeckeShadow::times_generator(const std::vector<Rational>& x, int s) const {
    const Enumerator& en = sys_->enumerator(T_);
    std::vector<Rational> y(n_, 0);
    for (int w = 0; w < n_; ++w) {
        if (x[w] == 0) continue;
        Elem ws = en.mul_known(w, s);
        if (!(en.descents(w) & bit(s))) {
            y[ws] += x[w];
        } else {
            y[ws] += qs_[s] * x[w];
            y[w] += (qs_[s] - 1) * x[w];
        }
    }
    return y;
}

std::vector<Rational> HeckeShadow::multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    const Enumerator& en = sys_->enumerator(T_);
    std::vector<Rational> out(n_, 0);
    for (int v = 0; v < n_; ++v) {
        if (b[v] == 0) continue;
        std::vector<Rational> x = a;
        for (int s : en.normal_form(v)) x = times_generator(x, s);
        for (int w = 0; w < n_; ++w) out[w] += b[v] * x[w];
    }
    return out;
}

MatrixQ HeckeShadow::right_multiplication(const std::vector<Rational>& h) const {
    MatrixQ M(n_, n_);
    for (int w = 0; w < n_; ++w) {
        std::vector<Rational> e(n_, 0);
        e[w] = 1;
        std::vector<Rational> col = multiply(e, h);
        for (int r = 0; r < n_; ++r) M(r, w) = col[r];
    }
    return M;
}

std::vector<Rational> HeckeShadow::idempotent(GenSet U) const {
    if (U & ~T_) throw InputError("subset is not inside the shadow's generators");
    const Enumerator& en = sys_->enumerator(T_);
    std::vector<Rational> h(n_, 0);
    Rational total = 0;
    for (int w = 0; w < n_; ++w) {
        // w lies in W_U exactly when its normal form uses letters of U only.
        bool inside = true;
        for (int s : en.normal_form(w)) inside = inside && (U & bit(s));
        if (!inside) continue;
        Rational c = 1 / qw_[w];
        total += c;
        h[w] = en.length(w) % 2 ? -c : c;
    }
    for (auto& c : h) c /= total;
    return h;
}

bool HeckeShadow::self_adjoint(const MatrixQ& A) const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (qw_[i] * A(i, j) != A(j, i) * qw_[j]) return false;
    return true;
}

int HeckeShadow::image_intersection_dim(GenSet U) const {
    std::vector<MatrixQ> blocks;
    for (int s : members(U)) blocks.push_back(MatrixQ::identity(n_) - right_multiplication(idempotent(bit(s))));
    if (blocks.empty()) return n_;
    return n_ - rank(vstack(blocks));
}

}  // namespace wl2
