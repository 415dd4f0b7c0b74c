#ifndef Q2_SCALAR_HPP
#define Q2_SCALAR_HPP

#include "q2/weight.hpp"

#include <array>
#include <memory>
#include <sstream>
#include <vector>

namespace q2 {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero scalar") {}
};

/// Division by a nonzero zero divisor, or elimination stuck on one.
struct ZeroDivisor : std::domain_error {
  explicit ZeroDivisor(const std::string& what) : std::domain_error(what) {}
};

/// Arithmetic context K = Q(i)[s1,s2]/(s1^2 - l1, s2^2 - l2) with the
/// canonical square-root elimination: s_j := q when l_j = q^2 (q >= 0
/// rational), s_j := i*q when l_j = -q^2. A refined context additionally
/// fixes s2 as a Q(i)-multiple of s1; that is the only case in which the
/// unrefined ring has zero divisors.
class ScalarContext {
 public:
  enum class Root { Symbolic, QiValue, MultipleOfS1 };

  struct Resolution {
    Root kind = Root::Symbolic;
    Rational re, im;  // value (re + im*i), possibly times s1
  };

  static std::shared_ptr<const ScalarContext> make(const Weight& lambda) {
    auto ctx = std::shared_ptr<ScalarContext>(new ScalarContext);
    ctx->lambda_ = lambda;
    ctx->s1_ = resolve(lambda.l1);
    ctx->s2_ = resolve(lambda.l2);
    ctx->field_ = true;
    if (ctx->s1_.kind == Root::Symbolic && ctx->s2_.kind == Root::Symbolic) {
      // The tower splits exactly when l2/l1 = c^2 or -c^2 for rational c:
      // then (s2 - xi*s1)(s2 + xi*s1) = 0 with xi = c or i*c.
      Rational ratio = lambda.l2 / lambda.l1;
      if (auto c = rational_sqrt(ratio)) {
        ctx->field_ = false;
        ctx->xi_re_ = *c;
        ctx->xi_im_ = 0;
      } else if (auto ci = rational_sqrt(-ratio)) {
        ctx->field_ = false;
        ctx->xi_re_ = 0;
        ctx->xi_im_ = *ci;
      }
    }
    return ctx;
  }

  /// In a zero-divisor context, fix s2 := sign * xi * s1 (sign = +1 or -1),
  /// collapsing the ring onto one of its two field factors.
  std::shared_ptr<const ScalarContext> refine_root(int sign) const {
    if (field_)
      throw std::logic_error("refine_root: context is already a field");
    auto ctx = std::shared_ptr<ScalarContext>(new ScalarContext(*this));
    ctx->s2_.kind = Root::MultipleOfS1;
    ctx->s2_.re = sign > 0 ? xi_re_ : -xi_re_;
    ctx->s2_.im = sign > 0 ? xi_im_ : -xi_im_;
    ctx->field_ = true;
    ctx->refined_sign_ = sign;
    return ctx;
  }

  const Weight& lambda() const { return lambda_; }
  bool is_field() const { return field_; }
  const Resolution& s1_resolution() const { return s1_; }
  const Resolution& s2_resolution() const { return s2_; }
  bool s1_symbolic() const { return s1_.kind == Root::Symbolic; }
  bool s2_symbolic() const { return s2_.kind == Root::Symbolic; }
  int refined_sign() const { return refined_sign_; }

  bool same_as(const ScalarContext& o) const {
    return lambda_ == o.lambda_ && s2_.kind == o.s2_.kind &&
           s2_.re == o.s2_.re && s2_.im == o.s2_.im;
  }

  /// Basis slots (index = i-bit + 2*s1-bit + 4*s2-bit) that can be nonzero.
  std::vector<int> active_slots() const {
    std::vector<int> out;
    for (int s = 0; s < 8; ++s) {
      if ((s & 2) && !s1_symbolic()) continue;
      if ((s & 4) && !s2_symbolic()) continue;
      out.push_back(s);
    }
    return out;
  }

  std::string describe() const {
    auto root = [&](const Resolution& r, const std::string& sym) {
      switch (r.kind) {
        case Root::Symbolic:
          return sym + " symbolic";
        case Root::QiValue:
          return sym + " = " + rat_str(r.re) +
                 (r.im != 0 ? " + " + rat_str(r.im) + "*i" : "");
        case Root::MultipleOfS1:
          return sym + " = (" + rat_str(r.re) + " + " + rat_str(r.im) +
                 "*i)*s1";
      }
      return std::string();
    };
    std::string s = root(s1_, "s1") + "; " + root(s2_, "s2") + "; ";
    s += field_ ? "field" : "may contain zero divisors";
    return s;
  }

 private:
  ScalarContext() = default;

  static Resolution resolve(const Rational& l) {
    Resolution r;
    if (auto q = rational_sqrt(l)) {
      r.kind = Root::QiValue;
      r.re = *q;
      r.im = 0;
    } else if (auto q2v = rational_sqrt(-l)) {
      r.kind = Root::QiValue;
      r.re = 0;
      r.im = *q2v;
    } else {
      r.kind = Root::Symbolic;
    }
    return r;
  }

  Weight lambda_;
  Resolution s1_, s2_;
  bool field_ = true;
  Rational xi_re_, xi_im_;  // xi with (s2 - xi s1)(s2 + xi s1) = 0
  int refined_sign_ = 0;
};

using CtxPtr = std::shared_ptr<const ScalarContext>;

inline CtxPtr make_scalar_context(const Weight& lambda) {
  return ScalarContext::make(lambda);
}

/// Element of the context ring, stored on the 8-slot basis
/// {1, i, s1, i*s1, s2, i*s2, s1*s2, i*s1*s2}. Rational values and i need no
/// context; s1/s2 enter only through context atoms, so slots eliminated by
/// the context stay identically zero.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) { c_[0] = v; }  // NOLINT: implicit on purpose
  Scalar(const Rational& v) { c_[0] = v; }
  Scalar(Rational&& v) { c_[0] = std::move(v); }

  static Scalar i_unit() {
    Scalar s;
    s.c_[1] = 1;
    return s;
  }

  static Scalar qi(const Rational& re, const Rational& im) {
    Scalar s;
    s.c_[0] = re;
    s.c_[1] = im;
    return s;
  }

  /// The fixed square root of lambda_1 in this context.
  static Scalar s1(const CtxPtr& ctx) {
    const auto& r = ctx->s1_resolution();
    if (r.kind == ScalarContext::Root::QiValue) return qi(r.re, r.im);
    Scalar s;
    s.c_[2] = 1;
    s.ctx_ = ctx;
    return s;
  }

  /// The fixed square root of lambda_2 in this context.
  static Scalar s2(const CtxPtr& ctx) {
    const auto& r = ctx->s2_resolution();
    switch (r.kind) {
      case ScalarContext::Root::QiValue:
        return qi(r.re, r.im);
      case ScalarContext::Root::MultipleOfS1: {
        Scalar s;
        s.c_[2] = r.re;
        s.c_[3] = r.im;
        s.ctx_ = ctx;
        return s;
      }
      case ScalarContext::Root::Symbolic: {
        Scalar s;
        s.c_[4] = 1;
        s.ctx_ = ctx;
        return s;
      }
    }
    return Scalar();
  }

  const CtxPtr& ctx() const { return ctx_; }
  const Rational& slot(int k) const { return c_[k]; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (v != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (int k = 1; k < 8; ++k)
      if (c_[k] != 0) return false;
    return true;
  }

  const Rational& rational_value() const {
    if (!is_rational())
      throw std::logic_error("scalar is not rational: " + str());
    return c_[0];
  }

  bool pure_qi() const {  // lies in Q(i)
    for (int k = 2; k < 8; ++k)
      if (c_[k] != 0) return false;
    return true;
  }

  bool operator==(const Scalar& o) const { return c_ == o.c_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar operator-() const {
    Scalar r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  Scalar& operator+=(const Scalar& o) {
    merge_ctx(o);
    for (int k = 0; k < 8; ++k) c_[k] += o.c_[k];
    return *this;
  }

  Scalar& operator-=(const Scalar& o) {
    merge_ctx(o);
    for (int k = 0; k < 8; ++k) c_[k] -= o.c_[k];
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.pure_qi() && b.pure_qi()) {  // the common case
      Scalar r;
      r.c_[0] = a.c_[0] * b.c_[0] - a.c_[1] * b.c_[1];
      r.c_[1] = a.c_[0] * b.c_[1] + a.c_[1] * b.c_[0];
      return r;
    }
    Scalar r;
    r.ctx_ = merged(a.ctx_, b.ctx_);
    const Weight& l = r.ctx_ ? r.ctx_->lambda() : Weight(0, 0);
    for (int x = 0; x < 8; ++x) {
      if (a.c_[x] == 0) continue;
      for (int y = 0; y < 8; ++y) {
        if (b.c_[y] == 0) continue;
        Rational coef = a.c_[x] * b.c_[y];
        int ib = (x & 1) + (y & 1);
        if (ib >= 2) {
          coef = -coef;
          ib -= 2;
        }
        int b1 = ((x >> 1) & 1) + ((y >> 1) & 1);
        if (b1 >= 2) {
          coef *= l.l1;
          b1 -= 2;
        }
        int b2 = ((x >> 2) & 1) + ((y >> 2) & 1);
        if (b2 >= 2) {
          coef *= l.l2;
          b2 -= 2;
        }
        r.c_[ib + 2 * b1 + 4 * b2] += coef;
      }
    }
    return r;
  }

  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  std::string str() const {
    static const char* names[8] = {"",      "i",      "s1",    "i*s1",
                                   "s2",    "i*s2",   "s1*s2", "i*s1*s2"};
    std::string out;
    for (int k = 0; k < 8; ++k) {
      if (c_[k] == 0) continue;
      Rational v = c_[k];
      std::string term;
      if (k == 0) {
        term = rat_str(v);
      } else if (v == 1) {
        term = names[k];
      } else if (v == -1) {
        term = std::string("-") + names[k];
      } else {
        term = rat_str(v) + "*" + names[k];
      }
      if (out.empty()) {
        out = term;
      } else if (!term.empty() && term[0] == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return out.empty() ? "0" : out;
  }

  static CtxPtr merged(const CtxPtr& a, const CtxPtr& b) {
    if (!a) return b;
    if (!b || a == b) return a;
    if (a->same_as(*b)) return a;
    throw std::logic_error("mixing scalars from incompatible contexts");
  }

 private:
  void merge_ctx(const Scalar& o) { ctx_ = merged(ctx_, o.ctx_); }

  std::array<Rational, 8> c_{};
  CtxPtr ctx_;
};

namespace detail {

/// Gauss-Jordan solve of the square rational system M x = rhs (column-major
/// callback access). Returns false when M is singular.
inline bool solve_rational(std::vector<std::vector<Rational>>& m,
                           std::vector<Rational>& rhs) {
  const size_t n = m.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return false;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    Rational inv = m[col][col];
    for (size_t j = col; j < n; ++j) m[col][j] /= inv;
    rhs[col] /= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return true;
}

}  // namespace detail

/// Solves x * b = a. Errors: DivisionByZero when b = 0; ZeroDivisor when b is
/// a nonzero zero divisor of the context ring.
inline Scalar scalar_div(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (b.is_rational()) {
    Scalar inv(Rational(1) / b.rational_value());
    return a * inv;
  }
  CtxPtr ctx = Scalar::merged(a.ctx(), b.ctx());
  std::vector<int> slots = ctx ? ctx->active_slots() : std::vector<int>{0, 1};
  const size_t n = slots.size();
  // Column k of the system is b * basis(slots[k]).
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  std::vector<Rational> rhs(n);
  for (size_t k = 0; k < n; ++k) {
    Scalar basis;
    {
      Scalar tmp;
      // build basis element via slot arithmetic: multiply atoms
      int s = slots[k];
      tmp = Scalar(1);
      if (s & 1) tmp *= Scalar::i_unit();
      if (s & 2) tmp *= Scalar::s1(ctx);
      if (s & 4) tmp *= Scalar::s2(ctx);
      basis = tmp;
    }
    Scalar col = basis * b;
    for (size_t r = 0; r < n; ++r) m[r][k] = col.slot(slots[r]);
  }
  for (size_t r = 0; r < n; ++r) rhs[r] = a.slot(slots[r]);
  if (!detail::solve_rational(m, rhs))
    throw ZeroDivisor("division by zero divisor: " + b.str());
  Scalar out;
  for (size_t k = 0; k < n; ++k) {
    if (rhs[k] == 0) continue;
    Scalar basis(1);
    int s = slots[k];
    if (s & 1) basis *= Scalar::i_unit();
    if (s & 2) basis *= Scalar::s1(ctx);
    if (s & 4) basis *= Scalar::s2(ctx);
    out += Scalar(rhs[k]) * basis;
  }
  return out;
}

inline bool scalar_is_unit(const Scalar& s) {
  if (s.is_zero()) return false;
  if (s.is_rational()) return true;
  try {
    scalar_div(Scalar(1), s);
    return true;
  } catch (const ZeroDivisor&) {
    return false;
  }
}

inline Scalar scalar_inverse(const Scalar& s) {
  return scalar_div(Scalar(1), s);
}

}  // namespace q2

#endif
