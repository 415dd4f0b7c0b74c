#ifndef Q2_WEIGHT_HPP
#define Q2_WEIGHT_HPP

#include "q2/rational.hpp"

#include <string>

namespace q2 {

/// A weight (l1, l2) in the dual of the even Cartan, coordinates w.r.t. the
/// basis dual to (H1, H2). The positive root is alpha = (1, -1).
struct Weight {
  Rational l1, l2;

  Weight() = default;
  Weight(Rational a, Rational b) : l1(std::move(a)), l2(std::move(b)) {}

  Rational diff() const { return l1 - l2; }    // pairing with H1 - H2
  Rational charge() const { return l1 + l2; }  // pairing with the central H1 + H2

  bool is_zero() const { return l1 == 0 && l2 == 0; }
  bool integral() const { return is_integer(diff()); }
  bool strongly_integral() const { return is_integer(l1) && is_integer(l2); }
  bool dominant() const { return is_positive_integer(diff()); }
  bool regular() const { return l1 != l2; }
  bool typical() const { return charge() != 0; }
  bool strongly_typical() const { return typical() && l1 != 0 && l2 != 0; }

  /// this + k*alpha
  Weight plus_alpha(long k) const { return Weight(l1 + k, l2 - k); }
  Weight plus_alpha(const Rational& k) const { return Weight(l1 + k, l2 - k); }

  bool operator==(const Weight& o) const = default;

  std::string str() const { return rat_str(l1) + "," + rat_str(l2); }
};

inline Weight operator+(const Weight& a, const Weight& b) {
  return Weight(a.l1 + b.l1, a.l2 + b.l2);
}
inline Weight operator-(const Weight& a, const Weight& b) {
  return Weight(a.l1 - b.l1, a.l2 - b.l2);
}

/// Weight literal "p/q,r/s" as accepted on the command line.
inline Weight parse_weight(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("weight literal must be 'a,b': " + text);
  return Weight(parse_rational(text.substr(0, comma)),
                parse_rational(text.substr(comma + 1)));
}

}  // namespace q2

#endif
