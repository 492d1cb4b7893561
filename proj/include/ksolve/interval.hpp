#pragma once

#include <string>

#include "ksolve/errors.hpp"

namespace ksolve {

// Directed interval with independently ordered endpoints; lo > hi encodes an
// improper interval. Endpoints are finite and negative zero is normalized on
// construction so values that compare equal are also bit-equal.
class KInterval {
 public:
  KInterval() = default;
  KInterval(double lo, double hi);

  double lo() const { return lo_; }
  double hi() const { return hi_; }

  bool proper() const { return lo_ <= hi_; }

  friend bool operator==(const KInterval& a, const KInterval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }
  friend bool operator!=(const KInterval& a, const KInterval& b) {
    return !(a == b);
  }

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

// P: nonnegative, Z: zero-containing, NegP: nonpositive, DualZ: contained in
// zero. Boundary overlaps resolve in the order P, NegP, Z, DualZ.
enum class SignClass { P, Z, NegP, DualZ };

enum class Sign { Plus, Minus, Undefined };

struct RealParts {
  double pos;
  double neg;
};

struct Descriptors {
  double mag;
  double mig;
  double mid;
  double rad;
};

RealParts real_parts(double q);

KInterval add(const KInterval& a, const KInterval& b);
KInterval opp(const KInterval& a);
KInterval ominus(const KInterval& a, const KInterval& b);
KInterval sub(const KInterval& a, const KInterval& b);
KInterval scalar_mul(double mu, const KInterval& a);

// mul evaluates the product through the branch-free kernel form; mul_table
// walks the sign-class case table. The two agree bitwise on all inputs.
KInterval mul(const KInterval& a, const KInterval& b);
KInterval mul_table(const KInterval& a, const KInterval& b);
KInterval mul_lakeyev(const KInterval& a, const KInterval& b);

KInterval inv(const KInterval& a);
KInterval oslash(const KInterval& a, const KInterval& b);
KInterval div(const KInterval& a, const KInterval& b);

KInterval dual(const KInterval& a);
KInterval pro(const KInterval& a);
KInterval join(const KInterval& a, const KInterval& b);
KInterval meet(const KInterval& a, const KInterval& b);

// includes(a, b) holds when b is contained in a under the inclusion order;
// subseteq(a, b) is the flipped spelling a <= b.
bool includes(const KInterval& a, const KInterval& b);
bool subseteq(const KInterval& a, const KInterval& b);
bool leq(const KInterval& a, const KInterval& b);

SignClass classify(const KInterval& a);
Sign sgn(const KInterval& a);

Descriptors descriptors(const KInterval& a);
double mag(const KInterval& a);
double mig(const KInterval& a);
double mid(const KInterval& a);
double rad(const KInterval& a);

double floor_point(const KInterval& a);
double ceil_point(const KInterval& a);

double dist(const KInterval& a, const KInterval& b);

std::string format_interval(const KInterval& a);

}  // namespace ksolve
