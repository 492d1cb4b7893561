#include "ksolve/interval.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace ksolve {

namespace {

double checked(double v) {
  if (!std::isfinite(v)) {
    throw OverflowError("interval endpoint is not finite");
  }
  return v + 0.0;
}

double pos_part(double v) { return v > 0.0 ? v : 0.0; }
double neg_part(double v) { return v < 0.0 ? -v : 0.0; }

bool zero_in_pro(const KInterval& a) {
  const double lo = std::min(a.lo(), a.hi());
  const double hi = std::max(a.lo(), a.hi());
  return lo <= 0.0 && hi >= 0.0;
}

}  // namespace

KInterval::KInterval(double lo, double hi) : lo_(checked(lo)), hi_(checked(hi)) {}

RealParts real_parts(double q) { return {pos_part(q), neg_part(q)}; }

KInterval add(const KInterval& a, const KInterval& b) {
  return {a.lo() + b.lo(), a.hi() + b.hi()};
}

KInterval opp(const KInterval& a) { return {-a.lo(), -a.hi()}; }

KInterval ominus(const KInterval& a, const KInterval& b) {
  return {a.lo() - b.lo(), a.hi() - b.hi()};
}

KInterval sub(const KInterval& a, const KInterval& b) {
  return {a.lo() - b.hi(), a.hi() - b.lo()};
}

KInterval scalar_mul(double mu, const KInterval& a) {
  if (mu >= 0.0) {
    return {mu * a.lo(), mu * a.hi()};
  }
  return {mu * a.hi(), mu * a.lo()};
}

KInterval mul(const KInterval& a, const KInterval& b) { return mul_lakeyev(a, b); }

KInterval mul_table(const KInterval& a, const KInterval& b) {
  const double al = a.lo(), ah = a.hi();
  const double bl = b.lo(), bh = b.hi();
  const int cell = static_cast<int>(classify(a)) * 4 + static_cast<int>(classify(b));
  switch (cell) {
    case 0: return {al * bl, ah * bh};    // P, P
    case 1: return {ah * bl, ah * bh};    // P, Z
    case 2: return {ah * bl, al * bh};    // P, NegP
    case 3: return {al * bl, al * bh};    // P, DualZ
    case 4: return {al * bh, ah * bh};    // Z, P
    case 5:                               // Z, Z
      return {std::min(al * bh, ah * bl), std::max(al * bl, ah * bh)};
    case 6: return {ah * bl, al * bl};    // Z, NegP
    case 7: return {0.0, 0.0};            // Z, DualZ
    case 8: return {al * bh, ah * bl};    // NegP, P
    case 9: return {al * bh, al * bl};    // NegP, Z
    case 10: return {ah * bh, al * bl};   // NegP, NegP
    case 11: return {ah * bh, ah * bl};   // NegP, DualZ
    case 12: return {al * bl, ah * bl};   // DualZ, P
    case 13: return {0.0, 0.0};           // DualZ, Z
    case 14: return {ah * bh, al * bh};   // DualZ, NegP
    default:                              // DualZ, DualZ
      return {std::max(al * bl, ah * bh), std::min(al * bh, ah * bl)};
  }
}

KInterval mul_lakeyev(const KInterval& a, const KInterval& b) {
  const double alp = pos_part(a.lo()), aln = neg_part(a.lo());
  const double ahp = pos_part(a.hi()), ahn = neg_part(a.hi());
  const double blp = pos_part(b.lo()), bln = neg_part(b.lo());
  const double bhp = pos_part(b.hi()), bhn = neg_part(b.hi());
  const double lo = std::max(alp * blp, ahn * bhn) - std::max(ahp * bln, aln * bhp);
  const double hi = std::max(ahp * bhp, aln * bln) - std::max(alp * bhn, ahn * blp);
  return {lo, hi};
}

KInterval inv(const KInterval& a) {
  if (zero_in_pro(a)) {
    throw ZeroDivisionError("inv: zero lies in the proper projection");
  }
  return {1.0 / a.lo(), 1.0 / a.hi()};
}

KInterval oslash(const KInterval& a, const KInterval& b) { return mul(a, inv(b)); }

KInterval div(const KInterval& a, const KInterval& b) {
  if (zero_in_pro(b)) {
    throw ZeroDivisionError("div: zero lies in the proper projection");
  }
  return mul(a, KInterval(1.0 / b.hi(), 1.0 / b.lo()));
}

KInterval dual(const KInterval& a) { return {a.hi(), a.lo()}; }

KInterval pro(const KInterval& a) {
  return {std::min(a.lo(), a.hi()), std::max(a.lo(), a.hi())};
}

KInterval join(const KInterval& a, const KInterval& b) {
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

KInterval meet(const KInterval& a, const KInterval& b) {
  return {std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi())};
}

bool includes(const KInterval& a, const KInterval& b) {
  return b.lo() >= a.lo() && b.hi() <= a.hi();
}

bool subseteq(const KInterval& a, const KInterval& b) { return includes(b, a); }

bool leq(const KInterval& a, const KInterval& b) {
  return a.lo() <= b.lo() && a.hi() <= b.hi();
}

SignClass classify(const KInterval& a) {
  if (a.lo() >= 0.0 && a.hi() >= 0.0) return SignClass::P;
  if (a.lo() <= 0.0 && a.hi() <= 0.0) return SignClass::NegP;
  if (a.lo() <= 0.0 && a.hi() >= 0.0) return SignClass::Z;
  return SignClass::DualZ;
}

Sign sgn(const KInterval& a) {
  switch (classify(a)) {
    case SignClass::P: return Sign::Plus;
    case SignClass::NegP: return Sign::Minus;
    default: return Sign::Undefined;
  }
}

Descriptors descriptors(const KInterval& a) {
  return {mag(a), mig(a), mid(a), rad(a)};
}

double mag(const KInterval& a) {
  return std::max(std::abs(a.lo()), std::abs(a.hi()));
}

double mig(const KInterval& a) {
  if (zero_in_pro(a)) return 0.0;
  return std::min(std::abs(a.lo()), std::abs(a.hi()));
}

double mid(const KInterval& a) { return (a.lo() + a.hi()) / 2.0; }

double rad(const KInterval& a) { return (a.hi() - a.lo()) / 2.0; }

double floor_point(const KInterval& a) {
  if (a.lo() > 0.0 && a.hi() > 0.0) return std::min(a.lo(), a.hi());
  if (a.lo() < 0.0 && a.hi() < 0.0) return std::max(a.lo(), a.hi());
  return 0.0;
}

double ceil_point(const KInterval& a) {
  if (a.lo() >= 0.0 && a.hi() >= 0.0) return std::max(a.lo(), a.hi());
  if (a.lo() <= 0.0 && a.hi() <= 0.0) return std::min(a.lo(), a.hi());
  return 0.0;
}

double dist(const KInterval& a, const KInterval& b) {
  return std::max(std::abs(a.lo() - b.lo()), std::abs(a.hi() - b.hi()));
}

std::string format_interval(const KInterval& a) {
  char buf[64];
  std::string out = "[";
  auto r1 = std::to_chars(buf, buf + sizeof buf, a.lo());
  out.append(buf, r1.ptr);
  out += ',';
  auto r2 = std::to_chars(buf, buf + sizeof buf, a.hi());
  out.append(buf, r2.ptr);
  out += ']';
  return out;
}

}  // namespace ksolve
