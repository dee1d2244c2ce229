#ifndef DIGITLAB_REPORT_HPP
#define DIGITLAB_REPORT_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace digitlab {

enum class BoundSense { lower, upper };

/// One inequality check: exact rational sides, exact margin, no rounding
/// before the comparison. margin is lhs−rhs for lower bounds and rhs−lhs for
/// upper bounds, so pass ⇔ margin ≥ 0 either way.
struct BoundReport {
  std::string name;
  unsigned long long n = 0; // principal size parameter
  long long k = -1;         // secondary parameter (K, interval count m, or witness R); -1 = none
  BoundSense sense = BoundSense::upper;
  mpq_class lhs;
  mpq_class rhs;
  mpq_class margin;
  bool pass = false;
  std::string note; // human detail, not part of the serialized schema
};

inline mpq_class make_rational(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

inline BoundReport make_report(std::string name, unsigned long long n, long long k,
                               BoundSense sense, mpq_class lhs, mpq_class rhs,
                               std::string note = {}) {
  BoundReport r;
  r.name = std::move(name);
  r.n = n;
  r.k = k;
  r.sense = sense;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.margin = (sense == BoundSense::lower) ? mpq_class(r.lhs - r.rhs) : mpq_class(r.rhs - r.lhs);
  r.pass = sgn(r.margin) >= 0;
  r.note = std::move(note);
  return r;
}

inline const char* bounds_csv_header() {
  return "name,N,K,lhs_num,lhs_den,rhs_num,rhs_den,margin_sign,pass";
}

inline std::string bounds_csv_row(const BoundReport& r) {
  std::ostringstream os;
  os << r.name << ',' << r.n << ',';
  if (r.k >= 0) os << r.k;
  os << ',' << r.lhs.get_num().get_str() << ',' << r.lhs.get_den().get_str() << ','
     << r.rhs.get_num().get_str() << ',' << r.rhs.get_den().get_str() << ',' << sgn(r.margin)
     << ',' << (r.pass ? 1 : 0);
  return os.str();
}

inline std::string bounds_to_csv(const std::vector<BoundReport>& reports) {
  std::ostringstream os;
  os << bounds_csv_header() << '\n';
  for (const auto& r : reports) os << bounds_csv_row(r) << '\n';
  return os.str();
}

inline bool all_pass(const std::vector<BoundReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

} // namespace digitlab

#endif // DIGITLAB_REPORT_HPP
