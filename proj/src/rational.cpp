#include "apkit/rational.hpp"

#include <sstream>

#include "apkit/errors.hpp"

namespace apkit {

Rat make_rat(long num, long den) {
  if (den == 0) fail(ErrorKind::domain_error, "rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) fail(ErrorKind::domain_error, "rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_of(std::uint64_t v) {
  Int n;
  mpz_import(n.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return Rat(n);
}

Rat rat_from_string(std::string_view text) {
  if (text.empty()) fail(ErrorKind::parse_error, "empty rational literal");
  std::string s(text);
  if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
      s.find('E') != std::string::npos) {
    fail(ErrorKind::parse_error,
         "decimal notation is not accepted, use an exact p/q form: '" + s + "'");
  }
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0) {
    fail(ErrorKind::parse_error, "malformed rational literal '" + s + "'");
  }
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0) {
    fail(ErrorKind::parse_error, "zero denominator in '" + s + "'");
  }
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double rat_to_double(const Rat& r) { return r.get_d(); }

Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), mpq_numref(r.get_mpq_t()), mpq_denref(r.get_mpq_t()));
  return q;
}

Int rat_ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), mpq_numref(r.get_mpq_t()), mpq_denref(r.get_mpq_t()));
  return q;
}

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

std::string rat_to_decimal(const Rat& r, int digits) {
  // Truncating fixed-point rendering; enough for human-facing text output.
  bool neg = r < 0;
  Rat a = rat_abs(r);
  Int ip = rat_floor(a);
  Rat frac = a - Rat(ip);
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Int fp = rat_floor(frac * Rat(scale));
  std::string fs = fp.get_str();
  if (static_cast<int>(fs.size()) < digits)
    fs.insert(fs.begin(), digits - fs.size(), '0');
  std::ostringstream out;
  if (neg) out << '-';
  out << ip.get_str() << '.' << fs;
  return out.str();
}

}  // namespace apkit
