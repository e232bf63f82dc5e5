#include "freeconv/rat.hpp"

namespace freeconv {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) raise(Errc::ParseError, "empty rational literal");
  std::size_t slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!is_int(num) || !is_int(den))
    raise(Errc::ParseError, "malformed rational literal '" + s + "'");
  Rat x;
  if (mpq_set_str(x.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
    raise(Errc::ParseError, "malformed rational literal '" + s + "'");
  if (x.get_den() == 0) raise(Errc::ParseError, "zero denominator in '" + s + "'");
  x.canonicalize();
  return x;
}

std::string rat_to_string(const Rat& x) { return x.get_str(); }

Rat rat_pow(const Rat& base, int e) {
  if (e < 0) {
    if (base == 0) raise(Errc::ParseError, "0 to a negative power");
    return 1 / rat_pow(base, -e);
  }
  Rat acc = 1, b = base;
  int k = e;
  while (k > 0) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

Rat rat_pow2_neg(int k) {
  Rat r(1);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(k));
  return r;
}

Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

Int floor_rat(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Int ceil_rat(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rat simplest_in(const Rat& lo, const Rat& hi) {
  if (lo > hi) raise(Errc::ParseError, "simplest_in with lo > hi");
  if (lo <= 0 && 0 <= hi) return Rat(0);
  if (hi < 0) return -simplest_in(-hi, -lo);
  // Now 0 < lo <= hi.
  Int c = ceil_rat(lo);
  if (Rat(c) <= hi) return Rat(c);
  Int fl = floor_rat(lo);
  // fl < lo <= hi < fl+1; recurse on the fractional parts' reciprocals.
  Rat inner = simplest_in(1 / (hi - Rat(fl)), 1 / (lo - Rat(fl)));
  return Rat(fl) + 1 / inner;
}

Int factorial(int n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return Int(0);
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

}  // namespace freeconv
