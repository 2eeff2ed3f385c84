#include "lgtt/rational.hpp"

namespace lgtt {

Rat rat_from_string(const std::string& s) {
  return Rat(s);
}

Rat lcm(const Rat& a, const Rat& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.raw().get_num().get_mpz_t(), b.raw().get_num().get_mpz_t());
  return Rat(mpq_class(l));
}

std::string GQ::str() const {
  if (im.is_zero()) return re.str();
  std::string s;
  if (!re.is_zero()) s = re.str();
  std::string ims = im.str();
  if (ims == "1") ims = "i";
  else if (ims == "-1") ims = "-i";
  else ims += "*i";
  if (!s.empty() && ims[0] != '-') s += "+";
  return s + ims;
}

}  // namespace lgtt
