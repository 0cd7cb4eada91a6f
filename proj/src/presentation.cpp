#include <numeric>
#include <sstream>
#include <stdexcept>

#include "joinpi/group_presentations.hpp"

namespace joinpi {

Word free_reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

std::string Presentation::word_to_string(const Word& w) const {
  if (w.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size();) {
    int x = w[k];
    std::size_t run = 1;
    while (k + run < w.size() && w[k + run] == x) ++run;
    if (k > 0) os << '*';
    os << generators[static_cast<std::size_t>(std::abs(x) - 1)];
    long e = static_cast<long>(run) * (x > 0 ? 1 : -1);
    if (e != 1) os << '^' << e;
    k += run;
  }
  return os.str();
}

std::string Presentation::to_string() const {
  std::ostringstream os;
  os << "< ";
  for (std::size_t g = 0; g < generators.size(); ++g) os << (g ? ", " : "") << generators[g];
  os << " | ";
  for (std::size_t r = 0; r < relators.size(); ++r) os << (r ? ", " : "") << word_to_string(relators[r]);
  os << " >";
  return os.str();
}

namespace {

Presentation skeleton(int p, int period) {
  if (p < 1 || period < 1) throw std::invalid_argument("G(p;q) needs p, q >= 1");
  Presentation pres;
  pres.generators.push_back("w");
  for (int k = 0; k < period; ++k) pres.generators.push_back("a" + std::to_string(k));
  // w^-1 * a_{p-1} ... a_0
  Word def{-omega_letter()};
  for (int k = p - 1; k >= 0; --k) def.push_back(a_letter(k % period));
  pres.relators.push_back(free_reduce(def));
  // a_{k+p}^-1 w a_k w^-1
  for (int k = 0; k < period; ++k)
    pres.relators.push_back(free_reduce({-a_letter((k + p) % period), omega_letter(), a_letter(k), -omega_letter()}));
  return pres;
}

}  // namespace

Presentation present_Gpq(int p, int q) { return skeleton(p, q); }

Presentation present_Gpqr(int p, int q, int r) {
  if (r < 1) throw std::invalid_argument("G(p;q;r) needs r >= 1");
  Presentation pres = skeleton(p, q);
  pres.relators.push_back(Word(static_cast<std::size_t>(r), omega_letter()));
  return pres;
}

Presentation present_G_periods(int p, const std::vector<int>& periods) {
  if (periods.empty()) throw std::invalid_argument("at least one period is required");
  int L = 1;
  for (int q : periods) {
    if (q < 1) throw std::invalid_argument("periods must be positive");
    L = std::lcm(L, q);
  }
  Presentation pres = skeleton(p, L);
  for (int q : periods) {
    if (q == L) continue;
    for (int k = 0; k < L; ++k) pres.relators.push_back({-a_letter((k + q) % L), a_letter(k)});
  }
  return pres;
}

PeriodNormalization normalize_periods(int p, const std::vector<int>& periods) {
  if (periods.empty()) throw std::invalid_argument("at least one period is required");
  int g = 0;
  for (int q : periods) g = std::gcd(g, q);
  return {p, g};
}

}  // namespace joinpi
