#include "superchar/formal_sum.hpp"
#include "superchar/weight.hpp"

namespace superchar {

static void check_shape(const Weight& a, const Weight& b, const char* op) {
  if (a.m() != b.m() || a.n() != b.n())
    throw MathError(std::string("weight shape mismatch in ") + op + ": " + a.str() +
                    " vs " + b.str());
}

Weight& Weight::operator+=(const Weight& o) {
  check_shape(*this, o, "+");
  for (int i = 0; i < m(); ++i) eps[i] += o.eps[i];
  for (int j = 0; j < n(); ++j) delta[j] += o.delta[j];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  check_shape(*this, o, "-");
  for (int i = 0; i < m(); ++i) eps[i] -= o.eps[i];
  for (int j = 0; j < n(); ++j) delta[j] -= o.delta[j];
  return *this;
}

Weight operator*(const Rat& c, Weight w) {
  for (auto& x : w.eps) x *= c;
  for (auto& x : w.delta) x *= c;
  return w;
}

Weight operator-(Weight w) {
  for (auto& x : w.eps) x = -x;
  for (auto& x : w.delta) x = -x;
  return w;
}

bool operator<(const Weight& a, const Weight& b) {
  if (a.m() != b.m()) return a.m() < b.m();
  if (a.n() != b.n()) return a.n() < b.n();
  for (int i = 0; i < a.m(); ++i) {
    if (a.eps[i] != b.eps[i]) return a.eps[i] < b.eps[i];
  }
  for (int j = 0; j < a.n(); ++j) {
    if (a.delta[j] != b.delta[j]) return a.delta[j] < b.delta[j];
  }
  return false;
}

size_t Weight::hash() const {
  size_t h = 0x9e3779b97f4a7c15ull ^ (eps.size() << 1) ^ (delta.size() << 17);
  for (const auto& c : eps) h = h * 1099511628211ull ^ c.hash();
  for (const auto& c : delta) h = h * 1099511628211ull ^ c.hash();
  return h;
}

std::string Weight::str() const {
  std::string s = "(";
  for (int i = 0; i < m(); ++i) s += (i ? "," : "") + eps[i].str();
  s += "|";
  for (int j = 0; j < n(); ++j) s += (j ? "," : "") + delta[j].str();
  return s + ")";
}

Rat bilinear(const Weight& a, const Weight& b) {
  check_shape(a, b, "bilinear");
  Rat s;
  for (int i = 0; i < a.m(); ++i) s += a.eps[i] * b.eps[i];
  for (int j = 0; j < a.n(); ++j) s -= a.delta[j] * b.delta[j];
  return s;
}

Weight eps_vec(int m, int n, int i) {
  Weight w = Weight::zero(m, n);
  w.eps.at(i - 1) = 1;
  return w;
}

Weight delta_vec(int m, int n, int j) {
  Weight w = Weight::zero(m, n);
  w.delta.at(j - 1) = 1;
  return w;
}

}  // namespace superchar
