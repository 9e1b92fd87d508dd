#include "m36/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace m36 {

Monomial::Monomial(std::vector<int> generators) {
  if (generators.size() > static_cast<std::size_t>(kMaxDegree)) throw std::domain_error("monomial degree above 4");
  std::sort(generators.begin(), generators.end());
  for (int g : generators) {
    if (g < 0 || g > 126) throw std::out_of_range("generator index");
    g_[deg_++] = static_cast<std::uint8_t>(g);
  }
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < deg_; ++i)
    if (s.empty() || s.back() != g_[i]) s.push_back(g_[i]);
  return s;
}

std::optional<Monomial> Monomial::times(const Monomial& other) const {
  if (deg_ + other.deg_ > kMaxDegree) return std::nullopt;
  Monomial m;
  std::merge(g_.begin(), g_.begin() + deg_, other.g_.begin(), other.g_.begin() + other.deg_, m.g_.begin());
  m.deg_ = static_cast<std::uint8_t>(deg_ + other.deg_);
  return m;
}

std::uint32_t Monomial::key() const {
  std::uint32_t k = 0;
  for (int i = 0; i < deg_; ++i) k = (k << 7) | (g_[i] + 1u);
  return k;
}

RingElement RingElement::constant(const Rational& c) { return monomial(Monomial(), c); }

RingElement RingElement::generator(int g, const Rational& c) { return monomial(Monomial::generator(g), c); }

RingElement RingElement::monomial(const Monomial& m, const Rational& c) {
  RingElement e;
  e.add(m, c);
  return e;
}

int RingElement::max_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool RingElement::is_homogeneous(int degree) const {
  for (const auto& [m, c] : terms_)
    if (m.degree() != degree) return false;
  return true;
}

RingElement RingElement::component(int degree) const {
  return filter([degree](const Monomial& m) { return m.degree() == degree; });
}

Rational RingElement::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RingElement::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

RingElement& RingElement::operator+=(const RingElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

RingElement& RingElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  RingElement out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      if (auto m = ma.times(mb)) out.add(*m, ca * cb);
  return out;
}

RingElement RingElement::pow(int e) const {
  if (e < 0) throw std::domain_error("negative exponent");
  RingElement r = constant(1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

RingElement RingElement::substitute(const std::function<RingElement(int)>& image) const {
  RingElement out;
  for (const auto& [m, c] : terms_) {
    RingElement t = constant(c);
    for (int g : m.factors()) t = t * image(g);
    out += t;
  }
  return out;
}

RingElement RingElement::filter(const std::function<bool(const Monomial&)>& keep) const {
  RingElement out;
  for (const auto& [m, c] : terms_)
    if (keep(m)) out.terms_.emplace(m, c);
  return out;
}

std::string RingElement::to_string(const std::function<std::string(int)>& name) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    std::string body;
    const auto f = m.factors();
    for (std::size_t i = 0; i < f.size();) {
      std::size_t j = i;
      while (j < f.size() && f[j] == f[i]) ++j;
      if (!body.empty()) body += "*";
      body += name(f[i]);
      if (j - i > 1) body += "^" + std::to_string(j - i);
      i = j;
    }
    if (body.empty())
      out += m36::to_string(a);
    else if (a == 1)
      out += body;
    else
      out += m36::to_string(a) + "*" + body;
  }
  return out;
}

}  // namespace m36
