#include "qas/trigpoly.hpp"

#include <sstream>
#include <stdexcept>

#include "qas/scalar.hpp"

namespace qas {

namespace {

ThetaPoly theta_scaled(const ThetaPoly& w, const Rational& q) {
  ThetaPoly out;
  out.reserve(w.size());
  for (const auto& p : w) out.push_back(p.scaled(Scalar(q)));
  return out;
}

void theta_trim(ThetaPoly& w) {
  while (!w.empty() && w.back().is_zero()) w.pop_back();
}

}  // namespace

ThetaPoly theta_add(const ThetaPoly& a, const ThetaPoly& b) {
  ThetaPoly out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  theta_trim(out);
  return out;
}

ThetaPoly theta_mul(const ThetaPoly& a, const ThetaPoly& b) {
  if (a.empty() || b.empty()) return {};
  ThetaPoly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  theta_trim(out);
  return out;
}

void TrigPoly::add_harmonic(unsigned j, bool sine, const ThetaPoly& w) {
  if (w.empty()) return;
  if (j == 0 && sine) return;  // sin 0 == 0
  auto& slot = h_[j];
  ThetaPoly& dst = sine ? slot.second : slot.first;
  dst = theta_add(dst, w);
}

void TrigPoly::prune() {
  for (auto it = h_.begin(); it != h_.end();) {
    theta_trim(it->second.first);
    theta_trim(it->second.second);
    if (it->second.first.empty() && it->second.second.empty())
      it = h_.erase(it);
    else
      ++it;
  }
}

TrigPoly TrigPoly::constant(const ParamPoly& c) {
  TrigPoly t;
  if (!c.is_zero()) t.h_[0] = {ThetaPoly{c}, {}};
  return t;
}

TrigPoly TrigPoly::harmonic_cos(unsigned j, const ThetaPoly& w) {
  TrigPoly t;
  t.add_harmonic(j, false, w);
  t.prune();
  return t;
}

TrigPoly TrigPoly::harmonic_sin(unsigned j, const ThetaPoly& w) {
  TrigPoly t;
  t.add_harmonic(j, true, w);
  t.prune();
  return t;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
  for (const auto& [j, pair] : o.h_) {
    add_harmonic(j, false, pair.first);
    add_harmonic(j, true, pair.second);
  }
  prune();
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) { return *this += -o; }

TrigPoly TrigPoly::operator-() const {
  TrigPoly t;
  for (const auto& [j, pair] : h_)
    t.h_[j] = {theta_scaled(pair.first, Rational(-1)),
               theta_scaled(pair.second, Rational(-1))};
  return t;
}

TrigPoly TrigPoly::scaled(const ParamPoly& c) const {
  TrigPoly t;
  if (c.is_zero()) return t;
  ThetaPoly cw{c};
  for (const auto& [j, pair] : h_) {
    if (!pair.first.empty()) t.add_harmonic(j, false, theta_mul(pair.first, cw));
    if (!pair.second.empty()) t.add_harmonic(j, true, theta_mul(pair.second, cw));
  }
  t.prune();
  return t;
}

// Product-to-sum: every pairwise product of harmonics lands on |i-j| and
// i+j, so the result stays a finite Fourier sum.
TrigPoly tmul(const TrigPoly& a, const TrigPoly& b) {
  const Rational half(1, 2);
  TrigPoly t;
  for (const auto& [i, pa] : a.h_) {
    for (const auto& [j, pb] : b.h_) {
      const unsigned sum = i + j;
      const unsigned diff = i > j ? i - j : j - i;
      // cos i * cos j
      if (!pa.first.empty() && !pb.first.empty()) {
        ThetaPoly w = theta_scaled(theta_mul(pa.first, pb.first), half);
        t.add_harmonic(diff, false, w);
        t.add_harmonic(sum, false, w);
      }
      // sin i * sin j
      if (!pa.second.empty() && !pb.second.empty()) {
        ThetaPoly w = theta_scaled(theta_mul(pa.second, pb.second), half);
        t.add_harmonic(diff, false, w);
        t.add_harmonic(sum, false, theta_scaled(w, Rational(-1)));
      }
      // sin i * cos j -> (1/2)[sin(i+j) + sin(i-j)]
      if (!pa.second.empty() && !pb.first.empty()) {
        ThetaPoly w = theta_scaled(theta_mul(pa.second, pb.first), half);
        t.add_harmonic(sum, true, w);
        if (i > j)
          t.add_harmonic(diff, true, w);
        else if (j > i)
          t.add_harmonic(diff, true, theta_scaled(w, Rational(-1)));
      }
      // cos i * sin j -> (1/2)[sin(i+j) + sin(j-i)]
      if (!pa.first.empty() && !pb.second.empty()) {
        ThetaPoly w = theta_scaled(theta_mul(pa.first, pb.second), half);
        t.add_harmonic(sum, true, w);
        if (j > i)
          t.add_harmonic(diff, true, w);
        else if (i > j)
          t.add_harmonic(diff, true, theta_scaled(w, Rational(-1)));
      }
    }
  }
  t.prune();
  return t;
}

TrigPoly TrigPoly::cos_pow_sin_pow(unsigned m, unsigned n, const ParamPoly& coeff) {
  TrigPoly t = constant(coeff);
  const TrigPoly c = harmonic_cos(1, ThetaPoly{ParamPoly(1)});
  const TrigPoly s = harmonic_sin(1, ThetaPoly{ParamPoly(1)});
  for (unsigned i = 0; i < m; ++i) t = tmul(t, c);
  for (unsigned i = 0; i < n; ++i) t = tmul(t, s);
  return t;
}

TrigPoly TrigPoly::antiderivative_zero() const {
  TrigPoly t;
  for (const auto& [j, pair] : h_) {
    if (j == 0) {
      // plain theta-polynomial: raise each power
      ThetaPoly w(pair.first.size() + 1);
      for (size_t n = 0; n < pair.first.size(); ++n)
        w[n + 1] = pair.first[n].scaled(Scalar(Rational(1, long(n) + 1)));
      t.add_harmonic(0, false, w);
      continue;
    }
    const Rational invj(1, long(j));
    for (int pass = 0; pass < 2; ++pass) {
      const bool sine = pass == 1;
      const ThetaPoly& w = sine ? pair.second : pair.first;
      for (size_t n0 = 0; n0 < w.size(); ++n0) {
        if (w[n0].is_zero()) continue;
        // integrate c * theta^n * {cos|sin}(j theta) by parts down to n = 0
        ParamPoly c = w[n0];
        size_t n = n0;
        bool s = sine;
        while (true) {
          ThetaPoly boundary(n + 1);
          if (!s) {
            boundary[n] = c.scaled(Scalar(invj));
            t.add_harmonic(j, true, boundary);
            if (n == 0) break;
            c = c.scaled(Scalar(-invj * Rational(long(n))));
          } else {
            boundary[n] = c.scaled(Scalar(-invj));
            t.add_harmonic(j, false, boundary);
            if (n == 0) break;
            c = c.scaled(Scalar(invj * Rational(long(n))));
          }
          --n;
          s = !s;
        }
      }
    }
  }
  t.prune();
  ParamPoly at0 = t.eval_at_zero();
  if (!at0.is_zero()) t -= constant(at0);
  return t;
}

TrigPoly TrigPoly::derivative() const {
  TrigPoly t;
  for (const auto& [j, pair] : h_) {
    for (int pass = 0; pass < 2; ++pass) {
      const bool sine = pass == 1;
      const ThetaPoly& w = sine ? pair.second : pair.first;
      if (w.empty()) continue;
      // w'(theta) carried on the same harmonic
      if (w.size() > 1) {
        ThetaPoly dw(w.size() - 1);
        for (size_t n = 1; n < w.size(); ++n)
          dw[n - 1] = w[n].scaled(Scalar(Rational(long(n))));
        t.add_harmonic(j, sine, dw);
      }
      // chain term: cos -> -j sin, sin -> +j cos
      if (j > 0) {
        const Rational f = sine ? Rational(long(j)) : Rational(-long(j));
        t.add_harmonic(j, !sine, theta_scaled(w, f));
      }
    }
  }
  t.prune();
  return t;
}

ParamPoly TrigPoly::eval_at_pi() const {
  ParamPoly out;
  for (const auto& [j, pair] : h_) {
    const Rational sign(j % 2 == 0 ? 1 : -1);
    for (size_t n = 0; n < pair.first.size(); ++n)
      out += pair.first[n].scaled(Scalar::pi(unsigned(n), sign));
  }
  return out;
}

ParamPoly TrigPoly::eval_at_zero() const {
  ParamPoly out;
  for (const auto& [j, pair] : h_)
    if (!pair.first.empty()) out += pair.first[0];
  return out;
}

std::map<unsigned, std::pair<ParamPoly, ParamPoly>> TrigPoly::fourier_table() const {
  std::map<unsigned, std::pair<ParamPoly, ParamPoly>> out;
  for (const auto& [j, pair] : h_) {
    if (pair.first.size() > 1 || pair.second.size() > 1)
      throw std::logic_error("fourier_table: theta power present");
    ParamPoly c = pair.first.empty() ? ParamPoly() : pair.first[0];
    ParamPoly s = pair.second.empty() ? ParamPoly() : pair.second[0];
    out[j] = {c, s};
  }
  return out;
}

std::string TrigPoly::str() const {
  if (h_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit_weight = [&os](const ThetaPoly& w) {
    os << "[";
    bool f2 = true;
    for (size_t n = 0; n < w.size(); ++n) {
      if (w[n].is_zero()) continue;
      if (!f2) os << " + ";
      f2 = false;
      os << "(" << w[n].str() << ")";
      if (n == 1) os << "*t";
      if (n > 1) os << "*t^" << n;
    }
    if (f2) os << "0";
    os << "]";
  };
  for (const auto& [j, pair] : h_) {
    if (!pair.first.empty()) {
      if (!first) os << " + ";
      first = false;
      emit_weight(pair.first);
      if (j > 0) os << "*cos(" << j << "t)";
    }
    if (!pair.second.empty()) {
      if (!first) os << " + ";
      first = false;
      emit_weight(pair.second);
      os << "*sin(" << j << "t)";
    }
  }
  return os.str();
}

}  // namespace qas
