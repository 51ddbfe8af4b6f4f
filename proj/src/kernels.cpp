#include "qas/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <vector>

#include "qas/parampoly.hpp"

namespace qas::kernels {

namespace {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (size_t i = 0; i < kNumVars; ++i)
    m.e[i] = static_cast<uint16_t>(a.e[i] + b.e[i]);
  return m;
}

}  // namespace

ParamPoly multiply_serial(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly out;
  for (const auto& [ma, sa] : a.terms())
    for (const auto& [mb, sb] : b.terms()) out.add_term(mono_mul(ma, mb), sa * sb);
  return out;
}

ParamPoly multiply_parallel(const ParamPoly& a, const ParamPoly& b) {
#ifndef _OPENMP
  return multiply_serial(a, b);
#else
  std::vector<const std::pair<const Monomial, Scalar>*> rows;
  rows.reserve(a.term_count());
  for (const auto& t : a.terms()) rows.push_back(&t);

  int nt = omp_get_max_threads();
  std::vector<ParamPoly> partial(static_cast<size_t>(nt));
#pragma omp parallel num_threads(nt)
  {
    ParamPoly& local = partial[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (long i = 0; i < static_cast<long>(rows.size()); ++i) {
      const auto& [ma, sa] = *rows[static_cast<size_t>(i)];
      for (const auto& [mb, sb] : b.terms()) local.add_term(mono_mul(ma, mb), sa * sb);
    }
  }
  ParamPoly out;
  for (auto& p : partial) out += p;
  return out;
#endif
}

ParamPoly multiply(const ParamPoly& a, const ParamPoly& b, Mode mode) {
  switch (mode) {
    case Mode::serial:
      return multiply_serial(a, b);
    case Mode::parallel:
      return multiply_parallel(a, b);
    case Mode::automatic:
      break;
  }
#ifdef _OPENMP
  if (a.term_count() * b.term_count() >= kParallelThreshold &&
      omp_get_max_threads() > 1)
    return multiply_parallel(a, b);
#endif
  return multiply_serial(a, b);
}

}  // namespace qas::kernels
