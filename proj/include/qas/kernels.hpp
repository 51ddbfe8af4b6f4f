#pragma once

#include <cstddef>

namespace qas {
class ParamPoly;
}

// Polynomial multiplication kernels.  The serial path is the reference; the
// OpenMP path partitions the left operand and merges per-thread partial sums.
// Rational addition is exact, so both paths produce the identical canonical
// map regardless of scheduling.
namespace qas::kernels {

enum class Mode { serial, parallel, automatic };

ParamPoly multiply_serial(const ParamPoly& a, const ParamPoly& b);
ParamPoly multiply_parallel(const ParamPoly& a, const ParamPoly& b);
ParamPoly multiply(const ParamPoly& a, const ParamPoly& b,
                   Mode mode = Mode::automatic);

// Work size above which automatic mode goes parallel.
inline constexpr size_t kParallelThreshold = 1 << 14;

}  // namespace qas::kernels
