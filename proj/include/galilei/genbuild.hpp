#pragma once

#include <array>

#include "galilei/matrix.hpp"

namespace galilei {

/// Levi-Civita symbol on {0,1,2}.
inline int eps3(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

/// Spin-one matrix: (s_a)_{bc} = -i eps_{abc}. This is the unique sign
/// for which [s_a, s_b] = i eps_{abc} s_c holds.
QMatrix spin_one(int a);

/// Builders for real boost generators G_a, where the finite boost is
/// exp(v . G). Offsets index slots of the carrier space.

/// scalar at `dst` gains c * (v . vector at src..src+2)
void gen_scalar_dot(std::array<QMatrix, 3>& g, int dst, int src, const GQ& c);

/// vector at dst..dst+2 gains c * v * (scalar at src)
void gen_vec_from_scalar(std::array<QMatrix, 3>& g, int dst, int src, const GQ& c);

/// vector at dst..dst+2 gains c * (v x vector at src..src+2)
void gen_vec_cross(std::array<QMatrix, 3>& g, int dst, int src, const GQ& c);

/// Real rotation generator entries for a vector block at offset o:
/// delta X = theta * (e_a x X).
void rot_vector_block(std::array<QMatrix, 3>& r, int o);

/// exp of a nilpotent VPoly matrix; throws when the series fails to
/// terminate within `max_order` (signals a non-nilpotent argument).
VMatrix exp_nilpotent(const VMatrix& m, int max_order = 6);

struct NonNilpotentError : std::runtime_error {
  NonNilpotentError() : std::runtime_error("matrix exponential did not terminate") {}
};

}  // namespace galilei
