#pragma once

#include <array>
#include <optional>
#include <cstdint>
#include <span>
#include <vector>

#include "cycgrp/group.hpp"
#include "cycgrp/pc_presentation.hpp"

namespace cycgrp {

/// Cyclic base C_q acted on by C_m through b a b^-1 = a^i.
struct Action {
  std::uint64_t base_order;   // q
  std::uint64_t actor_order;  // m
  std::uint64_t exponent;     // i
};

Group cyclic(std::uint64_t n);

/// Pairs (a, b) at index a * |B| + b.
Group direct_product(const Group& a, const Group& b);

/// Product of cyclic groups of the given orders, left to right.
Group abelian_product(std::span<const std::uint64_t> factors);

/// Pairs a^r b^s at index s * q + r with
/// (r, s)(r', s') = (r + i^s r' mod q, s + s' mod m).
/// Throws std::invalid_argument unless ord_q(i) divides m.
Group semidirect_cyclic(const Action& action);

/// N x| C_m where the generator of C_m acts on N by the automorphism
/// `sigma` (sigma[x] = b x b^-1). Index = s * |N| + x.
Group semidirect_by_automorphism(const Group& base, std::span<const Elem> sigma,
                                 std::uint64_t m);

/// 2x2 matrix over F_q, row-major.
using Mat2 = std::array<std::uint64_t, 4>;

/// (C_q x C_q) x| C_m with the generator acting by `mat` on column vectors.
Group semidirect_matrix(std::uint64_t q, const Mat2& mat, std::uint64_t m);

/// Lexicographically first matrix in GL(2, q) of order p with an
/// irreducible characteristic polynomial, if any.
std::optional<Mat2> irreducible_matrix_of_order(std::uint64_t q, std::uint64_t p);

Group dihedral(std::uint64_t n);  // D_{2n}
Group quaternion_8();
Group alternating_4();
Group symmetric_3();

// Presentations of the presented p-groups, in collector form.
PcPresentation quaternion_8_presentation();
/// <a,b,c | a^p=b^p=c^p=1, ba=ab, ca=abc, cb=bc>, p odd. Generators (c, a, b).
PcPresentation heisenberg_presentation(std::uint64_t p);
/// <a,b | a^{p^2}=b^p=1, ba=a^{p+1}b>. Generators (b, a).
PcPresentation modular_p3_presentation(std::uint64_t p);
/// Nonabelian groups of order 16 labeled G6..G14. Generator order is
/// documented per row in the source.
PcPresentation order16_presentation(int row);
/// Nonabelian groups of order p^4, p odd, by Burnside's roman label
/// 6 (vi) .. 15 (xv). For labels 12, 13, 15 with p = 3 the dedicated
/// presentations are used.
PcPresentation order_p4_presentation(int label, std::uint64_t p);

}  // namespace cycgrp
