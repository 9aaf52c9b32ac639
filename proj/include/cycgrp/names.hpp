#pragma once

// Group names accepted on the command line.
//
//   C<n>                      cyclic
//   C<a>xC<b>[xC<c>...]       direct product of cyclic groups
//   D<2n>                     dihedral of order 2n
//   Q8, A4, S3                fixed small groups
//   C<q>:C<p>                 nonabelian group of order pq
//   G6 .. G14                 nonabelian groups of order 16
//   Gvi .. Gxv@p=<p>          nonabelian groups of order p^4, p odd
//   G1|G2|G3@p=<p>,q=<q>      nonabelian groups of order p^2 q
//   mod<p^3>, heis<p^3>       nonabelian groups of order p^3, p odd
//   pq2.<k>@p=<p>,q=<q>       order p q^2, count case k; case 4 takes
//                             ,k=<k> (diagonal) or ,irr (irreducible)

#include <optional>
#include <string>
#include <vector>

#include "cycgrp/formulas.hpp"

namespace cycgrp {

/// Syntax only; parameter constraints are checked by validate().
std::optional<FamilySpec> parse_group_name(const std::string& name);

/// One line per accepted form, for usage messages.
std::vector<std::string> group_name_forms();

}  // namespace cycgrp
