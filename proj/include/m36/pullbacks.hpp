#pragma once

// Divisor expansions of pullbacks along the restriction maps r_k and the
// forgetful maps f_k, and of the psi and phi classes built from them.

#include "m36/labels.hpp"
#include "m36/ring.hpp"

namespace m36 {

RingElement divisor_class(DivisorId d);
/// "E[123]"-style name of generator g.
std::string divisor_name(int g);

/// r_k^*(D_ij) = D_{lmn,ijk} + D_{ij,klmn} + D_{kl,ij,mn} + D_{km,ij,ln} + D_{kn,ij,lm}.
RingElement pullback_r(int k, MarkSet ij);
/// f_k^*(D_ij) = D_{ijk,lmn} + D_{ij,klmn} + D_{ij,kl,mn} + D_{ij,km,ln} + D_{ij,kn,lm}.
RingElement pullback_f(int k, MarkSet ij);

/// psi_ij = f_n^*(D_jk) + f_n^*(D_lm) + r_i^*(D_jn), {k,l,m} the marks outside {i,j,n}.
RingElement psi(int i, int j, int n, int k);
/// n the largest mark outside {i,j}, k the smallest remaining one.
RingElement psi(int i, int j);
RingElement phi(int i, int j);

/// The 60 generators r_i^*(D_ab + D_cd) - r_i^*(D_ac + D_bd) of the linear relations.
std::vector<RingElement> linear_relations();

}  // namespace m36
