#ifndef HOMALG_CLASSICAL_HPP
#define HOMALG_CLASSICAL_HPP

#include "homalg/complex.hpp"

namespace homalg {

/// Brute-force reference for the identity-twist limit.
///
/// Builds the classical Hochschild complex of the product alone: cochain
/// spaces are ALL multilinear maps A^(tensor n) -> A (dimension d^(n+1),
/// no equivariance constraint anywhere), and the coboundary
///   (delta f)(a_1..a_{n+1}) = a_1 f(a_2..a_{n+1})
///     + sum_{i=1..n} (-1)^i f(a_1, .., a_i a_{i+1}, .., a_{n+1})
///     + (-1)^{n+1} f(a_1..a_n) a_{n+1}
/// is assembled entrywise from the structure constants, independently of
/// the twisted pipeline. The twisting map plays no part here, so the
/// dimensions are comparable to the twisted ones exactly when the twist is
/// the identity. Throws std::invalid_argument when mu is not associative.
std::vector<DegreeSummary> classical_hochschild_dims(const HomAlgebra& alg, std::size_t cap);

/// The classical coboundary matrix degree n -> n+1 on full map spaces
/// (exposed for the oracle's own unit tests).
Matrix classical_coboundary_matrix(const HomAlgebra& alg, std::size_t degree);

}  // namespace homalg

#endif
