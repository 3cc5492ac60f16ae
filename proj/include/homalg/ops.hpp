#ifndef HOMALG_OPS_HPP
#define HOMALG_OPS_HPP

#include "homalg/cochain.hpp"

namespace homalg {

// Operations on equivariant cochains of a hom-associative algebra.
//
// Degree/index conventions. Everything is stored in C-degree: a Cochain of
// degree m is an m-ary map. The partial compositions circ_i come from the
// V-graded picture V_m = (m+1)-ary maps, so C^m = V_{m-1}. Translation
// table between the two indexings used below:
//
//   object          C picture                V picture
//   f               degree m, args a_1..a_m  V_{m-1}, args a_0..a_{m-1}
//   f circ_i g      i in 0..m-1 (V index)    i in 0..(m-1)
//   f circ g        sum_{i=1..m} of circ_{i-1} with signs (-1)^{(n-1)(i-1)}
//   degree of f o g m + n - 1                V_{(m-1)+(n-1)}
//
// circ_i(f, g, i) is literally the V-graded composition
//   (f o_i g)(a_0..a_{m+n-2}) =
//     f(alpha^{n-1} a_0, .., alpha^{n-1} a_{i-1},
//       g(a_i, .., a_{i+n-1}),
//       alpha^{n-1} a_{i+n}, .., alpha^{n-1} a_{m+n-2}),
// written here with C-degrees m = deg f, n = deg g.
//
// Caution: circ has no right unit. For the identity 1-cochain,
// id circ g = g, but f circ id = m * f (every one of the m summands is f
// with sign +1). Tests must not assume unit behaviour of circ on the right.

/// Twisted coboundary. Three-part formula
///   (delta f)(a_1..a_{n+1}) =
///       mu(alpha^{n-1} a_1, f(a_2..a_{n+1}))
///     + sum_{i=1..n} (-1)^i f(alpha a_1, .., mu(a_i, a_{i+1}), .., alpha a_{n+1})
///     + (-1)^{n+1} mu(f(a_1..a_n), alpha^{n-1} a_{n+1}).
/// Requires an equivariant input over a multiplicative algebra; the output
/// is again equivariant, and delta(delta(f)) = 0.
Cochain delta(const Cochain& f);

/// Partial composition, V-graded index 0 <= i <= deg(f) - 1.
Cochain circ_i(const Cochain& f, const Cochain& g, std::size_t i);

/// (f circ g)(a_1..a_{m+n-1}) =
///   sum_{i=1..m} (-1)^{(n-1)(i-1)} f(alpha^{n-1} a_1, .., g(a_i..a_{i+n-1}), ..).
Cochain circ(const Cochain& f, const Cochain& g);

/// Degree -1 graded Lie bracket [f, g] = f circ g - (-1)^{(m-1)(n-1)} g circ f.
Cochain bracket(const Cochain& f, const Cochain& g);

/// Cup product
///   (f cup g)(a_1..a_{m+n}) =
///     mu(f(alpha^{n-1} a_1, .., alpha^{n-1} a_m),
///        g(alpha^{m-1} a_{m+1}, .., alpha^{m-1} a_{m+n})).
/// Associative on equivariant cochains; id cup id = mu.
Cochain cup(const Cochain& f, const Cochain& g);

/// The explicit homotopy measuring the Leibniz defect of circ against cup:
///   H(f, g, h) = sum_{i=0}^{p-2} sum_{j=m+i}^{m+p-2}
///                  (-1)^{(m-1)i + (n-1)j} (h o_i f) o_j g
/// (V-graded compositions, C-degrees m, n, p of f, g, h). Empty sum (the
/// zero cochain of degree m+n-1) when p = 1. For cocycle inputs,
///   delta H = (-1)^{(m-1)n} [ h circ (f cup g)
///                             - (-1)^{n(p-1)} (h circ f) cup g
///                             - f cup (h circ g) ].
Cochain homotopy(const Cochain& f, const Cochain& g, const Cochain& h);

/// Sign of delta H in the bracket Leibniz defect
///   [f cup g, h] - [f, h] cup g - (-1)^{m(p-1)} f cup [g, h]
///     = leibniz_defect_sign(m, n, p) * delta H(f, g, h)
/// for cocycles f, g, h. Follows from the homotopy formula above combined
/// with the composition Leibniz rule; the sign depends on the degrees.
int leibniz_defect_sign(std::size_t m, std::size_t n, std::size_t p);

// The three term groups that partition
//   delta((h o_{i-1} f) o_{j-1} g)(a_1, .., a_{m+n+p-1})
// by where the coboundary's product lands relative to the f and g blocks:
// head = terms through f's block, mid = terms strictly between the blocks,
// tail = terms from g's block on. Valid for 1 <= i <= p-1 and
// m+i <= j <= m+p-1. Each returns the full (m+n+p-1)-tensor; when f and g
// are cocycles the three sum to the coboundary above.
Cochain leibniz_block_head(const Cochain& f, const Cochain& g, const Cochain& h, std::size_t i,
                           std::size_t j);
Cochain leibniz_block_mid(const Cochain& f, const Cochain& g, const Cochain& h, std::size_t i,
                          std::size_t j);
Cochain leibniz_block_tail(const Cochain& f, const Cochain& g, const Cochain& h, std::size_t i,
                           std::size_t j);

/// (-1)^e
inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace homalg

#endif
