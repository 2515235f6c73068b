#pragma once

#include "suptrop/poly.hpp"

namespace suptrop {

/// f_A = |λI ⊕ A|: monic of degree n with α_{n-k} the supertropical ⊕ over
/// all k-multicycles of the digraph of A (ties between multicycles form
/// ghosts). subset_cap bounds the principal-submatrix enumeration.
Poly char_poly(const Matrix& a, int subset_cap = 12);

/// char_poly with every coefficient tangible-lifted.
Poly tangible_char_poly(const Matrix& a, int subset_cap = 12);

/// A satisfies f when every entry of f(A) is ghost-or-bottom.
bool satisfies(const Matrix& a, const Poly& f);

}  // namespace suptrop
