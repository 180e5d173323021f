#pragma once

#include "braidpoly/braid_word.hpp"
#include "braidpoly/laurent.hpp"

namespace braidpoly {

// Jones polynomial of the closure by the Kauffman-bracket state sum: each
// crossing resolves into the identity pattern or the cap-cup pattern, loops
// are counted by composing the resulting planar matchings, and the bracket
// is corrected by (-A)^{-3 writhe} and re-expressed in t = A^{-4}. Exponents
// are s-exponents (s = t^{1/2}), directly comparable with jones(). Shares no
// code with the skein engine. Throws ResourceLimit beyond 24 crossings.
HalfLaurent bracket_jones(const BraidWord& w);

// Symmetrized Alexander polynomial of a knot closure from the reduced Burau
// representation: det(I - Burau(w)) * (1-t)/(1-t^n), symmetrized so that
// Delta(s) = Delta(s^{-1}) with positive leading coefficient; checks
// |Delta(1)| = 1. Exponents are s-exponents. Shares no code with the skein
// engine. Throws NotAKnot on multi-component closures.
HalfLaurent burau_alexander(const BraidWord& w);

}  // namespace braidpoly
