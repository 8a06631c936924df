#ifndef AUTLIN_PARSE_HPP
#define AUTLIN_PARSE_HPP

#include "autlin/charlab.hpp"
#include "autlin/mixedword.hpp"
#include "autlin/torsion.hpp"

namespace autlin {

/// "Q" | "Fp:<p>" | "Qt" (one-variable rational functions over Q).
FieldPtr parse_field(const std::string& text);

/// Expression over the ring variables with + - * / ^, integer literals, and
/// the field's own parameters as constants; '/' needs the divisor to be a
/// nonzero constant unless the caller asks for a full fraction.
Frac parse_frac(const RingPtr& ring, const std::string& text);
Polynomial parse_poly(const RingPtr& ring, const std::string& text);
Scalar parse_scalar(const FieldPtr& F, const std::string& text);

/// "(expr , expr)" over x, y. Syntax errors carry the offending position;
/// Jacobian validity is not checked here.
PlaneAut parse_aut(const FieldPtr& F, const std::string& text);

/// "d0" | "dinf" | "(a;b)".
Direction parse_direction(const FieldPtr& F, const std::string& text);

/// "[(d0,t^2),(dinf,-t^3)]"; the empty word is "[]". An optional leading
/// "s=[[a,b],[c,d]] " fixes the linear part.
MixedWord parse_word(const FieldPtr& F, const std::string& text);

/// "[[a,b],[c,d]]" with scalar entries.
Mat2 parse_mat2(const FieldPtr& F, const std::string& text);

/// Trivial | PlusMinusId | U | B | SL2 | GL2 | SO(q) | DiagonalCyclic(l) |
/// FiniteList(m1;m2;...) | SL2(<ring text>).
SubgroupDescriptor parse_descriptor(const FieldPtr& F, const std::string& text);

/// Generators over Q(t1..tm); variables are auto-detected identifiers.
LatticeSubgroup parse_lattice(const std::string& text);

/// Words in the probe generators: "s^2 t s^-2 t^-2" or "s*t*s^-1".
std::vector<GenPower> parse_genword(const std::string& text);

} // namespace autlin

#endif
