#pragma once

#include <string>
#include <string_view>

#include "psg/superalgebra.hpp"

namespace psg {

// Which family of bracket axioms an algebra's bracket is meant to satisfy.
// The D convention is kind-dependent and never normalized: Jordan brackets use
// D(a) = {a,1}, contact ones D(a) = {1,a}. A Poisson bracket is the contact
// case with D = 0.
enum class BracketKind { poisson, contact, jordan };

BracketKind bracket_kind_from_string(std::string_view s);
std::string to_string(BracketKind k);

// Identity bundle appropriate for the kind (dot identities included).
const std::string& suite_for(BracketKind k);

Vec d_operator(const SuperAlgebra& a, BracketKind kind, const Vec& x);

// New bracket <a,b> = {a,b} - 1/2 (a.{1,b} - {1,a}.b). The input bracket must
// pass the contact checks; the violating identity is reported otherwise.
SuperAlgebra jordan_from_contact(const SuperAlgebra& a);

// New bracket {a,b} = <a,b> + (a.<1,b> - <1,a>.b), inverse of the above.
SuperAlgebra contact_from_jordan(const SuperAlgebra& a);

// Doubled algebra on A + A~ with parity(x~) = parity(x)+1:
//   a.b unchanged, a.(b~) = (ab)~, (a~).b = (-1)^{|b|} (ab)~,
//   (a~).(b~) = (-1)^{|b|} {a,b}.
// The result is a plain supercommutative algebra without bracket; the dot of
// the input must be supercommutative and associative.
SuperAlgebra kantor_double(const SuperAlgebra& a);

}  // namespace psg
