#pragma once

#include <json.hpp>

#include "enriques/invariant.hpp"
#include "enriques/lattice.hpp"
#include "enriques/orbitcount.hpp"
#include "enriques/quad_space.hpp"

namespace enriques::json_io {

using Json = nlohmann::ordered_json;

// Integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.
Json int_to_json(const Int& x);
Int int_from_json(const Json& j);
// Rationals are written as "p/q" strings, or "p" when integral.
Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);
Json vec_to_json(const IntVec& v);
IntVec vec_from_json(const Json& j);

// F2 vectors are arrays of 0/1 of length dim.
Json f2_to_json(Word w, int dim);
Word f2_from_json(const Json& j, int dim);

// {"gram": [[...]], "scale": "p/q"}; scale omitted when 1.
Json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const Json& j);

// {"gram_minus": [[...]], "glue": [{"minus": ["p/q", ...], "plus": [0/1 x 10]}]}
Json glued_input_to_json(const GluedK3Input& in);
GluedK3Input glued_input_from_json(const Json& j);

// {"components": [{"type": "A7", "kernel": 1, "sigma": [[0/1 x 10], ...]}]}
Json invariant_to_json(const RootInvariant& inv);
RootInvariant invariant_from_json(const Json& j);

// {"extra_generators": [[[0/1 x 10] x 10], ...]}, row i is the image of e_i.
Json vinberg_to_json(const VinbergGroupSpec& spec);
VinbergGroupSpec vinberg_from_json(const Json& j);

Json normal_form_to_json(const NormalFormF2& nf);

// Either {"gram": even integer matrix} or {"b": [[0/1]], "q": [0/1]}.
Json quad_space_to_json(const QuadSpaceF2& V);
QuadSpaceF2 quad_space_from_json(const Json& j);

}  // namespace enriques::json_io
