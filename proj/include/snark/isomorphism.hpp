#pragma once

#include <vector>

#include "snark/multipole.hpp"

namespace snark {

/// A labelling-independent encoding: equal forms mean isomorphic objects.
struct CanonicalForm {
    int vertices = 0;
    std::vector<int> colours;                 // per canonical position
    std::vector<std::array<int, 3>> edges;    // (u, v, multiplicity), u <= v, sorted

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Canonical form by colour refinement with exhaustive individualisation.
/// Free ends become pendant vertices of one colour. Exponential in the worst
/// case; intended for graphs up to a few hundred vertices with small
/// automorphism groups, or tiny symmetric ones.
CanonicalForm canonical_form(const Multipole& m);
/// As above, with the free end of the i-th input (output) edge coloured i (arity + i).
CanonicalForm canonical_form(const Dipole& d);

bool isomorphic(const Multipole& a, const Multipole& b);
bool isomorphic(const Dipole& a, const Dipole& b);

}  // namespace snark
