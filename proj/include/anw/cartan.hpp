// Cartan matrix data: validation, symmetrizers, built-in presets.

#pragma once

#include <string>
#include <vector>

namespace anw {

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;

struct Cartan {
    int rank = 0;
    IntMat a;    // a[i][j], with <alpha_j, alpha_i^vee> = a[i][j]
    IntVec d;    // positive symmetrizers: d[i]*a[i][j] == d[j]*a[j][i]

    // Throws std::invalid_argument on a malformed matrix (diagonal != 2,
    // positive off-diagonal, asymmetric zero pattern, or no symmetrizer).
    static Cartan from_matrix(const IntMat& a);

    // "A2".."A7", "B2", "G2".  Throws std::invalid_argument on unknown names.
    static Cartan preset(const std::string& name);
};

}  // namespace anw
