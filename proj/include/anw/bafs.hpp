// The extension B_af(S) = B_af x| S: words with polynomial coefficients on
// the left, multiplied through the cross relation
//   [alpha,k] f = d_alpha(f) + s_{alpha,0}(f) [alpha,k]
// (the twist is by the finite reflection, independent of the level), and the
// homomorphism phi from the nil-Hecke algebra.

#pragma once

#include "anw/nichols.hpp"
#include "anw/nilhecke.hpp"
#include "anw/polynomial.hpp"

namespace anw {

using BafsElt = WordMap<Polynomial>;

BafsElt bafs_scalar(const RootSystem& sys, Polynomial f);
BafsElt bafs_letter(const Baf& baf, RootRef root, long long level);

// Pushes f from the right of the word u to the left, one letter at a time.
BafsElt push_through(const Baf& baf, const Word& u, const Polynomial& f);

BafsElt bafs_mul(const Baf& baf, const BafsElt& a, const BafsElt& b);

// tau_0 -> [alpha_0,-1], tau_i -> [alpha_i,0], f -> f, extended along reduced
// words of the tau_x basis.
BafsElt phi(const Baf& baf, const NilHeckeElt& a);

}  // namespace anw
