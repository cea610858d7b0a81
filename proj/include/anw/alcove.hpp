// Reduced alcove paths and their Nichols-algebra words.
//
// reduced_alcove_path(x) walks from the fundamental alcove to x(A°) along the
// prefixes of the deterministic reduced word of x.  Crossing m records the
// wall crossed between alcoves m-1 and m as a signed label: the stored root
// points from the source alcove into the target alcove (so a k=0 crossing
// away from A° carries -alpha_j, and the level-1 crossing of the theta wall
// carries +theta).  The gamma word is the product of the negated crossings,
// and contracting it with the differentials along the same reduced word
// gives +1.

#pragma once

#include <vector>

#include "anw/affine_weyl.hpp"
#include "anw/nichols.hpp"

namespace anw {

struct AlcovePath {
    AffineElt target;
    std::vector<WallLabel> crossings;
};

// The wall between A° and s_j(A°), with the direction of crossing out of A°.
WallLabel simple_crossing(const RootSystem& sys, int j);

AlcovePath reduced_alcove_path(const RootSystem& sys, const AffineElt& x);

// Same walk along an arbitrary reduced word (for path-independence tests).
AlcovePath path_from_word(const RootSystem& sys, const std::vector<int>& word);

// [gamma] = [-beta_1,-k_1] ... [-beta_l,-k_l], canonicalized.
Tensor gamma_word(const Baf& baf, const AlcovePath& p);

// Folds the crossing reflections s_{c_l} ... s_{c_1}; equals the target for
// a valid path.
AffineElt replay_crossings(const RootSystem& sys, const AlcovePath& p);

// The module basis symbol used by the Bruhat-operator layer: the gamma word
// of the path for x^{-1}, rescaled by (-1)^{l(x)}.  In this normalization the
// differential contraction rule reads
//   [x] D_{[alpha,k]} = [x s_{alpha,k}]   (k > 0, length drop by one)
// with coefficient exactly +1.
Tensor bruhat_symbol(const Baf& baf, const AffineElt& x);

}  // namespace anw
