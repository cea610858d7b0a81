// The affine nil-Coxeter algebra A_0 on the basis {tau_x} with the
// length-additive product, its divided-difference action on S, and the
// nil-Hecke algebra A = A_0 x| S in the normal form sum f_x tau_x.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "anw/affine_weyl.hpp"
#include "anw/polynomial.hpp"
#include "anw/rational.hpp"

namespace anw {

using NilCoxeterElt = std::map<AffineElt, Rat>;
using NilHeckeElt = std::map<AffineElt, Polynomial>;

NilCoxeterElt nc_basis(const AffineElt& x, Rat c = Rat(1));
NilCoxeterElt nc_generator(const RootSystem& sys, int i);  // tau_{s_i}

// tau_x tau_y = tau_{xy} when lengths add, else 0; bilinear.
NilCoxeterElt nc_mul(const RootSystem& sys, const NilCoxeterElt& a, const NilCoxeterElt& b);

// The representation tau_i -> d_{alpha_i} (i >= 1), tau_0 -> -d_theta.
Polynomial generator_act(const RootSystem& sys, int i, const Polynomial& f);
Polynomial act_on_poly(const RootSystem& sys, const NilCoxeterElt& a, const Polynomial& f);

NilHeckeElt nh_from_nc(const RootSystem& sys, const NilCoxeterElt& a);
NilHeckeElt nh_scalar(const RootSystem& sys, const Polynomial& f);
NilHeckeElt nh_basis(const RootSystem& sys, const AffineElt& x, Polynomial f);

// Cross-product multiplication: tau letters are pushed right through the
// polynomial coefficients generator by generator, using
//   tau_i f = d_{alpha_i}(f) + s_{alpha_i,0}(f) tau_i      (i = 1..r)
//   tau_0 f = d_{alpha_0}(f) + s_{theta,0}(f)  tau_0
NilHeckeElt nh_mul(const RootSystem& sys, const NilHeckeElt& a, const NilHeckeElt& b);

Polynomial act_on_poly(const RootSystem& sys, const NilHeckeElt& a, const Polynomial& f);

// true iff a commutes with every w_1..w_r (they generate S).
bool centralizer_test(const RootSystem& sys, const NilHeckeElt& a);

// The order of s_i s_j in W_af, or 0 if it exceeds the cap (infinite order).
long long coxeter_order(const RootSystem& sys, int i, int j, long long cap = 16);

struct RelationCheck {
    std::string name;
    bool pass = false;
};

// Checks the defining nil-Coxeter relations inside the tau_x model:
// tau_i^2 = 0 and the alternating braid relations for every finite m_ij.
std::vector<RelationCheck> verify_nilcoxeter_relations(const RootSystem& sys);

}  // namespace anw
