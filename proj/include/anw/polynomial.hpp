// The ring S = Sym P_Q: exact multivariate polynomials in the fundamental
// weight coordinates w1..wr, with the (affine) Weyl action and divided
// difference operators.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "anw/affine_weyl.hpp"
#include "anw/rational.hpp"
#include "anw/root_system.hpp"

namespace anw {

using Mono = std::vector<int32_t>;

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int rank) : rank_(rank) {}

    static Polynomial constant(int rank, Rat c);
    static Polynomial variable(int rank, int i);  // w_{i+1}, 0-based i
    // Linear form from fundamental-weight coordinates.
    static Polynomial weight_form(const RootSystem& sys, const IntVec& weight_coeffs);
    // A root as a linear form (root coords -> weight coords via the Cartan matrix).
    static Polynomial root_form(const RootSystem& sys, RootRef alpha);
    // Type A eps_i (1-based): eps_i = w_i - w_{i-1}, with w_0 = w_n = 0.
    static Polynomial eps_form(const RootSystem& sys, int i);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_term() const;
    long long degree() const;  // -1 for the zero polynomial
    const std::map<Mono, Rat>& terms() const { return terms_; }

    Polynomial& add_term(const Mono& m, const Rat& c);

    friend Polynomial operator-(const Polynomial& f);
    friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator*(const Rat& c, const Polynomial& f);
    Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
    Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
    Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

    friend bool operator==(const Polynomial& f, const Polynomial& g) {
        return f.terms_ == g.terms_;
    }
    friend bool operator!=(const Polynomial& f, const Polynomial& g) { return !(f == g); }
    friend bool operator<(const Polynomial& f, const Polynomial& g);

    // Substitutes images[i] for variable i.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    // Finite Weyl action (ring automorphism).
    Polynomial weyl_act(const RootSystem& sys, const WeylElt& w) const;
    // Affine action of x = w * t_lam: t_lam shifts each linear form mu by the
    // constant -<mu, lam>, then w acts linearly.
    Polynomial weyl_act(const RootSystem& sys, const AffineElt& x) const;

    // (f - s_alpha f) / alpha, exact.  For a negative root this is -d_{-alpha}.
    Polynomial divided_difference(const RootSystem& sys, RootRef alpha) const;

    std::string str() const;  // canonical form, e.g. "3/2*w1^2*w2 - w3"
    static Polynomial parse(int rank, const std::string& text);

private:
    int rank_ = 0;
    std::map<Mono, Rat> terms_;
};

// Exact division f / g for a homogeneous linear divisor g; throws
// std::logic_error if the division leaves a remainder.
Polynomial divide_exact_linear(const Polynomial& f, const Polynomial& g);

Polynomial random_polynomial(int rank, std::uint64_t seed, int max_degree = 5,
                             int max_terms = 6);

}  // namespace anw
