#include "anw/polynomial.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace anw {

Polynomial Polynomial::constant(int rank, Rat c) {
    Polynomial f(rank);
    f.add_term(Mono(rank, 0), c);
    return f;
}

Polynomial Polynomial::variable(int rank, int i) {
    Polynomial f(rank);
    Mono m(rank, 0);
    m[i] = 1;
    f.add_term(m, Rat(1));
    return f;
}

Polynomial Polynomial::weight_form(const RootSystem& sys, const IntVec& weight_coeffs) {
    Polynomial f(sys.rank());
    for (int i = 0; i < sys.rank(); ++i) {
        if (weight_coeffs[i] == 0) continue;
        Mono m(sys.rank(), 0);
        m[i] = 1;
        f.add_term(m, Rat(weight_coeffs[i]));
    }
    return f;
}

Polynomial Polynomial::root_form(const RootSystem& sys, RootRef alpha) {
    return weight_form(sys, sys.root_to_weight_coords(sys.root_coeffs(alpha)));
}

Polynomial Polynomial::eps_form(const RootSystem& sys, int i) {
    const int n = sys.rank() + 1;
    if (i < 1 || i > n) throw std::domain_error("eps_form: index out of range");
    (void)sys.eps_root(1, 2);  // validates type A
    Polynomial f(sys.rank());
    if (i <= sys.rank()) f += variable(sys.rank(), i - 1);
    if (i >= 2) f -= variable(sys.rank(), i - 2);
    return f;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Mono(rank_, 0));
}

Rat Polynomial::constant_term() const {
    auto it = terms_.find(Mono(rank_, 0));
    return it == terms_.end() ? Rat(0) : it->second;
}

long long Polynomial::degree() const {
    long long d = -1;
    for (const auto& [m, c] : terms_) {
        (void)c;
        long long t = 0;
        for (int e : m) t += e;
        d = std::max(d, t);
    }
    return d;
}

Polynomial& Polynomial::add_term(const Mono& m, const Rat& c) {
    if (c.is_zero()) return *this;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

Polynomial operator-(const Polynomial& f) {
    Polynomial out(f.rank_);
    for (const auto& [m, c] : f.terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    Polynomial out = f;
    for (const auto& [m, c] : g.terms_) out.add_term(m, c);
    return out;
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    Polynomial out(f.rank_);
    for (const auto& [mf, cf] : f.terms_) {
        for (const auto& [mg, cg] : g.terms_) {
            Mono m(mf);
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += mg[i];
            out.add_term(m, cf * cg);
        }
    }
    return out;
}

Polynomial operator*(const Rat& c, const Polynomial& f) {
    Polynomial out(f.rank_);
    if (c.is_zero()) return out;
    for (const auto& [m, cf] : f.terms_) out.terms_.emplace(m, c * cf);
    return out;
}

bool operator<(const Polynomial& f, const Polynomial& g) {
    return std::lexicographical_compare(
        f.terms_.begin(), f.terms_.end(), g.terms_.begin(), g.terms_.end(),
        [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            const Rat &x = a.second, &y = b.second;
            return x < y;
        });
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    Polynomial out(rank_);
    for (const auto& [m, c] : terms_) {
        Polynomial term = constant(rank_, c);
        for (int i = 0; i < rank_; ++i)
            for (int e = 0; e < m[i]; ++e) term *= images[i];
        out += term;
    }
    return out;
}

Polynomial Polynomial::weyl_act(const RootSystem& sys, const WeylElt& w) const {
    std::vector<Polynomial> images;
    images.reserve(rank_);
    for (int j = 0; j < rank_; ++j) {
        IntVec e(rank_, 0);
        e[j] = 1;
        images.push_back(weight_form(sys, w.act_weight(sys, e)));
    }
    return substitute(images);
}

Polynomial Polynomial::weyl_act(const RootSystem& sys, const AffineElt& x) const {
    std::vector<Polynomial> images;
    images.reserve(rank_);
    for (int j = 0; j < rank_; ++j) {
        IntVec e(rank_, 0);
        e[j] = 1;
        Polynomial img = weight_form(sys, x.finite().act_weight(sys, e));
        img += constant(rank_, Rat(-x.translation_part()[j]));
        images.push_back(std::move(img));
    }
    return substitute(images);
}

Polynomial Polynomial::divided_difference(const RootSystem& sys, RootRef alpha) const {
    Polynomial num = *this - weyl_act(sys, WeylElt::reflection(sys, alpha));
    return divide_exact_linear(num, root_form(sys, alpha));
}

Polynomial divide_exact_linear(const Polynomial& f, const Polynomial& g) {
    int rank = f.rank();
    int pivot = -1;
    Rat pivot_coeff;
    for (const auto& [m, c] : g.terms()) {
        long long deg = 0;
        int var = -1;
        for (int i = 0; i < rank; ++i) {
            deg += m[i];
            if (m[i] == 1) var = i;
        }
        if (deg != 1) throw std::logic_error("divide_exact_linear: divisor not homogeneous linear");
        if (pivot == -1) {
            pivot = var;
            pivot_coeff = c;
        }
    }
    if (pivot == -1) throw std::logic_error("divide_exact_linear: zero divisor");

    // Term order with the pivot exponent primary; the leading term of the
    // divisor is then pivot_coeff * w_pivot and long division terminates.
    auto less = [pivot](const Mono& a, const Mono& b) {
        if (a[pivot] != b[pivot]) return a[pivot] < b[pivot];
        return a < b;
    };

    Polynomial rem = f;
    Polynomial quot(rank);
    while (!rem.is_zero()) {
        auto lead = rem.terms().begin();
        for (auto it = rem.terms().begin(); it != rem.terms().end(); ++it)
            if (less(lead->first, it->first)) lead = it;
        Mono m = lead->first;
        Rat c = lead->second;
        if (m[pivot] == 0)
            throw std::logic_error("divide_exact_linear: nonzero remainder");
        m[pivot] -= 1;
        Rat q = c / pivot_coeff;
        quot.add_term(m, q);
        Polynomial qt(rank);
        qt.add_term(m, q);
        rem -= qt * g;
    }
    return quot;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest exponent vector first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat a = c;
        if (first) {
            if (a.sign() < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool is_const = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
        bool wrote_coeff = false;
        if (is_const || !a.is_one()) {
            out << a.str();
            wrote_coeff = true;
        }
        bool first_var = true;
        for (int i = 0; i < rank_; ++i) {
            if (m[i] == 0) continue;
            if (wrote_coeff || !first_var) out << "*";
            out << "w" << (i + 1);
            if (m[i] > 1) out << "^" << m[i];
            first_var = false;
            wrote_coeff = wrote_coeff || true;
        }
    }
    return out.str();
}

Polynomial Polynomial::parse(int rank, const std::string& text) {
    // sum of terms:  term := [rat] {('*')? var('^'int)?}*,  var := w<idx>
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && isspace((unsigned char)text[pos])) ++pos; };
    auto parse_int = [&]() -> long long {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && isdigit((unsigned char)text[pos])) ++pos;
        if (start == pos) throw std::invalid_argument("polynomial parse: expected integer at " + std::to_string(start));
        return std::stoll(text.substr(start, pos - start));
    };

    Polynomial out(rank);
    skip_ws();
    bool first = true;
    while (pos < text.size()) {
        int sign = 1;
        skip_ws();
        if (!first || text[pos] == '+' || text[pos] == '-') {
            if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-'))
                throw std::invalid_argument("polynomial parse: expected +/- at " + std::to_string(pos));
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        }
        first = false;
        skip_ws();
        Rat coeff(sign);
        bool have_coeff = false;
        if (pos < text.size() && isdigit((unsigned char)text[pos])) {
            long long num = parse_int();
            long long den = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                den = parse_int();
            }
            coeff = Rat(sign * num, den);
            have_coeff = true;
        }
        Mono m(rank, 0);
        bool have_var = false;
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
            if (pos >= text.size() || text[pos] != 'w') break;
            ++pos;
            long long idx = parse_int();
            if (idx < 1 || idx > rank) throw std::invalid_argument("polynomial parse: bad variable index");
            long long exp = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                exp = parse_int();
                if (exp < 0) throw std::invalid_argument("polynomial parse: negative exponent");
            }
            m[idx - 1] += (int32_t)exp;
            have_var = true;
        }
        if (!have_coeff && !have_var)
            throw std::invalid_argument("polynomial parse: empty term at " + std::to_string(pos));
        out.add_term(m, coeff);
        skip_ws();
    }
    return out;
}

Polynomial random_polynomial(int rank, std::uint64_t seed, int max_degree, int max_terms) {
    std::mt19937_64 rng(seed);
    Polynomial f(rank);
    int terms = 1 + (int)(rng() % max_terms);
    for (int t = 0; t < terms; ++t) {
        Mono m(rank, 0);
        int deg = (int)(rng() % (max_degree + 1));
        for (int d = 0; d < deg; ++d) m[rng() % rank] += 1;
        long long num = (long long)(rng() % 9) - 4;
        long long den = 1 + (long long)(rng() % 3);
        f.add_term(m, Rat(num, den));
    }
    return f;
}

}  // namespace anw
