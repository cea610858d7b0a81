#include "anw/root_system.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace anw {

namespace {
IntVec negate(const IntVec& v) {
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}
}  // namespace

RootSystem::RootSystem(Cartan cartan, std::size_t max_roots) : cartan_(std::move(cartan)) {
    const int r = cartan_.rank;
    simple_index_.resize(r);

    // Closure under simple reflections, acting simultaneously on root and
    // coroot coordinates:
    //   s_i(beta)      = beta      - <beta, alpha_i^vee> alpha_i
    //   s_i(beta^vee)  = beta^vee  - <alpha_i, beta^vee> alpha_i^vee
    auto add = [&](IntVec root, IntVec coroot) -> int {
        auto it = index_of_.find(root);
        if (it != index_of_.end()) return it->second;
        if (positive_.size() >= max_roots) throw std::runtime_error("not finite type");
        RootData d;
        d.coeffs = std::move(root);
        d.coroot_coeffs = std::move(coroot);
        d.height = 0;
        for (long long c : d.coeffs) d.height += c;
        positive_.push_back(d);
        int id = (int)positive_.size() - 1;
        index_of_[positive_[id].coeffs] = id;
        index_of_coroot_[positive_[id].coroot_coeffs] = id;
        return id;
    };

    for (int i = 0; i < r; ++i) {
        IntVec root(r, 0), coroot(r, 0);
        root[i] = 1;
        coroot[i] = 1;
        simple_index_[i] = add(std::move(root), std::move(coroot));
    }

    std::deque<int> queue;
    for (int i = 0; i < r; ++i) queue.push_back(simple_index_[i]);
    while (!queue.empty()) {
        int p = queue.front();
        queue.pop_front();
        for (int i = 0; i < r; ++i) {
            IntVec root = positive_[p].coeffs;
            IntVec coroot = positive_[p].coroot_coeffs;
            long long pr = 0, pc = 0;
            for (int j = 0; j < r; ++j) pr += cartan_.a[i][j] * root[j];   // <beta, alpha_i^vee>
            for (int j = 0; j < r; ++j) pc += cartan_.a[j][i] * coroot[j]; // <alpha_i, beta^vee>
            root[i] -= pr;
            coroot[i] -= pc;
            bool negative = std::all_of(root.begin(), root.end(), [](long long c) { return c <= 0; });
            if (negative) continue;  // the mirror of a stored positive root
            std::size_t before = positive_.size();
            int id = add(std::move(root), std::move(coroot));
            if (positive_.size() > before) queue.push_back(id);
        }
    }

    // Highest root: maximal height, and no theta + alpha_i is a root.
    theta_ = 0;
    for (int p = 1; p < (int)positive_.size(); ++p)
        if (positive_[p].height > positive_[theta_].height) theta_ = p;
    for (int i = 0; i < r; ++i) {
        IntVec up = positive_[theta_].coeffs;
        up[i] += 1;
        if (index_of_.count(up)) throw std::logic_error("root system: highest root is not highest");
    }

    sref_.assign(r, std::vector<int>(positive_.size(), 0));
    for (int i = 0; i < r; ++i) {
        for (int p = 0; p < (int)positive_.size(); ++p) {
            IntVec root = positive_[p].coeffs;
            long long pr = 0;
            for (int j = 0; j < r; ++j) pr += cartan_.a[i][j] * root[j];
            root[i] -= pr;
            bool negative = std::all_of(root.begin(), root.end(), [](long long c) { return c <= 0; });
            const IntVec& key = negative ? negate(root) : root;
            auto it = index_of_.find(key);
            if (it == index_of_.end()) throw std::logic_error("root system: reflection left the root set");
            sref_[i][p] = negative ? -(it->second + 1) : (it->second + 1);
        }
    }
}

IntVec RootSystem::root_coeffs(RootRef rr) const {
    const IntVec& v = positive_[rr.index].coeffs;
    return rr.sign > 0 ? v : negate(v);
}

IntVec RootSystem::coroot_coeffs(RootRef rr) const {
    const IntVec& v = positive_[rr.index].coroot_coeffs;
    return rr.sign > 0 ? v : negate(v);
}

std::optional<RootRef> RootSystem::find_root(const IntVec& coeffs) const {
    auto it = index_of_.find(coeffs);
    if (it != index_of_.end()) return RootRef{it->second, +1};
    it = index_of_.find(negate(coeffs));
    if (it != index_of_.end()) return RootRef{it->second, -1};
    return std::nullopt;
}

std::optional<RootRef> RootSystem::find_root_by_coroot(const IntVec& coroot_coeffs) const {
    auto it = index_of_coroot_.find(coroot_coeffs);
    if (it != index_of_coroot_.end()) return RootRef{it->second, +1};
    it = index_of_coroot_.find(negate(coroot_coeffs));
    if (it != index_of_coroot_.end()) return RootRef{it->second, -1};
    return std::nullopt;
}

long long RootSystem::pair_root_coroot(const IntVec& root_coeffs, const IntVec& coroot_coeffs) const {
    long long acc = 0;
    for (int i = 0; i < cartan_.rank; ++i)
        for (int j = 0; j < cartan_.rank; ++j)
            acc += coroot_coeffs[i] * cartan_.a[i][j] * root_coeffs[j];
    return acc;
}

long long RootSystem::pair_weight_coroot(const IntVec& weight_coeffs, const IntVec& coroot_coeffs) const {
    long long acc = 0;
    for (int i = 0; i < cartan_.rank; ++i) acc += weight_coeffs[i] * coroot_coeffs[i];
    return acc;
}

long long RootSystem::pairing(RootRef root, RootRef coroot_of) const {
    return pair_root_coroot(root_coeffs(root), coroot_coeffs(coroot_of));
}

RootRef RootSystem::reflect_simple(int i, RootRef beta) const {
    int enc = sref_[i][beta.index];
    int idx = (enc > 0 ? enc : -enc) - 1;
    int sgn = (enc > 0 ? +1 : -1) * beta.sign;
    return {idx, sgn};
}

RootRef RootSystem::reflect(RootRef alpha, RootRef beta) const {
    // s_alpha(beta) = beta - <beta, alpha^vee> alpha; sign of alpha is irrelevant.
    long long c = pairing(beta, RootRef{alpha.index, +1});
    IntVec out = root_coeffs(beta);
    const IntVec& a = positive_[alpha.index].coeffs;
    for (int j = 0; j < cartan_.rank; ++j) out[j] -= c * a[j];
    auto found = find_root(out);
    if (!found) throw std::domain_error("reflect: image is not a root");
    return *found;
}

long long RootSystem::two_rho_pairing(RootRef beta) const {
    long long h = 0;
    for (long long c : positive_[beta.index].coroot_coeffs) h += c;
    return 2 * h * beta.sign;
}

IntVec RootSystem::root_to_weight_coords(const IntVec& root_coeffs) const {
    IntVec out(cartan_.rank, 0);
    for (int i = 0; i < cartan_.rank; ++i)
        for (int j = 0; j < cartan_.rank; ++j)
            out[i] += cartan_.a[i][j] * root_coeffs[j];
    return out;
}

long long RootSystem::weyl_order() const {
    if (weyl_order_ != 0) return weyl_order_;
    // Enumerate the signed permutations of the positive roots generated by
    // the simple reflection tables.
    std::set<std::vector<int>> seen;
    std::vector<int> id(positive_.size());
    for (int p = 0; p < (int)positive_.size(); ++p) id[p] = p + 1;
    std::deque<std::vector<int>> queue{id};
    seen.insert(id);
    while (!queue.empty()) {
        std::vector<int> cur = queue.front();
        queue.pop_front();
        for (int i = 0; i < cartan_.rank; ++i) {
            std::vector<int> next(cur.size());
            for (int p = 0; p < (int)cur.size(); ++p) {
                int enc = cur[p];
                int idx = (enc > 0 ? enc : -enc) - 1;
                int sgn = enc > 0 ? +1 : -1;
                int img = sref_[i][idx];
                next[p] = sgn > 0 ? img : -img;
            }
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    weyl_order_ = (long long)seen.size();
    return weyl_order_;
}

RootRef RootSystem::eps_root(int i, int j) const {
    // A_{n-1} realization: eps_i - eps_j = alpha_i + ... + alpha_{j-1} (i < j).
    const int n = cartan_.rank + 1;
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw std::domain_error("eps_root: indices out of range");
    for (int k = 0; k + 1 < cartan_.rank; ++k)
        if (cartan_.a[k][k + 1] != -1 || cartan_.a[k + 1][k] != -1)
            throw std::domain_error("eps_root: system is not of type A");
    bool flip = i > j;
    if (flip) std::swap(i, j);
    IntVec coeffs(cartan_.rank, 0);
    for (int k = i; k < j; ++k) coeffs[k - 1] = 1;
    auto found = find_root(coeffs);
    if (!found) throw std::logic_error("eps_root: not a root");
    return flip ? found->negated() : *found;
}

}  // namespace anw
