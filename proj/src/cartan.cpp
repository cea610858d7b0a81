#include "anw/cartan.hpp"

#include <numeric>
#include <stdexcept>

namespace anw {

Cartan Cartan::from_matrix(const IntMat& a) {
    const int r = (int)a.size();
    if (r == 0) throw std::invalid_argument("cartan: empty matrix");
    for (const auto& row : a)
        if ((int)row.size() != r) throw std::invalid_argument("cartan: not square");
    for (int i = 0; i < r; ++i) {
        if (a[i][i] != 2) throw std::invalid_argument("cartan: diagonal entry != 2");
        for (int j = 0; j < r; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0) throw std::invalid_argument("cartan: positive off-diagonal entry");
            if ((a[i][j] == 0) != (a[j][i] == 0))
                throw std::invalid_argument("cartan: asymmetric zero pattern");
        }
    }

    // Symmetrizers: propagate d[j]/d[i] = a[i][j]/a[j][i] along the Dynkin
    // graph, then clear denominators.
    Cartan c;
    c.rank = r;
    c.a = a;
    std::vector<std::pair<long long, long long>> ratio(r, {0, 0});  // d[i] as num/den
    ratio[0] = {1, 1};
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 0; i < r; ++i) {
            if (ratio[i].first == 0) continue;
            for (int j = 0; j < r; ++j) {
                if (i == j || a[i][j] == 0 || ratio[j].first != 0) continue;
                // d[i]a[i][j] = d[j]a[j][i]  =>  d[j] = d[i] * a[i][j]/a[j][i]
                long long num = ratio[i].first * a[i][j];
                long long den = ratio[i].second * a[j][i];
                if (den < 0) { num = -num; den = -den; }
                long long g = std::gcd(num < 0 ? -num : num, den);
                ratio[j] = {num / g, den / g};
                progress = true;
            }
        }
    }
    for (int i = 0; i < r; ++i)
        if (ratio[i].first == 0)
            throw std::invalid_argument("cartan: disconnected diagram (split the factors)");
    long long lcm_den = 1;
    for (int i = 0; i < r; ++i) lcm_den = std::lcm(lcm_den, ratio[i].second);
    c.d.resize(r);
    for (int i = 0; i < r; ++i) c.d[i] = ratio[i].first * (lcm_den / ratio[i].second);
    for (int i = 0; i < r; ++i)
        if (c.d[i] <= 0) throw std::invalid_argument("cartan: no positive symmetrizer");
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (c.d[i] * a[i][j] != c.d[j] * a[j][i])
                throw std::invalid_argument("cartan: not symmetrizable");
    return c;
}

Cartan Cartan::preset(const std::string& name) {
    if (name.size() == 2 && name[0] == 'A' && name[1] >= '1' && name[1] <= '7') {
        int r = name[1] - '0';
        IntMat a(r, IntVec(r, 0));
        for (int i = 0; i < r; ++i) {
            a[i][i] = 2;
            if (i + 1 < r) { a[i][i + 1] = -1; a[i + 1][i] = -1; }
        }
        return from_matrix(a);
    }
    if (name == "B2") return from_matrix({{2, -1}, {-2, 2}});
    if (name == "G2") return from_matrix({{2, -3}, {-1, 2}});
    throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace anw
