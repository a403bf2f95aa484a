#include "arrmono/monomial.hpp"

#include <stdexcept>

namespace arrmono {

std::string Mono::to_string() const {
    static const char* names[4] = {"x", "y", "z", "t"};
    std::string s;
    for (int v = 0; v < 4; ++v) {
        int ev = e(v);
        if (ev == 0) continue;
        if (!s.empty()) s += "*";
        s += names[v];
        if (ev > 1) s += "^" + std::to_string(ev);
    }
    return s.empty() ? "1" : s;
}

int64_t binom(int64_t n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

int64_t mono_count(int d, int nvars) {
    if (d < 0) return 0;
    return binom(d + nvars - 1, nvars - 1);
}

std::vector<Mono> mono_basis(int d, int nvars) {
    if (nvars != 3 && nvars != 4) throw std::invalid_argument("mono_basis: nvars must be 3 or 4");
    std::vector<Mono> out;
    if (d < 0) return out;
    out.reserve(static_cast<size_t>(mono_count(d, nvars)));
    for (int e1 = d; e1 >= 0; --e1)
        for (int e2 = d - e1; e2 >= 0; --e2) {
            if (nvars == 3) {
                out.emplace_back(e1, e2, d - e1 - e2, 0);
            } else {
                for (int e3 = d - e1 - e2; e3 >= 0; --e3)
                    out.emplace_back(e1, e2, e3, d - e1 - e2 - e3);
            }
        }
    return out;
}

int64_t mono_rank(Mono m, int nvars) {
    const int d = m.degree();
    const int e1 = m.e(0), e2 = m.e(1);
    if (nvars == 4) {
        // count of basis monomials strictly grlex-larger than m
        return binom(d - e1 + 2, 3) + binom(d - e1 - e2 + 1, 2) + m.e(3);
    }
    return binom(d - e1 + 1, 2) + m.e(2);
}

}  // namespace arrmono
