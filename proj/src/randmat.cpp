#include "kerov/randmat.hpp"

#include <cmath>
#include <vector>

#include "kerov/kernels.hpp"

namespace kerov {

const char* to_string(EntryDist dist) {
    switch (dist) {
        case EntryDist::gaussian: return "gaussian";
        case EntryDist::rademacher: return "rademacher";
        case EntryDist::uniform_scaled: return "uniform";
    }
    return "?";
}

double draw_entry(Xoshiro256pp& gen, EntryDist dist) {
    switch (dist) {
        case EntryDist::gaussian: return gen.normal();
        case EntryDist::rademacher: return gen.uniform01() < 0.5 ? 1.0 : -1.0;
        case EntryDist::uniform_scaled: return std::sqrt(3.0) * (2.0 * gen.uniform01() - 1.0);
    }
    return 0.0;
}

int m_of_n(int n, double alpha) {
    if (!(alpha >= 1.0)) throw AlphaOutOfRange(alpha);
    return int(std::floor(alpha * double(n) + 0.5));
}

SymMatrix sample_wigner(int n, EntryDist dist, RngSpec rng) {
    Xoshiro256pp gen(rng);
    SymMatrix S(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) S.set(i, j, draw_entry(gen, dist));
    return S;
}

SymMatrix sample_wishart(int n, double alpha, EntryDist dist, RngSpec rng, int jobs) {
    const int m = m_of_n(n, alpha);
    Xoshiro256pp gen(rng);
    std::vector<double> W(std::size_t(n) * std::size_t(m));
    for (auto& w : W) w = draw_entry(gen, dist);
    SymMatrix Y(n);
    // gram writes both mirror entries of Y from the same dot product, keeping
    // symmetry exact and results independent of the thread count
    kernels::gram(W.data(), n, m, Y.mutable_data(), jobs);
    return Y;
}

}  // namespace kerov
