#include "acm/generate.hpp"

#include <random>

namespace acm {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return splitmix64(base ^ splitmix64(stream));
}

Matrix random_gaussian(Index n, std::uint64_t seed) {
    if (n < 1) throw dimension_error("random_gaussian requires n >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(n, n);
    for (Index j = 0; j < n; ++j)
        for (Index i = 0; i < n; ++i) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            g(i, j) = Complex(re, im);
        }
    return g;
}

UnitaryBasis random_unitary(Index n, std::uint64_t seed) {
    Matrix g = random_gaussian(n, seed);
    Eigen::HouseholderQR<Matrix> qr(g);
    return UnitaryBasis(Matrix(qr.householderQ()));
}

std::vector<HermitianMatrix> generate_family(Index n, int p, double epsilon,
                                             std::uint64_t seed) {
    if (n < 1) throw dimension_error("generate_family requires n >= 1");
    if (p < 1) throw domain_error("generate_family requires p >= 1");
    if (!(epsilon >= 0.0)) throw domain_error("generate_family requires epsilon >= 0");

    const UnitaryBasis q = random_unitary(n, derive_seed(seed, 1));

    std::vector<HermitianMatrix> family;
    family.reserve(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) {
        std::mt19937_64 rng(derive_seed(seed, 100 + static_cast<std::uint64_t>(i)));
        std::uniform_real_distribution<double> uniform(-1.0, 1.0);
        RealVector spectrum(n);
        for (Index j = 0; j < n; ++j) spectrum(j) = uniform(rng);

        Matrix base = q.q * spectrum.cast<Complex>().asDiagonal() * q.q.adjoint();
        HermitianMatrix hi = hermitize(base);
        if (epsilon > 0.0) {
            HermitianMatrix noise = hermitize(
                random_gaussian(n, derive_seed(seed, 200 + static_cast<std::uint64_t>(i))));
            noise.data *= epsilon / op_norm(noise);
            hi.data += noise.data;
        }
        const double norm = op_norm(hi);
        if (norm > 1.0) hi.data *= 1.0 / norm;
        family.push_back(std::move(hi));
    }
    return family;
}

}  // namespace acm
