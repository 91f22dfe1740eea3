#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slsma/rng.hpp"

namespace slsma::bench {

// Unimodal and simple multimodal members of the CEC 2017 family. Base
// formulas and per-function search-range scaling follow the CEC 2017
// reference code; shift vectors and rotations are generated from a seed
// instead of being read from the official data files.
enum class FunctionId {
    BentCigar,
    Zakharov,
    Rosenbrock,
    Rastrigin,
    ExpandedSchafferF7,
    LunacekBiRastrigin,
    NoncontinuousRastrigin,
    Levy,
    Schwefel,
};

struct FunctionInfo {
    FunctionId id;
    std::string_view name;
    double bias;
};

inline constexpr std::array<FunctionInfo, 9> kFunctions{{
    {FunctionId::BentCigar, "bent-cigar", 100.0},
    {FunctionId::Zakharov, "zakharov", 200.0},
    {FunctionId::Rosenbrock, "rosenbrock", 300.0},
    {FunctionId::Rastrigin, "rastrigin", 400.0},
    {FunctionId::ExpandedSchafferF7, "expanded-scaffer-F7", 500.0},
    {FunctionId::LunacekBiRastrigin, "lunacek-bi-rastrigin", 600.0},
    {FunctionId::NoncontinuousRastrigin, "noncontinuous-rastrigin", 700.0},
    {FunctionId::Levy, "levy", 800.0},
    {FunctionId::Schwefel, "schwefel", 900.0},
}};

inline const FunctionInfo& info(FunctionId id) {
    for (const auto& f : kFunctions)
        if (f.id == id) return f;
    throw std::invalid_argument("unknown function id");
}

inline FunctionId parse_function(std::string_view name) {
    for (const auto& f : kFunctions)
        if (f.name == name) return f.id;
    throw std::invalid_argument("unknown benchmark function '" + std::string(name) + "'");
}

inline constexpr double kDomainLower = -100.0;
inline constexpr double kDomainUpper = 100.0;

struct BenchInstance {
    FunctionId id = FunctionId::BentCigar;
    std::size_t dim = 0;
    std::uint64_t seed = 0;
    std::vector<double> shift;
    Eigen::MatrixXd rotation;
    double bias = 0.0;

    std::string_view name() const { return info(id).name; }
};

/// Instance with zero shift and identity rotation; evaluates the bare base
/// function plus bias.
inline BenchInstance plain_instance(FunctionId id, std::size_t dim) {
    if (dim < 2) throw std::invalid_argument("benchmark dimension must be at least 2");
    return {id, dim, 0, std::vector<double>(dim, 0.0), Eigen::MatrixXd::Identity(dim, dim), info(id).bias};
}

/// Seeded instance: shift ~ U[-80, 80]^dim, rotation = Q factor of a Gaussian
/// matrix with column signs fixed so the factorisation is unique.
inline BenchInstance make_instance(FunctionId id, std::size_t dim, std::uint64_t seed) {
    if (dim < 2) throw std::invalid_argument("benchmark dimension must be at least 2");
    Rng rng(seed);
    std::vector<double> shift(dim);
    for (auto& s : shift) s = rng.uniform(-80.0, 80.0);

    Eigen::MatrixXd gauss(dim, dim);
    for (std::size_t c = 0; c < dim; ++c)
        for (std::size_t r = 0; r < dim; ++r) gauss(r, c) = rng.normal();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(gauss);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(dim, dim);
    const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (std::size_t c = 0; c < dim; ++c)
        if (r(c, c) < 0.0) q.col(c) *= -1.0;

    return {id, dim, seed, std::move(shift), std::move(q), info(id).bias};
}

namespace detail {

inline constexpr double kPi = std::numbers::pi;

inline double rastrigin_sum(std::span<const double> z) {
    double f = 0.0;
    for (double v : z) f += v * v - 10.0 * std::cos(2.0 * kPi * v) + 10.0;
    return f;
}

}  // namespace detail

/// bias + base(R * (scale * (x - shift))), where `scale` maps [-100, 100] onto
/// each function's native range.
inline double evaluate(const BenchInstance& inst, std::span<const double> x) {
    using detail::kPi;
    const std::size_t n = inst.dim;
    if (x.size() != n)
        throw std::invalid_argument("benchmark evaluate: got " + std::to_string(x.size()) + " coordinates, expected " +
                                    std::to_string(n));

    double scale = 1.0;
    switch (inst.id) {
        case FunctionId::Rosenbrock: scale = 2.048 / 100.0; break;
        case FunctionId::Rastrigin:
        case FunctionId::NoncontinuousRastrigin: scale = 5.12 / 100.0; break;
        case FunctionId::LunacekBiRastrigin: scale = 10.0 / 100.0; break;
        case FunctionId::Schwefel: scale = 1000.0 / 100.0; break;
        default: break;
    }

    Eigen::VectorXd y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = scale * (x[i] - inst.shift[i]);

    // Lunacek works on the unrotated, sign-adjusted point and rotates only the
    // cosine part.
    if (inst.id == FunctionId::LunacekBiRastrigin) {
        constexpr double mu0 = 2.5, d = 1.0;
        const double s = 1.0 - 1.0 / (2.0 * std::sqrt(static_cast<double>(n) + 20.0) - 8.2);
        const double mu1 = -std::sqrt((mu0 * mu0 - d) / s);
        Eigen::VectorXd zhat(n);
        for (std::size_t i = 0; i < n; ++i) zhat[i] = (inst.shift[i] < 0.0 ? -2.0 : 2.0) * y[i];
        double t1 = 0.0, t2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            t1 += zhat[i] * zhat[i];  // (zhat + mu0) - mu0
            const double u = zhat[i] + mu0 - mu1;
            t2 += u * u;
        }
        t2 = d * static_cast<double>(n) + s * t2;
        const Eigen::VectorXd rz = inst.rotation * zhat;
        double cs = 0.0;
        for (std::size_t i = 0; i < n; ++i) cs += std::cos(2.0 * kPi * rz[i]);
        return inst.bias + std::min(t1, t2) + 10.0 * (static_cast<double>(n) - cs);
    }

    Eigen::VectorXd z = inst.rotation * y;
    double f = 0.0;
    switch (inst.id) {
        case FunctionId::BentCigar: {
            f = z[0] * z[0];
            for (std::size_t i = 1; i < n; ++i) f += 1.0e6 * z[i] * z[i];
            break;
        }
        case FunctionId::Zakharov: {
            double s1 = 0.0, s2 = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                s1 += z[i] * z[i];
                s2 += 0.5 * static_cast<double>(i + 1) * z[i];
            }
            f = s1 + s2 * s2 + s2 * s2 * s2 * s2;
            break;
        }
        case FunctionId::Rosenbrock: {
            for (std::size_t i = 0; i + 1 < n; ++i) {
                const double a = z[i] + 1.0, b = z[i + 1] + 1.0;
                const double t = a * a - b;
                f += 100.0 * t * t + (a - 1.0) * (a - 1.0);
            }
            break;
        }
        case FunctionId::Rastrigin: f = detail::rastrigin_sum({z.data(), n}); break;
        case FunctionId::NoncontinuousRastrigin: {
            for (std::size_t i = 0; i < n; ++i)
                if (std::abs(z[i]) > 0.5) z[i] = std::round(2.0 * z[i]) / 2.0;
            f = detail::rastrigin_sum({z.data(), n});
            break;
        }
        case FunctionId::ExpandedSchafferF7: {
            for (std::size_t i = 0; i + 1 < n; ++i) {
                const double si = std::sqrt(z[i] * z[i] + z[i + 1] * z[i + 1]);
                const double t = std::sin(50.0 * std::pow(si, 0.2));
                f += std::sqrt(si) + std::sqrt(si) * t * t;
            }
            f = f * f / static_cast<double>((n - 1) * (n - 1));
            break;
        }
        case FunctionId::Levy: {
            // Optimum moved to the origin: w = 1 + z / 4.
            auto w = [&](std::size_t i) { return 1.0 + z[i] / 4.0; };
            const double s0 = std::sin(kPi * w(0));
            f = s0 * s0;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                const double wi = w(i);
                const double s = std::sin(kPi * wi + 1.0);
                f += (wi - 1.0) * (wi - 1.0) * (1.0 + 10.0 * s * s);
            }
            const double wn = w(n - 1);
            const double sn = std::sin(2.0 * kPi * wn);
            f += (wn - 1.0) * (wn - 1.0) * (1.0 + sn * sn);
            break;
        }
        case FunctionId::Schwefel: {
            constexpr double kOffset = 4.209687462275036e+002;
            for (std::size_t i = 0; i < n; ++i) {
                const double zi = z[i] + kOffset;
                if (zi > 500.0) {
                    const double m = 500.0 - std::fmod(zi, 500.0);
                    f -= m * std::sin(std::sqrt(m));
                    const double t = (zi - 500.0) / 100.0;
                    f += t * t / static_cast<double>(n);
                } else if (zi < -500.0) {
                    const double m = std::fmod(std::abs(zi), 500.0);
                    f -= (-500.0 + m) * std::sin(std::sqrt(500.0 - m));
                    const double t = (zi + 500.0) / 100.0;
                    f += t * t / static_cast<double>(n);
                } else {
                    f -= zi * std::sin(std::sqrt(std::abs(zi)));
                }
            }
            f += 4.189828872724338e+002 * static_cast<double>(n);
            break;
        }
        case FunctionId::LunacekBiRastrigin: break;  // handled above
    }
    return inst.bias + f;
}

}  // namespace slsma::bench
