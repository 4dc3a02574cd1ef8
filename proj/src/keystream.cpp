#include "ieae/keystream.hpp"

#include <cmath>

#include "ieae/image.hpp"

namespace ieae {

ChaoticSeed seed_from_lambda(double lambda) {
    if (!std::isfinite(lambda)) throw std::invalid_argument("seed_from_lambda: non-finite lambda");
    const double a = std::fabs(lambda);
    ChaoticSeed s;
    s.lambda = lambda;
    s.x0_logistic = frac_scaled(a, 8);
    s.xy0_arnold = {a, frac_scaled(a, 5)};
    return s;
}

std::vector<double> logistic_iterate(double x0, double mu, std::size_t n) {
    if (!(mu >= 3.9 && mu <= 4.0)) throw KeyDomainError("logistic mu outside [3.9, 4]");
    if (!(x0 >= 0.0 && x0 <= 1.0)) throw std::invalid_argument("logistic x0 outside [0, 1]");
    std::vector<double> orbit;
    orbit.reserve(n);
    double x = x0;
    for (std::size_t i = 0; i < n; ++i) {
        x = (mu * x) * (1.0 - x);
        orbit.push_back(x);
    }
    return orbit;
}

std::vector<std::pair<double, double>> arnold_iterate(std::pair<double, double> xy0,
                                                      long a, long b, std::size_t n) {
    if (a < 1 || b < 1) throw KeyDomainError("arnold controls must be positive");
    std::vector<std::pair<double, double>> orbit;
    orbit.reserve(n);
    auto [x, y] = xy0;
    const double m21 = static_cast<double>(b);
    const double m22 = static_cast<double>(1 + a * b);
    for (std::size_t i = 0; i < n; ++i) {
        const double nx = x + static_cast<double>(a) * y;
        const double ny = m21 * x + m22 * y;
        x = nx - std::floor(nx);
        y = ny - std::floor(ny);
        orbit.emplace_back(x, y);
    }
    return orbit;
}

ByteSequence::ByteSequence(const ChaoticSeed& seed, double mu) : mu_(mu), x_(seed.x0_logistic) {
    if (!(mu >= 3.9 && mu <= 4.0)) throw KeyDomainError("logistic mu outside [3.9, 4]");
}

void ByteSequence::ensure(std::size_t min_len) {
    while (values_.size() < min_len) {
        x_ = (mu_ * x_) * (1.0 - x_);
        values_.push_back(convert_byte(x_));
    }
}

std::uint8_t ByteSequence::at1(std::size_t index1) {
    if (index1 == 0) throw std::out_of_range("x-bar is 1-indexed");
    ensure(index1);
    return values_[index1 - 1];
}

ByteSequence gen_xbar(const ChaoticSeed& seed, double mu, std::size_t min_len) {
    ByteSequence xbar(seed, mu);
    xbar.ensure(min_len);
    return xbar;
}

std::vector<std::uint8_t> build_D(const ChaoticSeed& seed, long a, long b,
                                  std::size_t r, int rows, int cols) {
    const std::size_t total = static_cast<std::size_t>(rows) * cols;
    if (total % 2 != 0) throw LayoutError("build_D: element count must be even");
    const std::size_t q = r + total / 2;
    const auto orbit = arnold_iterate(seed.xy0_arnold, a, b, q);
    std::vector<std::uint8_t> d;
    d.reserve(total);
    for (std::size_t i = r; i < q; ++i) {
        d.push_back(convert_byte(orbit[i].first));
        d.push_back(convert_byte(orbit[i].second));
    }
    return d;
}

std::vector<std::uint8_t> build_C0(ByteSequence& xbar, int mu3, int p1, int p2) {
    if (mu3 < 1 || mu3 > 256) throw std::invalid_argument("mu3 out of [1, 256]");
    const std::size_t count = static_cast<std::size_t>(p1) * p2;
    xbar.ensure(static_cast<std::size_t>(mu3) + count - 1);
    std::vector<std::uint8_t> c0;
    c0.reserve(count);
    for (std::size_t i = 0; i < count; ++i) c0.push_back(xbar.at1(mu3 + i));
    return c0;
}

}  // namespace ieae
