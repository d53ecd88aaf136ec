#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace vade {

/// Exact element of the cyclotomic ring Z[zeta_N], zeta_N = exp(2*pi*i/N).
///
/// Stored canonically in the power basis 1, zeta, ..., zeta^{phi(N)-1},
/// reduced modulo the N-th cyclotomic polynomial, so equal elements have
/// identical coefficient vectors. Values are immutable in spirit: all
/// operations return new values and never mutate shared state, so they are
/// safe to use and share across threads.
///
/// The order N is carried on every value; arithmetic between different
/// orders throws instead of coercing.
class Cyclotomic {
public:
    static Cyclotomic zero(int64_t order);
    static Cyclotomic one(int64_t order);
    static Cyclotomic integer(int64_t order, int64_t value);
    /// zeta_N^exponent, exponent taken mod N.
    static Cyclotomic root(int64_t order, int64_t exponent);
    /// sum_e coeffs[e] * zeta_N^e, reduced to the canonical basis.
    static Cyclotomic from_coeffs(int64_t order, std::vector<int64_t> coeffs);

    int64_t order() const { return order_; }
    /// Canonical coefficients, length phi(order).
    const std::vector<int64_t>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(int64_t scalar);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator*(Cyclotomic a, int64_t s) { return a *= s; }
    friend Cyclotomic operator*(int64_t s, Cyclotomic a) { return a *= s; }

    bool operator==(const Cyclotomic&) const = default;

    /// x^e for e >= 0.
    Cyclotomic pow(int64_t e) const;

    /// Numerical evaluation at zeta_N -> exp(2*pi*i/N).
    std::complex<double> embed() const;

private:
    Cyclotomic(int64_t order, std::vector<int64_t> coeffs);

    int64_t order_;
    std::vector<int64_t> coeffs_;
};

/// Quantum integer [n] = (q^n - q^{-n})/(q - q^{-1}) as an exact element of
/// Z[zeta_{4l}], where q = exp(i*pi/l) = zeta_{4l}^2. Under the embedding
/// this is sin(n*pi/l)/sin(pi/l). Requires l >= 2.
Cyclotomic qint(int64_t n, int64_t l);

/// Ribbon twist theta_n = q^{n(n+2)/2} = zeta_{4(k+2)}^{n(n+2)} of the
/// simple object V_n at level k. Requires 0 <= n <= k.
Cyclotomic twist(int64_t n, int64_t k);

int64_t euler_phi(int64_t n);

/// Phi_n, little-endian, monic. Cached; computed by dividing x^n - 1 by the
/// cyclotomic polynomials of the proper divisors of n.
const std::vector<int64_t>& cyclotomic_polynomial(int64_t n);

/// {"order": N, "coeffs": [...]}
std::string json_string(const Cyclotomic& x);

}  // namespace vade
