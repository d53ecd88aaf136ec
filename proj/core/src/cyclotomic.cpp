#include "vade/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace vade {

namespace {

int64_t mod_floor(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

using Poly = std::vector<int64_t>;  // little-endian

// Exact division by a monic divisor; throws if the remainder is non-zero.
Poly poly_div_exact(const Poly& num, const Poly& den) {
    Poly rem = num;
    const int64_t dd = (int64_t)den.size() - 1;
    Poly quot(rem.size() > (size_t)dd ? rem.size() - dd : 1, 0);
    for (int64_t d = (int64_t)rem.size() - 1; d >= dd; --d) {
        int64_t c = rem[d];
        if (c == 0) continue;
        int64_t shift = d - dd;
        quot[shift] = c;
        for (int64_t i = 0; i <= dd; ++i) rem[shift + i] -= c * den[i];
    }
    for (int64_t v : rem)
        if (v != 0) throw std::logic_error("cyclotomic: non-exact polynomial division");
    while (quot.size() > 1 && quot.back() == 0) quot.pop_back();
    return quot;
}

struct PhiRegistry {
    std::mutex mu;
    std::map<int64_t, Poly> table;
};

PhiRegistry& registry() {
    static PhiRegistry* r = new PhiRegistry;
    return *r;
}

// Fills the registry with Phi_d for every divisor d of n.
const Poly& cyclotomic_locked(int64_t n, PhiRegistry& reg) {
    auto it = reg.table.find(n);
    if (it != reg.table.end()) return it->second;
    for (int64_t d = 1; d <= n; ++d) {
        if (n % d != 0 || reg.table.count(d)) continue;
        Poly p(d + 1, 0);
        p[0] = -1;
        p[d] = 1;  // x^d - 1
        for (int64_t e = 1; e < d; ++e)
            if (d % e == 0) p = poly_div_exact(p, reg.table.at(e));
        reg.table.emplace(d, std::move(p));
    }
    return reg.table.at(n);
}

void reduce_mod(Poly& p, const Poly& phi) {
    const size_t deg = phi.size() - 1;
    if (p.size() > deg) {
        for (size_t e = p.size(); e-- > deg;) {
            int64_t c = p[e];
            if (c == 0) continue;
            p[e] = 0;
            const size_t base = e - deg;
            for (size_t i = 0; i < deg; ++i) p[base + i] -= c * phi[i];
        }
    }
    p.resize(deg, 0);
}

void check_order(int64_t order) {
    if (order < 1) throw std::invalid_argument("cyclotomic: order must be >= 1");
}

}  // namespace

const std::vector<int64_t>& cyclotomic_polynomial(int64_t n) {
    check_order(n);
    auto& reg = registry();
    std::scoped_lock lock(reg.mu);
    return cyclotomic_locked(n, reg);
}

int64_t euler_phi(int64_t n) {
    check_order(n);
    int64_t result = n;
    for (int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

Cyclotomic::Cyclotomic(int64_t order, std::vector<int64_t> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    reduce_mod(coeffs_, cyclotomic_polynomial(order_));
}

Cyclotomic Cyclotomic::zero(int64_t order) {
    check_order(order);
    return Cyclotomic(order, {});
}

Cyclotomic Cyclotomic::one(int64_t order) {
    return integer(order, 1);
}

Cyclotomic Cyclotomic::integer(int64_t order, int64_t value) {
    check_order(order);
    return Cyclotomic(order, {value});
}

Cyclotomic Cyclotomic::root(int64_t order, int64_t exponent) {
    check_order(order);
    int64_t e = mod_floor(exponent, order);
    std::vector<int64_t> p(e + 1, 0);
    p[e] = 1;
    return Cyclotomic(order, std::move(p));
}

Cyclotomic Cyclotomic::from_coeffs(int64_t order, std::vector<int64_t> coeffs) {
    check_order(order);
    return Cyclotomic(order, std::move(coeffs));
}

bool Cyclotomic::is_zero() const {
    for (int64_t c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (int64_t& c : r.coeffs_) c = -c;
    return r;
}

namespace {
void check_same_order(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("cyclotomic: mixed orders (" + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()) + ")");
}
}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    check_same_order(*this, rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
    check_same_order(*this, rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
    check_same_order(*this, rhs);
    const size_t n = coeffs_.size();
    std::vector<int64_t> prod(2 * n, 0);
    for (size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    reduce_mod(prod, cyclotomic_polynomial(order_));
    coeffs_ = std::move(prod);
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(int64_t scalar) {
    for (int64_t& c : coeffs_) c *= scalar;
    return *this;
}

Cyclotomic Cyclotomic::pow(int64_t e) const {
    if (e < 0) throw std::invalid_argument("cyclotomic: pow exponent must be >= 0");
    Cyclotomic base = *this;
    Cyclotomic acc = Cyclotomic::one(order_);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::complex<double> Cyclotomic::embed() const {
    const std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi / (double)order_);
    std::complex<double> acc{0.0, 0.0};
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + (double)coeffs_[i];
    return acc;
}

Cyclotomic qint(int64_t n, int64_t l) {
    if (l < 2) throw std::invalid_argument("qint: l must be >= 2");
    const int64_t N = 4 * l;
    bool negate = n < 0;
    if (negate) n = -n;
    const int64_t r = mod_floor(n, 2 * l);  // [n + 2l] = [n], q^{2l} = 1
    std::vector<int64_t> p(N, 0);
    for (int64_t j = 0; j < r; ++j) {
        // [r] = sum_j q^{r-1-2j}, q = zeta_N^2
        p[mod_floor(2 * (r - 1 - 2 * j), N)] += negate ? -1 : 1;
    }
    return Cyclotomic::from_coeffs(N, std::move(p));
}

Cyclotomic twist(int64_t n, int64_t k) {
    if (k < 0 || n < 0 || n > k) throw std::invalid_argument("twist: need 0 <= n <= k");
    const int64_t l = k + 2;
    return Cyclotomic::root(4 * l, n * (n + 2));
}

std::string json_string(const Cyclotomic& x) {
    nlohmann::json j;
    j["order"] = x.order();
    j["coeffs"] = x.coeffs();
    return j.dump();
}

}  // namespace vade
