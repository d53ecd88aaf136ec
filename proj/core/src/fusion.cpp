#include "vade/fusion.hpp"

#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numbers>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace vade {

namespace {

// The closed form behind fuse() is validated against the Verlinde formula
// once per level before a fusion table is handed out. Levels beyond the
// exact-pipeline cap only ever print the closed form.
void ensure_fuse_checked(int level) {
    if (level > 64) return;
    static std::mutex mu;
    static std::set<int> checked;
    {
        std::scoped_lock lock(mu);
        if (checked.count(level)) return;
    }
    if (!verlinde_check(level))
        throw std::logic_error("fusion: closed form failed the Verlinde self-test at level " +
                               std::to_string(level));
    std::scoped_lock lock(mu);
    checked.insert(level);
}

}  // namespace

std::vector<int64_t> fuse(int i, int j, int level) {
    if (level < 0) throw std::invalid_argument("fuse: level must be >= 0");
    if (i < 0 || i > level || j < 0 || j > level)
        throw std::out_of_range("fuse: label out of range");
    std::vector<int64_t> out(level + 1, 0);
    const int lo = std::abs(i - j);
    const int hi = std::min(i + j, 2 * level - i - j);
    for (int m = lo; m <= hi; m += 2) out[m] = 1;
    return out;
}

FusionCoeffs fusion_coefficients(int level) {
    ensure_fuse_checked(level);
    FusionCoeffs fc;
    fc.level = level;
    fc.table.resize(level + 1);
    for (int i = 0; i <= level; ++i) {
        fc.table[i].resize(level + 1);
        for (int j = 0; j <= level; ++j) fc.table[i][j] = fuse(i, j, level);
    }
    return fc;
}

ModularData modular_data(int level) {
    if (level < 0) throw std::invalid_argument("modular_data: level must be >= 0");
    ModularData md;
    md.level = level;
    md.coxeter = level + 2;
    const int64_t l = md.coxeter;

    md.dims.reserve(level + 1);
    md.twists.reserve(level + 1);
    for (int n = 0; n <= level; ++n) {
        md.dims.push_back(qint(n + 1, l));
        md.twists.push_back(twist(n, level));
    }
    md.s_tilde.reserve(level + 1);
    for (int i = 0; i <= level; ++i) {
        std::vector<Cyclotomic> row;
        row.reserve(level + 1);
        for (int j = 0; j <= level; ++j)
            row.push_back(qint((int64_t)(i + 1) * (j + 1), l));
        md.s_tilde.push_back(std::move(row));
    }

    Cyclotomic d2 = Cyclotomic::zero(4 * l);
    for (const auto& d : md.dims) d2 += d * d;
    md.D = std::sqrt(d2.embed().real());
    // zeta = exp(2 pi i c / 24), c = 3k/(k+2); zeta^3 equals the Gauss-sum
    // ratio p+/D, which is what the SL2(Z) relations pin down.
    md.zeta = std::polar(1.0, std::numbers::pi * (double)level / (4.0 * (double)l));
    return md;
}

RealMat ModularData::s() const {
    RealMat out(s_tilde.size());
    for (size_t i = 0; i < s_tilde.size(); ++i) {
        out[i].resize(s_tilde[i].size());
        for (size_t j = 0; j < s_tilde[i].size(); ++j)
            out[i][j] = s_tilde[i][j].embed().real() / D;
    }
    return out;
}

CplxMat ModularData::t() const {
    const size_t n = twists.size();
    CplxMat out(n, std::vector<std::complex<double>>(n, 0.0));
    for (size_t j = 0; j < n; ++j) out[j][j] = twists[j].embed() / zeta;
    return out;
}

Cyclotomic gauss_sum(const ModularData& md) {
    Cyclotomic p = Cyclotomic::zero(4 * (int64_t)md.coxeter);
    for (size_t j = 0; j < md.dims.size(); ++j) p += md.dims[j] * md.dims[j] * md.twists[j];
    return p;
}

bool verlinde_check(int level) {
    const ModularData md = modular_data(level);
    const RealMat s = md.s();
    const int n = level + 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto expected = fuse(i, j, level);
            for (int m = 0; m < n; ++m) {
                double sum = 0.0;
                for (int a = 0; a < n; ++a) sum += s[i][a] * s[j][a] * s[m][a] / s[0][a];
                const long long nearest = std::llround(sum);
                if (std::abs(sum - (double)nearest) > 1e-6) return false;
                if (nearest != expected[m]) return false;
            }
        }
    return true;
}

std::pair<double, std::complex<double>> global_dims(int level) {
    if (level < 0) throw std::invalid_argument("global_dims: level must be >= 0");
    const int64_t l = level + 2;
    Cyclotomic d2 = Cyclotomic::zero(4 * l);
    for (int n = 0; n <= level; ++n) {
        const Cyclotomic d = qint(n + 1, l);
        d2 += d * d;
    }
    return {std::sqrt(d2.embed().real()),
            std::polar(1.0, std::numbers::pi * (double)level / (4.0 * (double)l))};
}

std::string json_string(const ModularData& md) {
    nlohmann::json j;
    j["k"] = md.level;
    auto dims = nlohmann::json::array();
    for (const auto& d : md.dims) dims.push_back(d.embed().real());
    j["dims"] = std::move(dims);
    auto tw = nlohmann::json::array();
    const int64_t den = 4 * (int64_t)md.coxeter;
    for (int n = 0; n <= md.level; ++n)
        tw.push_back({{"num", (int64_t)n * (n + 2) % den}, {"den", den}});
    j["twists"] = std::move(tw);
    auto st = nlohmann::json::array();
    for (const auto& row : md.s_tilde) {
        auto r = nlohmann::json::array();
        for (const auto& x : row) r.push_back(x.embed().real());
        st.push_back(std::move(r));
    }
    j["s_tilde"] = std::move(st);
    j["D"] = md.D;
    j["zeta"] = {md.zeta.real(), md.zeta.imag()};
    return j.dump();
}

}  // namespace vade
