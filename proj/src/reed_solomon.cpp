#include "polyrec/reed_solomon.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyrec {

namespace {

using Poly = std::vector<int>;  // ascending coefficients

int degree(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

void trim(Poly& p) { p.resize(static_cast<std::size_t>(degree(p) + 1)); }

Poly mul(const GaloisField& gf, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] ^= gf.mul(a[i], b[j]);
    }
    trim(c);
    return c;
}

Poly add(const Poly& a, const Poly& b) {
    Poly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] ^= a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] ^= b[i];
    trim(c);
    return c;
}

Poly scale(const GaloisField& gf, const Poly& a, int s) {
    Poly c = a;
    for (auto& x : c) x = gf.mul(x, s);
    return c;
}

int eval(const GaloisField& gf, const Poly& p, int x) {
    int acc = 0;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = gf.mul(acc, x) ^ p[i];
    return acc;
}

// Formal derivative; in characteristic 2 only odd-degree terms survive.
Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); i += 2) {
        d.resize(i, 0);
        d[i - 1] = p[i];
    }
    trim(d);
    return d;
}

}  // namespace

ReedSolomon::ReedSolomon(int sym_bits, int m, int k) : gf_(sym_bits), m_(m), k_(k) {
    if (k < 1 || m <= k || m > gf_.size() - 1)
        throw std::invalid_argument("ReedSolomon: need 1 <= k < m <= 2^s - 1");
    generator_ = {1};
    for (int j = 1; j <= m_ - k_; ++j)
        generator_ = mul(gf_, generator_, Poly{gf_.pow_alpha(j), 1});
}

std::vector<int> ReedSolomon::encode(const std::vector<int>& message) const {
    if (static_cast<int>(message.size()) != k_)
        throw std::invalid_argument("ReedSolomon::encode: message size != k");
    for (int u : message)
        if (u < 0 || u >= gf_.size()) throw std::invalid_argument("ReedSolomon::encode: symbol range");
    const int p = m_ - k_;
    // message placed on the high coefficients, parity = remainder mod g
    Poly coeffs(m_, 0);
    for (int i = 0; i < k_; ++i) coeffs[p + i] = message[i];
    Poly rem = coeffs;
    for (int i = m_ - 1; i >= p; --i) {
        if (rem[i] == 0) continue;
        const int factor = rem[i];  // generator is monic
        for (std::size_t j = 0; j < generator_.size(); ++j)
            rem[i - (generator_.size() - 1) + j] ^= gf_.mul(factor, generator_[j]);
    }
    for (int i = 0; i < p; ++i) coeffs[i] = rem[i];
    std::vector<int> out(m_);
    for (int i = 0; i < k_; ++i) out[i] = coeffs[p + i];
    for (int i = 0; i < p; ++i) out[k_ + i] = coeffs[i];
    return out;
}

std::vector<int> ReedSolomon::syndromes(const std::vector<int>& coeffs) const {
    std::vector<int> s(m_ - k_);
    for (int j = 1; j <= m_ - k_; ++j) s[j - 1] = eval(gf_, coeffs, gf_.pow_alpha(j));
    return s;
}

std::optional<std::vector<int>> ReedSolomon::decode(const std::vector<int>& received,
                                                    const std::vector<int>& erasures) const {
    if (static_cast<int>(received.size()) != m_)
        throw std::invalid_argument("ReedSolomon::decode: word size != m");
    const int p = m_ - k_;
    const int d = distance();

    // public [message | parity] order -> coefficient order
    auto to_coeff = [&](int pos) { return pos < k_ ? p + pos : pos - k_; };
    Poly coeffs(m_, 0);
    for (int i = 0; i < k_; ++i) coeffs[p + i] = received[i];
    for (int i = 0; i < p; ++i) coeffs[i] = received[k_ + i];

    std::vector<int> erased;
    for (int pos : erasures) {
        if (pos < 0 || pos >= m_) throw std::invalid_argument("ReedSolomon::decode: erasure position");
        erased.push_back(to_coeff(pos));
    }
    std::sort(erased.begin(), erased.end());
    erased.erase(std::unique(erased.begin(), erased.end()), erased.end());
    const int f = static_cast<int>(erased.size());
    if (f > d - 1) return std::nullopt;

    for (int pos : erased) coeffs[pos] = 0;

    const std::vector<int> syn = syndromes(coeffs);
    const bool all_zero = std::all_of(syn.begin(), syn.end(), [](int x) { return x == 0; });

    Poly out_coeffs = coeffs;
    if (!all_zero || f > 0) {
        Poly S(syn.begin(), syn.end());
        trim(S);
        Poly gamma{1};
        for (int pos : erased) gamma = mul(gf_, gamma, Poly{1, gf_.pow_alpha(pos)});

        Poly xi = mul(gf_, gamma, S);
        if (static_cast<int>(xi.size()) > d - 1) xi.resize(d - 1);
        trim(xi);

        // Sugiyama: extended Euclid on (x^{d-1}, xi) until
        // 2 deg(r) < d - 1 + f.
        Poly r_prev(d, 0);
        r_prev[d - 1] = 1;
        Poly r_cur = xi;
        Poly u_prev = {};   // coefficient of xi in r_prev
        Poly u_cur = {1};
        while (2 * degree(r_cur) >= d - 1 + f) {
            // divide r_prev by r_cur
            Poly q = {};
            Poly rem = r_prev;
            while (degree(rem) >= degree(r_cur) && degree(r_cur) >= 0) {
                const int shift = degree(rem) - degree(r_cur);
                const int factor = gf_.div(rem[degree(rem)], r_cur[degree(r_cur)]);
                Poly t(shift + 1, 0);
                t[shift] = factor;
                q = add(q, t);
                rem = add(rem, mul(gf_, t, r_cur));
            }
            if (degree(r_cur) < 0) return std::nullopt;
            Poly u_next = add(u_prev, mul(gf_, q, u_cur));
            r_prev = r_cur;
            r_cur = rem;
            u_prev = u_cur;
            u_cur = u_next;
        }
        Poly lambda_e = u_cur;
        Poly omega = r_cur;
        if (lambda_e.empty() || lambda_e[0] == 0) return std::nullopt;
        const int norm = gf_.inv(lambda_e[0]);
        lambda_e = scale(gf_, lambda_e, norm);
        omega = scale(gf_, omega, norm);

        Poly psi = mul(gf_, lambda_e, gamma);
        const int nu = degree(psi);
        if (2 * (nu - f) + f > d - 1) return std::nullopt;

        // Chien search over codeword positions, values via Forney.
        Poly dpsi = derivative(psi);
        int roots = 0;
        for (int pos = 0; pos < m_; ++pos) {
            const int x_inv = gf_.pow_alpha(-pos);
            if (eval(gf_, psi, x_inv) != 0) continue;
            ++roots;
            const int denom = eval(gf_, dpsi, x_inv);
            if (denom == 0) return std::nullopt;
            const int value = gf_.div(eval(gf_, omega, x_inv), denom);
            out_coeffs[pos] ^= value;
        }
        if (roots != nu) return std::nullopt;
        if (degree(Poly(syndromes(out_coeffs).begin(), syndromes(out_coeffs).end())) >= 0)
            return std::nullopt;
    }

    std::vector<int> out(m_);
    for (int i = 0; i < k_; ++i) out[i] = out_coeffs[p + i];
    for (int i = 0; i < p; ++i) out[k_ + i] = out_coeffs[i];
    return out;
}

}  // namespace polyrec
