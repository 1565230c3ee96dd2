#include "polyrec/gf.hpp"

#include <stdexcept>

namespace polyrec {

namespace {

// Primitive polynomials over GF(2), index = degree.
constexpr int kPrimitive[] = {0, 0, 0x7, 0xB, 0x13, 0x25, 0x43, 0x89, 0x11D, 0x211, 0x409, 0x805, 0x1053};

}  // namespace

GaloisField::GaloisField(int sym_bits) : s_(sym_bits), q_(1 << sym_bits) {
    if (sym_bits < 2 || sym_bits > 12)
        throw std::invalid_argument("GaloisField: sym_bits must be in [2, 12]");
    const int poly = kPrimitive[sym_bits];
    exp_.assign(2 * q_, 0);
    log_.assign(q_, 0);
    int x = 1;
    for (int i = 0; i < q_ - 1; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x <<= 1;
        if (x & q_) x ^= poly;
    }
    for (int i = q_ - 1; i < 2 * q_; ++i) exp_[i] = exp_[i - (q_ - 1)];
}

int GaloisField::mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

int GaloisField::div(int a, int b) const {
    if (b == 0) throw std::invalid_argument("GaloisField::div: division by zero");
    if (a == 0) return 0;
    return exp_[log_[a] - log_[b] + (q_ - 1)];
}

int GaloisField::inv(int a) const {
    if (a == 0) throw std::invalid_argument("GaloisField::inv: zero");
    return exp_[q_ - 1 - log_[a]];
}

int GaloisField::pow_alpha(int e) const {
    e %= q_ - 1;
    if (e < 0) e += q_ - 1;
    return exp_[e];
}

int GaloisField::log_alpha(int a) const {
    if (a == 0) throw std::invalid_argument("GaloisField::log_alpha: zero");
    return log_[a];
}

}  // namespace polyrec
