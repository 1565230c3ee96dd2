// gf.hpp -- GF(2^s) arithmetic over the polynomial basis, 2 <= s <= 12,
// via log/antilog tables built from fixed primitive polynomials.

#pragma once

#include <cstdint>
#include <vector>

namespace polyrec {

class GaloisField {
public:
    explicit GaloisField(int sym_bits);

    int sym_bits() const { return s_; }
    int size() const { return q_; }  // 2^s

    int add(int a, int b) const { return a ^ b; }
    int mul(int a, int b) const;
    int div(int a, int b) const;
    int inv(int a) const;
    int pow_alpha(int e) const;  // alpha^e, e any integer
    int log_alpha(int a) const;  // discrete log of a != 0

private:
    int s_;
    int q_;
    std::vector<int> exp_;  // exp_[i] = alpha^i, doubled for cheap reduction
    std::vector<int> log_;
};

}  // namespace polyrec
