// reed_solomon.hpp -- systematic Reed-Solomon codes over GF(2^s) with
// errors-and-erasures decoding (Berlekamp-Massey seeded with the erasure
// locator, Chien search, Forney). Corrects e errors and f erasures whenever
// 2e + f <= d - 1 with d = m - k + 1.

#pragma once

#include <optional>
#include <vector>

#include "polyrec/gf.hpp"

namespace polyrec {

class ReedSolomon {
public:
    /// [m, k] code over GF(2^sym_bits); requires m <= 2^sym_bits - 1.
    ReedSolomon(int sym_bits, int m, int k);

    int m() const { return m_; }
    int k() const { return k_; }
    int distance() const { return m_ - k_ + 1; }
    const GaloisField& field() const { return gf_; }

    /// message (k symbols) -> codeword (m symbols), systematic: the first k
    /// codeword symbols equal the message.
    std::vector<int> encode(const std::vector<int>& message) const;

    /// Decodes a received word with the given erased positions (0-based,
    /// within [0, m)). Erased symbol values are ignored. Returns the
    /// corrected codeword or nullopt when the error/erasure budget is
    /// exceeded.
    std::optional<std::vector<int>> decode(const std::vector<int>& received,
                                           const std::vector<int>& erasures) const;

private:
    GaloisField gf_;
    int m_;
    int k_;
    std::vector<int> generator_;  // generator polynomial, ascending powers

    std::vector<int> syndromes(const std::vector<int>& cw) const;
};

}  // namespace polyrec
