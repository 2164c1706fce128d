#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "awd/gf2.hpp"

namespace awd {

/// CSS code: X/Z check matrices over the data qubits plus logical operator
/// supports. k is computed from ranks; d is declared by the constructor.
struct CssCode {
    uint32_t n = 0;
    uint32_t k = 0;
    uint32_t d = 0;  // declared distance, not verified
    SparseBitMatrix hx;
    SparseBitMatrix hz;
    std::vector<BitVector> logical_x;  // supports over data qubits
    std::vector<BitVector> logical_z;
};

/// Toric code on a d x d torus: n = 2d^2, k = 2. Vertex checks are X type,
/// plaquette checks are Z type. Throws for d < 3 or even d.
CssCode build_toric(uint32_t d);

/// Bivariate bicycle code over the group algebra of Z_l x Z_m with
/// Hx = [A|B], Hz = [B^T|A^T]. Terms are (x_exp, y_exp) monomials, reduced
/// mod (l, m); repeated monomials cancel over GF(2). k is computed from
/// ranks. declared_d is carried through as the code's d.
CssCode build_bb(uint32_t l, uint32_t m,
                 std::span<const std::pair<uint32_t, uint32_t>> a_terms,
                 std::span<const std::pair<uint32_t, uint32_t>> b_terms,
                 uint32_t declared_d);

enum class NoiseKind { Depolarizing, NeutralAtom, SI100 };

struct NoiseModelSpec {
    NoiseKind kind = NoiseKind::Depolarizing;
    double p = 0.0;
};

std::string to_string(NoiseKind kind);
NoiseKind noise_kind_from_string(const std::string& s);

struct EffectiveRates {
    double p_data = 0.0;  // per data qubit per round
    double p_meas = 0.0;  // per check measurement per round
};

/// Map a hardware-inspired noise model to phenomenological per-round rates:
///   depolarizing -> (p, p)
///   NA           -> (1.1 p, 1.1 p)
///   SI100        -> (3.1 p, 7 p)
/// Throws unless 0 <= p < 0.5 (p == 0 is the noiseless limit).
EffectiveRates effective_rates(const NoiseModelSpec& spec);

}  // namespace awd
