#pragma once

#include "concord/seifert.hpp"

#include <string>
#include <utility>
#include <vector>

namespace concord {

// First homology of the k-fold cyclic branched cover as a finitely generated
// abelian group with the deck-induced t-action.
struct CoverGroup {
    unsigned k = 1;
    // Invariant factors in divisibility order; entries >= 2, with a trailing
    // 0 per free summand when the group is infinite.
    std::vector<Int> factors;
    // Action of t on coordinates, row i understood modulo factors[i]
    // (a zero factor means no reduction).
    IMat t_action;
    bool finite = true;
    Int order = 1;  // product of the factors when finite
};

// Gamma = (A^t - A)^{-1} A^t and phi_k = Gamma^k - (Gamma - I)^k. The cover
// group is the cokernel of phi_k.
std::pair<IMat, IMat> gamma_phi(const SeifertMatrix& a, unsigned k);

// Cover homology via two independent presentations: phi_k and the circulant
// presentation of t A - A^t over Z[t]/(t^k - 1). Their Smith forms must
// agree and the order must match |resultant(Delta, t^k - 1)|; any mismatch
// raises "presentation/order inconsistency".
CoverGroup cover_group(const SeifertMatrix& a, unsigned k);

struct PrimePowerEntry {
    long k = 0;
    bool finite = true;
    Int order = 1;
    bool trivial = true;
};

struct PrimePowerScan {
    std::vector<PrimePowerEntry> entries;
    // True iff some irreducible factor of Delta is not a cyclotomic
    // polynomial of level divisible by three distinct primes.
    bool factor_exists = false;
    std::string verdict;  // "factor exists" or "no such factor"
};

// Orders of the Alexander module quotients at every prime power k <= k_max,
// plus the three-prime cyclotomic criterion over the factorization of Delta.
PrimePowerScan prime_power_scan(const LaurentPoly& delta, long k_max);

// Invariant factors of the kernel of phi_k acting on (Q/Z)^n; its order
// equals the cover group order. Fails when the cover group is infinite.
std::vector<Int> gilmer_kernel(const SeifertMatrix& a, unsigned k);

bool is_prime_power(Int n);

}  // namespace concord
