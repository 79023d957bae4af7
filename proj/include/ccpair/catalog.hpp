#pragma once

#include <string>
#include <vector>

#include "ccpair/conjugate_pair.hpp"

namespace ccpair {

// Stable built-in constructions used by the CLI self test, the bundled data
// files, and the test suites.

// The [7,4] Hamming code over GF(2), generator [I | P].
LinearCode hamming74();

// The [n, n-1] even-weight code over GF(2).
LinearCode even_weight_code(size_t n);

// The [n, 1] repetition code.
LinearCode repetition_code(size_t n);

struct NamedPair {
    std::string name;
    ConjugatePair pair;
};

// Steane: C1 = C2 = [7,4] Hamming, k = 1.
ConjugatePair steane_pair();
// C1 = C2 = [4,3] even-weight, k = 2.
ConjugatePair four_two_pair();
// C1 = C2 = F_2^n: every state is a codeword, k = n.
ConjugatePair trivial_pair(size_t n);
// A GF(4) pair with C1 = C2 = span{(1,1)}, k = 0; exercises the expansion.
ConjugatePair gf4_selfdual_pair();

std::vector<NamedPair> builtin_pairs();

} // namespace ccpair
