#ifndef LGO_CYCLIC_HPP
#define LGO_CYCLIC_HPP

#include <lgo/hom.hpp>

namespace lgo
{
    /// Explicit homomorphism L(G_{n,d}) -> L(G_{n',d}) for n' dividing n:
    /// wrap the n-cycle of the sunlet around the n'-cycle (position i goes to
    /// i mod n') and map every indicator copy onto the copy over the image
    /// edge, through the a/b swap when the image edge runs the other way.
    /// Throws std::invalid_argument unless n, n', d >= 3 and n' | n.
    auto cyclic_hom(int n, int n_prime, int d) -> HomMapping;
}

#endif
