// Simple GL(1|1) supercharacters in characteristic p, and whether each is
// p-balanced and supersymmetric.

#include <iostream>

#include <supersym/supersym.hpp>

int main(int argc, char** argv)
{
    using namespace supersym;
    const std::uint32_t p = argc > 1 ? static_cast<std::uint32_t>(std::stoul(argv[1])) : 3;
    for (int r = 0; r <= 2 * static_cast<int>(p); ++r) {
        const bool divides = r % static_cast<int>(p) == 0;
        for (int i = divides ? 0 : 1; i <= r; ++i) {
            const LaurentPolynomial f = gl11_simple_char(i, r, p);
            std::cout << "L(" << i << "|" << r - i << "): " << to_string(f) << "  supersymmetric="
                      << is_supersymmetric(f) << " p-balanced=" << is_p_balanced(f, p) << "\n";
        }
    }
}
