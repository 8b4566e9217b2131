// Sweeps the A_s / A_s(p)[c_r] comparison over a few degrees and prints one JSON line per cell.

#include <iostream>

#include <supersym/supersym.hpp>

int main(int argc, char** argv)
{
    using namespace supersym;
    const int m = argc > 1 ? std::stoi(argv[1]) : 1;
    const int n = argc > 2 ? std::stoi(argv[2]) : 1;
    const int max_degree = argc > 3 ? std::stoi(argv[3]) : 6;
    for (std::uint32_t p : {2U, 3U}) {
        for (int d = 0; d <= max_degree; ++d) {
            std::cout << to_json(hypothesis2_cell(m, n, p, d)).dump() << "\n";
        }
    }
}
