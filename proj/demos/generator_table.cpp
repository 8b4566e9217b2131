// Prints c_r and d_r for a small GL(m|n) together with their leading weights.

#include <iostream>

#include <supersym/supersym.hpp>

int main(int argc, char** argv)
{
    using namespace supersym;
    const int m = argc > 1 ? std::stoi(argv[1]) : 1;
    const int n = argc > 2 ? std::stoi(argv[2]) : 1;
    const Profile profile(m, n, std::nullopt);
    std::cout << profile.describe() << "\n";
    for (int r = 1; r <= 4; ++r) {
        const LaurentPolynomial c = c_generator(profile, r);
        const LaurentPolynomial d = d_generator(profile, r);
        std::cout << "c_" << r << " = " << to_string(c) << "\n"
                  << "    leading " << to_string(leading_summands(c).front().first) << "\n"
                  << "d_" << r << " = " << to_string(d) << "\n"
                  << "    leading " << to_string(leading_summands(d).front().first) << "\n";
    }
}
