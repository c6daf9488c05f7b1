// Divisor classes of E_30 with their neighbours and vertex degrees.

#include <zn/zn.hpp>

#include <iostream>

int main() {
    const auto part = zn::build_partition(zn::factorize(30), true);
    zn::io::write_classes_text(std::cout, part);
    std::cout << "\n|E(E_30)| = " << zn::edge_count(part.n) << '\n';
}
