// Minimal generating sets of Z_30 for each size k.

#include <zn/zn.hpp>

#include <iostream>

int main() {
    const auto part = zn::build_partition(zn::factorize(30), true);
    for (unsigned k = 1; k <= 3; ++k) {
        const auto fam = zn::enumerate_gk(part, k, k == 3);
        zn::io::write_gensets_text(std::cout, fam);
    }
}
