// Adjacency and Laplacian spectra of E_15 with the Weyl bounds per quotient eigenvalue.

#include <zn/zn.hpp>

#include <iostream>

int main() {
    const auto f = zn::factorize(15);
    zn::SpectrumOptions opt;
    opt.with_bounds = true;
    zn::io::write_spectrum_text(std::cout, zn::adjacency_spectrum(f, opt), {});
    std::cout << '\n';
    zn::io::write_spectrum_text(std::cout, zn::laplacian_spectrum(f, opt), {});
}
