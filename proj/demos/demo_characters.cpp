// Exact character arithmetic: dimensions, weight multiplicities, a tensor
// decomposition, and a Jantzen simplicity test.
#include <stscreen/modular.hpp>

#include <iostream>

using namespace stscreen;

int main() {
    auto c3 = root_system('C', 3);
    std::cout << "dim H^0(2,2,2) over C3 = " << weyl_dim(*c3, Weight{2, 2, 2}) << "\n";
    Character st = weyl_character(c3, Weight{2, 2, 2});
    std::cout << "multiplicity of (0,5,0) in it = " << st.multiplicity(Weight{0, 5, 0}) << "\n";

    SignedChiExpansion dec = decompose_into_chi(tensor_character(st, st));
    std::cout << "St (x) St decomposes into " << dec.terms.size() << " induced characters; the highest weight "
              << "(4,4,4) carries coefficient " << dec.terms.at(Weight{4, 4, 4}) << "\n";

    for (int p : {2, 3, 5, 7}) {
        PrimeContext ctx(c3, p);
        std::cout << "H^0(w2) simple at p=" << p << "? " << (is_weyl_simple(Weight{0, 1, 0}, ctx) ? "yes" : "no")
                  << "\n";
    }
    return 0;
}
