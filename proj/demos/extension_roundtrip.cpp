// Extends the non-Pappus matroid to a tropical ideal along the powers-of-two
// embedding and restricts back, printing both circuit families.

#include <iostream>

#include "trop/catalog.hpp"
#include "trop/io.hpp"

int main() {
    using namespace trop;

    FiniteMatroid M = non_pappus();
    std::cout << "source matroid: " << M.size() << " points, rank " << M.rank() << ", "
              << M.circuit_indices().size() << " circuits\n";

    auto emb = pow2_embedding(M);
    TropicalIdeal I = extend_matroid(M, emb);
    std::cout << "extension: degree " << degree(I) << " ideal with "
              << I.partition().blocks().size() << " generator blocks\n";

    std::vector<IntVec> image;
    std::map<Label, Label> relab;
    for (const auto& [l, v] : emb) {
        image.push_back(v);
        relab[l] = Label::point(v);
    }
    FiniteMatroid back = restrict_matroid(I, image);
    std::cout << "restriction to the image equals the source: "
              << (back == M.relabel(relab) ? "yes" : "NO") << "\n\n";
    write_matroid(std::cout, back);
    return 0;
}
