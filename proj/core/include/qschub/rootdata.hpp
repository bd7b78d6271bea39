#pragma once

#include "qschub/types.hpp"

namespace qschub {

// Letters are 0-based throughout the library.
// cartan[i][j] = <alpha_i^vee, alpha_j>, so alpha_i is column i of the Cartan matrix.
struct RootDatum {
    char lie_type = 'A';
    int rank = 0;
    IntMatrix cartan;
    IntVector d;
    RationalMatrix cartan_inverse;
    RationalMatrix gram;  // (Lambda_i, Lambda_j)
    std::vector<Weight> positive_roots;

    Weight simple_root(int i) const;
    Weight fundamental_weight(int i) const;
    Weight rho() const;
    std::string name() const;
};

RootDatum build_root_datum(char lie_type, int rank);

Rational pairing(const Weight& x, const Weight& y, const RootDatum& datum);

Weight reflect(int i, const Weight& x, const RootDatum& datum);

// Coordinates of x in the simple-root basis.
RationalVector root_coordinates(const Weight& x, const RootDatum& datum);

bool is_positive_root(const Weight& x, const RootDatum& datum);

}  // namespace qschub
