#ifndef QLIE_GOLDEN_HPP
#define QLIE_GOLDEN_HPP

#include <string>
#include <utility>
#include <vector>

#include "qlie/liebialg.hpp"

// Reference bialgebras used by the test suites, the CLI and the Python module.
namespace qlie::golden {

// All structure constants zero.
LieBialgebraSpec abelian(std::size_t dim_h, std::size_t dim_v);
// dim_h = 1, dim_v = 2, H rotates the plane: [H,X0] = X1, [H,X1] = -X0.
LieBialgebraSpec iso();
// Jordanian Borel: [H,X] = X, delta(H) = X (x) H - H (x) X.
LieBialgebraSpec jordanian();
// dim_h = 1, dim_v = 2, [H,X1] = X1, delta(X1) = X0 (x) X1 - X1 (x) X0.
LieBialgebraSpec k_example();

// Triangular r-matrix of the jordanian bialgebra compatible with its
// cobracket: r = X (x) H - H (x) X.
ClassicalRMatrix jordanian_r();

// {name, spec} for the full golden library:
// all-zero(1,1), ISO, J, dual(J), K, double(J).
std::vector<std::pair<std::string, LieBialgebraSpec>> library();

} // namespace qlie::golden

#endif
