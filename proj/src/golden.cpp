#include "qlie/golden.hpp"

namespace qlie::golden {

LieBialgebraSpec abelian(std::size_t dim_h, std::size_t dim_v)
{
    return LieBialgebraSpec::zero(dim_h, dim_v);
}

LieBialgebraSpec iso()
{
    auto s = LieBialgebraSpec::zero(1, 2);
    s.A(0, 0, 1) = 1;
    s.A(0, 1, 0) = -1;
    return s;
}

LieBialgebraSpec jordanian()
{
    auto s = LieBialgebraSpec::zero(1, 1);
    s.A(0, 0, 0) = 1;
    s.alpha(0, 0, 0) = 1;
    return s;
}

LieBialgebraSpec k_example()
{
    auto s = LieBialgebraSpec::zero(1, 2);
    s.gamma(1, 0, 1) = 1;
    s.gamma(1, 1, 0) = -1;
    s.A(0, 1, 1) = 1;
    return s;
}

ClassicalRMatrix jordanian_r()
{
    auto r = ClassicalRMatrix::zero(1, 1);
    r.P[0][0] = -1;
    r.Q[0][0] = 1;
    return r;
}

std::vector<std::pair<std::string, LieBialgebraSpec>> library()
{
    return {
        {"all-zero", abelian(1, 1)},
        {"ISO", iso()},
        {"J", jordanian()},
        {"dual(J)", dualize(jordanian())},
        {"K", k_example()},
        {"double(J)", classical_double(jordanian())},
    };
}

} // namespace qlie::golden
