#include <gtest/gtest.h>

#include <sstream>

#include "slq/chain.hpp"
#include "slq/io.hpp"

using namespace slq;

TEST(Json, PolyRoundTrip) {
    Poly p = qv(3) * sv(-1) + Poly(Rational(-2, 3)) * Poly::var(Q13, 2) + Poly(5);
    EXPECT_EQ(poly_from_json(to_json(p)), p);
    EXPECT_EQ(poly_from_json(to_json(Poly())), Poly());
    EXPECT_EQ(poly_from_json(json::parse(to_json(p).dump())), p);
}

TEST(Json, MatrixRoundTrip) {
    for (auto k : {HamiltonianKind::Classical, HamiltonianKind::FermionicDeformed, HamiltonianKind::FourParam}) {
        const PolyMatrix h = closed_form(k);
        json j = to_json(h);
        EXPECT_EQ(j["entries"].size(), h.nonzero_count());
        EXPECT_EQ(matrix_from_json(json::parse(j.dump())), h);
    }
}

TEST(Json, BadInput) {
    json j = {{"rows", 2}, {"cols", 2}, {"entries", json::array({json::array({3, 1, to_json(Poly(1))})})}};
    try {
        matrix_from_json(j);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::BadIndex);
    }
    json bad = {{"terms", json::array({{{"c", "1"}, {"e", {1, 2}}}})}};
    EXPECT_THROW(poly_from_json(bad), Error);
}

TEST(Params, Parse) {
    ParamPoint p = parse_params("q=3/2,s=0.5");
    EXPECT_EQ(p.exact[Q], Rational(3, 2));
    EXPECT_EQ(p.exact[S], Rational(1, 2));
    EXPECT_EQ(p.exact[Q12], Rational(1));
    EXPECT_THROW(parse_params("t=2"), Error);
    EXPECT_THROW(parse_params("q"), Error);
    EXPECT_THROW(parse_params("q=x"), std::invalid_argument);
}

TEST(MatrixMarket, ClassicalTwoSite) {
    std::ostringstream os;
    write_matrix_market(os, closed_form(HamiltonianKind::Classical), ParamPoint::ones());
    std::istringstream is(os.str());
    std::string header, comment;
    std::getline(is, header);
    std::getline(is, comment);
    EXPECT_EQ(header, "%%MatrixMarket matrix coordinate real general");
    std::size_t r, c, nnz;
    is >> r >> c >> nnz;
    EXPECT_EQ(r, 9u);
    EXPECT_EQ(c, 9u);
    EXPECT_EQ(nnz, 13u);
    std::size_t i, j;
    double v;
    is >> i >> j >> v;
    EXPECT_EQ(i, 2u);
    EXPECT_EQ(j, 2u);
    EXPECT_EQ(v, 1.0);
}
