#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qschur/io.hpp"

using namespace qschur;

namespace {

multipartition mp(const std::string& text) { return parse_multipartition(text); }

laurent lp(const std::string& text) { return laurent::from_string(text); }

}  // namespace

TEST_CASE("laurent JSON round trip") {
  laurent f = lp("q^-2 + 3 + 2*q^4");
  json obj = laurent_to_json(f);
  CHECK(obj == json{{"-2", "1"}, {"0", "3"}, {"4", "2"}});
  CHECK(laurent_from_json(obj) == f);

  std::mt19937 rng(5);
  std::uniform_int_distribution<int> exp(-6, 6), coeff(-9, 9);
  for (int i = 0; i < 100; ++i) {
    laurent g;
    for (int t = 0; t < 4; ++t) g += laurent::monomial(coeff(rng), exp(rng));
    CHECK(laurent_from_json(laurent_to_json(g)) == g);
  }
}

TEST_CASE("laurent LaTeX form") {
  CHECK(laurent_to_latex(lp("q + q^3")) == "q^{3}+q");
  CHECK(laurent_to_latex(lp("1")) == "1");
  CHECK(laurent_to_latex(lp("q^-1")) == "q^{-1}");
  CHECK(laurent_to_latex(laurent()) == "0");
  CHECK(laurent_to_latex(lp("2*q^2 - 1")) == "2q^{2}-1");
}

TEST_CASE("multipartition and tableau JSON round trips") {
  multipartition mu = mp("3,2|0|1,1");
  CHECK(multipartition_to_json(mu) == json::parse("[[3,2],[],[1,1]]"));
  CHECK(multipartition_from_json(multipartition_to_json(mu)) == mu);

  for (const auto& t : enumerate_standard(mp("2,1|1")))
    CHECK(tableau_from_json(tableau_to_json(t)) == t);
}

TEST_CASE("block JSON") {
  multicharge mc({0, 0}, 0);
  block_t blk = blocks(1, mc).front();
  json obj = block_to_json(blk);
  CHECK(obj["defect"] == 1);
  CHECK(obj["beta"] == json{{"0", 1}});
  CHECK(obj["members"] == json::parse(R"(["1|0","0|1"])"));
}

TEST_CASE("fock vector JSON") {
  multicharge mc({0, 0, 0}, 0);
  json obj = fock_vector_to_json(zmu_expansion(mp("4,1|1|1"), mc));
  CHECK(obj["4,1|1|1"] == "1");
  CHECK(obj["4,2|0|1"] == "q");
  CHECK(obj["4,2|1|0"] == "1 + q^2");
}

TEST_CASE("matrix emitters") {
  multicharge mc({0, 0}, 0);
  graded_matrix d = straighten_canonical(blocks(1, mc).front(), mc).matrix;

  SECTION("JSON round trip") {
    json obj = matrix_to_json(d);
    CHECK(obj["rows"] == json::parse(R"(["0|1","1|0"])"));
    CHECK(matrix_from_json(obj) == d);
  }

  SECTION("CSV cells are canonical text") {
    std::string csv = matrix_to_csv(d);
    CHECK(csv == ",0|1,1|0\n0|1,1,0\n1|0,q,1\n");
  }

  SECTION("LaTeX renders zeros as dots and blanks above the diagonal") {
    std::string latex = matrix_to_latex(d);
    CHECK(latex.find("(0&1)&1&\\\\") != std::string::npos);
    CHECK(latex.find("(1&0)&q&1\\\\") != std::string::npos);
  }

  SECTION("text table uses dots for zeros") {
    std::string text = matrix_to_text(d);
    CHECK(text.find('.') != std::string::npos);
  }
}

TEST_CASE("triple-set comparison ignores label order") {
  multicharge mc({0, 0}, 0);
  graded_matrix d = straighten_canonical(blocks(1, mc).front(), mc).matrix;
  std::vector<multipartition> reversed{mp("1|0"), mp("0|1")};
  graded_matrix permuted(reversed, reversed);
  for (const auto& lam : reversed)
    for (const auto& mu : reversed) permuted.set_entry(lam, mu, d.entry(lam, mu));
  CHECK(matrices_equal_as_triples(d, permuted));
  permuted.set_entry(mp("1|0"), mp("0|1"), lp("q^2"));
  CHECK_FALSE(matrices_equal_as_triples(d, permuted));
}

TEST_CASE("check report JSON") {
  check_report r{"name", "scope", false, "witness"};
  json obj = check_report_to_json(r);
  CHECK(obj["passed"] == false);
  CHECK(obj["counterexample"] == "witness");
}
