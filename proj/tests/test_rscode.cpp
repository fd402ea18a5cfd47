#include "doctest.h"
#include "rsld/rscode.hpp"

using namespace rsld;

namespace {

EvalVector ev(const FieldPtr& f, std::vector<uint64_t> idx) {
  std::vector<Elem> pts;
  for (auto i : idx) pts.push_back(f->elem(i));
  return EvalVector(std::move(pts));
}

}  // namespace

TEST_CASE("encode basics over GF(5)") {
  auto f5 = Field::prime(5);
  RSCode code(ev(f5, {0, 1, 2, 3}), 2);
  auto zero_cw = code.encode(UniPoly(f5));
  for (size_t i = 0; i < 4; ++i) CHECK(zero_cw[i].is_zero());

  auto x = UniPoly::from_indices(f5, {0, 1});
  auto cw = code.encode(x);
  for (size_t i = 0; i < 4; ++i) CHECK(cw[i] == f5->elem(i));

  RSCode code3(ev(f5, {0, 1, 2}), 2);
  auto cw2 = code3.encode(UniPoly::from_indices(f5, {1, 1}));
  CHECK(cw2[0] == f5->elem(1));
  CHECK(cw2[1] == f5->elem(2));
  CHECK(cw2[2] == f5->elem(3));

  CHECK_THROWS(code.encode(UniPoly::from_indices(f5, {1, 1, 1})));
  CHECK(cw.message().has_value());
}

TEST_CASE("distinct evaluation points are enforced") {
  auto f5 = Field::prime(5);
  CHECK_THROWS(ev(f5, {0, 1, 1}));
  CHECK_THROWS(RSCode(ev(f5, {0, 1}), 2));  // k < n violated
}

TEST_CASE("hamming distance") {
  auto f5 = Field::prime(5);
  std::vector<Elem> a = {f5->elem(0), f5->elem(1), f5->elem(2)};
  std::vector<Elem> b = {f5->elem(0), f5->elem(1), f5->elem(3)};
  CHECK(hamming_distance(a, a) == 0);
  CHECK(hamming_distance(a, b) == 1);
  CHECK_THROWS(hamming_distance(a, std::vector<Elem>{f5->elem(0)}));
}

TEST_CASE("MDS distance, exhaustive at small q") {
  for (unsigned k : {1u, 2u, 3u}) {
    auto f8 = Field::create(2, 3);
    std::vector<Elem> pts;
    for (uint64_t i = 0; i < 5; ++i) pts.push_back(f8->elem(i));
    RSCode code(EvalVector(pts), k);
    if (k >= code.n()) continue;
    auto words = code.enumerate();
    for (size_t i = 0; i < words.size(); ++i)
      for (size_t j = i + 1; j < words.size(); ++j)
        CHECK(hamming_distance(words[i], words[j]) >= code.n() - k + 1);
  }
}

TEST_CASE("encode is linear") {
  auto f = Field::create(2, 4);
  std::vector<Elem> pts;
  for (uint64_t i = 0; i < 6; ++i) pts.push_back(f->elem(i));
  RSCode code(EvalVector(pts), 3);
  Rng rng(42);
  for (int t = 0; t < 50; ++t) {
    std::vector<Elem> ca, cb;
    for (int i = 0; i < 3; ++i) {
      ca.push_back(f->uniform(rng));
      cb.push_back(f->uniform(rng));
    }
    UniPoly fa(f, ca), fb(f, cb);
    auto sum_cw = code.encode(fa + fb);
    auto cwa = code.encode(fa), cwb = code.encode(fb);
    for (size_t i = 0; i < code.n(); ++i)
      CHECK(sum_cw[i] == cwa[i] + cwb[i]);
  }
}

TEST_CASE("agreement sets") {
  auto f5 = Field::prime(5);
  std::vector<Elem> a = {f5->elem(0), f5->elem(1), f5->elem(2)};
  std::vector<Elem> b = {f5->elem(0), f5->elem(1), f5->elem(3)};
  CHECK(agreement_set({a, a}) == std::vector<size_t>{0, 1, 2});
  CHECK(agreement_set({a, b}) == std::vector<size_t>{0, 1});
  CHECK_THROWS(agreement_set({a}));
}

TEST_CASE("agreement of codewords equals root set of the difference") {
  auto f8 = Field::create(2, 3);
  std::vector<Elem> pts;
  for (uint64_t i = 0; i < 5; ++i) pts.push_back(f8->elem(i));
  RSCode code(EvalVector(pts), 2);
  auto words = code.enumerate();
  for (size_t i = 0; i < words.size(); ++i)
    for (size_t j = i + 1; j < words.size(); ++j) {
      auto agree = agreement_set({words[i].symbols(), words[j].symbols()});
      CHECK(agree.size() <= code.k() - 1);
      UniPoly diff = *words[i].message() - *words[j].message();
      std::vector<size_t> roots;
      for (size_t t = 0; t < code.n(); ++t)
        if (diff.eval(code.alpha()[t]).is_zero()) roots.push_back(t);
      CHECK(agree == roots);
    }
}

TEST_CASE("vandermonde") {
  auto f5 = Field::prime(5);
  std::vector<Elem> pts = {f5->elem(0), f5->elem(1), f5->elem(2)};
  auto col = vandermonde(1, pts);
  for (auto& row : col) {
    REQUIRE(row.size() == 1);
    CHECK(row[0].is_one());
  }
  auto m = vandermonde(2, pts);
  CHECK(m[2][1] == f5->elem(2));
  // Square Vandermonde on distinct points is invertible.
  auto sq = vandermonde(3, pts);
  CHECK(matrix_rank(sq) == 3);
}

TEST_CASE("vandermonde kernel check") {
  auto f5 = Field::prime(5);
  EvalVector alpha({f5->elem(0), f5->elem(1), f5->elem(2)});
  UniPoly zero(f5);
  CHECK(vandermonde_kernel_check(2, {0, 1, 2}, alpha, zero));
  // f = x - alpha_1 (index 0)
  UniPoly root0 = UniPoly::from_indices(f5, {0, 1});
  CHECK(vandermonde_kernel_check(2, {0}, alpha, root0));
  CHECK_FALSE(vandermonde_kernel_check(2, {0, 1}, alpha, root0));
  CHECK_THROWS(
      vandermonde_kernel_check(1, {0}, alpha, UniPoly::from_indices(f5, {0, 1})));
}
