#include <doctest.h>

#include <json.hpp>
#include <string>

#include "biop/biop.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  biop_string_free(s);
  return out;
}

biop_ring ring(const char* name, int64_t modulus = 0) {
  biop_ring r{};
  REQUIRE(biop_ring_from_name(name, modulus, &r) == BIOP_OK);
  return r;
}

biop_multiset* parse(biop_ring r, const char* text) {
  biop_multiset* s = nullptr;
  REQUIRE(biop_multiset_parse(r, text, &s) == BIOP_OK);
  return s;
}

}  // namespace

TEST_CASE("rings") {
  biop_ring r{};
  CHECK(biop_ring_from_name("int", 0, &r) == BIOP_OK);
  CHECK(r.kind == BIOP_RING_INT);
  CHECK(biop_ring_from_name(nullptr, 11, &r) == BIOP_OK);
  CHECK(r.kind == BIOP_RING_PRIME_FIELD);
  CHECK(r.modulus == 11);
  char* name = nullptr;
  CHECK(biop_ring_name(r, &name) == BIOP_OK);
  CHECK(take(name) == "prime(11)");
  CHECK(biop_ring_from_name("prime", 12, &r) == BIOP_INVALID_ARGUMENT);
  CHECK(std::string(biop_last_error_message()).find("12") != std::string::npos);
  CHECK(biop_ring_from_name("int", 0, nullptr) == BIOP_NULL_ARGUMENT);
}

TEST_CASE("parse, render and arithmetic") {
  auto z = ring("int");
  biop_multiset* s = parse(z, "3,-5,-1*14,1");
  char* out = nullptr;
  CHECK(biop_multiset_render(s, &out) == BIOP_OK);
  CHECK(take(out) == "-5,-1*14,1,3");
  uint64_t size = 0;
  CHECK(biop_multiset_size(s, &size) == BIOP_OK);
  CHECK(size == 17);
  CHECK(biop_sigma(s, &out) == BIOP_OK);
  CHECK(take(out) == "-15");
  CHECK(biop_pi(s, &out) == BIOP_OK);
  CHECK(take(out) == "-15");
  int flag = 0;
  CHECK(biop_is_bioperational(s, &flag) == BIOP_OK);
  CHECK(flag == 1);
  biop_multiset* witness = nullptr;
  CHECK(biop_is_minimal(s, 0, &flag, &witness) == BIOP_OK);
  CHECK(flag == 1);
  CHECK(witness == nullptr);

  biop_multiset* t = parse(z, "1,1,-1,-1");
  biop_multiset* u = nullptr;
  CHECK(biop_msum(s, t, &u) == BIOP_OK);
  CHECK(biop_is_minimal(u, 0, &flag, &witness) == BIOP_OK);
  CHECK(flag == 0);
  REQUIRE(witness != nullptr);
  CHECK(biop_multiset_equal(witness, t, &flag) == BIOP_OK);
  CHECK(flag == 1);
  biop_multiset* back = nullptr;
  CHECK(biop_mdiff(u, t, &back) == BIOP_OK);
  CHECK(biop_multiset_equal(back, s, &flag) == BIOP_OK);
  CHECK(flag == 1);
  biop_multiset* scaled = nullptr;
  CHECK(biop_mscale(2, t, &scaled) == BIOP_OK);
  CHECK(biop_multiset_size(scaled, &size) == BIOP_OK);
  CHECK(size == 8);
  biop_multiset* bad = nullptr;
  CHECK(biop_mdiff(t, s, &bad) == BIOP_NOT_SUBMULTISET);
  CHECK(bad == nullptr);

  for (auto* m : {s, t, u, witness, back, scaled}) biop_multiset_free(m);
  biop_multiset_free(nullptr);
}

TEST_CASE("errors surface as status codes") {
  auto n = ring("nat");
  biop_multiset* s = nullptr;
  CHECK(biop_multiset_parse(n, "", &s) == BIOP_PARSE_ERROR);
  CHECK(std::string(biop_status_name(BIOP_PARSE_ERROR)) == "ParseError");
  CHECK(biop_multiset_parse(n, "1,2,x", &s) == BIOP_PARSE_ERROR);
  CHECK(biop_last_error_position() == 4);
  CHECK(biop_multiset_parse(ring("int"), "99999999999999999999", &s) == BIOP_OVERFLOW);
  CHECK(std::string(biop_status_name(BIOP_OVERFLOW)) == "OverflowError");
  CHECK(biop_multiset_parse(n, "-1", &s) == BIOP_RING_MISMATCH);
  CHECK(biop_multiset_parse(n, nullptr, &s) == BIOP_NULL_ARGUMENT);
  CHECK(s == nullptr);
  biop_multiset* x = parse(ring("int"), "3,-5");
  int flag = 0;
  CHECK(biop_is_minimal(x, 0, &flag, nullptr) == BIOP_NOT_BIOPERATIONAL);
  biop_multiset* q = parse(ring("rational"), "1/2,2");
  biop_multiset* done = nullptr;
  CHECK(biop_complete(q, &done) == BIOP_PRODUCT_IS_ONE);
  char* out = nullptr;
  CHECK(biop_construct_json(q, 0, &out) == BIOP_UNSUPPORTED_RING);
  CHECK(biop_enumerate_length_json(1, 0, 1, 0, &out) == BIOP_PRECONDITION_VIOLATION);
  CHECK(biop_oeis_json("A000045", 3, &out) == BIOP_INVALID_ARGUMENT);
  CHECK(biop_verify_json("nonsense", nullptr, &out) == BIOP_INVALID_ARGUMENT);
  biop_multiset* many = parse(ring("int"), "1,2,3,-1*30,1*30");
  CHECK(biop_is_minimal(many, 3, &flag, nullptr) == BIOP_SEARCH_BUDGET_EXCEEDED);
  CHECK(std::string(biop_status_name(static_cast<biop_status>(55))) == "UnknownError");
  biop_multiset_free(x);
  biop_multiset_free(q);
  biop_multiset_free(many);
}

TEST_CASE("construction and completion") {
  biop_multiset* f = parse(ring("gaussian"), "1+2i,2+3i");
  char* out = nullptr;
  REQUIRE(biop_construct_json(f, 0, &out) == BIOP_OK);
  auto j = nlohmann::json::parse(take(out));
  CHECK(j["target"] == "-4+7i");
  CHECK(j["result"] == "-1*7,1i*2,1+2i,2+3i");
  biop_multiset* r = nullptr;
  REQUIRE(biop_construct(f, 0, &r) == BIOP_OK);
  int flag = 0;
  CHECK(biop_is_bioperational(r, &flag) == BIOP_OK);
  CHECK(flag == 1);

  biop_multiset* g = parse(ring(nullptr, 11), "2,2,2,2");
  biop_multiset* done = nullptr;
  REQUIRE(biop_complete(g, &done) == BIOP_OK);
  CHECK(biop_multiset_render(done, &out) == BIOP_OK);
  CHECK(take(out) == "2*5");
  CHECK(biop_complete_json(g, &out) == BIOP_OK);
  CHECK(nlohmann::json::parse(take(out))["appended"] == "2");

  biop_multiset* z = parse(ring("int"), "1,2,3,-1,-1,1,1");
  biop_multiset* trimmed = nullptr;
  CHECK(biop_trim(z, 0, &trimmed) == BIOP_OK);
  CHECK(biop_multiset_render(trimmed, &out) == BIOP_OK);
  CHECK(take(out) == "1,2,3");
  for (auto* m : {f, r, g, done, z, trimmed}) biop_multiset_free(m);
}

TEST_CASE("json reports") {
  char* out = nullptr;
  REQUIRE(biop_enumerate_length_json(5, 0, 2, 0, &out) == BIOP_OK);
  auto j = nlohmann::json::parse(take(out));
  CHECK(j["count"] == 3);
  CHECK(j["query"] == "length");
  REQUIRE(biop_enumerate_sum_product_json(8, &out) == BIOP_OK);
  CHECK(nlohmann::json::parse(take(out))["count"] == 2);
  REQUIRE(biop_records_json(14, 0, &out) == BIOP_OK);
  CHECK(nlohmann::json::parse(take(out))["positions"] == nlohmann::json::array({2, 5, 13}));
  REQUIRE(biop_uniform_json(11, 5, &out) == BIOP_OK);
  CHECK(take(out).find(R"({"a":2,"n":5})") != std::string::npos);
  REQUIRE(biop_oeis_json("A033178", 13, &out) == BIOP_OK);
  CHECK(nlohmann::json::parse(take(out))["terms"] ==
        nlohmann::json::array({1, 1, 1, 3, 1, 2, 2, 2, 2, 3, 2, 4, 2}));
  REQUIRE(biop_oeis_json("A309230", 9, &out) == BIOP_OK);
  CHECK(nlohmann::json::parse(take(out))["terms"] ==
        nlohmann::json::array({2, 5, 13, 25, 37, 41, 61, 85, 113}));
  REQUIRE(biop_search_json(ring("lunar"), "17,7,2", 3, 0, 1, 0, &out) == BIOP_OK);
  CHECK(take(out).find("\"7,17\"") != std::string::npos);

  biop_verify_params p = biop_verify_defaults();
  p.modulus = 5;
  REQUIRE(biop_verify_json("field-exhaustiveness", &p, &out) == BIOP_OK);
  CHECK(nlohmann::json::parse(take(out))["holds"] == true);
  p.modulus = 2;
  REQUIRE(biop_verify_json("field-exhaustiveness", &p, &out) == BIOP_OK);
  CHECK(nlohmann::json::parse(take(out))["holds"] == false);
  CHECK(std::string(biop_verify_target_name("lemma7.2")) == "gaussian-parity");
  CHECK(biop_verify_target_name("parity") == nullptr);
  REQUIRE(biop_verify_json("sqrt2-parity", nullptr, &out) == BIOP_OK);
  CHECK(nlohmann::json::parse(take(out))["cases"] == 500);
}
