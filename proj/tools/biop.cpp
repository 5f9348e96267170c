// biop: command-line front end over the C interface.
//
// Exit status: 0 success, 1 domain error or failed verification, 2 bad
// input (malformed literals, flags or environment).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "biop/biop.h"

namespace {

using Json = nlohmann::ordered_json;

struct Failure {
  int exit_code;
};

[[noreturn]] void fail(biop_status status) {
  std::cerr << biop_status_name(status) << ": " << biop_last_error_message() << '\n';
  throw Failure{status == BIOP_PARSE_ERROR || status == BIOP_INVALID_ARGUMENT ? 2 : 1};
}

void check(biop_status status) {
  if (status != BIOP_OK) fail(status);
}

struct StringDeleter {
  void operator()(char* s) const { biop_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct MultisetDeleter {
  void operator()(biop_multiset* s) const { biop_multiset_free(s); }
};
using OwnedMultiset = std::unique_ptr<biop_multiset, MultisetDeleter>;

Json take_json(char* raw) {
  OwnedString owned(raw);
  return Json::parse(owned.get());
}

std::string join(const Json& array, const char* separator = ",") {
  std::string out;
  for (const auto& v : array) {
    if (!out.empty()) out += separator;
    out += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return out;
}

std::string text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

struct Options {
  std::string ring = "nat";
  bool ring_given = false;
  std::optional<std::int64_t> modulus;
  std::string format = "text";
  std::uint64_t max_nodes = 0;

  std::string elements;
  std::string factors;
  std::optional<std::int64_t> length;
  std::optional<std::int64_t> sum_product;
  bool include_vanishing = false;
  unsigned threads = 1;
  std::int64_t max_n = 120;
  std::int64_t n_max = 10;
  std::string target;
  biop_verify_params verify = biop_verify_defaults();
  std::string oeis_id;
  std::size_t count = 10;
  std::string pool;
  bool no_trivial = false;
  bool no_vanishing = false;
};

biop_ring resolve_ring(const Options& o) {
  biop_ring ring;
  const char* name = o.ring_given || !o.modulus ? o.ring.c_str() : nullptr;
  check(biop_ring_from_name(name, o.modulus.value_or(0), &ring));
  return ring;
}

OwnedMultiset parse(const Options& o, const std::string& literal) {
  biop_multiset* s = nullptr;
  check(biop_multiset_parse(resolve_ring(o), literal.c_str(), &s));
  return OwnedMultiset(s);
}

void print_check(const Json& j) {
  for (const char* key : {"ring", "multiset", "sum", "product", "bioperational", "trivial", "vanishing", "minimal"})
    std::cout << key << '=' << text(j[key]) << '\n';
  if (!j["witness"].is_null()) std::cout << "witness=" << text(j["witness"]) << '\n';
}

void print_trace(const Json& j) {
  std::cout << "input=" << text(j["input"]) << '\n' << "target=" << text(j["target"]) << '\n';
  for (const auto& t : j["transforms"])
    std::cout << "transform " << text(t["removed"]) << " -> " << text(t["inserted"]) << '\n';
  for (const auto& a : j["appendages"]) std::cout << "append " << text(a["label"]) << " x" << text(a["count"]) << '\n';
  for (const auto& t : j["trimmed"]) std::cout << "trim " << text(t["removed"]) << " x" << text(t["times"]) << '\n';
  std::cout << "result=" << text(j["result"]) << '\n';
}

int run_verify_output(const Json& j, bool as_json) {
  if (as_json) {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "target=" << text(j["target"]) << '\n'
              << "holds=" << text(j["holds"]) << '\n'
              << "cases=" << text(j["cases"]) << '\n'
              << "found=" << j["found"].size() << '\n';
    for (const auto& c : j["counterexamples"]) std::cout << "counterexample=" << text(c) << '\n';
  }
  return j["holds"].get<bool>() ? 0 : 1;
}

std::uint64_t budget_from_environment() {
  const char* raw = std::getenv("BIOP_NODE_BUDGET");
  if (!raw || !*raw) return 0;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(raw, &used);
    if (used == std::string(raw).size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  std::cerr << "InvalidArgument: BIOP_NODE_BUDGET must be a positive integer\n";
  throw Failure{2};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bioperational multisets: sum equals product."};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  app.add_option("--ring", o.ring, "nat, int, rational, prime, lunar, gaussian, eisenstein, sqrt2")
      ->each([&](const std::string&) { o.ring_given = true; });
  app.add_option("--modulus", o.modulus, "prime modulus; selects the prime field");
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* check_cmd = app.add_subcommand("check", "sum, product and minimality of a multiset");
  check_cmd->add_option("--elements", o.elements, "multiset literal, e.g. 3,-5,-1*14,1")->required();

  auto* construct_cmd = app.add_subcommand("construct", "build a minimal bioperational multiset from factors");
  construct_cmd->add_option("--factors", o.factors, "factor literal, e.g. 1+2i,2+3i")->required();

  auto* complete_cmd = app.add_subcommand("complete", "append the element that makes a field multiset bioperational");
  complete_cmd->add_option("--elements", o.elements, "multiset literal")->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "all bioperational multisets over nat by length or sum-product");
  auto* length_opt = enumerate_cmd->add_option("--length", o.length, "length n >= 2");
  auto* sp_opt = enumerate_cmd->add_option("--sum-product", o.sum_product, "sum-product m >= 2");
  length_opt->excludes(sp_opt);
  enumerate_cmd->add_flag("--include-vanishing", o.include_vanishing, "also list the all-zero multiset");
  enumerate_cmd->add_option("--threads", o.threads, "worker threads for the length search");

  auto* records_cmd = app.add_subcommand("records", "lengths where the solution count sets a record");
  records_cmd->add_option("--max-n", o.max_n, "largest length searched");

  auto* uniform_cmd = app.add_subcommand("uniform", "pairs (a, n) with a^(n-1) = n in the prime field");
  uniform_cmd->add_option("--n-max", o.n_max, "largest n");

  auto* verify_cmd = app.add_subcommand("verify", "run a structural check");
  verify_cmd
      ->add_option("--target", o.target,
                   "product-dominates-sum (lemma3.3), field-exhaustiveness (thm5.2), lunar-triviality "
                   "(thm6.2), gaussian-parity (lemma7.2), sqrt2-parity (lemma9.2)")
      ->required();
  verify_cmd->add_option("--cases", o.verify.cases, "random cases");
  verify_cmd->add_option("--seed", o.verify.seed, "random seed");
  verify_cmd->add_option("--max-len", o.verify.max_len, "largest multiset size searched");
  verify_cmd->add_option("--max-digits", o.verify.max_digits, "largest lunar digit count");

  auto* oeis_cmd = app.add_subcommand("oeis", "reproduce a sequence prefix");
  oeis_cmd->add_option("--id", o.oeis_id, "A033178 or A309230")->required();
  oeis_cmd->add_option("--count", o.count, "number of terms");

  auto* search_cmd = app.add_subcommand("search", "brute-force search over an element pool");
  search_cmd->add_option("--pool", o.pool, "multiset literal of candidate elements")->required();
  search_cmd->add_option("--max-len", o.verify.max_len, "largest multiset size (<= 8)");
  search_cmd->add_flag("--no-trivial", o.no_trivial, "skip single-element multisets");
  search_cmd->add_flag("--no-vanishing", o.no_vanishing, "skip multisets with sum-product zero");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const bool as_json = o.format == "json";
  try {
    o.max_nodes = budget_from_environment();
    auto emit = [&](const Json& j, auto&& as_text) {
      if (as_json)
        std::cout << j.dump() << '\n';
      else
        as_text(j);
    };

    if (check_cmd->parsed()) {
      auto s = parse(o, o.elements);
      char* raw = nullptr;
      check(biop_classify_json(s.get(), o.max_nodes, &raw));
      emit(take_json(raw), print_check);
    } else if (construct_cmd->parsed()) {
      auto s = parse(o, o.factors);
      char* raw = nullptr;
      check(biop_construct_json(s.get(), o.max_nodes, &raw));
      emit(take_json(raw), print_trace);
    } else if (complete_cmd->parsed()) {
      auto s = parse(o, o.elements);
      char* raw = nullptr;
      check(biop_complete_json(s.get(), &raw));
      emit(take_json(raw), [](const Json& j) {
        std::cout << "appended=" << text(j["appended"]) << '\n' << "result=" << text(j["result"]) << '\n';
      });
    } else if (enumerate_cmd->parsed()) {
      char* raw = nullptr;
      if (o.length)
        check(biop_enumerate_length_json(*o.length, o.include_vanishing, o.threads, o.max_nodes, &raw));
      else if (o.sum_product)
        check(biop_enumerate_sum_product_json(*o.sum_product, &raw));
      else {
        std::cerr << "InvalidArgument: enumerate needs --length or --sum-product\n";
        return 2;
      }
      emit(take_json(raw), [](const Json& j) {
        std::cout << "count=" << text(j["count"]) << '\n';
        for (const auto& s : j["solutions"]) std::cout << text(s) << '\n';
      });
    } else if (records_cmd->parsed()) {
      char* raw = nullptr;
      check(biop_records_json(o.max_n, o.max_nodes, &raw));
      emit(take_json(raw), [](const Json& j) {
        std::cout << "positions=" << join(j["positions"]) << '\n' << "counts=" << join(j["counts"]) << '\n';
      });
    } else if (uniform_cmd->parsed()) {
      if (!o.modulus) {
        std::cerr << "InvalidArgument: uniform needs --modulus\n";
        return 2;
      }
      char* raw = nullptr;
      check(biop_uniform_json(*o.modulus, o.n_max, &raw));
      emit(take_json(raw), [](const Json& j) {
        for (const auto& s : j["solutions"]) std::cout << "a=" << text(s["a"]) << " n=" << text(s["n"]) << '\n';
      });
    } else if (verify_cmd->parsed()) {
      if (o.modulus) o.verify.modulus = *o.modulus;
      o.verify.max_nodes = o.max_nodes;
      char* raw = nullptr;
      check(biop_verify_json(o.target.c_str(), &o.verify, &raw));
      return run_verify_output(take_json(raw), as_json);
    } else if (oeis_cmd->parsed()) {
      char* raw = nullptr;
      check(biop_oeis_json(o.oeis_id.c_str(), o.count, &raw));
      emit(take_json(raw), [](const Json& j) { std::cout << join(j["terms"]) << '\n'; });
    } else if (search_cmd->parsed()) {
      char* raw = nullptr;
      check(biop_search_json(resolve_ring(o), o.pool.c_str(), o.verify.max_len, !o.no_trivial, !o.no_vanishing,
                             o.max_nodes, &raw));
      emit(take_json(raw), [](const Json& j) {
        std::cout << "count=" << text(j["count"]) << '\n';
        for (const auto& s : j["solutions"]) std::cout << text(s) << '\n';
      });
    }
  } catch (const Failure& f) {
    return f.exit_code;
  }
  return 0;
}
