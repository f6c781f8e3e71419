#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace lindeg::suites {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id = 0;
  std::string name;
  double limit_seconds = 0;
  std::function<Outcome(std::uint64_t seed, unsigned jobs)> run;
};

struct Result {
  int id = 0;
  std::string name;
  bool pass = false;
  bool in_time = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;

  bool ok() const { return pass && in_time; }
};

/// The twelve acceptance criteria, in order.
const std::vector<Criterion>& criteria();

/// "all", "ac1".."ac12" or a criterion name. Throws lindeg::Error
/// (InvalidParams) on an unknown suite.
std::vector<Criterion> select(const std::string& suite);

/// Runs one criterion, timing it; exceptions count as failures.
Result run(const Criterion& c, std::uint64_t seed = 1, unsigned jobs = 1);

}  // namespace lindeg::suites
