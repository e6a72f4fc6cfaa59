#pragma once

#include <string>
#include <vector>

#include "fishbij/enumerate.hpp"

namespace fishbij {

// Verification suites: each runs an exhaustive or formula-level check and
// reports one PASS/FAIL line per sub-check with observed vs expected values.
// Suites never throw on a mere mismatch; they record it and keep going.

struct VerifyResult {
  bool pass = true;
  std::vector<std::string> lines;

  std::string text() const;
  void note(bool ok, const std::string& what);
  void merge(const VerifyResult& o);
};

// Suite names: lemma2, thm1, thm2, thm3, tails, symmetric, lefttrees, oracle,
// qpoly, all.  nmax bounds the exhaustive size; workers bounds parallelism.
VerifyResult run_suite(const std::string& suite, int nmax, int workers = 1);

VerifyResult verify_lemma2(int nmax);
VerifyResult verify_thm1(int nmax);
VerifyResult verify_thm2(int nmax);
VerifyResult verify_thm3(int nmax, int workers = 1);
VerifyResult verify_tails(int nmax);
VerifyResult verify_symmetric(int nmax);
VerifyResult verify_lefttrees(int nmax, int workers = 1);
VerifyResult verify_oracle(int nmax);
VerifyResult verify_qpoly(int nmax);

}  // namespace fishbij
