#include "fishbij/bigcount.hpp"

namespace fishbij {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EdgeOccupied: return "EdgeOccupied";
    case ErrorKind::BadCell: return "BadCell";
    case ErrorKind::NotDoubleSite: return "NotDoubleSite";
    case ErrorKind::EmptyTree: return "EmptyTree";
    case ErrorKind::InconsistentLabels: return "InconsistentLabels";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotLeftTree: return "NotLeftTree";
    case ErrorKind::NotATail: return "NotATail";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::BadPairTotal: return "BadPairTotal";
    case ErrorKind::UnknownStatistic: return "UnknownStatistic";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::BadStripIndex: return "BadStripIndex";
    case ErrorKind::InvalidFish: return "InvalidFish";
    case ErrorKind::Range: return "Range";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

BigCount binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step
  }
  return r;
}

BigCount exact_div(const BigCount& num, const BigCount& den) {
  if (den == 0) fail(ErrorKind::InexactDivision, "division by zero");
  BigCount q = num / den;
  if (q * den != num)
    fail(ErrorKind::InexactDivision,
         "inexact division: " + num.str() + " / " + den.str());
  return q;
}

}  // namespace fishbij
