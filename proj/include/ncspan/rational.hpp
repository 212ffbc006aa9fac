#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace ncspan {

// Exact rational scalar. GMP keeps the value canonical (positive denominator,
// lowest terms) after every arithmetic operation.
using Coefficient = mpq_class;

inline std::string to_string(const Coefficient& c) { return c.get_str(); }

/// Parses "p" or "p/q" (optional leading sign on p). Rejects q = 0.
inline std::optional<Coefficient> parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!digits(den)) return std::nullopt;
  }
  std::string_view unsigned_num = num;
  if (!unsigned_num.empty() && (unsigned_num.front() == '-' || unsigned_num.front() == '+'))
    unsigned_num.remove_prefix(1);
  if (!digits(unsigned_num)) return std::nullopt;

  mpz_class p(std::string(unsigned_num), 10);
  if (num.front() == '-') p = -p;
  mpz_class q = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (q == 0) return std::nullopt;
  Coefficient c(p, q);
  c.canonicalize();
  return c;
}

}  // namespace ncspan
