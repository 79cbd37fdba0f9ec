#include "linkage/rational.hpp"

#include <cctype>

#include "linkage/errors.hpp"

namespace linkage {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Input: return "InputError";
    case ErrorKind::EmptySpace: return "EmptySpace";
    case ErrorKind::RigidPoint: return "RigidPoint";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::DegenerateCell: return "DegenerateCell";
    case ErrorKind::DegenerateLinkage: return "DegenerateLinkage";
    case ErrorKind::Aligned: return "Aligned";
    case ErrorKind::DimensionTooHigh: return "DimensionTooHigh";
    case ErrorKind::ActionMismatch: return "ActionMismatch";
    case ErrorKind::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NoAllowablePair: return "NoAllowablePair";
    case ErrorKind::InvalidL: return "InvalidL";
  }
  return "Error";
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Input:
    case ErrorKind::NotAnAutomorphism:
    case ErrorKind::NotASubgroup:
    case ErrorKind::NoAllowablePair:
    case ErrorKind::InvalidL:
    case ErrorKind::DimensionTooHigh:
      return 2;
    case ErrorKind::EmptySpace:
    case ErrorKind::RigidPoint:
    case ErrorKind::Infeasible:
    case ErrorKind::DegenerateCell:
    case ErrorKind::DegenerateLinkage:
    case ErrorKind::Aligned:
      return 3;
    case ErrorKind::ActionMismatch:
      return 1;
  }
  return 1;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  auto bad = [&] { return Error(ErrorKind::Input, "malformed rational '" + std::string(text) + "'"); };
  if (s.empty()) throw bad();

  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw bad();
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(ErrorKind::Input, "zero denominator in '" + std::string(text) + "'");
    q = Rational(mpz_class(std::string(num), 10), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw bad();
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) throw bad();
    std::string digits = std::string(ip) + std::string(fp);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    q = Rational(mpz_class(digits.empty() ? "0" : digits, 10), den);
  } else {
    if (!all_digits(s)) throw bad();
    q = Rational(mpz_class(std::string(s), 10));
  }
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  // values built directly from numerator and denominator may not be reduced
  Rational c = q;
  c.canonicalize();
  return c.get_str(10);
}

}  // namespace linkage
