#include "skewperm/arith.hpp"

#include <stdexcept>

namespace skewperm {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rat parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) bad(text);

  Rat value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    Int q{std::string(den)};
    if (q == 0) bad(text);
    value = Rat(Int{std::string(num)}, q);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad(text);
    if (!whole.empty() && !all_digits(whole)) bad(text);
    if (!frac.empty() && !all_digits(frac)) bad(text);
    Int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Int units = whole.empty() ? Int(0) : Int{std::string(whole)};
    Int frac_part = frac.empty() ? Int(0) : Int{std::string(frac)};
    value = Rat(units * scale + frac_part, scale);
  } else {
    if (!all_digits(body)) bad(text);
    value = Rat(Int{std::string(body)});
  }
  return negative ? Rat(-value) : value;
}

std::string rat_string(const Rat& value) { return value.str(); }

double rat_double(const Rat& value) { return value.convert_to<double>(); }

}  // namespace skewperm
