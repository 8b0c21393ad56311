#include "dickman/kappa.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dickman {

KappaMode parse_kappa_mode(std::string_view name)
{
  if (name == "floor")
    return KappaMode::floor;
  if (name == "round")
    return KappaMode::round;
  if (name == "exact-multiple" || name == "exact")
    return KappaMode::exact_multiple;
  throw std::invalid_argument(fmt::format("unknown kappa mode '{}'", name));
}

std::string_view to_string(KappaMode mode)
{
  switch (mode) {
  case KappaMode::floor:
    return "floor";
  case KappaMode::round:
    return "round";
  case KappaMode::exact_multiple:
    return "exact-multiple";
  }
  return "?";
}

KappaSeq KappaSeq::from_rational(std::int64_t num, std::int64_t den, KappaMode mode)
{
  if (den <= 0 || num <= 0)
    throw std::invalid_argument("kappa: slope must be a positive fraction");
  const std::int64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (mode == KappaMode::exact_multiple && den != 1)
    throw std::invalid_argument(
        fmt::format("kappa: exact-multiple mode needs an integer slope, got {}/{}", num, den));
  return KappaSeq(num, den, mode);
}

KappaSeq KappaSeq::from_decimal(std::string_view text, KappaMode mode)
{
  const auto bad = [&] { return std::invalid_argument(fmt::format("kappa: cannot parse slope '{}'", text)); };
  const auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
      throw bad();
    return v;
  };

  if (text.empty())
    throw bad();
  if (auto slash = text.find('/'); slash != std::string_view::npos)
    return from_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)), mode);

  const auto dot = text.find('.');
  if (dot == std::string_view::npos)
    return from_rational(parse_int(text), 1, mode);

  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = text.substr(dot + 1);
  if (frac.size() > 15 || (whole.empty() && frac.empty()))
    throw bad();
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i)
    den *= 10;
  const std::int64_t w = whole.empty() ? 0 : parse_int(whole);
  const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
  return from_rational(w * den + f, den, mode);
}

KappaSeq KappaSeq::from_double(double x, KappaMode mode)
{
  if (!std::isfinite(x) || x <= 0.0)
    throw std::invalid_argument("kappa: slope must be finite and positive");
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed);
  if (ec != std::errc())
    throw std::invalid_argument("kappa: slope not representable");
  return from_decimal(std::string_view(buf, end), mode);
}

std::int64_t KappaSeq::operator()(std::int64_t n) const
{
  const __int128 p = static_cast<__int128>(num_) * n;
  switch (mode_) {
  case KappaMode::floor:
  case KappaMode::exact_multiple:
    return static_cast<std::int64_t>(p / den_);
  case KappaMode::round:
    return static_cast<std::int64_t>((2 * p + den_) / (2 * static_cast<__int128>(den_)));
  }
  return 0;
}

std::string KappaSeq::describe() const
{
  if (den_ == 1)
    return fmt::format("{} ({})", num_, to_string(mode_));
  return fmt::format("{}/{} ({})", num_, den_, to_string(mode_));
}

KappaCursor::KappaCursor(const KappaSeq &kappa)
{
  // kappa_n = floor((a n + b)/d); round(x n) = floor((2 num n + den)/(2 den))
  std::int64_t a = kappa.num_;
  std::int64_t b = 0;
  std::int64_t d = kappa.den_;
  if (kappa.mode_ == KappaMode::round) {
    a *= 2;
    b = kappa.den_;
    d *= 2;
  }
  step_quot_ = a / d;
  step_rem_ = a % d;
  div_ = d;
  quot_ = b / d;  // value at n = 0
  rem_ = b % d;
}

std::int64_t KappaCursor::next()
{
  ++n_;
  quot_ += step_quot_;
  rem_ += step_rem_;
  if (rem_ >= div_) {
    rem_ -= div_;
    ++quot_;
  }
  return quot_;
}

} // namespace dickman
