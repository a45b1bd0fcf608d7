#pragma once

// Compact, shell-safe specs for maps, domains and points:
//   maps     identity | koebe | cayley | pcover | power:n | mobius:a,theta
//            | mobius:are,aim,theta | logslit:zeta,c | logslit:zre,zim,cre,cim
//            and f@g for the composite f∘g
//   domains  disk | pdisk | uhp | koebe-slit | slit-disk | half-strip
//            | image:<map>:<domain>:<n>
//   points   re,im or a bare real

#include <cerrno>
#include <cstdlib>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "conformal/domain.hpp"
#include "conformal/error.hpp"
#include "conformal/map.hpp"

namespace conformal {

namespace detail {

inline double parse_real(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw Error(Errc::invalid_parameter, "empty number");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE) throw Error(Errc::invalid_parameter, "bad number '" + s + "'");
  return v;
}

inline std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_real(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline void expect_params(const std::string& name, const std::vector<double>& p, std::initializer_list<std::size_t> counts) {
  for (std::size_t c : counts) {
    if (p.size() == c) return;
  }
  throw Error(Errc::invalid_parameter, "wrong parameter count for " + name);
}

}  // namespace detail

inline complex parse_point(std::string_view text) {
  const auto p = detail::parse_list(text);
  if (p.size() == 1) return {p[0], 0.0};
  if (p.size() == 2) return {p[0], p[1]};
  throw Error(Errc::invalid_parameter, "point must be re,im");
}

inline AnalyticMap parse_map(std::string_view text) {
  if (const std::size_t at = text.find('@'); at != std::string_view::npos) {
    return compose_maps(parse_map(text.substr(0, at)), parse_map(text.substr(at + 1)));
  }
  const std::size_t colon = text.find(':');
  const std::string name(text.substr(0, colon));
  const std::vector<double> p =
      colon == std::string_view::npos ? std::vector<double>{} : detail::parse_list(text.substr(colon + 1));
  if (name == "identity") {
    detail::expect_params(name, p, {0});
    return AnalyticMap::identity();
  }
  if (name == "koebe") {
    detail::expect_params(name, p, {0});
    return AnalyticMap::koebe();
  }
  if (name == "cayley") {
    detail::expect_params(name, p, {0});
    return AnalyticMap::cayley();
  }
  if (name == "pcover") {
    detail::expect_params(name, p, {0});
    return AnalyticMap::punctured_disk_covering();
  }
  if (name == "power") {
    detail::expect_params(name, p, {1});
    if (p[0] != static_cast<int>(p[0])) throw Error(Errc::invalid_parameter, "power exponent must be an integer");
    return AnalyticMap::power(static_cast<int>(p[0]));
  }
  if (name == "mobius") {
    detail::expect_params(name, p, {2, 3});
    return p.size() == 2 ? AnalyticMap::mobius(p[0], p[1]) : AnalyticMap::mobius({p[0], p[1]}, p[2]);
  }
  if (name == "logslit") {
    detail::expect_params(name, p, {2, 4});
    return p.size() == 2 ? AnalyticMap::log_slit(p[0], p[1]) : AnalyticMap::log_slit({p[0], p[1]}, {p[2], p[3]});
  }
  throw Error(Errc::invalid_parameter, "unknown map '" + name + "'");
}

inline Domain parse_domain(std::string_view text) {
  if (text == "disk") return Domain::unit_disk();
  if (text == "pdisk") return Domain::punctured_disk();
  if (text == "uhp") return Domain::upper_half_plane();
  if (text == "koebe-slit") return Domain::koebe_slit_plane();
  if (text == "slit-disk") return Domain::slit_disk();
  if (text == "half-strip") return Domain::half_strip();
  constexpr std::string_view prefix = "image:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string_view rest = text.substr(prefix.size());
    const std::size_t last = rest.rfind(':');
    if (last == std::string_view::npos) throw Error(Errc::invalid_parameter, "image:<map>:<domain>:<n>");
    const double n = detail::parse_real(rest.substr(last + 1));
    if (n != static_cast<int>(n)) throw Error(Errc::invalid_parameter, "image sample count must be an integer");
    const std::string_view pair = rest.substr(0, last);
    // The map spec may itself contain ':'; take the rightmost split that parses.
    for (std::size_t split = pair.rfind(':'); split != std::string_view::npos && split > 0;
         split = pair.rfind(':', split - 1)) {
      try {
        const Domain base = parse_domain(pair.substr(split + 1));
        auto map = std::make_shared<const AnalyticMap>(parse_map(pair.substr(0, split)));
        return Domain::image(map, base, static_cast<int>(n));
      } catch (const Error& e) {
        if (e.code() != Errc::invalid_parameter) throw;
      }
    }
    throw Error(Errc::invalid_parameter, "cannot parse image domain '" + std::string(text) + "'");
  }
  throw Error(Errc::invalid_parameter, "unknown domain '" + std::string(text) + "'");
}

}  // namespace conformal
