#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conformal {

enum class Errc {
  not_locally_univalent,
  invalid_parameter,
  outside_domain,
  singular_point,
  membership_undecidable,
  no_density_route,
  map_not_univalent,
  boundary_extension_undefined,
  composition_incompatible,
  invalid_polyline,
  path_exits_domain,
  no_grid_path,
  kind_domain_mismatch,
  branch_cut,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::not_locally_univalent: return "not locally univalent";
    case Errc::invalid_parameter: return "invalid parameter";
    case Errc::outside_domain: return "point outside domain";
    case Errc::singular_point: return "singular point";
    case Errc::membership_undecidable: return "membership undecidable";
    case Errc::no_density_route: return "no density route";
    case Errc::map_not_univalent: return "map not univalent";
    case Errc::boundary_extension_undefined: return "boundary extension undefined";
    case Errc::composition_incompatible: return "composition domains incompatible";
    case Errc::invalid_polyline: return "invalid polyline";
    case Errc::path_exits_domain: return "path exits domain";
    case Errc::no_grid_path: return "no grid path";
    case Errc::kind_domain_mismatch: return "kind/domain mismatch";
    case Errc::branch_cut: return "branch cut violation";
  }
  return "unknown error";
}

/// Recoverable library error. Sweeps catch it per sample and record the skip.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail = {})
      : std::runtime_error(detail.empty() ? std::string(to_string(code))
                                          : std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace conformal
