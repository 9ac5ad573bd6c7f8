#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "g2/algebra.hpp"
#include "g2/exterior.hpp"

namespace g2 {

inline constexpr const char* kReportVersion = "1.0";

/// One checked statement. `paper_anchor` holds the mathematical statement the
/// claim is about.
struct Claim {
  std::string name;
  std::string paper_anchor;
  std::string expected;
  std::string computed;
  bool pass = false;
  double millis = 0;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> facts;  // computed, not checked
  std::vector<Claim> claims;
  std::string details;  // free text appended to the human-readable form

  /// Runs `compute`, timing it; an exception becomes "error: ..." and fails.
  void check(std::string name, std::string anchor, std::string expected, const std::function<std::string()>& compute);
  void fact(std::string name, std::string value) { facts.emplace_back(std::move(name), std::move(value)); }

  bool all_pass() const;
  /// {version, claims:[{name, paper_anchor, expected, computed, pass, millis}]}
  nlohmann::json to_json(bool with_timing = true) const;
  std::string text() const;
};

std::string to_text(bool b);
std::string to_text(const MatrixQ& m);

/// phi7, phi7-split, vol7, sympl6, threeform6, cayley8, phi7-cyclic, sl3
const std::vector<std::string>& builtin_form_names();
std::optional<KForm> builtin_form(std::string_view name);

Report verify_algebra_report(const AlgebraPtr& algebra, const std::string& source);
Report stabilizer_report(const KForm& form, const std::string& source, bool with_basis);
/// Throws NotRegular for a degenerate form.
Report two_faces_report(const KForm& phi, const std::string& source);
/// Throws NotRegular for a degenerate form.
Report reconstruct_report(const KForm& phi, const std::string& source);
Report fano_report(const KForm& phi, const std::string& source);
/// dim ∈ {1, 2, 4, 8, 16}; split selects the split form (not for 1 or 16).
/// Throws std::invalid_argument otherwise.
Report identities_report(int dim, bool split);
/// The full regression battery in fixed order.
Report report_all();

}  // namespace g2
