#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "platkit/laurent.hpp"
#include "platkit/platknot.hpp"

namespace platkit {

/// Everything the toolkit computes for one normal form F(p, q).
struct KnotReport {
  std::int64_t p = 1;
  std::int64_t q = 0;
  std::int64_t canonical_even_q = 0;
  std::vector<std::int64_t> ribbon_type;
  LaurentPoly alexander_normalized;
  Integer determinant;
  Integer a;
  Integer tau;
  bool monic = true;
  bool invertibility_obstructed = false;
  bool spun_separated = false;

  friend bool operator==(const KnotReport&, const KnotReport&) = default;
};

KnotReport make_report(const PlatNormalForm& nf);

/// determinant = a = p, and tau = (2 q_e)^-1 mod p when p > 1.
bool report_is_consistent(const KnotReport& r);

std::string render_text(const KnotReport& r);
KnotReport parse_report_text(std::string_view text);

nlohmann::json to_json(const KnotReport& r);
KnotReport report_from_json(const nlohmann::json& j);

/// Kanenobu-Takahashi name such as "2_2" for the listed p <= 7 rows, literature data only.
std::optional<std::string> literature_name(std::int64_t p, std::int64_t q);

/// Trivial row 0/1 followed by every (p, q) with p odd <= max_p, q even in (0, p), coprime.
std::vector<KnotReport> table_reports(std::int64_t max_p);

std::string render_table_text(const std::vector<KnotReport>& rows);
std::string render_table_csv(const std::vector<KnotReport>& rows);
nlohmann::json render_table_json(const std::vector<KnotReport>& rows);

/// One text-table row without padding: "q/p | R(...) | (...) | name".
std::string table_row_text(const KnotReport& r);

}  // namespace platkit
