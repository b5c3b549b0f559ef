#include "platkit/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "platkit/invariants.hpp"
#include "platkit/sweep.hpp"

namespace platkit {

KnotReport make_report(const PlatNormalForm& nf) {
  KnotReport r;
  r.p = nf.p();
  r.q = nf.q();
  r.canonical_even_q = canonical_even_rep(nf.p(), nf.q());
  r.ribbon_type = ribbon_type(nf).entries;
  const LaurentPoly delta = alexander_closed(nf);
  r.alexander_normalized = normalize(delta);
  r.determinant = determinant(delta);
  const TauResult tr = a_and_tau(delta);
  r.a = tr.a;
  r.tau = tr.tau;
  r.monic = is_monic(delta);
  r.invertibility_obstructed = invertibility_obstructed(delta);
  r.spun_separated = spun_separation(delta);
  return r;
}

bool report_is_consistent(const KnotReport& r) {
  if (r.determinant != r.p || r.a != r.p) return false;
  if (r.p == 1) return r.tau == 0;
  return r.tau == tau_closed_form(r.p, r.canonical_even_q);
}

namespace {

std::string join(const std::vector<std::int64_t>& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

// Dense coefficient list from the lowest exponent; empty for zero.
std::vector<Integer> dense_coeffs(const LaurentPoly& f) {
  std::vector<Integer> out;
  if (f.is_zero()) return out;
  for (Exponent k = f.min_exponent(); k <= f.max_exponent(); ++k) out.push_back(f.coefficient(k));
  return out;
}

nlohmann::json integer_to_json(const Integer& v) {
  if (auto small = to_int64(v)) return *small;
  return v.str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<std::int64_t>());
}

bool parse_bool(std::string_view s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw std::invalid_argument("expected true/false, got '" + std::string(s) + "'");
}

std::vector<std::int64_t> parse_ribbon(std::string_view s) {
  if (s.size() < 3 || s.substr(0, 2) != "R(" || s.back() != ')') {
    throw std::invalid_argument("malformed ribbon type '" + std::string(s) + "'");
  }
  s = s.substr(2, s.size() - 3);
  std::vector<std::int64_t> out;
  std::istringstream in{std::string(s)};
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(std::stoll(item));
  return out;
}

}  // namespace

std::string render_text(const KnotReport& r) {
  std::ostringstream os;
  os << "F(" << r.p << "," << r.q << ")";
  if (r.p == 1) os << " (trivial 2-knot)";
  os << "\n"
     << "p: " << r.p << "\n"
     << "q: " << r.q << "\n"
     << "canonical_even_q: " << r.canonical_even_q << "\n"
     << "ribbon_type: R(" << join(r.ribbon_type, ", ") << ")\n"
     << "alexander_normalized: " << to_tuple_string(r.alexander_normalized) << "\n"
     << "determinant: " << r.determinant << "\n"
     << "a: " << r.a << "\n"
     << "tau: " << r.tau << "\n"
     << std::boolalpha << "monic: " << r.monic << "\n"
     << "invertibility_obstructed: " << r.invertibility_obstructed << "\n"
     << "spun_separated: " << r.spun_separated << "\n";
  return os.str();
}

KnotReport parse_report_text(std::string_view text) {
  std::map<std::string, std::string, std::less<>> fields;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto colon = line.find(": ");
    if (colon == std::string::npos) continue;
    fields[line.substr(0, colon)] = line.substr(colon + 2);
  }
  auto get = [&](std::string_view key) -> const std::string& {
    auto it = fields.find(key);
    if (it == fields.end()) throw std::invalid_argument("report is missing field '" + std::string(key) + "'");
    return it->second;
  };
  KnotReport r;
  r.p = std::stoll(get("p"));
  r.q = std::stoll(get("q"));
  r.canonical_even_q = std::stoll(get("canonical_even_q"));
  r.ribbon_type = parse_ribbon(get("ribbon_type"));
  r.alexander_normalized = parse_tuple(get("alexander_normalized"));
  r.determinant = Integer(get("determinant"));
  r.a = Integer(get("a"));
  r.tau = Integer(get("tau"));
  r.monic = parse_bool(get("monic"));
  r.invertibility_obstructed = parse_bool(get("invertibility_obstructed"));
  r.spun_separated = parse_bool(get("spun_separated"));
  return r;
}

nlohmann::json to_json(const KnotReport& r) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : dense_coeffs(r.alexander_normalized)) coeffs.push_back(integer_to_json(c));
  return {
      {"p", r.p},
      {"q", r.q},
      {"canonical_even_q", r.canonical_even_q},
      {"ribbon_type", r.ribbon_type},
      {"alexander_normalized",
       {{"min_exp", r.alexander_normalized.is_zero() ? 0 : r.alexander_normalized.min_exponent()},
        {"coeffs", coeffs}}},
      {"determinant", integer_to_json(r.determinant)},
      {"a", integer_to_json(r.a)},
      {"tau", integer_to_json(r.tau)},
      {"monic", r.monic},
      {"invertibility_obstructed", r.invertibility_obstructed},
      {"spun_separated", r.spun_separated},
  };
}

KnotReport report_from_json(const nlohmann::json& j) {
  KnotReport r;
  r.p = j.at("p").get<std::int64_t>();
  r.q = j.at("q").get<std::int64_t>();
  r.canonical_even_q = j.at("canonical_even_q").get<std::int64_t>();
  r.ribbon_type = j.at("ribbon_type").get<std::vector<std::int64_t>>();
  const auto& alex = j.at("alexander_normalized");
  const auto lowest = alex.at("min_exp").get<Exponent>();
  std::vector<std::pair<Exponent, Integer>> terms;
  Exponent k = lowest;
  for (const auto& c : alex.at("coeffs")) terms.emplace_back(k++, integer_from_json(c));
  r.alexander_normalized = LaurentPoly::from_terms(std::move(terms));
  r.determinant = integer_from_json(j.at("determinant"));
  r.a = integer_from_json(j.at("a"));
  r.tau = integer_from_json(j.at("tau"));
  r.monic = j.at("monic").get<bool>();
  r.invertibility_obstructed = j.at("invertibility_obstructed").get<bool>();
  r.spun_separated = j.at("spun_separated").get<bool>();
  return r;
}

std::optional<std::string> literature_name(std::int64_t p, std::int64_t q) {
  // Literature names of the small ribbon 2-knots in the standard table of 2-knots.
  static const std::map<std::pair<std::int64_t, std::int64_t>, std::string> names = {
      {{1, 0}, "0_1"}, {{3, 2}, "2_2"},  {{5, 2}, "4_8"},  {{5, 4}, "4_9"},
      {{7, 2}, "6_64"}, {{7, 4}, "6_69"}, {{7, 6}, "6_68"},
  };
  auto it = names.find({p, q});
  if (it == names.end()) return std::nullopt;
  return it->second;
}

std::vector<KnotReport> table_reports(std::int64_t max_p) {
  std::vector<KnotReport> rows;
  if (max_p < 1) return rows;
  rows.push_back(make_report(PlatNormalForm(1, 0)));
  for (const auto& nf : nontrivial_even_forms(max_p)) rows.push_back(make_report(nf));
  return rows;
}

namespace {

struct TextCells {
  std::string fraction;
  std::string ribbon;
  std::string delta;
  std::string name;
};

TextCells text_cells(const KnotReport& r) {
  TextCells c;
  c.fraction = std::to_string(r.q) + "/" + std::to_string(r.p);
  c.ribbon = "R(" + join(r.ribbon_type, ", ") + ")";
  if (r.p == 1) c.ribbon += " (Trivial 2-knot)";
  c.delta = to_tuple_string(r.alexander_normalized);
  if (auto n = literature_name(r.p, r.q)) c.name = "≈ " + *n;
  return c;
}

}  // namespace

std::string table_row_text(const KnotReport& r) {
  const auto c = text_cells(r);
  std::string out = c.fraction + " | " + c.ribbon + " | " + c.delta + " |";
  if (!c.name.empty()) out += " " + c.name;
  return out;
}

std::string render_table_text(const std::vector<KnotReport>& rows) {
  std::vector<TextCells> cells;
  std::size_t w_frac = 3, w_ribbon = 11, w_delta = 4;
  for (const auto& r : rows) {
    cells.push_back(text_cells(r));
    w_frac = std::max(w_frac, cells.back().fraction.size());
    w_ribbon = std::max(w_ribbon, cells.back().ribbon.size());
    w_delta = std::max(w_delta, cells.back().delta.size());
  }
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(s.size(), w), ' ');
    return s;
  };
  std::ostringstream os;
  os << "# " << pad("q/p", w_frac) << " | " << pad("Ribbon type", w_ribbon) << " | " << pad("Δ(t)", w_delta + 1)
     << " | ≈\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && rows[i].p != rows[i - 1].p) os << "\n";
    const auto& c = cells[i];
    std::string line = "  " + pad(c.fraction, w_frac) + " | " + pad(c.ribbon, w_ribbon) + " | " +
                       pad(c.delta, w_delta) + " |";
    if (!c.name.empty()) line += " " + c.name;
    os << line << "\n";
  }
  return os.str();
}

std::string render_table_csv(const std::vector<KnotReport>& rows) {
  std::ostringstream os;
  os << "p,q,ribbon_type,delta_coeffs,min_exp,det,a,tau,monic\n";
  for (const auto& r : rows) {
    std::string coeffs;
    for (const auto& c : dense_coeffs(r.alexander_normalized)) {
      if (!coeffs.empty()) coeffs += ";";
      coeffs += c.str();
    }
    os << r.p << "," << r.q << "," << join(r.ribbon_type, ";") << "," << coeffs << ","
       << (r.alexander_normalized.is_zero() ? 0 : r.alexander_normalized.min_exponent()) << "," << r.determinant
       << "," << r.a << "," << r.tau << "," << (r.monic ? "true" : "false") << "\n";
  }
  return os.str();
}

nlohmann::json render_table_json(const std::vector<KnotReport>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    auto j = to_json(r);
    if (auto n = literature_name(r.p, r.q)) j["literature_name"] = *n;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace platkit
