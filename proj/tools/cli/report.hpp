#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "oneone/catalog.hpp"
#include "oneone/covering.hpp"
#include "oneone/cyclicpres.hpp"
#include "oneone/intlinalg.hpp"
#include "oneone/knot.hpp"

namespace oneone::cli {

struct MonodromyReport {
  std::int64_t x = 0;
  CyclicPresentation presentation{1, {}};
  IntPoly f_w;
  AbelianGroup h1;
  // torus only
  std::optional<CyclicPresentation> formula;
  bool matches_formula = false;
};

struct CoveringReport {
  std::int64_t n = 2;
  Integer gcd;  ///< gcd(p, n), with gcd(0, n) = n
  bool exists = false;
  std::vector<MonodromyReport> monodromies;
};

struct TorusReport {
  TorusParams params;
  IntPoly alexander;
};

struct Report {
  std::string input;
  OneOneKnot knot;
  AbelianGroup h1_complement;
  std::vector<CoveringReport> coverings;
  std::optional<TorusReport> torus;
};

/// Runs the pipeline for every n in `ns`. With `only_x`, keeps just that
/// monodromy; throws DomainError if it is not one.
Report build_report(const std::string& input, const MCGWord& psi, const std::vector<std::int64_t>& ns,
                    std::optional<std::int64_t> only_x = std::nullopt);

/// Adds closed-form words and the Alexander polynomial.
void attach_torus(Report& r, const TorusParams& tp);

/// "L(4,1)", "S^3" or "S^1 x S^2".
std::string ambient_name(const OneOneKnot& k);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::ordered_json json_integer(const Integer& v);
nlohmann::ordered_json to_json(const AbelianGroup& g);
nlohmann::ordered_json to_json(const Report& r);

enum class Section { Knot, Cover, Present, Homology, Poly, Torus };

std::string render_text(const Report& r, Section s);

}  // namespace oneone::cli
