#include "report.hpp"

#include <sstream>

#include "oneone/error.hpp"
#include "oneone/text.hpp"

namespace oneone::cli {

Report build_report(const std::string& input, const MCGWord& psi, const std::vector<std::int64_t>& ns,
                    std::optional<std::int64_t> only_x) {
  Report r;
  r.input = input;
  r.knot = analyze(psi);
  r.h1_complement = complement_homology(r.knot);
  for (const std::int64_t n : ns) {
    CoveringReport c;
    c.n = n;
    c.gcd = gcd(r.knot.p, Integer(n));
    auto ms = covering_monodromies(r.knot, n);
    c.exists = !ms.empty();
    if (only_x && c.exists) {
      const Monodromy m{n, floor_mod(*only_x, n)};
      if (!is_valid(r.knot, m))
        throw DomainError("x = " + std::to_string(*only_x) + " is not a monodromy for n = " +
                          std::to_string(n));
      ms = {m};
    }
    for (const auto& m : ms) {
      MonodromyReport mr;
      mr.x = m.x;
      mr.presentation = cyclic_word(r.knot, m);
      mr.f_w = polynomial(mr.presentation);
      mr.h1 = abelianization(mr.presentation);
      c.monodromies.push_back(std::move(mr));
    }
    r.coverings.push_back(std::move(c));
  }
  return r;
}

void attach_torus(Report& r, const TorusParams& tp) {
  TorusReport t{tp, IntPoly{1}};
  const std::int64_t b = tp.second();
  if (tp.k >= 2 && b >= 2) t.alexander = torus_alexander(tp.k, b);
  for (auto& c : r.coverings)
    for (auto& m : c.monodromies) {
      m.formula = torus_word_formula(tp, c.n);
      m.matches_formula = equivalent_up_to_shift(m.presentation, *m.formula).has_value();
    }
  r.torus = t;
}

std::string ambient_name(const OneOneKnot& k) {
  if (k.in_s1_x_s2()) return "S^1 x S^2";
  if (k.in_three_sphere()) return "S^3";
  return "L(" + to_string(k.lens_p()) + "," + to_string(*k.lens_q_normalized()) + ")";
}

nlohmann::ordered_json json_integer(const Integer& v) {
  if (const auto small = to_int64(v)) return *small;
  return to_string(v);
}

nlohmann::ordered_json to_json(const AbelianGroup& g) {
  nlohmann::ordered_json torsion = nlohmann::ordered_json::array();
  for (const auto& t : g.torsion) torsion.push_back(json_integer(t));
  return {{"rank", g.rank}, {"torsion", torsion}, {"text", to_string(g)}};
}

namespace {

nlohmann::ordered_json coefficients(const IntPoly& p) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs) a.push_back(json_integer(c));
  return a;
}

}  // namespace

nlohmann::ordered_json to_json(const Report& r) {
  const OneOneKnot& k = r.knot;
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["input"] = r.input;
  j["psi"] = to_string(k.psi);
  j["psi_beta"] = to_string(k.psi_beta);
  j["relator"] = to_string(k.relator);
  j["p"] = json_integer(k.p);
  j["q_prime"] = json_integer(k.q_prime);
  j["q_dblprime"] = json_integer(k.q_dblprime);
  j["q_raw"] = json_integer(k.lens_q());
  const auto qn = k.lens_q_normalized();
  j["q_normalized"] = qn ? json_integer(*qn) : nlohmann::ordered_json(nullptr);
  j["ambient"] = ambient_name(k);
  j["h1_complement"] = to_json(r.h1_complement);

  nlohmann::ordered_json covs = nlohmann::ordered_json::array();
  for (const auto& c : r.coverings) {
    nlohmann::ordered_json ms = nlohmann::ordered_json::array();
    for (const auto& m : c.monodromies) {
      nlohmann::ordered_json mj{{"x", m.x},
                        {"word", to_string(m.presentation.word())},
                        {"f_w", coefficients(m.f_w)},
                        {"h1", to_json(m.h1)}};
      if (m.formula) {
        mj["formula_word"] = to_string(m.formula->word());
        mj["matches_formula"] = m.matches_formula;
      }
      ms.push_back(std::move(mj));
    }
    covs.push_back({{"n", c.n}, {"gcd", json_integer(c.gcd)}, {"exists", c.exists}, {"monodromies", ms}});
  }
  j["coverings"] = covs;

  if (r.torus) {
    const auto& tp = r.torus->params;
    j["torus"] = {{"k", tp.k},
                  {"h", tp.h},
                  {"sign", tp.sign == KnotSign::Plus ? "+" : "-"},
                  {"knot", {tp.k, tp.second()}},
                  {"alexander", coefficients(r.torus->alexander)}};
  }
  return j;
}

namespace {

std::string q_text(const OneOneKnot& k) {
  const auto qn = k.lens_q_normalized();
  return to_string(k.lens_q()) + " (normalized " + (qn ? to_string(*qn) : std::string("-")) + ")";
}

std::string xs_text(const CoveringReport& c) {
  std::string s;
  for (const auto& m : c.monodromies) s += (s.empty() ? "" : " ") + std::to_string(m.x);
  return s;
}

}  // namespace

std::string render_text(const Report& r, Section s) {
  const OneOneKnot& k = r.knot;
  std::ostringstream out;
  out << "input: " << (r.input.empty() ? "\"\"" : r.input) << "\n";
  if (r.torus) {
    const auto& t = *r.torus;
    out << "torus knot: t(" << t.params.k << "," << t.params.second() << ")\n";
    out << "alexander: " << to_string(t.alexander) << "\n";
  }
  out << "psi: " << k.psi << "\n";
  out << "p: " << k.p << "\n";
  out << "q: " << q_text(k) << "\n";
  if (s == Section::Knot || s == Section::Torus) {
    out << "q', q'': " << k.q_prime << ", " << k.q_dblprime << "\n";
    out << "ambient: " << ambient_name(k) << "\n";
    out << "psi(b): " << k.psi_beta << "\n";
    out << "relator: " << k.relator << "\n";
  }
  if (s == Section::Cover) out << "q'': " << k.q_dblprime << "\n";
  if (s != Section::Poly && s != Section::Cover) out << "H1(complement): " << to_string(r.h1_complement) << "\n";

  for (const auto& c : r.coverings) {
    if (!c.exists) {
      out << "n = " << c.n << ": no strongly-cyclic covering (gcd " << c.gcd << " ∤ " << k.q_dblprime
          << ")\n";
      continue;
    }
    out << "n = " << c.n << ": " << c.gcd << (c.gcd == 1 ? " covering" : " coverings") << ", x = "
        << xs_text(c) << "\n";
    if (s == Section::Cover || s == Section::Knot) continue;
    for (const auto& m : c.monodromies) {
      out << "  x = " << m.x;
      if (s == Section::Present || s == Section::Torus) out << " | w = " << m.presentation.word();
      if (s != Section::Homology) out << " | f_w = " << to_string(m.f_w);
      if (s != Section::Poly) out << " | H1 = " << to_string(m.h1);
      if (m.formula)
        out << " | formula = " << m.formula->word() << (m.matches_formula ? " (matches)" : " (differs)");
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace oneone::cli
