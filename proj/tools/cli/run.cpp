#include "run.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>

#include "oneone/error.hpp"
#include "oneone/text.hpp"
#include "report.hpp"

namespace oneone::cli {

namespace {

struct Options {
  std::string word;
  std::vector<std::int64_t> ns;
  std::optional<std::int64_t> monodromy;
  bool all_monodromies = false;
  bool json = false;
  std::int64_t k = 2, h = 1;
  std::string sign = "+";
};

KnotSign parse_sign(const std::string& s) {
  if (s == "+" || s == "+1" || s == "plus") return KnotSign::Plus;
  if (s == "-" || s == "-1" || s == "minus") return KnotSign::Minus;
  throw DomainError("--sign must be + or -");
}

void add_covering_flags(CLI::App* sub, Options& o, bool n_required) {
  auto* n = sub->add_option("--n", o.ns, "Covering degree (repeatable)")->check(CLI::Range(2, 1 << 20));
  if (n_required) n->required();
  auto* x = sub->add_option("--monodromy", o.monodromy, "Only the covering with alpha -> x");
  sub->add_flag("--all-monodromies", o.all_monodromies, "Every monodromy for each n (default)")->excludes(x);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strongly-cyclic branched coverings of (1,1)-knots", "oneone"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit a JSON report");

  struct Command {
    CLI::App* app;
    Section section;
    bool needs_n;
  };
  std::vector<Command> commands;
  auto word_command = [&](const char* name, const char* help, Section s, bool needs_n) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("word", o.word, "Mapping class, e.g. \"a^2 g a^-4\"")->required();
    sub->add_flag("--json", o.json, "Emit a JSON report");
    add_covering_flags(sub, o, needs_n);
    commands.push_back({sub, s, needs_n});
  };
  word_command("analyze", "Lens space, knot group and complement homology", Section::Knot, false);
  word_command("cover", "Strongly-cyclic coverings of degree n", Section::Cover, true);
  word_command("present", "Cyclic presentation of each covering", Section::Present, true);
  word_command("homology", "First homology of the complement and of each covering", Section::Homology, false);
  word_command("poly", "Polynomial of each cyclic presentation", Section::Poly, true);

  CLI::App* torus = app.add_subcommand("torus", "Torus knot t(k, hk + sign) via its mapping class");
  torus->set_help_flag("--help", "Print this help message and exit");
  torus->add_option("--k", o.k, "k >= 1")->required();
  torus->add_option("--h", o.h, "h >= 1")->required();
  torus->add_option("--sign", o.sign, "+ or -")->required();
  torus->add_flag("--json", o.json, "Emit a JSON report");
  add_covering_flags(torus, o, false);
  commands.push_back({torus, Section::Torus, false});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const auto chosen = std::find_if(commands.begin(), commands.end(),
                                   [](const Command& c) { return c.app->parsed(); });
  try {
    Report report;
    if (chosen->section == Section::Torus) {
      const TorusParams tp{o.k, o.h, parse_sign(o.sign)};
      const MCGWord psi = torus_mcg(tp);
      report = build_report(to_string(psi), psi, o.ns, o.monodromy);
      attach_torus(report, tp);
    } else {
      report = build_report(o.word, parse_mcg(o.word), o.ns, o.monodromy);
    }

    if (o.json)
      out << to_json(report).dump(2) << "\n";
    else
      out << render_text(report, chosen->section);

    const bool any = std::any_of(report.coverings.begin(), report.coverings.end(),
                                 [](const CoveringReport& c) { return c.exists; });
    if (!report.coverings.empty() && !any) {
      if (o.json) {
        const auto& c = report.coverings.front();
        err << "no strongly-cyclic covering (gcd " << c.gcd << " ∤ " << report.knot.q_dblprime << ")\n";
      }
      return kNoCovering;
    }
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const MalformedMapError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace oneone::cli
