// hypsurf command-line tool.
//
// Exit status: 0 success, 1 invalid input or failed check, 2 numeric
// instability, 64 usage error.

#include "hypsurf/critical.hpp"
#include "hypsurf/kappa.hpp"
#include "hypsurf/pattern.hpp"
#include "hypsurf/report.hpp"
#include "hypsurf/surface.hpp"
#include "hypsurf/tessellation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace hypsurf;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitUsage = 64;

struct RangeArg {
  int lo = 0;
  int hi = 0;
};

std::optional<RangeArg> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return std::nullopt;
  try {
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    const std::string lo = text.substr(0, colon);
    const std::string hi = text.substr(colon + 1);
    RangeArg r{std::stoi(lo, &used_lo), std::stoi(hi, &used_hi)};
    if (used_lo != lo.size() || used_hi != hi.size()) return std::nullopt;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

nlohmann::ordered_json kappa_json(const KappaReport& r) {
  nlohmann::ordered_json doc;
  doc["B"] = r.face_bound;
  doc["kappa"] = stable_decimal(r.kappa, r.stable_digits);
  doc["stable_digits"] = r.stable_digits;
  doc["precision"] = r.precision.digits();
  doc["mode"] = to_string(r.mode);
  doc["p"] = r.canonical_pair().first;
  doc["q"] = r.canonical_pair().second;
  auto pairs = nlohmann::ordered_json::array();
  for (const auto& [p, q] : r.attaining_pairs) pairs.push_back({{"p", p}, {"q", q}});
  doc["attaining_pairs"] = pairs;
  doc["evaluations"] = r.evaluations;
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular hyperbolic polyhedral surfaces: curvature, critical lengths, kappa search"};
  app.require_subcommand(1);

  int digits = Precision().digits();
  unsigned jobs = 1;
  app.add_option("--precision", digits, "working precision W in decimal digits")
      ->check(CLI::Range(kMinDigits, 100000));
  app.add_option("--jobs", jobs, "worker threads for the pruned search")->check(CLI::Range(1u, 256u));

  // kappa
  auto* kappa = app.add_subcommand("kappa", "maximal angle defect over incomparable pairs");
  int face_bound = 0;
  std::string mode = "pruned";
  std::string emit = "table";
  bool allow_large = false;
  kappa->add_option("--facemax", face_bound, "largest face degree B")->required();
  kappa->add_option("--mode", mode)->check(CLI::IsMember({"pruned", "brute"}));
  kappa->add_option("--emit", emit, "table: text, report: JSON")
      ->check(CLI::IsMember({"table", "report"}));
  kappa->add_flag("--allow-large-brute", allow_large, "lift the brute-force budget cap");

  // table4
  auto* table = app.add_subcommand("table4", "kappa over a range of face bounds, merged into rows");
  std::string range = "11:59";
  table->add_option("--range", range, "lo:hi");

  // graph verify / graph report
  auto* graph = app.add_subcommand("graph", "tessellation files");
  graph->require_subcommand(1);
  std::string path;
  bool strict = false;
  std::string side;
  auto* verify = graph->add_subcommand("verify", "validate a face list");
  verify->add_option("path", path)->required();
  verify->add_flag("--strict", strict, "faces may share at most one edge");
  auto* report = graph->add_subcommand("report", "curvature, critical length, area, bounds");
  report->add_option("path", path)->required();
  report->add_flag("--strict", strict, "faces may share at most one edge");
  report->add_option("--side", side, "also report the area at this side length");

  // pattern phi / ac / defect
  auto* pattern = app.add_subcommand("pattern", "single vertex patterns");
  pattern->require_subcommand(1);
  std::vector<int> degrees;
  std::string pattern_side;
  auto* phi_cmd = pattern->add_subcommand("phi", "combinatorial curvature");
  auto* ac_cmd = pattern->add_subcommand("ac", "critical side length");
  auto* defect_cmd = pattern->add_subcommand("defect", "angle defect at a side length");
  for (auto* sub : {phi_cmd, ac_cmd, defect_cmd}) {
    sub->add_option("degrees", degrees, "face degrees around the vertex")->required()->expected(3, -1);
    sub->add_option("--side", pattern_side, "side length");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const Precision w(digits);
    ScopedPrecision guard(w);

    if (*kappa) {
      KappaOptions options;
      options.mode = mode == "brute" ? SearchMode::brute : SearchMode::pruned;
      options.precision = w;
      options.jobs = jobs;
      options.allow_large_brute = allow_large;
      KappaReport r = kappa_search(face_bound, options);
      if (emit == "report") {
        std::cout << kappa_json(r).dump(2) << "\n";
      } else {
        std::cout << kappa_text(r);
      }
    } else if (*table) {
      auto bounds = parse_range(range);
      if (!bounds) {
        std::cerr << "--range: expected lo:hi, got " << range << "\n";
        return kExitUsage;
      }
      std::cout << table4_text(table4(bounds->lo, bounds->hi, w, jobs), w);
    } else if (*graph) {
      Tessellation t = load_tessellation_file(path, ValidationOptions{strict});
      if (*verify) {
        std::cout << verify_text(t);
      } else {
        std::optional<std::string> at;
        if (!side.empty()) at = side;
        const std::string text = graph_report_text(t, w, at);
        std::cout << text;
        if (text.find("FAILED") != std::string::npos) return kExitNumeric;
      }
    } else if (*pattern) {
      Pattern p(degrees);
      if (*phi_cmd) {
        std::cout << phi(p) << "\n";
      } else if (*ac_cmd) {
        auto ac = eval_stable([&] { return critical_side_length(p); }, w);
        std::cout << "pattern " << p.str() << "\n";
        std::cout << "precision W = " << w.digits() << "\n";
        std::cout << "a_c = " << stable_decimal(ac) << " (stable digits " << ac.agreed_digits
                  << ")\n";
      } else {
        if (pattern_side.empty()) {
          std::cerr << "pattern defect: --side is required\n";
          return kExitUsage;
        }
        auto d = eval_stable([&] { return angle_defect(p, parse_real(pattern_side)); }, w);
        std::cout << "pattern " << p.str() << "\n";
        std::cout << "precision W = " << w.digits() << "\n";
        std::cout << "defect at a = " << pattern_side << ": " << stable_decimal(d)
                  << " (stable digits " << d.agreed_digits << ")\n";
      }
    }
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
