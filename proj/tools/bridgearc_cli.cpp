// Command-line surface for the bridge-arc library: validation, pairwise
// checks (isotopy, intersections, rectangle condition, waves, normal form,
// adjacent-pair classification, certificates), enumeration and twisting,
// SVG rendering, and the bounded 8_5 verification harness.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bridgearc/arrangement.hpp"
#include "bridgearc/catalog.hpp"
#include "bridgearc/criteria.hpp"
#include "bridgearc/harness.hpp"
#include "bridgearc/io.hpp"
#include "bridgearc/isotopy.hpp"
#include "bridgearc/moves.hpp"
#include "bridgearc/svg.hpp"

namespace {

using namespace bridgearc;

std::string pair_str(const IndexPair& p) {
  return "{" + std::to_string(p.lo) + "," + std::to_string(p.hi) + "}";
}

std::string tuple_str(const RectangleTuple& t) {
  return "(" + pair_str(t.first) + "," + pair_str(t.second) + ")";
}

// Exit code resolution: every command computes a one-token verdict; --expect
// turns a mismatch into exit 1. verify-85 additionally carries its own
// semantic exit code.
struct Outcome {
  std::string verdict;
  int exitCode = 0;
  bool verdictAlreadyPrinted = false;
};

int resolve(const Outcome& outcome, const std::string& expect) {
  if (!outcome.verdictAlreadyPrinted)
    std::cout << "verdict=" << outcome.verdict << "\n";
  if (!expect.empty()) return outcome.verdict == expect ? 0 : 1;
  return outcome.exitCode;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"systems of bridge arcs on the 3-bridge sphere"};
  app.require_subcommand(1);
  int exitCode = 0;

  // Shared argument holders (one subcommand runs per invocation).
  std::string argA, argB, expect, outPath, circle;
  bool witnesses = false;
  int rewires = 0, maxCrossings = 0, jobs = 1, turns = 1;
  std::uint64_t budget = EnumerationLimits{}.candidateBudget;
  std::size_t maxClasses = EnumerationLimits{}.maxClasses;

  auto addExpect = [&](CLI::App* cmd) {
    cmd->add_option("--expect", expect,
                    "exit 0 iff the verdict token equals this");
  };

  // ---- validate ----------------------------------------------------------
  auto* cmdValidate =
      app.add_subcommand("validate", "check a system file or builtin");
  cmdValidate->add_option("system", argA, "path or @builtin")->required();
  addExpect(cmdValidate);
  cmdValidate->callback([&] {
    Outcome o;
    if (!argA.empty() && argA[0] == '@') {
      load_system(argA);  // throws if unknown; builtins are always valid
      std::cout << "builtin system: valid by construction\n";
      o.verdict = "valid";
    } else {
      ValidationResult res = validate_system(parse_system_text(read_file(argA)));
      for (const Violation& v : res.violations)
        std::cout << violation_name(v.kind) << " at " << v.where << ": "
                  << v.detail << "\n";
      o.verdict = res.ok() ? "valid" : "invalid";
    }
    exitCode = resolve(o, expect);
  });

  // ---- isotopic ----------------------------------------------------------
  auto* cmdIso = app.add_subcommand("isotopic", "decide system isotopy");
  cmdIso->add_option("a", argA)->required();
  cmdIso->add_option("b", argB)->required();
  addExpect(cmdIso);
  cmdIso->callback([&] {
    bool iso = are_isotopic(load_system(argA), load_system(argB));
    exitCode = resolve({iso ? "isotopic" : "not-isotopic"}, expect);
  });

  // ---- intersections -----------------------------------------------------
  auto* cmdInt =
      app.add_subcommand("intersections", "minimal crossing matrix");
  cmdInt->add_option("a", argA)->required();
  cmdInt->add_option("b", argB)->required();
  addExpect(cmdInt);
  cmdInt->callback([&] {
    Matrix3 m = intersection_matrix(load_system(argA), load_system(argB));
    int total = 0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        std::cout << m[i][j] << (j < 2 ? ' ' : '\n');
        total += m[i][j];
      }
    }
    exitCode = resolve({"n=" + std::to_string(total)}, expect);
  });

  // ---- rc / scan-rc ------------------------------------------------------
  auto* cmdRc = app.add_subcommand("rc", "rectangle condition (face census)");
  cmdRc->add_option("a", argA)->required();
  cmdRc->add_option("b", argB)->required();
  cmdRc->add_flag("--witnesses", witnesses, "print witness face ids");
  addExpect(cmdRc);
  cmdRc->callback([&] {
    RectangleReport rep =
        rectangle_report(load_system(argA), load_system(argB));
    for (const RectangleTuple& t : rep.realized) {
      std::cout << "realized " << tuple_str(t);
      if (witnesses) std::cout << " face=" << rep.witnesses.at(t);
      std::cout << "\n";
    }
    for (const RectangleTuple& t : rep.missing)
      std::cout << "missing " << tuple_str(t) << "\n";
    if (rep.diagnostic == RectangleDiagnostic::IsotopicInput)
      std::cout << "diagnostic: inputs are isotopic\n";
    exitCode = resolve({rep.holds ? "rc-holds" : "rc-fails"}, expect);
  });

  auto* cmdScan =
      app.add_subcommand("scan-rc", "rectangle condition (scan oracle)");
  cmdScan->add_option("a", argA)->required();
  cmdScan->add_option("b", argB)->required();
  addExpect(cmdScan);
  cmdScan->callback([&] {
    std::vector<RectangleTuple> got =
        rectangle_tuples_by_scan(load_system(argA), load_system(argB));
    for (const RectangleTuple& t : got)
      std::cout << "realized " << tuple_str(t) << "\n";
    bool holds = got == all_rectangle_tuples();
    exitCode = resolve({holds ? "rc-holds" : "rc-fails"}, expect);
  });

  // ---- waves -------------------------------------------------------------
  auto* cmdWaves = app.add_subcommand("waves", "waves of target w.r.t. ref");
  cmdWaves->add_option("ref", argA)->required();
  cmdWaves->add_option("target", argB)->required();
  addExpect(cmdWaves);
  cmdWaves->callback([&] {
    std::vector<Wave> ws = find_waves(load_system(argA), load_system(argB));
    for (const Wave& w : ws)
      std::cout << "wave host=" << w.hostArc << " base=" << w.baseArc
                << " crossings=" << w.subarc.fromCrossing << ".."
                << w.subarc.toCrossing << " signs=" << w.signFirst << ","
                << w.signSecond << "\n";
    exitCode = resolve({"waves=" + std::to_string(ws.size())}, expect);
  });

  // ---- normal-form -------------------------------------------------------
  auto* cmdNf = app.add_subcommand("normal-form", "adjacent same-arc pairs");
  cmdNf->add_option("a", argA)->required();
  cmdNf->add_option("b", argB)->required();
  addExpect(cmdNf);
  cmdNf->callback([&] {
    NormalFormReport rep =
        normal_form_report(load_system(argA), load_system(argB));
    for (const NormalFormViolation& v : rep.violations)
      std::cout << "adjacent along=" << v.alongSystem << " arc=" << v.arcIndex
                << " at=" << v.positionAlongArc
                << " other-arc=" << v.offendingOtherArcIndex << "\n";
    exitCode = resolve(
        {rep.holds ? "normal-form"
                   : "violations=" + std::to_string(rep.violations.size())},
        expect);
  });

  // ---- classify ----------------------------------------------------------
  auto* cmdClassify = app.add_subcommand(
      "classify", "classify adjacent pairs along the reference");
  cmdClassify->add_option("ref", argA)->required();
  cmdClassify->add_option("target", argB)->required();
  addExpect(cmdClassify);
  cmdClassify->callback([&] {
    std::vector<AdjacentPairClass> cs =
        classify_adjacent_pairs(load_system(argA), load_system(argB));
    std::size_t unclassified = 0;
    for (const AdjacentPairClass& c : cs) {
      const char* kind = "unclassified";
      switch (c.kind) {
        case AdjacentPairKind::WavePair: kind = "wave-pair"; break;
        case AdjacentPairKind::ParallelConnect: kind = "parallel-connect"; break;
        case AdjacentPairKind::Mixed: kind = "mixed"; break;
        case AdjacentPairKind::Unclassified: ++unclassified; break;
      }
      std::cout << "pair arc=" << c.pair.arcIndex
                << " at=" << c.pair.positionAlongArc
                << " other-arc=" << c.pair.offendingOtherArcIndex << " kind="
                << kind;
      if (c.kind == AdjacentPairKind::ParallelConnect ||
          c.kind == AdjacentPairKind::Mixed)
        std::cout << " connects-to=" << c.connectArc;
      std::cout << "\n";
    }
    exitCode =
        resolve({"unclassified=" + std::to_string(unclassified)}, expect);
  });

  // ---- certify -----------------------------------------------------------
  auto* cmdCertify = app.add_subcommand(
      "certify", "no-rectangle-partner certificate for a candidate system");
  cmdCertify->add_option("candidate", argA)->required();
  cmdCertify->add_option("base", argB)->required();
  addExpect(cmdCertify);
  cmdCertify->callback([&] {
    CertifyResult res =
        certify_no_rc_partner(load_system(argA), load_system(argB));
    Outcome o;
    if (res.certificate) {
      o.verdict = "certificate=arc" + std::to_string(res.certificate->witnessArc) +
                  ":" + pair_str(res.certificate->missingPair);
    } else if (res.isotopicDegenerate) {
      o.verdict = "isotopic-degenerate";
    } else {
      o.verdict = "none";
    }
    exitCode = resolve(o, expect);
  });

  // ---- enumerate ---------------------------------------------------------
  auto* cmdEnum = app.add_subcommand(
      "enumerate", "isotopy classes reachable by rewiring moves");
  cmdEnum->add_option("base", argA)->required();
  cmdEnum->add_option("--rewires", rewires)->required();
  cmdEnum->add_option("--max-crossings", maxCrossings)->required();
  cmdEnum->add_option("--max-classes", maxClasses);
  cmdEnum->add_option("--budget", budget);
  cmdEnum->add_option("--jobs", jobs);
  cmdEnum->add_option("--out", outPath, "directory for one file per class");
  addExpect(cmdEnum);
  cmdEnum->callback([&] {
    EnumerationLimits lim{budget, maxClasses};
    EnumerationResult res =
        enumerate_systems(load_system(argA), rewires, maxCrossings, lim, jobs);
    for (const ArcSystem& s : res.systems) {
      std::cout << s.name << " events=" << total_events(s) << "\n";
      if (!outPath.empty()) save_system(s, outPath + "/" + s.name + ".txt");
    }
    if (res.truncated) std::cout << "truncated: yes\n";
    exitCode = resolve(
        {"classes=" + std::to_string(res.systems.size()) +
         (res.truncated ? ",truncated" : "")},
        expect);
  });

  // ---- twist -------------------------------------------------------------
  auto* cmdTwist =
      app.add_subcommand("twist", "apply a catalog (half-)twist");
  cmdTwist->add_option("system", argA)->required();
  cmdTwist->add_option("--circle", circle, "catalog circle name")->required();
  cmdTwist->add_option("--turns", turns, "half turns (may be negative)");
  cmdTwist->add_option("--out", outPath, "write the result to this file");
  addExpect(cmdTwist);
  cmdTwist->callback([&] {
    ArcSystem out = apply_twist(TwistSpec{circle, turns}, load_system(argA));
    std::cout << serialize_system(out);
    if (!outPath.empty()) save_system(out, outPath);
    exitCode = resolve({"ok"}, expect);
  });

  // ---- verify-85 ---------------------------------------------------------
  auto* cmdVerify = app.add_subcommand(
      "verify-85",
      "bounded verification that every enumerated partner fails the "
      "rectangle condition against the 8_5 system");
  cmdVerify->add_option("--rewires", rewires)->required();
  cmdVerify->add_option("--max-crossings", maxCrossings)->required();
  cmdVerify->add_option("--jobs", jobs);
  cmdVerify->add_option("--budget", budget);
  cmdVerify->add_option("--max-classes", maxClasses);
  cmdVerify->add_option("--out", outPath, "write the report to this file");
  addExpect(cmdVerify);
  cmdVerify->callback([&] {
    EnumerationLimits lim{budget, maxClasses};
    HarnessReport report = verify_85(rewires, maxCrossings, jobs, lim);
    std::string text = report.to_text();
    std::cout << text;
    if (!outPath.empty()) write_file(outPath, text);
    Outcome o;
    o.verdict = report.contradictionFound() ? "contradiction" : "verified";
    o.exitCode = report.exitCode();
    o.verdictAlreadyPrinted = true;  // the report text ends with the verdict
    exitCode = resolve(o, expect);
  });

  // ---- render ------------------------------------------------------------
  auto* cmdRender = app.add_subcommand("render", "emit an SVG picture");
  cmdRender->add_option("a", argA)->required();
  cmdRender->add_option("b", argB, "optional second system");
  cmdRender->add_option("--out", outPath)->required();
  addExpect(cmdRender);
  cmdRender->callback([&] {
    std::optional<ArcSystem> other;
    if (!argB.empty()) other = load_system(argB);
    render_svg(load_system(argA), other, outPath);
    std::cout << "wrote " << outPath << "\n";
    exitCode = resolve({"ok"}, expect);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help exits clean; usage errors exit 2
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exitCode;
}
