#include "superw/automorphism.hpp"
#include "superw/skryabin.hpp"
#include "superw/weights.hpp"
#include "superw/whittaker.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;
using namespace superw;

constexpr const char* kVersion = "1.0.0";

struct RunSpec {
  std::string command;
  std::string algebra; // "fam:p1,p2"
  std::vector<std::string> weights;
  int truncation = 12;
  int wtBound = 6;
  std::string scaling;
  long seed = 0;
  std::string outputPath;
};

std::pair<Family, std::vector<int>> parseAlgebra(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("missing --algebra");
  std::string name = text;
  std::vector<int> params;
  if (const auto colon = text.find(':'); colon != std::string::npos) {
    name = text.substr(0, colon);
    std::stringstream rest(text.substr(colon + 1));
    std::string piece;
    while (std::getline(rest, piece, ',')) params.push_back(std::stoi(piece));
  }
  return {familyFromName(name), params};
}

LieSuperalgebra algebraOf(const RunSpec& spec) {
  const auto [family, params] = parseAlgebra(spec.algebra);
  return buildAlgebra(family, params);
}

ordered_json checkEntry(const std::string& name, bool pass,
                        ordered_json witnesses = ordered_json::array()) {
  return {{"name", name}, {"status", pass ? "pass" : "fail"}, {"witnesses", witnesses}};
}

struct Outcome {
  ordered_json checks = ordered_json::array();
  ordered_json payload = ordered_json::object();
  std::string summary;
};

Outcome runJacobi(const RunSpec& spec) {
  const auto A = algebraOf(spec);
  Outcome out;
  const auto jac = A.checkJacobi();
  ordered_json witnesses = ordered_json::array();
  if (!jac.pass) {
    witnesses.push_back({{"indices", {jac.i, jac.j, jac.k}}});
  }
  out.checks.push_back(checkEntry("jacobi", jac.pass, witnesses));
  const bool structure = A.checkStructureAgainstMatrices();
  out.checks.push_back(checkEntry("structure-matches-matrices", structure));
  out.payload["dimension"] = A.dim();
  out.summary = "jacobi and structure checks on " + familyName(A.family());
  return out;
}

Outcome runGrading(const RunSpec& spec) {
  const auto A = algebraOf(spec);
  const auto triple = principalSl2(A);
  const auto grading = dynkinGrading(A, triple.h);
  const auto nil = buildNilpotentData(A, grading, triple.e);
  Outcome out;
  out.checks.push_back(checkEntry("sl2-triple-and-grading", true));
  out.checks.push_back(checkEntry("character-nonsingular", isNonsingular(A, nil.zeta)));
  ordered_json degrees = ordered_json::object();
  for (int i = 0; i < A.dim(); ++i) degrees[A.label(i)] = grading.degree(i);
  ordered_json mLabels = ordered_json::array();
  for (int i : nil.mBasis) mLabels.push_back(A.label(i));
  ordered_json zeta = ordered_json::object();
  for (const auto& [idx, v] : nil.zeta.values()) zeta[A.label(idx)] = rationalToString(v);
  out.payload = {{"degrees", degrees}, {"m_basis", mLabels}, {"zeta", zeta}};
  out.summary = "principal nilpotent data for " + familyName(A.family());
  return out;
}

Outcome runWhittakerVectors(const RunSpec& spec) {
  const auto A = algebraOf(spec);
  if (spec.weights.empty()) throw std::invalid_argument("missing --weight");
  const Weight lambda = parseWeight(spec.weights.front());
  TypeIModule M = [&] {
    switch (A.family()) {
      case Family::GL: return TypeIModule::forGl12(A, lambda);
      case Family::OSP22: return TypeIModule::forOsp22(A, lambda);
      case Family::P: return TypeIModule::forP2(A, lambda);
      default: throw std::invalid_argument("whittaker-vectors supports gl:1,2, osp22, p:2");
    }
  }();
  const auto triple = principalSl2(A);
  const auto nil = buildNilpotentData(A, dynkinGrading(A, triple.h), triple.e);

  Outcome out;
  for (const bool evenOnly : {true, false}) {
    const auto solution = whittakerVectors(M, nil, evenOnly, spec.truncation);
    const std::string tag = evenOnly ? "even" : "full";
    out.checks.push_back(checkEntry(tag + "-truncation-stable", solution.stable));
    ordered_json basis = ordered_json::array();
    for (const auto& vec : solution.basis) basis.push_back(M.describe(vec));
    out.payload[tag] = {{"dimension", solution.dimension}, {"basis", basis}};
  }
  out.summary = "whittaker vectors at weight " + weightToString(lambda);
  return out;
}

Outcome runOsp12Series(const RunSpec& spec) {
  if (spec.weights.empty()) throw std::invalid_argument("missing --weight (lambda(h) value)");
  const Weight w = parseWeight(spec.weights.front());
  if (w.size() != 1) throw std::invalid_argument("expected a single lambda(h) value");
  const auto coeffs = osp12WhittakerSeries(w.front(), spec.truncation);
  const auto A = buildAlgebra(Family::OSP12, {});
  Outcome out;
  out.checks.push_back(
      checkEntry("series-satisfies-f-fixed-point", osp12VerifySeries(A, w.front(), coeffs)));
  ordered_json list = ordered_json::array();
  for (const auto& c : coeffs) list.push_back(rationalToString(c));
  out.payload["coefficients"] = list;
  out.summary = "series coefficients for lambda(h) = " + rationalToString(w.front());
  return out;
}

SkryabinDatum datumOf(const LieSuperalgebra& A) {
  if (A.family() == Family::Q) return qnDatum(A);
  if (A.family() == Family::P) return pnDatum(A);
  throw std::invalid_argument("datum construction is defined for q(n) and p(n)");
}

void appendReport(Outcome& out, const SkryabinReport& report) {
  for (const auto& check : report.checks) {
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : check.witnesses) {
      witnesses.push_back(
          {{"indices", w.indices}, {"expected", w.expected}, {"computed", w.computed}});
    }
    out.checks.push_back(checkEntry(check.name, check.pass, witnesses));
  }
}

Outcome runSkryabinConditions(const RunSpec& spec) {
  const auto A = algebraOf(spec);
  const auto triple = principalSl2(A);
  const auto grading = dynkinGrading(A, triple.h);
  const auto nil = buildNilpotentData(A, grading, triple.e);
  Outcome out;
  appendReport(out, checkConditions(A, grading, nil, datumOf(A)));
  out.summary = "pairing hypotheses for " + familyName(A.family());
  return out;
}

Outcome runSkryabinConclusions(const RunSpec& spec) {
  const auto A = algebraOf(spec);
  if (A.params().at(0) > 3) throw std::invalid_argument("conclusion checks are capped at n <= 3");
  const auto triple = principalSl2(A);
  const auto grading = dynkinGrading(A, triple.h);
  const auto nil = buildNilpotentData(A, grading, triple.e);
  Outcome out;
  appendReport(out, verifyConclusions(A, grading, nil, datumOf(A), spec.wtBound));
  out.summary = "reduction conclusions for " + familyName(A.family());
  return out;
}

Outcome runFreeness(const RunSpec& spec) {
  const auto A = algebraOf(spec);
  if (A.params().at(0) > 3) throw std::invalid_argument("freeness checks are capped at n <= 3");
  const auto triple = principalSl2(A);
  const auto grading = dynkinGrading(A, triple.h);
  const auto nil = buildNilpotentData(A, grading, triple.e);
  Outcome out;
  appendReport(out, checkFreeness(A, grading, nil, datumOf(A), spec.wtBound));
  out.summary = "independence of monomial images for " + familyName(A.family());
  return out;
}

Outcome runPnTables(const RunSpec& spec) {
  const auto A = algebraOf(spec);
  if (A.family() != Family::P) throw std::invalid_argument("pn-tables needs a p(n) algebra");
  if (A.params().at(0) > 6) throw std::invalid_argument("table checks are capped at n <= 6");
  Outcome out;
  appendReport(out, checkPnZetaTables(A));
  out.summary = "zeta bracket tables for " + familyName(A.family());
  return out;
}

Outcome runAutomorphism(const RunSpec& spec) {
  const auto A = algebraOf(spec);
  const int n = A.params().at(0);
  std::vector<Rational> entries;
  if (!spec.scaling.empty()) {
    entries = parseWeight(spec.scaling);
  } else {
    static const std::vector<Rational> pool = {Rational(1),    Rational(-1),    Rational(2),
                                               Rational(-2),   Rational(1, 3),  Rational(-1, 3),
                                               Rational(5)};
    std::mt19937 rng(static_cast<std::mt19937::result_type>(spec.seed));
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < n - 1; ++i) entries.push_back(pool[pick(rng)]);
  }
  const ScalingSequence a(entries);
  const auto phi = buildPhi(A, a);
  const auto report = isAutomorphism(A, phi);

  Outcome out;
  ordered_json witnesses = ordered_json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back(
        {{"indices", {w.i, w.j}}, {"expected", w.expected}, {"computed", w.computed}});
  }
  out.checks.push_back(checkEntry("bracket-preservation", report.pass, witnesses));

  const auto triple = principalSl2(A);
  const auto nil = buildNilpotentData(A, dynkinGrading(A, triple.h), triple.e);
  const auto transported = transportCharacter(A, phi, nil.zeta);
  ordered_json scalingJson = ordered_json::array();
  for (const auto& e : entries) scalingJson.push_back(rationalToString(e));
  ordered_json zeta = ordered_json::object();
  for (const auto& [idx, v] : transported.values()) zeta[A.label(idx)] = rationalToString(v);
  out.payload = {{"scaling", scalingJson}, {"transported_zeta", zeta}};
  out.summary = "scaling automorphism check on " + familyName(A.family());
  return out;
}

Outcome runLinkage(const RunSpec& spec) {
  const auto [family, params] = parseAlgebra(spec.algebra);
  if (family != Family::GL || params.size() != 2) {
    throw std::invalid_argument("linkage needs --algebra gl:m,n");
  }
  if (spec.weights.size() != 2) throw std::invalid_argument("linkage needs --weight twice");
  const Weight lambda = parseWeight(spec.weights[0]);
  const Weight mu = parseWeight(spec.weights[1]);
  const auto witness = linkageGl(params[0], params[1], lambda, mu, 8);
  Outcome out;
  out.checks.push_back(checkEntry("linkage-decided", true));
  ordered_json roots = ordered_json::array();
  for (const auto& [p, q] : witness.roots) roots.push_back({p, q});
  out.payload = {{"linked", witness.linked}, {"roots", roots}, {"shifts", witness.shifts}};
  out.summary = std::string("weights are ") + (witness.linked ? "linked" : "not linked");
  return out;
}

int runCli(int argc, char** argv) {
  CLI::App app{"exact verifier for Lie superalgebra Whittaker data"};
  RunSpec spec;
  if (const char* env = std::getenv("SUPERW_SEED")) spec.seed = std::atol(env);

  std::string specFile;
  std::string commandFlag, algebraFlag, scalingFlag, outputFlag;
  std::vector<std::string> weightFlags;
  std::optional<int> truncationFlag, wtBoundFlag;
  std::optional<long> seedFlag;
  app.add_option("--command", commandFlag,
                 "jacobi | grading | whittaker-vectors | osp12-series | skryabin-conditions | "
                 "skryabin-conclusions | freeness | pn-tables | automorphism | linkage");
  app.add_option("--algebra", algebraFlag, "family:params, e.g. gl:1,2 or q:3 or osp22");
  app.add_option("--weight", weightFlags, "comma-separated rational weight (repeatable)");
  app.add_option("--truncation", truncationFlag, "h-power truncation / series order");
  app.add_option("--wt-bound", wtBoundFlag, "multi-index weight bound");
  app.add_option("--scaling", scalingFlag, "comma-separated non-zero rationals");
  app.add_option("--seed", seedFlag, "rng seed (fallback: SUPERW_SEED)");
  app.add_option("--spec", specFile, "line-based key value file; flags override");
  app.add_option("--output", outputFlag, "write the JSON report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  ordered_json doc;
  try {
    if (!specFile.empty()) {
      std::ifstream in(specFile);
      if (!in) throw std::invalid_argument("cannot open spec file " + specFile);
      std::string line;
      int lineNo = 0;
      while (std::getline(in, line)) {
        ++lineNo;
        std::istringstream parts(line);
        std::string key;
        if (!(parts >> key) || key.empty() || key[0] == '#') continue;
        if (key == "command") {
          parts >> spec.command;
        } else if (key == "algebra") {
          std::string family, piece, params;
          parts >> family;
          while (parts >> piece) params += (params.empty() ? "" : ",") + piece;
          spec.algebra = params.empty() ? family : family + ":" + params;
        } else if (key == "weight") {
          std::string w;
          parts >> w;
          spec.weights.push_back(w);
        } else if (key == "truncation") {
          parts >> spec.truncation;
        } else if (key == "wt-bound") {
          parts >> spec.wtBound;
        } else if (key == "scaling") {
          parts >> spec.scaling;
        } else if (key == "seed") {
          parts >> spec.seed;
        } else if (key == "output") {
          parts >> spec.outputPath;
        } else {
          throw std::invalid_argument("unknown key '" + key + "' at line " +
                                      std::to_string(lineNo) + " of " + specFile);
        }
      }
    }
    if (!commandFlag.empty()) spec.command = commandFlag;
    if (!algebraFlag.empty()) spec.algebra = algebraFlag;
    if (!weightFlags.empty()) spec.weights = weightFlags;
    if (truncationFlag) spec.truncation = *truncationFlag;
    if (wtBoundFlag) spec.wtBound = *wtBoundFlag;
    if (!scalingFlag.empty()) spec.scaling = scalingFlag;
    if (seedFlag) spec.seed = *seedFlag;
    if (!outputFlag.empty()) spec.outputPath = outputFlag;

    if (spec.command.empty()) throw std::invalid_argument("missing --command");

    Outcome outcome;
    if (spec.command == "jacobi") outcome = runJacobi(spec);
    else if (spec.command == "grading") outcome = runGrading(spec);
    else if (spec.command == "whittaker-vectors") outcome = runWhittakerVectors(spec);
    else if (spec.command == "osp12-series") outcome = runOsp12Series(spec);
    else if (spec.command == "skryabin-conditions") outcome = runSkryabinConditions(spec);
    else if (spec.command == "skryabin-conclusions") outcome = runSkryabinConclusions(spec);
    else if (spec.command == "freeness") outcome = runFreeness(spec);
    else if (spec.command == "pn-tables") outcome = runPnTables(spec);
    else if (spec.command == "automorphism") outcome = runAutomorphism(spec);
    else if (spec.command == "linkage") outcome = runLinkage(spec);
    else throw std::invalid_argument("unknown command '" + spec.command + "'");

    bool allPass = true;
    for (const auto& check : outcome.checks) {
      if (check.at("status") != "pass") allPass = false;
    }
    doc = {{"meta",
            {{"command", spec.command},
             {"algebra", spec.algebra},
             {"version", kVersion},
             {"seed", spec.seed}}},
           {"checks", outcome.checks},
           {"payload", outcome.payload}};

    const std::string text = doc.dump(2) + "\n";
    if (!spec.outputPath.empty()) {
      std::ofstream outFile(spec.outputPath);
      if (!outFile) throw std::invalid_argument("cannot write " + spec.outputPath);
      outFile << text;
    } else {
      std::cout << text;
    }
    std::cerr << outcome.summary << ": " << (allPass ? "all checks pass" : "FAILURES") << "\n";
    return allPass ? 0 : 1;
  } catch (const std::exception& e) {
    doc = {{"meta",
            {{"command", spec.command},
             {"algebra", spec.algebra},
             {"version", kVersion},
             {"seed", spec.seed}}},
           {"error", e.what()}};
    std::cout << doc.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace

int main(int argc, char** argv) { return runCli(argc, argv); }
