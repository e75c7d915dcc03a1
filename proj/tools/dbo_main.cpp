// Batch front end: load tensors/sequences, run norms and experiments, write
// report JSON (stdout gets a short human summary).
//
// Exit codes: 0 pass/success, 1 verdict "violation"/"fail"/"inconclusive",
// 2 usage or validation errors (malformed JSON reported with line/column).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dbo/fourier.hpp"
#include "dbo/norms.hpp"
#include "dbo/operator_engine.hpp"
#include "dbo/parallel.hpp"
#include "dbo/serialize.hpp"
#include "dbo/verification.hpp"

namespace {

using namespace dbo;

struct JsonFileError {
  std::string path;
  std::string message;
  std::size_t line;
  std::size_t column;
};

ojson loadJson(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw JsonFileError{path, e.what(), line, col};
  }
}

void writeText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

Exponent parseExp(const std::string& s) { return Exponent::parse(s); }

// Every report embeds the resolved configuration for auditability.
ojson withConfig(const Report& rep, const ojson& config) {
  ojson out;
  out["kind"] = rep.doc.value("kind", "");
  out["config"] = config;
  for (auto it = rep.doc.begin(); it != rep.doc.end(); ++it) {
    if (it.key() != "kind") out[it.key()] = it.value();
  }
  return out;
}

int verdictExit(const Report& rep) { return rep.passed() ? 0 : 1; }

MultiIndex parseMulti(const std::vector<int>& v, int d, const std::string& what) {
  if (static_cast<int>(v.size()) != d) throw std::invalid_argument(what + " must have exactly d components");
  return MultiIndex::of(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete bilinear operator toolkit"};
  app.require_subcommand(1);

  int threads = 0;
  app.add_option("--threads", threads, "cap worker threads")->envname("DBO_THREADS");

  std::string tensorPath, fPath, gPath, bPath, outPath, csvPath, vhatPath;
  std::string pStr = "2", qStr = "2";
  double omega = 0.0, omega2 = 0.0, s1 = 0.0, s2 = 0.0, phiOmega = 0.0;
  bool twoOrder = false, minOrderings = false;
  int bigN = 2, radius = 12, outRadius = 8, samples = 100, rmax = 64, alphaMax = 2, betaMax = 2;
  int slot = 1, dim = 1;
  std::uint64_t seed = 0;
  double stability = 0.10, divergence = 2.0, floatSlack = 1e-9;
  std::vector<int> alphaVec, betaVec, phiA, phiB;
  std::vector<double> epsilons = {1e-1, 1e-2, 1e-3};
  std::string phiName = "bracket_power";

  auto addOut = [&](CLI::App* c) { c->add_option("--out", outPath, "report/output JSON path"); };

  CLI::App* cApply = app.add_subcommand("apply", "apply a tensor to a pair of sequences");
  cApply->add_option("--tensor", tensorPath)->required();
  cApply->add_option("--f", fPath)->required();
  cApply->add_option("--g", gPath)->required();
  cApply->add_option("--out-radius", outRadius);
  addOut(cApply);

  CLI::App* cNorm = app.add_subcommand("norm", "omega-N norm scan (or the two-order variant)");
  cNorm->add_option("--tensor", tensorPath)->required();
  cNorm->add_option("--omega", omega);
  cNorm->add_option("--omega2", omega2);
  cNorm->add_flag("--two-order", twoOrder, "use denominators with omega and omega2");
  cNorm->add_option("--N", bigN);
  cNorm->add_option("--radius", radius);
  addOut(cNorm);

  CLI::App* cSemi = app.add_subcommand("seminorm", "difference seminorm scan");
  cSemi->add_option("--tensor", tensorPath)->required();
  cSemi->add_option("--alpha", alphaVec, "slot-2 multi-index (d components)");
  cSemi->add_option("--beta", betaVec, "slot-3 multi-index (d components)");
  cSemi->add_option("--omega", omega);
  cSemi->add_option("--N", bigN);
  cSemi->add_option("--radius", radius);
  addOut(cSemi);

  CLI::App* cMixed = app.add_subcommand("mixed-norm", "iterated mixed-exponent norm");
  cMixed->add_option("--tensor", tensorPath)->required();
  cMixed->add_option("--p", pStr);
  cMixed->add_option("--q", qStr);
  cMixed->add_option("--radius", radius);
  cMixed->add_flag("--min-orderings", minOrderings, "minimize over the six nesting orders");
  addOut(cMixed);

  CLI::App* cBt = app.add_subcommand("bt-check", "symbol-class membership scan");
  cBt->add_option("--tensor", tensorPath)->required();
  cBt->add_option("--omega", omega);
  cBt->add_option("--N", bigN);
  cBt->add_option("--alpha-max", alphaMax);
  cBt->add_option("--beta-max", betaMax);
  cBt->add_option("--radius", radius);
  cBt->add_option("--stability", stability);
  cBt->add_option("--divergence", divergence);
  addOut(cBt);

  CLI::App* cBound = app.add_subcommand("verify-bound", "certified boundedness experiment");
  cBound->add_option("--tensor", tensorPath)->required();
  cBound->add_option("--p", pStr);
  cBound->add_option("--q", qStr);
  cBound->add_option("--s1", s1);
  cBound->add_option("--s2", s2);
  cBound->add_option("--omega", omega);
  cBound->add_option("--N", bigN);
  cBound->add_option("--radius", radius);
  cBound->add_option("--samples", samples);
  cBound->add_option("--seed", seed);
  cBound->add_option("--float-slack", floatSlack);
  addOut(cBound);

  CLI::App* cComp = app.add_subcommand("verify-compactness", "commutator tail-decay experiment");
  cComp->add_option("--tensor", tensorPath)->required();
  cComp->add_option("--b", bPath)->required();
  cComp->add_option("--p", pStr);
  cComp->add_option("--q", qStr);
  cComp->add_option("--N", bigN);
  cComp->add_option("--radius", radius);
  cComp->add_option("--samples", samples);
  cComp->add_option("--seed", seed);
  cComp->add_option("--slot", slot);
  cComp->add_option("--epsilons", epsilons);
  cComp->add_option("--csv", csvPath, "tail curve CSV path");
  addOut(cComp);

  CLI::App* cWit = app.add_subcommand("witness", "divergence witness along j = 2k = 2l");
  cWit->add_option("--tensor", tensorPath)->required();
  cWit->add_option("--omega", omega);
  cWit->add_option("--N", bigN);
  cWit->add_option("--rmax", rmax);
  cWit->add_option("--divergence", divergence);
  addOut(cWit);

  CLI::App* cBridge = app.add_subcommand("bridge", "torus-side identity check");
  cBridge->add_option("--tensor", tensorPath)->required();
  cBridge->add_option("--f", fPath, "coefficient JSON for F")->required();
  cBridge->add_option("--g", gPath, "coefficient JSON for G")->required();
  addOut(cBridge);

  CLI::App* cLemma = app.add_subcommand("lemma-x", "plane-tensor membership for a registry symbol");
  cLemma->add_option("--phi", phiName, "symbol name (bracket_power, monomial, constant, ...)");
  cLemma->add_option("--phi-omega", phiOmega, "symbol order parameter");
  cLemma->add_option("--phi-a", phiA, "monomial exponents a");
  cLemma->add_option("--phi-b", phiB, "monomial exponents b");
  cLemma->add_option("--vhat", vhatPath, "optional coefficient file; runs the variable-coefficient scan");
  cLemma->add_option("--dim", dim, "lattice dimension");
  cLemma->add_option("--N", bigN);
  cLemma->add_option("--alpha-max", alphaMax);
  cLemma->add_option("--beta-max", betaMax);
  cLemma->add_option("--radius", radius);
  cLemma->add_option("--stability", stability);
  addOut(cLemma);

  // Global options (e.g. --threads) may follow the subcommand.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (threads > 0) setMaxThreads(threads);

    // The worker cap is not part of the resolved config: it cannot change any
    // output, and reports must be byte-identical across thread counts.
    ojson config;

    Report rep;
    std::string summary;

    if (app.got_subcommand(cApply)) {
      const Tensor t = tensorFromJson(loadJson(tensorPath));
      const WeightedSequence f = sequenceFromJson(loadJson(fPath));
      const WeightedSequence g = sequenceFromJson(loadJson(gPath));
      const WeightedSequence out = apply(t, f, g, outRadius);
      const ojson doc = sequenceToJson(out);
      if (!outPath.empty()) writeText(outPath, doc.dump(2) + "\n");
      std::cout << "apply: " << out.storedCount() << " stored entries (|j|_inf <= " << outRadius << ")\n";
      return 0;
    }

    if (app.got_subcommand(cNorm)) {
      const Tensor t = tensorFromJson(loadJson(tensorPath));
      const double w2 = twoOrder ? omega2 : omega;
      const ScanResult r = normTwoOrder(t, omega, w2, bigN, radius);
      config.update(ojson{{"command", "norm"},
                          {"tensor", tensorPath},
                          {"omega", omega},
                          {"omega2", w2},
                          {"twoOrder", twoOrder},
                          {"N", bigN},
                          {"radius", radius}});
      rep.doc["kind"] = "norm";
      rep.doc["params"] = ojson{{"omega", omega}, {"omega2", w2}, {"N", bigN}};
      rep.doc.update(r.toJson());
      rep.doc["verdict"] = "pass";
      summary = "norm value " + std::to_string(r.value);
    } else if (app.got_subcommand(cSemi)) {
      const Tensor t = tensorFromJson(loadJson(tensorPath));
      if (alphaVec.empty()) alphaVec.assign(static_cast<std::size_t>(t.dim()), 0);
      if (betaVec.empty()) betaVec.assign(static_cast<std::size_t>(t.dim()), 0);
      const MultiIndex a = parseMulti(alphaVec, t.dim(), "--alpha");
      const MultiIndex b = parseMulti(betaVec, t.dim(), "--beta");
      const ScanResult r = btSeminorm(t, a, b, omega, bigN, radius);
      config.update(ojson{{"command", "seminorm"},
                          {"tensor", tensorPath},
                          {"alpha", alphaVec},
                          {"beta", betaVec},
                          {"omega", omega},
                          {"N", bigN},
                          {"radius", radius}});
      rep.doc["kind"] = "seminorm";
      rep.doc["params"] = ojson{{"alpha", alphaVec}, {"beta", betaVec}, {"omega", omega}, {"N", bigN}};
      rep.doc.update(r.toJson());
      rep.doc["verdict"] = "pass";
      summary = "seminorm value " + std::to_string(r.value);
    } else if (app.got_subcommand(cMixed)) {
      const Tensor t = tensorFromJson(loadJson(tensorPath));
      const HolderTriple triple = holderTriple(parseExp(pStr), parseExp(qStr));
      const double v = minOrderings ? mixedLebesgueNormMin(t, triple, radius) : mixedLebesgueNorm(t, triple, radius);
      config.update(ojson{{"command", "mixed-norm"},
                          {"tensor", tensorPath},
                          {"p", pStr},
                          {"q", qStr},
                          {"radius", radius},
                          {"minOrderings", minOrderings}});
      rep.doc["kind"] = "mixed-norm";
      rep.doc["value"] = v;
      rep.doc["verdict"] = "pass";
      summary = "mixed norm " + std::to_string(v);
    } else if (app.got_subcommand(cBt)) {
      const Tensor t = tensorFromJson(loadJson(tensorPath));
      MembershipOptions opts;
      opts.alphaMax = alphaMax;
      opts.betaMax = betaMax;
      opts.stabilityTol = stability;
      opts.divergenceFactor = divergence;
      rep = btMembershipScan(t, omega, bigN, opts, radius);
      config.update(ojson{{"command", "bt-check"},
                          {"tensor", tensorPath},
                          {"omega", omega},
                          {"N", bigN},
                          {"alphaMax", alphaMax},
                          {"betaMax", betaMax},
                          {"radius", radius},
                          {"stability", stability},
                          {"divergence", divergence}});
      summary = "bt-check verdict: " + rep.verdict();
    } else if (app.got_subcommand(cBound)) {
      const Tensor t = tensorFromJson(loadJson(tensorPath));
      ExperimentParams p;
      p.triple = holderTriple(parseExp(pStr), parseExp(qStr));
      p.s1 = s1;
      p.s2 = s2;
      p.omega = omega;
      p.N = bigN;
      p.radius = radius;
      p.samples = samples;
      p.seed = seed;
      p.floatSlack = floatSlack;
      rep = boundednessExperiment(t, p);
      config.update(ojson{{"command", "verify-bound"},
                          {"tensor", tensorPath},
                          {"p", pStr},
                          {"q", qStr},
                          {"s1", s1},
                          {"s2", s2},
                          {"omega", omega},
                          {"N", bigN},
                          {"radius", radius},
                          {"samples", samples},
                          {"seed", seed},
                          {"floatSlack", floatSlack}});
      summary = "verify-bound verdict: " + rep.verdict();
    } else if (app.got_subcommand(cComp)) {
      const Tensor t = tensorFromJson(loadJson(tensorPath));
      CompactnessExperiment e{t,
                              sequenceFromJson(loadJson(bPath)),
                              holderTriple(parseExp(pStr), parseExp(qStr)),
                              epsilons,
                              samples,
                              seed,
                              bigN,
                              radius,
                              slot};
      auto [curve, r] = compactnessExperiment(e);
      rep = r;
      if (!csvPath.empty()) writeText(csvPath, curve.toCsv());
      config.update(ojson{{"command", "verify-compactness"},
                          {"tensor", tensorPath},
                          {"b", bPath},
                          {"p", pStr},
                          {"q", qStr},
                          {"N", bigN},
                          {"radius", radius},
                          {"samples", samples},
                          {"seed", seed},
                          {"slot", slot},
                          {"epsilons", epsilons}});
      summary = "verify-compactness verdict: " + rep.verdict();
    } else if (app.got_subcommand(cWit)) {
      const Tensor t = tensorFromJson(loadJson(tensorPath));
      rep = negativeWitnessScan(t, omega, bigN, rmax, divergence);
      config.update(ojson{{"command", "witness"},
                          {"tensor", tensorPath},
                          {"omega", omega},
                          {"N", bigN},
                          {"rmax", rmax},
                          {"divergence", divergence}});
      summary = "witness verdict: " + rep.verdict();
    } else if (app.got_subcommand(cBridge)) {
      const Tensor t = tensorFromJson(loadJson(tensorPath));
      const WeightedSequence fc = sequenceFromJson(loadJson(fPath));
      const WeightedSequence gc = sequenceFromJson(loadJson(gPath));
      const int bandF = fc.support().supRadius();
      const int bandG = gc.support().supRadius();
      int reach = bandF + bandG;
      if (const WeightedSequence* vhat = t.vhat()) reach += vhat->support().supRadius();
      const TorusGrid grid = TorusGrid::forBandSum(t.dim(), reach);
      rep = bridgeCheck(t, fromFourier(fc, grid), fromFourier(gc, grid), bandF, bandG);
      config.update(ojson{{"command", "bridge"}, {"tensor", tensorPath}, {"f", fPath}, {"g", gPath}});
      summary = "bridge verdict: " + rep.verdict();
    } else if (app.got_subcommand(cLemma)) {
      SymbolPtr phi;
      if (phiName == "monomial") {
        phi = makeMonomialSymbol(parseMulti(phiA, dim, "--phi-a"), parseMulti(phiB, dim, "--phi-b"));
      } else {
        ojson sj;
        sj["name"] = phiName;
        sj["omega"] = phiOmega;
        phi = symbolFromJson(sj, dim);
      }
      if (vhatPath.empty()) {
        rep = lemmaXScan(phi, bigN, alphaMax, betaMax, radius, stability);
      } else {
        MembershipOptions opts;
        opts.alphaMax = alphaMax;
        opts.betaMax = betaMax;
        opts.stabilityTol = stability;
        rep = vPhiScan(sequenceFromJson(loadJson(vhatPath)), phi, bigN, radius, opts);
      }
      config.update(ojson{{"command", "lemma-x"},
                          {"phi", phiName},
                          {"phiOmega", phiOmega},
                          {"dim", dim},
                          {"N", bigN},
                          {"alphaMax", alphaMax},
                          {"betaMax", betaMax},
                          {"radius", radius},
                          {"vhat", vhatPath}});
      summary = "lemma-x verdict: " + rep.verdict();
    }

    const ojson out = withConfig(rep, config);
    if (!outPath.empty()) writeText(outPath, out.dump(2) + "\n");
    std::cout << summary << "\n";
    return verdictExit(rep);
  } catch (const JsonFileError& e) {
    std::cerr << e.path << ":" << e.line << ":" << e.column << ": malformed JSON: " << e.message << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
