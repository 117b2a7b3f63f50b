// pathring: bar cohomology, Hopf checks, Sullivan stages and iterated
// integrals from JSON documents.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pathring/bar.hpp"
#include "pathring/chen/integrate.hpp"
#include "pathring/chen/multiprecision.hpp"
#include "pathring/cotorsor.hpp"
#include "pathring/formal_model.hpp"
#include "pathring/hopf.hpp"
#include "pathring/io/documents.hpp"
#include "pathring/sullivan.hpp"

namespace {

using namespace pathring;

enum Exit { Ok = 0, CheckFailed = 1, Parse = 2, Invalid = 3, Cap = 4, TooClose = 5, Tolerance = 6 };

struct RunConfig {
  std::string command;
  std::string input;
  std::size_t truncation = 3;
  bool truncation_given = false;
  int degree_cap = 4;
  int stages = 3;
  double tol = 1e-10;
  unsigned precision_bits = 0;  // 0: double
  std::string format = "text";
  std::size_t basis_cap = 100'000;
  std::string out;
  std::string left, right;
  std::optional<std::size_t> letters;
  std::string path;
};

/// Ordered key/value rows, rendered once at the end.
class Report {
 public:
  void row(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
  void row(std::string key, std::size_t value) { row(std::move(key), std::to_string(value)); }
  void verdict(const std::string& name, bool pass) {
    row("check." + name, pass ? "PASS" : "FAIL");
    failed_ = failed_ || !pass;
  }
  bool failed() const { return failed_; }

  std::string render(const std::string& format) const {
    std::ostringstream os;
    if (format == "rows") {
      for (const auto& [k, v] : rows_) os << k << '\t' << v << '\n';
      return os.str();
    }
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    for (const auto& [k, v] : rows_) os << k << std::string(width + 2 - k.size(), ' ') << v << '\n';
    return os.str();
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
  bool failed_ = false;
};

std::string format_sum(const TensorWordAlgebra& H, const WordSum& s) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : s) {
    if (!out.empty()) out += " + ";
    out += c.str() + "*" + H.format(w);
  }
  return out;
}

std::string format_pair_sum(const TensorWordAlgebra& H, const WordPairSum& s) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : s) {
    if (!out.empty()) out += " + ";
    out += c.str() + "*" + H.format(p.first) + "(x)" + H.format(p.second);
  }
  return out;
}

// ---------------------------------------------------------------------------
// cdga documents

Augmentation pick_augmentation(const io::CDGADocument& doc, const std::string& requested, bool second) {
  if (!requested.empty()) {
    if (requested == "unit") return unit_augmentation(doc.algebra);
    return doc.augmentation(requested);
  }
  if (doc.augmentations.empty()) return unit_augmentation(doc.algebra);
  return second ? doc.augmentations.back() : doc.augmentations.front();
}

BarComplex bar_of(const io::CDGADocument& doc, const RunConfig& cfg) {
  auto left = pick_augmentation(doc, cfg.left, false);
  auto right = pick_augmentation(doc, cfg.right, true);
  return BarComplex(doc.algebra, left, right, BarOptions{cfg.truncation, cfg.basis_cap});
}

void bar_rows(Report& r, const io::CDGADocument& doc, const BarComplex& B) {
  r.row("document", doc.name);
  r.row("truncation", B.truncation());
  r.row("augmentation.left", B.left_augmentation().name);
  r.row("augmentation.right", B.right_augmentation().name);
  r.row("letters", B.letters().size());
  for (int k : B.degrees()) {
    r.row("words." + std::to_string(k), B.basis(k).size());
    r.row("H." + std::to_string(k), B.cohomology(k).dimension);
  }
  auto profile = B.h0_length_profile();
  for (std::size_t n = 0; n < profile.size(); ++n) r.row("H0.length." + std::to_string(n), profile[n]);
}

int cmd_bar(const RunConfig& cfg, Report& r) {
  auto doc = io::load_cdga(cfg.input);
  bar_rows(r, doc, bar_of(doc, cfg));
  return Ok;
}

std::map<int, std::size_t> bar_dimensions(const BarComplex& B) {
  std::map<int, std::size_t> dims;
  for (int k : B.degrees()) dims[k] = B.cohomology(k).dimension;
  return dims;
}

int verify_cotorsor_doc(const RunConfig& cfg, const io::CotorsorDocument& doc, Report& r) {
  auto H = doc.algebra();
  auto P = doc.build();
  r.row("document", doc.name);
  r.row("cotorsor", doc.kind);
  r.row("letters", doc.letters);
  r.row("truncation", doc.truncation);
  auto rep = verify_cotorsor(P, H);
  r.row("galois.dimension", rep.galois_dimension);
  r.row("galois.rank", rep.galois_rank);
  r.verdict("coassociative", rep.coassociative);
  r.verdict("counital", rep.counital);
  r.verdict("galois", rep.galois_isomorphism);
  r.verdict("nonzero", rep.nonzero);
  for (const auto& f : rep.failures) r.row("failure", f);

  // B: the bar complex of the formal model on the same letters.
  auto M = free_formal_model(doc.letters);
  auto unit = unit_augmentation(M.model);
  BarComplex B(M.model, unit, unit, BarOptions{doc.truncation, cfg.basis_cap});
  auto b_dims = bar_dimensions(B);
  std::map<int, std::size_t> p_dims{{0, P.basis.size()}};
  for (const auto& [k, n] : b_dims) r.row("kunneth.B.H." + std::to_string(k), n);
  for (const auto& [k, n] : p_dims) r.row("kunneth.P.H." + std::to_string(k), n);
  auto verdict = concentration_from_kunneth(b_dims, p_dims);
  for (const auto& row : verdict.rows) {
    const char* claim = row.claim == KunnethClaim::Vanishes        ? "vanishes"
                        : row.claim == KunnethClaim::Contradiction ? "contradiction"
                                                                   : "no-claim";
    r.row("kunneth." + std::to_string(row.degree), claim);
  }
  r.verdict("kunneth", verdict.consistent());
  return r.failed() ? CheckFailed : Ok;
}

int cmd_verify(const RunConfig& cfg, Report& r) {
  auto j = io::read_json(cfg.input);
  if (io::classify(j) == io::DocumentKind::Cotorsor) {
    auto doc = io::parse_cotorsor(j);
    if (cfg.truncation_given && cfg.truncation != doc.truncation)
      throw TruncationMismatch("document truncation " + std::to_string(doc.truncation) + " differs from --truncation " +
                               std::to_string(cfg.truncation));
    return verify_cotorsor_doc(cfg, doc, r);
  }
  if (io::classify(j) != io::DocumentKind::CDGA) throw ParseError("verify expects a cdga or cotorsor document");
  auto doc = io::parse_cdga(j);
  auto B = bar_of(doc, cfg);
  bar_rows(r, doc, B);
  r.verdict("connectedness", verify_connectedness(B).pass);
  r.verdict("concentration", verify_concentration(B).pass);
  return r.failed() ? CheckFailed : Ok;
}

// ---------------------------------------------------------------------------

int cmd_hopf(const RunConfig& cfg, Report& r) {
  std::size_t m;
  if (cfg.letters) {
    m = *cfg.letters;
  } else if (!cfg.input.empty()) {
    m = formal_model(io::load_cdga(cfg.input).algebra).letter_count();
  } else {
    throw ParseError("hopf needs an input document or --letters");
  }
  auto H = tensor_word_algebra(m, cfg.truncation);
  r.row("letters", m);
  r.row("truncation", cfg.truncation);
  r.row("dimension", H.dimension());
  auto axioms = check_hopf_axioms(H);
  r.row("hopf.checks", axioms.checks);
  for (const auto& v : axioms.violations) r.row("violation." + v.axiom, v.word);
  r.verdict("hopf", axioms.ok());
  auto coco = check_cocomposition(H, "a", "b", "c", "d");
  r.verdict("cocomposition", coco.ok());

  // bar-derived product on H^0 of the formal model against the shuffle product
  auto M = free_formal_model(m);
  auto unit = unit_augmentation(M.model);
  BarComplex B(M.model, unit, unit, BarOptions{cfg.truncation, cfg.basis_cap});
  bool agree = true;
  for (const auto& u : H.basis())
    for (const auto& v : H.basis())
      if (u.size() + v.size() <= cfg.truncation && bar_shuffle(B.letters(), u, v) != shuffle_product(u, v)) agree = false;
  r.verdict("bar_shuffle", agree);

  for (const auto& u : H.basis())
    for (const auto& v : H.basis())
      if (u.size() + v.size() <= cfg.truncation && !u.empty() && !v.empty() && u <= v)
        r.row("shuffle." + H.format(u) + "." + H.format(v), format_sum(H, shuffle_product(u, v)));
  for (const auto& w : H.basis()) r.row("coproduct." + H.format(w), format_pair_sum(H, deconcatenate(w)));
  for (const auto& w : H.basis()) r.row("antipode." + H.format(w), format_sum(H, antipode(w)));
  return r.failed() ? CheckFailed : Ok;
}

// ---------------------------------------------------------------------------

std::string format_vector(const GradedVectorSpace& S, const SparseVector& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : v) {
    if (!out.empty()) out += " + ";
    out += c.str() + "*" + S.name(i);
  }
  return out;
}

int cmd_model(const RunConfig& cfg, Report& r) {
  auto doc = io::load_cdga(cfg.input);
  const auto& A = doc.algebra;
  if (cfg.stages < 1) throw ParseError("--stages must be at least 1");
  r.row("document", doc.name);
  r.row("degree_cap", std::to_string(cfg.degree_cap));
  r.row("stages", std::to_string(cfg.stages));
  std::optional<BGStage> st;
  for (int s = 1; s <= cfg.stages; ++s) {
    st = s == 1 ? bg_initial(A, cfg.degree_cap, cfg.basis_cap) : bg_step(*st, A);
    const auto& L = st->algebra;
    const std::string p = "stage." + std::to_string(s) + ".";
    r.row(p + "generators", L.generator_count());
    for (std::size_t i = 0; i < L.generator_count(); ++i) {
      const auto& g = L.generators()[i];
      r.row(p + "gen." + g.name, "degree=" + std::to_string(g.degree) + " d=" + L.format(g.d) +
                                     " psi=" + format_vector(A.space(), st->psi[i]));
    }
    r.row(p + "skipped_degree_one", st->skipped_degree_one);
    for (int k = 0; k <= L.degree_cap(); ++k) {
      r.row(p + "dim." + std::to_string(k), L.basis(k).size());
      r.row(p + "H." + std::to_string(k), L.cohomology(k).dimension());
    }
    r.verdict("stage" + std::to_string(s) + ".d_squared", L.differential_squares_to_zero());
    r.verdict("stage" + std::to_string(s) + ".chain_map", check_chain_map(L, st->psi, A).ok());
  }
  auto aug = augmentation_count(st->algebra);
  r.row("augmentation_count", aug.count);
  r.verdict("singleton", aug.count == 1);
  r.verdict("H0", st->algebra.cohomology(0).dimension() == 1);
  return r.failed() ? CheckFailed : Ok;
}

// ---------------------------------------------------------------------------
// numerics

template <class Real>
std::string real_str(const Real& x) {
  if constexpr (std::is_same_v<Real, double>) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x == 0 ? 0.0 : x);
    return buf;
  } else {
    if (x == 0) return "0";
    return x.str(static_cast<std::streamsize>(Real::default_precision()), std::ios::scientific);
  }
}

template <class Real>
std::string complex_str(const chen::Complex<Real>& z) {
  return real_str<Real>(z.re) + " " + real_str<Real>(z.im);
}

std::string error_str(double e) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", e);
  return buf;
}

std::string word_key(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w) out += "w" + std::to_string(l);
  return out;
}

std::vector<std::pair<std::string, const chen::Path*>> selected_paths(const io::GeometryDocument& doc,
                                                                     const RunConfig& cfg) {
  std::vector<std::pair<std::string, const chen::Path*>> out;
  for (const auto& [n, p] : doc.paths)
    if (cfg.path.empty() || cfg.path == n) out.emplace_back(n, &p);
  if (out.empty()) throw ParseError("no path named '" + cfg.path + "'");
  return out;
}

template <class Real>
void transport_rows(const io::GeometryDocument& doc, const RunConfig& cfg, Report& r) {
  if (!doc.connection) throw ParseError("transport needs a connection in the document");
  chen::IntegrationOptions opt;
  opt.tol = cfg.tol;
  const auto& C = *doc.connection;
  for (const auto& [name, path] : selected_paths(doc, cfg)) {
    auto dyson = chen::transport_dyson<Real>(doc.line, C, *path, opt);
    auto ode = chen::transport_ode<Real>(doc.line, C, *path, opt);
    double diff = 0;
    for (std::size_t i = 0; i < C.rank; ++i)
      for (std::size_t j = 0; j < C.rank; ++j) {
        r.row("transport." + name + "." + std::to_string(i) + "." + std::to_string(j), complex_str(dyson.value[i][j]));
        diff = std::max(diff, chen::detail::to_double<Real>((dyson.value[i][j] - ode.value[i][j]).abs()));
      }
    r.row("transport." + name + ".error", error_str(dyson.error));
    r.row("transport." + name + ".ode_difference", error_str(diff));
    r.verdict(name + ".dyson_vs_ode", diff <= 10 * cfg.tol);
  }
  if (!doc.splitting.empty()) {
    auto k = chen::canonical_k_form(C, doc.splitting);
    r.row("k_form", k.exists ? "exists" : "obstructed");
    for (const auto& [i, j, f] : k.obstructions)
      r.row("k_form.obstruction", std::to_string(i) + "," + std::to_string(j) + ",w" + std::to_string(f));
  }
}

template <class Real>
void pair_rows(const io::GeometryDocument& doc, const RunConfig& cfg, Report& r) {
  chen::IntegrationOptions opt;
  opt.tol = cfg.tol;
  for (const auto& [name, path] : selected_paths(doc, cfg)) {
    r.row("path." + name + ".clearance", error_str(chen::require_clearance(doc.line, *path)));
    if (!doc.words.empty()) {
      auto vals = chen::iterated_integrals<Real>(doc.line, *path, doc.words, opt);
      for (std::size_t i = 0; i < doc.words.size(); ++i) {
        const std::string key = "integral." + name + "." + word_key(doc.words[i]);
        r.row(key, complex_str(vals[i].value));
        r.row(key + ".error", error_str(vals[i].error));
      }
    }
    for (const auto& [cname, c] : doc.classes) {
      auto v = chen::pair<Real>(doc.line, *path, c, opt);
      r.row("pair." + name + "." + cname, complex_str(v.value));
      r.row("pair." + name + "." + cname + ".error", error_str(v.error));
    }
  }
}

template <template <class> class F>
void with_precision(const RunConfig& cfg, const io::GeometryDocument& doc, Report& r) {
  r.row("document", doc.name);
  r.row("precision", cfg.precision_bits == 0 ? std::string("double") : std::to_string(cfg.precision_bits) + " bits");
  r.row("tol", error_str(cfg.tol));
  if (cfg.precision_bits == 0) {
    F<double>::run(doc, cfg, r);
  } else {
    chen::PrecisionScope scope(cfg.precision_bits);
    F<chen::HighPrecision>::run(doc, cfg, r);
  }
}

template <class Real>
struct TransportCommand {
  static void run(const io::GeometryDocument& d, const RunConfig& c, Report& r) { transport_rows<Real>(d, c, r); }
};
template <class Real>
struct PairCommand {
  static void run(const io::GeometryDocument& d, const RunConfig& c, Report& r) { pair_rows<Real>(d, c, r); }
};

int cmd_transport(const RunConfig& cfg, Report& r) {
  with_precision<TransportCommand>(cfg, io::parse_geometry(io::read_json(cfg.input)), r);
  return r.failed() ? CheckFailed : Ok;
}

int cmd_pair(const RunConfig& cfg, Report& r) {
  with_precision<PairCommand>(cfg, io::parse_geometry(io::read_json(cfg.input)), r);
  return r.failed() ? CheckFailed : Ok;
}

// ---------------------------------------------------------------------------

int exit_code_for(const Error& e) {
  const std::string& k = e.kind();
  if (k == "InvalidCDGA" || k == "InvalidAugmentation" || k == "NotConnective" || k == "NotCurveLike" ||
      k == "NonVanishingProducts" || k == "DifferentialSquareNonzero" || k == "NonChainMap")
    return Invalid;
  if (k == "BasisCapExceeded" || k == "TruncationExceeded") return Cap;
  if (k == "PathTooClose") return TooClose;
  if (k == "ToleranceNotMet") return Tolerance;
  if (k == "ZeroH0" || k == "SubspaceNotContained") return CheckFailed;
  return Parse;
}

int run(const RunConfig& cfg) {
  Report r;
  int code;
  try {
    if (cfg.command == "bar") code = cmd_bar(cfg, r);
    else if (cfg.command == "verify") code = cmd_verify(cfg, r);
    else if (cfg.command == "hopf") code = cmd_hopf(cfg, r);
    else if (cfg.command == "model") code = cmd_model(cfg, r);
    else if (cfg.command == "transport") code = cmd_transport(cfg, r);
    else code = cmd_pair(cfg, r);
  } catch (const Error& e) {
    std::cerr << "pathring " << cfg.command << ": " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::invalid_argument& e) {
    std::cerr << "pathring " << cfg.command << ": " << e.what() << '\n';
    return Parse;
  }
  const std::string text = r.render(cfg.format);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "pathring: cannot write '" << cfg.out << "'\n";
      return Parse;
    }
    f << text;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path rings of cdga's: bar cohomology, Hopf checks, Sullivan stages, iterated integrals"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool input_required) {
    auto* in = sub->add_option("input", cfg.input, "input JSON document");
    if (input_required) in->required()->check(CLI::ExistingFile);
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "rows"}));
    sub->add_option("--out", cfg.out, "write the report to a file");
  };
  auto bar_like = [&](CLI::App* sub) {
    sub->add_option("--truncation", cfg.truncation, "word length truncation N")->check(CLI::NonNegativeNumber);
    sub->add_option("--basis-cap", cfg.basis_cap, "maximum basis size")->check(CLI::PositiveNumber);
    sub->add_option("--left", cfg.left, "left augmentation name (or 'unit')");
    sub->add_option("--right", cfg.right, "right augmentation name (or 'unit')");
  };
  auto numeric = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.tol, "absolute tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--precision-bits", cfg.precision_bits, "MPFR precision in bits (0: double)");
    sub->add_option("--path", cfg.path, "only this named path");
  };

  auto* bar = app.add_subcommand("bar", "bar cohomology table");
  common(bar, true);
  bar_like(bar);
  auto* verify = app.add_subcommand("verify", "connectedness/concentration or cotorsor checks");
  common(verify, true);
  bar_like(verify);
  auto* hopf = app.add_subcommand("hopf", "Hopf axioms and structure tables");
  common(hopf, false);
  hopf->add_option("--truncation", cfg.truncation, "word length truncation N")->check(CLI::NonNegativeNumber);
  hopf->add_option("--basis-cap", cfg.basis_cap, "maximum basis size")->check(CLI::PositiveNumber);
  hopf->add_option("--letters", cfg.letters, "number of letters (instead of a document)");
  auto* model = app.add_subcommand("model", "Sullivan model stages");
  common(model, true);
  model->add_option("--degree-cap", cfg.degree_cap, "degree cap D")->check(CLI::PositiveNumber);
  model->add_option("--stages", cfg.stages, "number of stages")->check(CLI::PositiveNumber);
  model->add_option("--basis-cap", cfg.basis_cap, "maximum basis size per degree")->check(CLI::PositiveNumber);
  auto* transport = app.add_subcommand("transport", "parallel transport of a unipotent connection");
  common(transport, true);
  numeric(transport);
  auto* pair = app.add_subcommand("pair", "iterated integrals and H^0 pairings");
  common(pair, true);
  numeric(pair);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return Parse;
  }
  for (auto* sub : app.get_subcommands()) {
    cfg.command = sub->get_name();
    if (auto* opt = sub->get_option_no_throw("--truncation")) cfg.truncation_given = opt->count() > 0;
  }
  return run(cfg);
}
