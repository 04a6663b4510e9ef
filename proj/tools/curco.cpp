// curco: exact computation of degree-two (co)homology for current Lie
// algebras g = A (x) k, with built-in verification suites.
#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <random>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "curco/catalog.hpp"
#include "curco/cochain.hpp"
#include "curco/current.hpp"
#include "curco/forms.hpp"
#include "curco/io.hpp"

using namespace curco;
using nlohmann::json;

namespace {

constexpr const char* kSchema = "curco-report/1";
constexpr size_t kWedgeCubeGuard = 50000;

struct Input {
  std::string ref;          // as given on the command line
  std::string text;         // canonical serialization
  std::string kind;         // lie | commutative
  std::optional<LieEntry> lie;
  std::optional<NamedComm> comm;
};

std::string read_stream(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Input resolve_input(const std::string& ref, const std::string& want_kind) {
  Input in;
  in.ref = ref;
  if (ref.rfind("catalog:", 0) == 0) {
    auto [name, params] = split_catalog_ref(ref.substr(8));
    if (want_kind == "commutative") {
      CommAlgebra a = comm_catalog(name, params);
      in.kind = "commutative";
      in.comm = NamedComm{name, a};
      in.text = serialize_comm(a, name);
    } else {
      LieEntry e = lie_catalog(name, params);
      in.kind = "lie";
      in.text = serialize_lie(e.algebra, e.name);
      in.lie = std::move(e);
    }
    return in;
  }
  std::string raw;
  if (ref == "-") {
    raw = read_stream(std::cin);
  } else {
    std::ifstream f(ref);
    if (!f) throw input_error("cannot open input file '" + ref + "'");
    raw = read_stream(f);
  }
  std::string kind = detect_kind(raw, ref);
  if (kind != want_kind)
    throw input_error(ref + ": expected a " + want_kind + " algebra, found kind '" + kind + "'");
  if (kind == "lie") {
    NamedLie l = parse_lie(raw, ref);
    LieEntry e;
    e.name = l.name;
    e.algebra = l.algebra;
    in.kind = "lie";
    in.lie = std::move(e);
    in.text = serialize_lie(l.algebra, l.name);
  } else {
    NamedComm a = parse_comm(raw, ref);
    in.kind = "commutative";
    in.text = serialize_comm(a.algebra, a.name);
    in.comm = std::move(a);
  }
  return in;
}

void guard_wedge_cube(size_t dim, bool force) {
  size_t cube = binomial(dim, 3);
  if (cube > kWedgeCubeGuard && !force)
    throw input_error("input of dimension " + std::to_string(dim) + " needs " + std::to_string(cube) +
                      " wedge triples (limit " + std::to_string(kWedgeCubeGuard) +
                      "); pass --force to override");
}

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // name, fingerprint
  json results = json::object();
  std::vector<std::string> lines;  // human output
  bool failed = false;
  long elapsed_ms = 0;
};

void emit(const Report& rep, bool as_json) {
  if (as_json) {
    json j;
    j["schema"] = kSchema;
    j["command"] = rep.command;
    json ins = json::array();
    for (const auto& [name, fp] : rep.inputs) ins.push_back({{"name", name}, {"fingerprint", fp}});
    j["inputs"] = ins;
    j["results"] = rep.results;
    j["ok"] = !rep.failed;
    j["elapsed_ms"] = rep.elapsed_ms;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& line : rep.lines) std::cout << line << "\n";
  }
}

size_t thread_count(size_t jobs) {
  if (const char* env = std::getenv("CURCO_THREADS")) {
    long v = std::atol(env);
    if (v >= 1) return std::min(jobs, size_t(v));
  }
  size_t hw = std::thread::hardware_concurrency();
  return std::min(jobs, hw ? hw : 1);
}

// runs independent pure jobs, preserving result order
template <typename F>
std::vector<std::string> run_jobs(const std::vector<F>& jobs) {
  std::vector<std::string> results(jobs.size());
  size_t workers = thread_count(jobs.size());
  if (workers <= 1) {
    for (size_t i = 0; i < jobs.size(); ++i) results[i] = jobs[i]();
    return results;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= jobs.size()) break;
        results[i] = jobs[i]();
      }
    });
  for (auto& t : pool) t.join();
  return results;
}

// ---------------------------------------------------------------- cohomology

int cmd_cohomology(const std::string& input_ref, const std::string& module_kind, int degree,
                   bool all, bool as_json, bool force) {
  auto t0 = std::chrono::steady_clock::now();
  Input in = resolve_input(input_ref, "lie");
  guard_wedge_cube(in.lie->algebra.dim(), force);
  const LieAlgebra& l = in.lie->algebra;
  KModule mod = [&] {
    if (module_kind == "adjoint") return adjoint_module(l);
    if (module_kind == "coadjoint") return coadjoint_module(l);
    if (module_kind == "sym2") return sym_forms_module(l);
    return trivial_module(l, 1);
  }();
  Report rep;
  rep.command = "cohomology";
  rep.inputs.emplace_back(in.lie->name.empty() ? input_ref : in.lie->name, fingerprint(in.text));
  std::vector<size_t> degrees;
  if (all)
    for (size_t p = 0; p <= l.dim(); ++p) degrees.push_back(p);
  else
    degrees.push_back(degree < 0 ? 2 : size_t(degree));
  json table = json::array();
  std::vector<size_t> cs, zs, bs, hs;
  for (size_t p : degrees) {
    Cohomology h = cohomology(l, mod, p);
    table.push_back({{"p", p}, {"C", h.dim_c}, {"Z", h.dim_z}, {"B", h.dim_b}, {"H", h.dim_h}});
    cs.push_back(h.dim_c);
    zs.push_back(h.dim_z);
    bs.push_back(h.dim_b);
    hs.push_back(h.dim_h);
  }
  rep.results["module"] = module_kind;
  rep.results["table"] = table;
  auto row = [&](const char* label, const std::vector<size_t>& v) {
    std::ostringstream os;
    os << label;
    for (size_t x : v) os << " " << x;
    return os.str();
  };
  {
    std::ostringstream os;
    os << "p:";
    for (size_t p : degrees) os << " " << p;
    rep.lines.push_back(os.str());
  }
  rep.lines.push_back(row("C:", cs));
  rep.lines.push_back(row("H:", hs));
  rep.lines.push_back(row("B:", bs));
  rep.lines.push_back(row("Z:", zs));
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  emit(rep, as_json);
  return 0;
}

// ------------------------------------------------------------------- current

int cmd_current(const std::string& a_ref, const std::string& k_ref, bool want_h2, bool want_b2,
                bool want_zus, bool want_seq, bool as_json, bool force) {
  auto t0 = std::chrono::steady_clock::now();
  Input ain = resolve_input(a_ref, "commutative");
  Input kin = resolve_input(k_ref, "lie");
  guard_wedge_cube(ain.comm->algebra.dim() * kin.lie->algebra.dim(), force);
  CurrentAlgebra cur(ain.comm->algebra, kin.lie->algebra);
  Report rep;
  rep.command = "current";
  rep.inputs.emplace_back(ain.comm->name.empty() ? a_ref : ain.comm->name, fingerprint(ain.text));
  rep.inputs.emplace_back(kin.lie->name.empty() ? k_ref : kin.lie->name, fingerprint(kin.text));
  rep.results["dim_g"] = cur.algebra().dim();
  rep.lines.push_back("dim g = " + std::to_string(cur.algebra().dim()));
  bool ok = true;
  if (want_h2 || !(want_b2 || want_zus || want_seq)) {
    Cohomology h = cohomology(cur.algebra(), trivial_module(cur.algebra(), 1), 2);
    rep.results["h2"] = {{"dim_H2", h.dim_h}, {"dim_Z2", h.dim_z}, {"dim_B2", h.dim_b}};
    rep.lines.push_back("dim H^2(g) = " + std::to_string(h.dim_h));
  }
  if (want_b2) {
    BoundaryData bd = boundary_data(cur);
    rep.results["boundary_families"] = {{"match", bd.families_match},
                                        {"dim_boundaries", bd.brute.dim()},
                                        {"dim_cycles", bd.cycles.dim()}};
    rep.lines.push_back(std::string("boundary families: ") +
                        (bd.families_match ? "match" : "MISMATCH") +
                        " (dim = " + std::to_string(bd.brute.dim()) + ")");
    ok = ok && bd.families_match;
  }
  if (want_zus) {
    ZusmanovichReport z = zusmanovich(cur);
    rep.results["homology_prediction"] = {{"four_factor_sum", z.four_factor_sum},
                                          {"coupled_correction", z.coupled_correction},
                                          {"predicted", z.predicted},
                                          {"brute", z.brute},
                                          {"match", z.match}};
    rep.lines.push_back("predicted dim H_2 = " + std::to_string(z.predicted) + " (brute " +
                        std::to_string(z.brute) + (z.match ? ", match)" : ", MISMATCH)"));
    ok = ok && z.match;
  }
  if (want_seq) {
    H2SequenceReport s = h2_sequence(cur);
    rep.results["sequence"] = {{"dim_H2", s.dim_h2_brute},
                               {"pullback", s.term_pullback},
                               {"fiberwise", s.term_fiberwise},
                               {"pair_maps", s.term_pair},
                               {"exact", s.exact()}};
    std::ostringstream os;
    os << "sequence: " << s.dim_h2_brute << " = " << s.term_pullback << " + " << s.term_fiberwise
       << " + " << s.term_pair << (s.exact() ? " exact" : " NOT EXACT");
    rep.lines.push_back(os.str());
    ok = ok && s.exact();
  }
  rep.failed = !ok;
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  emit(rep, as_json);
  return ok ? 0 : 1;
}

// -------------------------------------------------------------------- verify

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<std::string> battery_comm() {
  return {"field", "dual_numbers", "trunc_poly:3", "trunc_poly:4", "function_alg:2", "function_alg:3",
          "group_alg_z2"};
}
std::vector<std::string> battery_lie() {
  return {"abelian:2", "heisenberg", "oscillator", "sl2", "pelc:6"};
}

CommAlgebra comm_of(const std::string& ref) {
  auto [name, params] = split_catalog_ref(ref);
  return comm_catalog(name, params);
}
LieEntry lie_of(const std::string& ref) {
  auto [name, params] = split_catalog_ref(ref);
  return lie_catalog(name, params);
}

Check check_kaehler_kernel(const std::string& aref) {
  Check c;
  c.name = "kaehler-kernel " + aref;
  CommAlgebra a = comm_of(aref);
  KaehlerModule k(a);
  // wedge_differential certifies surjectivity and the kernel equality
  Mat g = wedge_differential(a, k);
  c.pass = (image(g).dim() == k.dim()) && (kernel(g) == cyclic_spans(a).reduced);
  c.detail = "module dim " + std::to_string(k.dim());
  return c;
}

Check check_boundary_families(const std::string& aref, const std::string& kref) {
  Check c;
  c.name = "boundary-families " + aref + " " + kref;
  CurrentAlgebra cur(comm_of(aref), lie_of(kref).algebra);
  BoundaryData bd = boundary_data(cur);
  c.pass = bd.families_match;
  c.detail = "dim B_2 = " + std::to_string(bd.brute.dim());
  return c;
}

Check check_cocycle_conditions(const std::string& aref, const std::string& kref, size_t samples) {
  Check c;
  c.name = "cocycle-conditions " + aref + " " + kref;
  CurrentAlgebra cur(comm_of(aref), lie_of(kref).algebra);
  BoundaryData bd = boundary_data(cur);
  std::mt19937_64 rng(0xC0C0 + cur.algebra().dim());
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 2);
  Mat q = quotient_map(cur.wedge_g().size(), bd.brute);
  size_t agreed = 0;
  for (size_t t = 0; t < samples; ++t) {
    CochainTriple f = CochainTriple::zero(cur, 1);
    if (t % 2 == 0) {
      auto fill = [&](Mat& m) {
        for (size_t r = 0; r < m.rows(); ++r)
          for (size_t cc = 0; cc < m.cols(); ++cc) m.at(r, cc) = Rat(num(rng), den(rng));
      };
      fill(f.f1);
      fill(f.f2);
      fill(f.f3);
    } else {
      // a functional vanishing on the boundaries, pushed through the sections
      Mat func(1, cur.wedge_g().size());
      for (size_t r = 0; r < q.rows(); ++r) {
        Rat coeff(num(rng), den(rng));
        if (coeff.is_zero()) continue;
        for (size_t cc = 0; cc < q.cols(); ++cc)
          if (!q.at(r, cc).is_zero()) func.at(0, cc) += coeff * q.at(r, cc);
      }
      f = extract(cur, func);
    }
    // throws on disagreement between the condition and boundary verdicts
    cocycle_check(cur, bd, f);
    ++agreed;
  }
  c.pass = (agreed == samples);
  c.detail = std::to_string(agreed) + "/" + std::to_string(samples) + " agreements";
  return c;
}

Check check_h2_sequence(const std::string& aref, const std::string& kref) {
  Check c;
  c.name = "h2-sequence " + aref + " " + kref;
  CurrentAlgebra cur(comm_of(aref), lie_of(kref).algebra);
  H2SequenceReport rep = h2_sequence(cur);
  c.pass = rep.exact();
  std::ostringstream os;
  os << rep.dim_h2_brute << " = " << rep.term_pullback << " + " << rep.term_fiberwise << " + "
     << rep.term_pair;
  c.detail = os.str();
  return c;
}

std::string mat_str(const Mat& m) {
  std::ostringstream os;
  os << "[";
  for (size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m.at(r, c).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Check check_transfer(const std::string& kref, bool verbose) {
  Check c;
  c.name = "transfer-sequence " + kref;
  TransferReport rep = transfer_sequence(lie_of(kref).algebra);
  c.pass = rep.ok();
  std::ostringstream os;
  os << "dims " << rep.dim_h2 << "," << rep.dim_h1_coad << "," << rep.dim_inv << "," << rep.dim_h3
     << "," << rep.dim_h2_coad << "," << rep.dim_h1_sym;
  if (verbose)
    os << " maps " << mat_str(rep.head) << " " << mat_str(rep.symmetrized) << " "
       << mat_str(rep.koszul) << " " << mat_str(rep.curried) << " " << mat_str(rep.tail);
  c.detail = os.str();
  return c;
}

Check check_zusmanovich(const std::string& aref, const std::string& kref) {
  Check c;
  c.name = "homology-prediction " + aref + " " + kref;
  CurrentAlgebra cur(comm_of(aref), lie_of(kref).algebra);
  ZusmanovichReport rep = zusmanovich(cur);
  c.pass = rep.match;
  c.detail = "predicted " + std::to_string(rep.predicted) + ", brute " + std::to_string(rep.brute);
  return c;
}

Check check_oscillator_table() {
  Check c;
  c.name = "oscillator-table";
  LieEntry osc = lie_of("oscillator");
  KModule triv = trivial_module(osc.algebra, 1);
  const size_t expect_c[5] = {1, 4, 6, 4, 1};
  const size_t expect_h[5] = {1, 1, 0, 1, 1};
  const size_t expect_b[5] = {0, 0, 3, 3, 0};
  const size_t expect_z[5] = {1, 1, 3, 4, 1};
  c.pass = true;
  for (size_t p = 0; p <= 4; ++p) {
    Cohomology h = cohomology(osc.algebra, triv, p);
    if (h.dim_c != expect_c[p] || h.dim_h != expect_h[p] || h.dim_b != expect_b[p] ||
        h.dim_z != expect_z[p])
      c.pass = false;
  }
  InvariantForms inv = sym_invariant_forms(osc.algebra);
  ExactFormsReport ef = exact_forms(osc.algebra);
  CentroidReport cent = centroid(osc.algebra, gram_of(4, osc.form_witnesses.at("kappa2")));
  c.pass = c.pass && inv.invariants.dim() == 2 && ef.exact_forms == inv.invariants &&
           ef.z3_image.dim() == 1 && ef.b3_meet.dim() == 1 && cent.dim_cent_red == 1;
  c.detail = "table, invariant forms, centroid";
  return c;
}

Check check_pelc() {
  Check c;
  c.name = "pelc";
  c.pass = pelc_exactness_witness(1).ok() && pelc_exactness_witness(2).ok();
  LieAlgebra p3 = lie_of("pelc:3").algebra;
  LieAlgebra osc = lie_of("oscillator").algebra;
  KModule tp = trivial_module(p3, 1);
  KModule to = trivial_module(osc, 1);
  for (size_t p = 0; p <= 4; ++p) {
    Cohomology a = cohomology(p3, tp, p);
    Cohomology b = cohomology(osc, to, p);
    if (a.dim_h != b.dim_h || a.dim_z != b.dim_z || a.dim_b != b.dim_b || a.dim_c != b.dim_c)
      c.pass = false;
  }
  c.detail = "witnesses for m=1,2 and the degree table of pelc:3";
  return c;
}

int cmd_verify(const std::string& target, std::vector<std::string> inputs, bool battery,
               size_t samples, bool verbose, bool as_json) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> comms = battery_comm();
  std::vector<std::string> lies = battery_lie();
  // explicit inputs override the battery where they fit
  std::vector<std::string> in_comm, in_lie;
  for (const auto& ref : inputs) {
    std::string bare = ref.rfind("catalog:", 0) == 0 ? ref.substr(8) : ref;
    auto [name, params] = split_catalog_ref(bare);
    bool is_comm = false;
    for (const auto& e : catalog_list())
      if (split_catalog_ref(e.name).first == name && e.kind == "commutative") is_comm = true;
    (is_comm ? in_comm : in_lie).push_back(bare);
  }
  if (!battery && !inputs.empty()) {
    if (!in_comm.empty()) comms = in_comm;
    if (!in_lie.empty()) lies = in_lie;
  }
  auto pairs_small = [&] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& a : comms)
      for (const auto& k : lies)
        if (comm_of(a).dim() * lie_of(k).algebra.dim() <= 24) out.emplace_back(a, k);
    return out;
  }();

  std::vector<std::function<std::string()>> jobs;
  auto line = [](const Check& c) {
    return std::string(c.pass ? "PASS " : "FAIL ") + c.name + (c.detail.empty() ? "" : " — " + c.detail);
  };
  auto add_pair_jobs = [&](auto&& fn) {
    for (const auto& [a, k] : pairs_small)
      jobs.push_back([a = a, k = k, fn, &line] { return line(fn(a, k)); });
  };
  if (target == "kaehler-kernel" || target == "all")
    for (const auto& a : comms) jobs.push_back([a, &line] { return line(check_kaehler_kernel(a)); });
  if (target == "boundary-families" || target == "all") add_pair_jobs(check_boundary_families);
  if (target == "cocycle-conditions" || target == "all")
    for (const auto& [a, k] : pairs_small)
      jobs.push_back([a = a, k = k, samples, &line] { return line(check_cocycle_conditions(a, k, samples)); });
  if (target == "h2-sequence" || target == "all") add_pair_jobs(check_h2_sequence);
  if (target == "zusmanovich" || target == "all") add_pair_jobs(check_zusmanovich);
  if (target == "transfer-sequence" || target == "all")
    for (const auto& k : lies)
      jobs.push_back([k, verbose, &line] { return line(check_transfer(k, verbose)); });
  if (target == "oscillator-table" || target == "all")
    jobs.push_back([&line] { return line(check_oscillator_table()); });
  if (target == "pelc" || target == "all") jobs.push_back([&line] { return line(check_pelc()); });
  if (jobs.empty()) throw input_error("unknown verify target '" + target + "'");

  std::vector<std::string> lines = run_jobs(jobs);
  Report rep;
  rep.command = "verify " + target;
  bool all_pass = true;
  json results = json::array();
  for (const auto& l : lines) {
    bool pass = l.rfind("PASS", 0) == 0;
    all_pass = all_pass && pass;
    rep.lines.push_back(l);
    results.push_back({{"pass", pass}, {"line", l}});
  }
  rep.lines.push_back(all_pass ? "all checks passed" : "SOME CHECKS FAILED");
  rep.results["checks"] = results;
  rep.failed = !all_pass;
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  emit(rep, as_json);
  return all_pass ? 0 : 1;
}

// ------------------------------------------------------------------- catalog

int cmd_catalog(const std::string& action, const std::string& name, bool as_json) {
  if (action == "list") {
    Report rep;
    rep.command = "catalog list";
    json entries = json::array();
    for (const auto& e : catalog_list()) {
      rep.lines.push_back(e.name + "  [" + e.kind + "]  " + e.summary);
      entries.push_back({{"name", e.name}, {"kind", e.kind}, {"summary", e.summary}});
    }
    rep.results["entries"] = entries;
    emit(rep, as_json);
    return 0;
  }
  if (action == "export") {
    auto [base, params] = split_catalog_ref(name);
    bool known = false, is_comm = false;
    for (const auto& e : catalog_list())
      if (split_catalog_ref(e.name).first == base) {
        known = true;
        is_comm = (e.kind == "commutative");
      }
    if (known) {
      if (is_comm)
        std::cout << serialize_comm(comm_catalog(base, params), base);
      else
        std::cout << serialize_lie(lie_catalog(base, params).algebra, base);
      return 0;
    }
    // not a catalog entry: re-serialize a file (or stdin) canonically
    std::string raw;
    if (name == "-") {
      raw = read_stream(std::cin);
    } else {
      std::ifstream f(name);
      if (!f) throw input_error("unknown catalog entry or unreadable file '" + name + "'");
      raw = read_stream(f);
    }
    if (detect_kind(raw, name) == "commutative") {
      NamedComm a = parse_comm(raw, name);
      std::cout << serialize_comm(a.algebra, a.name);
    } else {
      NamedLie l = parse_lie(raw, name);
      std::cout << serialize_lie(l.algebra, l.name);
    }
    return 0;
  }
  throw input_error("catalog action must be 'list' or 'export'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact degree-two (co)homology of current Lie algebras"};
  app.require_subcommand(1);

  auto* coh = app.add_subcommand("cohomology", "cochain/cocycle/coboundary/class table");
  std::string coh_input;
  std::string coh_module = "trivial";
  int coh_p = -1;
  bool coh_all = false, coh_force = false;
  std::string coh_fmt = "table";
  coh->add_option("input", coh_input, "catalog:NAME[:PARAM...], a file path, or -")->required();
  coh->add_option("--module", coh_module, "trivial|adjoint|coadjoint|sym2")
      ->check(CLI::IsMember({"trivial", "adjoint", "coadjoint", "sym2"}));
  coh->add_option("--p", coh_p, "degree (default 2)");
  coh->add_flag("--all", coh_all, "all degrees 0..dim");
  coh->add_flag("--force", coh_force, "override the size guard");
  coh->add_option("--format", coh_fmt, "table|json")->check(CLI::IsMember({"table", "json"}));

  auto* cur = app.add_subcommand("current", "analyze g = A (x) k");
  std::string cur_a, cur_k;
  bool cur_h2 = false, cur_b2 = false, cur_zus = false, cur_seq = false, cur_force = false;
  std::string cur_fmt = "table";
  cur->add_option("A", cur_a, "commutative input")->required();
  cur->add_option("k", cur_k, "Lie input")->required();
  cur->add_flag("--h2", cur_h2, "dim H^2(g) by brute force");
  cur->add_flag("--b2-check", cur_b2, "compare the boundary families with brute force");
  cur->add_flag("--zusmanovich", cur_zus, "independent homology dimension prediction");
  cur->add_flag("--sequence", cur_seq, "three-term dimension identity with exactness verdict");
  cur->add_flag("--force", cur_force, "override the size guard");
  cur->add_option("--format", cur_fmt, "table|json")->check(CLI::IsMember({"table", "json"}));

  auto* ver = app.add_subcommand("verify", "run verification suites");
  std::string ver_target;
  std::vector<std::string> ver_inputs;
  bool ver_battery = false;
  std::string ver_fmt = "table";
  size_t ver_samples = 25;
  ver->add_option("target", ver_target,
                  "kaehler-kernel|boundary-families|cocycle-conditions|h2-sequence|zusmanovich|"
                  "transfer-sequence|oscillator-table|pelc|all")
      ->required();
  ver->add_option("inputs", ver_inputs, "optional catalog refs replacing the battery");
  ver->add_flag("--battery", ver_battery, "force the built-in battery");
  ver->add_option("--samples", ver_samples, "randomized samples per pair (cocycle-conditions)");
  bool ver_verbose = false;
  ver->add_flag("--verbose", ver_verbose, "include descended map matrices where available");
  ver->add_option("--format", ver_fmt, "table|json")->check(CLI::IsMember({"table", "json"}));

  auto* cat = app.add_subcommand("catalog", "list or export built-in algebras");
  std::string cat_action, cat_name;
  std::string cat_fmt = "table";
  cat->add_option("action", cat_action, "list|export")->required();
  cat->add_option("name", cat_name, "entry to export");
  cat->add_option("--format", cat_fmt, "table|json")->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (coh->parsed()) return cmd_cohomology(coh_input, coh_module, coh_p, coh_all, coh_fmt == "json", coh_force);
    if (cur->parsed())
      return cmd_current(cur_a, cur_k, cur_h2, cur_b2, cur_zus, cur_seq, cur_fmt == "json", cur_force);
    if (ver->parsed()) return cmd_verify(ver_target, ver_inputs, ver_battery, ver_samples, ver_verbose, ver_fmt == "json");
    if (cat->parsed()) return cmd_catalog(cat_action, cat_name, cat_fmt == "json");
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
