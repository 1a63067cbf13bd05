// tropwall: command-line front end.
//
// Exit codes: 0 success, 1 computation error, 2 usage error, 3 budget
// exhausted (the partial result is still written).

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tropwall/grassmann.hpp"
#include "tropwall/io.hpp"
#include "tropwall/reembed.hpp"
#include "tropwall/suite.hpp"
#include "tropwall/toric.hpp"
#include "tropwall/wallcross.hpp"

namespace fs = std::filesystem;
using namespace tropwall;

namespace {

constexpr const char* kVersion = "0.1.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExhausted {
  std::string partial;
};

// Options shared by the subcommands; unused ones stay at their defaults.
struct Options {
  std::string input, ring, output, plot, order = "grevlex", weight, matrix;
  bool laurent = false, long_run = false, no_cache = false;
  std::size_t budget = 10000;
  int threads = 1, k = 2, n = 4, bound = 2, depth = 2;
  long cone1 = -1, cone2 = -1, cone = -1, adjacent = -1;
  std::string suite = "golden";
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A path when such a file exists, inline text otherwise.
std::string resolve_text(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && fs::is_regular_file(arg, ec)) return slurp(arg);
  return arg;
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string v; std::getline(ss, v, ',');) {
    v.erase(0, v.find_first_not_of(" \t"));
    v.erase(v.find_last_not_of(" \t") + 1);
    if (!v.empty()) out.push_back(v);
  }
  return out;
}

Ideal load_ideal(const Options& o) {
  if (o.input.empty()) throw UsageError("missing -i");
  Ideal I = read_ideal(resolve_text(o.input), split_names(o.ring), o.laurent);
  if (I.is_zero()) throw UsageError("zero ideal");
  return I;
}

json load_json(const std::string& arg, const char* flag) {
  if (arg.empty()) throw UsageError(std::string("missing ") + flag);
  try {
    return json::parse(resolve_text(arg));
  } catch (const json::parse_error& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

Vector parse_weight(const std::string& text) {
  if (text.empty()) throw UsageError("missing -w");
  std::string t = text;
  if (t.front() == '[') t = t.substr(1, t.size() - 2);
  Vector w;
  for (const auto& x : split_names(t)) w.push_back(parse_rational(x));
  return w;
}

json ideal_json(const Ideal& I) {
  return json{{"format_version", kFormatVersion},
              {"ring", I.ring()->names},
              {"laurent", I.ring()->laurent},
              {"generators", to_json(I.generators())}};
}

json affine_json(const Affine& f) { return json{{"a", to_json(f.a)}, {"c", to_json(f.c)}}; }

// Pointer to a cone of trop by index, with range and kind checks.
const GroebnerCone& cone_at(const TropicalVariety& t, long id, const char* flag) {
  if (id < 0 || static_cast<std::size_t>(id) >= t.cones.size())
    throw UsageError(std::string(flag) + ": cone id out of range (0.." + std::to_string(t.cones.size() - 1) + ")");
  return t.cones[id];
}

void write_plot(const Options& o, const PlotData& p) {
  if (o.plot.empty()) return;
  std::ofstream(o.plot) << to_json(p).dump(2) << "\n";
}

// Each command returns the artifact text.
std::string cmd_parse(const Options& o) { return ideal_json(load_ideal(o)).dump(2); }

std::string cmd_gb(const Options& o) {
  Ideal I = load_ideal(o);
  OrderDescriptor order = OrderDescriptor::parse(o.order);
  GroebnerBasis gb = buchberger(I, order);
  json j = ideal_json(I);
  j["order"] = order.to_string();
  j["basis"] = to_json(gb.elements);
  return j.dump(2);
}

std::string cmd_initial(const Options& o) {
  Ideal I = load_ideal(o);
  Vector w = parse_weight(o.weight);
  if (w.size() != I.ring()->arity()) throw UsageError("weight length does not match the ring");
  Ideal in = initial_ideal(I, w);
  json j = ideal_json(in);
  j["weight"] = to_json(w);
  j["monomial_free"] = !contains_monomial(in);
  return j.dump(2);
}

std::string cmd_gfan(const Options& o) {
  GroebnerFan g = groebner_fan(load_ideal(o), o.budget);
  if (!o.plot.empty()) write_plot(o, plot_fan(g.fan()));
  std::string out = to_json(g).dump(2);
  if (!g.complete) throw BudgetExhausted{out};
  return out;
}

std::string cmd_trop(const Options& o) {
  TropicalVariety t = tropicalize(load_ideal(o), o.budget);
  if (!o.plot.empty()) write_plot(o, plot_fan(t.fan()));
  std::string out = to_json(t).dump(2);
  if (!t.complete) throw BudgetExhausted{out};
  return out;
}

std::string cmd_toric(const Options& o) {
  Ideal I = toric_ideal(int_matrix_from_json(load_json(o.matrix, "-A")));
  return ideal_json(I).dump(2);
}

std::string cmd_ehrhart(const Options& o) {
  IntMatrix A = int_matrix_from_json(load_json(o.matrix, "-A"));
  ToricData td = toric_data(A);
  EhrhartPolynomial e = ehrhart_polynomial(td.Q, &td.lattice);
  json j{{"format_version", kFormatVersion},
         {"coefficients", to_json(Vector(e.coefficients.begin(), e.coefficients.end()))},
         {"polynomial", e.to_string()},
         {"normalized_volume", e.normalized_volume().get_str()}};
  if (o.bound > 0) {
    HilbertEhrhart he = hilbert_equals_ehrhart(A, o.bound);
    json h = json::array(), eh = json::array();
    for (const auto& x : he.hilbert) h.push_back(x.get_str());
    for (const auto& x : he.ehrhart) eh.push_back(x.get_str());
    j["hilbert"] = h;
    j["ehrhart"] = eh;
    j["equal"] = he.equal;
    j["normal"] = he.normal;
  }
  return j.dump(2);
}

std::string cmd_grassmann(const Options& o) {
  if (o.k < 1 || o.n <= o.k || o.n > 9) throw UsageError("need 1 <= k < n <= 9");
  Ideal I = plucker_ideal(o.k, o.n);
  std::string out = "# format_version " + std::to_string(kFormatVersion) + "\nring: ";
  for (std::size_t i = 0; i < I.ring()->arity(); ++i) out += (i ? ", " : "") + I.ring()->names[i];
  out += "\n";
  for (const auto& g : I.generators()) out += g.to_string() + "\n";
  out.pop_back();
  return out;
}

std::string cmd_nok(const Options& o) {
  WeightMatrix M(matrix_from_json(load_json(o.matrix, "-M")));
  Polytope body = no_body(M);
  json j = to_json(body);
  j = json{{"format_version", kFormatVersion}, {"ambient", j["ambient"]}, {"vertices", j["vertices"]}};
  j["cone"] = to_json(no_cone(M));
  if (!o.input.empty()) {
    Ideal I = load_ideal(o);
    if (M.ambient() != I.ring()->arity()) throw UsageError("matrix width does not match the ring");
    ValueSemigroup s = value_semigroup_elements(M, I, o.bound);
    j["semigroup_bound"] = o.bound;
    j["semigroup"] = to_json(s.elements());
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < I.ring()->arity(); ++i) vars.push_back(Polynomial::variable(I.ring(), i));
    j["variables_khovanskii"] = check_khovanskii(vars, M, I, o.bound);
  }
  if (!o.plot.empty()) {
    Cone c = no_cone(M);
    json p{{"format_version", kFormatVersion},
           {"cone", to_json(plot_fan(Fan{c.ambient(), c.lineality(), {c}}))},
           {"body", to_json(plot_body(body))}};
    std::ofstream(o.plot) << p.dump(2) << "\n";
  }
  return j.dump(2);
}

std::string cmd_wallcross(const Options& o) {
  Ideal I = load_ideal(o);
  if (o.cone1 < 0 || o.cone2 < 0) throw UsageError("need --cone1 and --cone2");
  TropicalVariety t = tropicalize(I, o.budget);
  if (!t.complete) throw BudgetExhausted{};
  cone_at(t, o.cone1, "--cone1");
  cone_at(t, o.cone2, "--cone2");
  WallSetup s = wall_setup(t, o.cone1, o.cone2, I);
  KappaCertificate cert = certify_kappa(s);
  json cells = json::array();
  for (const auto& c : cert.cells) {
    const Rational& k = cert.kappa;
    // S12: h -> k h + (phi2 - k phi1), F12: h -> -k h + (psi2 + k phi1).
    Affine shift{c.phi2.a - k * c.phi1.a, c.phi2.c - k * c.phi1.c};
    Affine flip{c.psi2.a + k * c.phi1.a, c.psi2.c + k * c.phi1.c};
    cells.push_back(json{{"domain", to_json(c.domain.vertices())},
                         {"phi1", affine_json(c.phi1)},
                         {"psi1", affine_json(c.psi1)},
                         {"phi2", affine_json(c.phi2)},
                         {"psi2", affine_json(c.psi2)},
                         {"shift", json{{"h", to_json(k)}, {"offset", affine_json(shift)}}},
                         {"flip", json{{"h", to_json(Rational(-k))}, {"offset", affine_json(flip)}}}});
  }
  json j{{"format_version", kFormatVersion},
         {"cone1", o.cone1},
         {"cone2", o.cone2},
         {"d", s.d},
         {"M", to_json(s.M.rows)},
         {"M1", to_json(s.M1.rows)},
         {"M2", to_json(s.M2.rows)},
         {"body", to_json(s.body)},
         {"body1", to_json(s.body1)},
         {"body2", to_json(s.body2)},
         {"projections_agree", projections_agree(s)},
         {"kappa", to_json(cert.kappa)},
         {"kappa_constant", cert.constant},
         {"cells", cells}};
  if (!o.plot.empty()) write_plot(o, plot_body(s.body1));
  return j.dump(2);
}

std::string cmd_reembed(const Options& o) {
  Ideal I = load_ideal(o);
  if (o.cone < 0) throw UsageError("need --cone");
  TropicalVariety t = tropicalize(I, o.budget);
  if (!t.complete) throw BudgetExhausted{};
  const GroebnerCone& C = cone_at(t, o.cone, "--cone");
  std::optional<Embedding> emb;
  bool found = false;
  int depth = 0;
  std::optional<TropicalVariety> lifted;
  std::vector<std::optional<GroebnerCone>> cones;
  if (o.adjacent >= 0) {
    AdjacentResult r = algorithm2(I, C, cone_at(t, o.adjacent, "--adjacent"), o.depth, o.budget);
    found = r.found, emb = r.embedding, depth = r.depth, lifted = r.trop;
    cones = {r.c1, r.c2};
  } else {
    ReembedResult r = algorithm1(I, C, o.depth, o.budget);
    found = r.found, emb = r.embedding, depth = r.depth, lifted = r.trop;
    cones = {r.cone};
  }
  const Embedding& e = *emb;
  json vars = json::object();
  const auto& names = e.ideal.ring()->names;
  for (std::size_t j = 0; j < e.y_vars.size(); ++j) vars[names[e.y_vars[j]]] = e.adjoined[j].to_string();
  json hs = json::array();
  for (auto h : e.h_vars) hs.push_back(names[h]);
  json found_cones = json::array();
  for (const auto& c : cones) {
    if (!c) continue;
    json rec{{"key", c->cone.key()}, {"cone", to_json(c->cone)}, {"initial_ideal", to_json(c->initial.generators())}};
    if (lifted)
      for (std::size_t i = 0; i < lifted->cones.size(); ++i)
        if (lifted->cones[i].cone == c->cone) rec["id"] = i;
    found_cones.push_back(rec);
  }
  json j{{"format_version", kFormatVersion},
         {"found", found},
         {"depth", depth},
         {"ring", names},
         {"generators", to_json(e.ideal.generators())},
         {"adjoined", vars},
         {"homogenizers", hs},
         {"elimination_recovers", elimination_recovers(e, I)},
         {"cones", found_cones}};
  return j.dump(2);
}

int cmd_verify(const Options& o) {
  if (o.suite != "golden" && o.suite != "paper") throw UsageError("unknown suite " + o.suite);
  int failed = 0;
  for (const auto& r : run_acceptance_suite(o.long_run)) {
    std::cout << format_result(r) << std::endl;
    failed += r.pass ? 0 : 1;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << failed << " failing" << std::endl;
  return failed ? 1 : 0;
}

// FNV-1a over the normalized request.
std::string cache_key(const std::string& request) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : request) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

std::string request_text(const std::string& cmd, const Options& o) {
  std::ostringstream s;
  s << "tropwall " << kVersion << " format " << kFormatVersion << "\n" << cmd << "\n"
    << resolve_text(o.input) << "\n" << o.ring << "\n" << resolve_text(o.matrix) << "\n" << o.order << "\n"
    << o.weight << "\n" << o.laurent << " " << o.budget << " " << o.k << " " << o.n << " " << o.bound << " "
    << o.depth << " " << o.cone1 << " " << o.cone2 << " " << o.cone << " " << o.adjacent;
  return s.str();
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty())
    std::cout << text << "\n";
  else
    std::ofstream(o.output) << text << "\n";
}

// The optional word after a subcommand ("trop compute", "toric ideal", ...).
void drop_action_word(std::vector<std::string>& args) {
  static const std::map<std::string, std::string> actions{
      {"trop", "compute"}, {"toric", "ideal"}, {"grassmann", "ideal"}, {"nok", "body"}};
  if (args.size() > 2) {
    auto it = actions.find(args[1]);
    if (it != actions.end() && args[2] == it->second) args.erase(args.begin() + 2);
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  drop_action_word(args);

  CLI::App app{"Tropical geometry, Newton-Okounkov bodies and wall-crossing"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;
  auto ideal_opts = [&](CLI::App* c) {
    c->add_option("-i,--input", o.input, "ideal: file path or inline text");
    c->add_option("--ring", o.ring, "comma-separated variable names");
    c->add_flag("--laurent", o.laurent, "work in the Laurent polynomial ring");
  };
  auto common = [&](CLI::App* c) {
    c->add_option("-o,--output", o.output, "output file (default stdout)");
    c->add_option("--threads", o.threads, "worker threads (accepted; computations are single-threaded)");
    c->add_flag("--no-cache", o.no_cache, "ignore TROPWALL_CACHE");
  };

  std::map<std::string, CLI::App*> sub;
  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    common(c);
    sub[name] = c;
    return c;
  };
  ideal_opts(add("parse", "parse an ideal and print it canonically"));
  {
    auto* c = add("gb", "reduced Groebner basis");
    ideal_opts(c);
    c->add_option("--order", o.order, "lex | revlex | grlex | grevlex | w:[a,b,...]+grevlex");
  }
  {
    auto* c = add("initial", "initial ideal in_w(I)");
    ideal_opts(c);
    c->add_option("-w,--weight", o.weight, "weight vector, e.g. 0,1,1,0");
  }
  for (const char* name : {"gfan", "trop"}) {
    auto* c = add(name, std::string(name) == "gfan" ? "Groebner fan" : "tropical variety ('trop compute')");
    ideal_opts(c);
    c->add_option("--budget", o.budget, "maximal number of cones to explore");
    c->add_option("--plot", o.plot, "write plot coordinates modulo lineality");
  }
  add("toric", "toric ideal of A ('toric ideal')")->add_option("-A", o.matrix, "integer matrix JSON: file or text");
  {
    auto* c = add("ehrhart", "Ehrhart polynomial of conv(A) and Hilbert comparison");
    c->add_option("-A", o.matrix, "integer matrix JSON: file or text");
    c->add_option("--bound", o.bound, "compare Hilbert and Ehrhart up to this degree (0 to skip)");
  }
  {
    auto* c = add("grassmann", "Pluecker ideal ('grassmann ideal'); variables p12.., n <= 9");
    c->add_option("-k", o.k, "subspace dimension");
    c->add_option("-n", o.n, "ambient dimension");
  }
  {
    auto* c = add("nok", "Newton-Okounkov cone and body of a weight matrix ('nok body')");
    ideal_opts(c);
    c->add_option("-M", o.matrix, "weight matrix JSON: file or text");
    c->add_option("--bound", o.bound, "degree bound for the value semigroup");
    c->add_option("--plot", o.plot, "write plot coordinates of cone and body");
  }
  {
    auto* c = add("wallcross", "wall-crossing maps between adjacent prime cones");
    ideal_opts(c);
    c->add_option("--cone1", o.cone1, "cone id (index in the trop output)");
    c->add_option("--cone2", o.cone2, "cone id (index in the trop output)");
    c->add_option("--budget", o.budget, "maximal number of cones to explore");
    c->add_option("--plot", o.plot, "write plot coordinates of the first body");
  }
  {
    auto* c = add("reembed", "re-embedding towards prime cones");
    ideal_opts(c);
    c->add_option("--cone", o.cone, "non-prime cone id");
    c->add_option("--adjacent", o.adjacent, "prime cone id adjacent to --cone");
    c->add_option("--depth", o.depth, "maximal number of extensions");
    c->add_option("--budget", o.budget, "maximal number of cones to explore");
  }
  {
    auto* c = app.add_subcommand("verify", "run the golden checks and print a scorecard");
    c->add_option("--suite", o.suite, "suite name (golden)");
    c->add_flag("--long", o.long_run, "include the long-running Gr(3,6) check");
    c->add_option("--threads", o.threads, "worker threads (accepted; computations are single-threaded)");
    sub["verify"] = c;
  }

  std::vector<const char*> cargs;
  for (const auto& a : args) cargs.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::string cmd;
  for (const auto& [name, c] : sub)
    if (c->parsed()) cmd = name;

  try {
    if (cmd == "verify") return cmd_verify(o);
    static const std::map<std::string, std::string (*)(const Options&)> table{
        {"parse", cmd_parse},         {"gb", cmd_gb},         {"initial", cmd_initial},
        {"gfan", cmd_gfan},           {"trop", cmd_trop},     {"toric", cmd_toric},
        {"ehrhart", cmd_ehrhart},     {"grassmann", cmd_grassmann}, {"nok", cmd_nok},
        {"wallcross", cmd_wallcross}, {"reembed", cmd_reembed}};

    const char* cache_dir = std::getenv("TROPWALL_CACHE");
    fs::path cached;
    if (cache_dir && *cache_dir && !o.no_cache && o.plot.empty()) {
      cached = fs::path(cache_dir) / (cmd + "-" + cache_key(request_text(cmd, o)) + ".out");
      std::error_code ec;
      if (fs::is_regular_file(cached, ec)) {
        std::string text = slurp(cached.string());
        text.pop_back();
        emit(o, text);
        return 0;
      }
    }
    std::string text = table.at(cmd)(o);
    if (!cached.empty()) {
      fs::create_directories(cached.parent_path());
      std::ofstream(cached) << text << "\n";
    }
    emit(o, text);
    return 0;
  } catch (const BudgetExhausted& b) {
    if (!b.partial.empty()) emit(o, b.partial);
    std::cerr << "error: budget exhausted; raise --budget" << std::endl;
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << std::endl;
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << std::endl;
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
}
