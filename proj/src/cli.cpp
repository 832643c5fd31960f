#include "quatlat/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "quatlat/brandt.hpp"
#include "quatlat/fixtures.hpp"
#include "quatlat/io.hpp"

namespace quatlat {

namespace {

using nlohmann::json;

struct Options {
  std::string input;
  std::string range = "1..5";
  long prec = 15;
  std::size_t i = 0, j = 0;
  std::string format = "json";
  std::uint64_t budget = 0;
};

JobConfig load(const Options& opt) {
  if (opt.input.empty()) throw ConfigError("--input is required");
  std::ifstream in(opt.input);
  if (!in) throw ConfigError("cannot read " + opt.input);
  std::stringstream ss;
  ss << in.rdbuf();
  JobConfig cfg = parse_config_text(ss.str());
  if (!cfg.order) throw ConfigError("missing field \"order\"");
  if (opt.budget > 0) cfg.budget.max_nodes = cfg.budget.max_functionals = opt.budget;
  return cfg;
}

std::pair<long, long> parse_range(const std::string& s) {
  std::size_t dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      long n = std::stol(s);
      return {n, n};
    }
    return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ConfigError("--n expects N or A..B, got \"" + s + "\"");
  }
}

std::string lattice_text(const Lattice& l) {
  std::string s = "(1/" + l.den().get_str() + ")";
  for (std::size_t r = 0; r < l.dim(); ++r) {
    s += r == 0 ? " [" : " ";
    s += "[";
    for (std::size_t c = 0; c < l.dim(); ++c) s += (c ? " " : "") + l.hnf()(r, c).get_str();
    s += "]";
  }
  return s + "]";
}

// 1/2 + q + 0q^2 + 2q^4 ...
std::string theta_text(const std::vector<Rational>& c) {
  std::string s = c.empty() ? "" : c[0].get_str();
  for (std::size_t n = 1; n < c.size(); ++n) {
    std::string coef = c[n] == 1 ? "" : c[n].get_str();
    s += " + " + coef + "q" + (n > 1 ? "^" + std::to_string(n) : "");
  }
  return s;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int weak_classes(const Options& opt, std::ostream& out) {
  JobConfig cfg = load(opt);
  WeakClassSet w = weak_right_equivalence_classes(*cfg.order, cfg.oprime, cfg.budget);
  if (opt.format == "text") {
    out << "weak classes: " << w.representatives.size() << "\n";
    out << "O' = " << lattice_text(w.oprime) << "\n";
    for (std::size_t k = 0; k < w.representatives.size(); ++k)
      out << "J" << k + 1 << " = " << lattice_text(w.representatives[k]) << "\n";
    return kExitOk;
  }
  json reps = json::array();
  for (const Lattice& l : w.representatives) reps.push_back(lattice_to_json(l));
  emit(out, {{"command", "weak-classes"},
             {"count", w.representatives.size()},
             {"oprime", lattice_to_json(w.oprime)},
             {"conductor", lattice_to_json(w.conductor)},
             {"representatives", reps}});
  return kExitOk;
}

int classes(const Options& opt, std::ostream& out) {
  JobConfig cfg = load(opt);
  ClassSet cs = right_equivalence_classes(*cfg.order, cfg.oprime, cfg.budget);
  if (opt.format == "text") {
    out << "classes: " << cs.size() << "\n";
    for (std::size_t k = 0; k < cs.size(); ++k) {
      const ClassEntry& c = cs.classes[k];
      out << "I" << k + 1 << " = " << lattice_text(c.lattice) << "  weak " << c.weak_index + 1 << ", invertible "
          << c.invertible_index + 1 << (c.invertible ? ", invertible lattice" : "") << "\n";
    }
    return kExitOk;
  }
  json list = json::array();
  for (const ClassEntry& c : cs.classes)
    list.push_back({{"lattice", lattice_to_json(c.lattice)},
                    {"invertible", c.invertible},
                    {"weak_index", c.weak_index},
                    {"invertible_index", c.invertible_index}});
  emit(out, {{"command", "classes"}, {"count", cs.size()}, {"classes", list}});
  return kExitOk;
}

int brandt(const Options& opt, std::ostream& out) {
  auto [lo, hi] = parse_range(opt.range);
  if (lo < 0 || hi < lo) throw ConfigError("--n range must satisfy 0 <= A <= B");
  JobConfig cfg = load(opt);
  BrandtSeries bs = brandt_series(right_equivalence_classes(*cfg.order, cfg.oprime, cfg.budget), hi);
  json list = json::array();
  for (long n = lo; n <= hi; ++n) {
    RatMatrix t = brandt_matrix(bs, n);
    if (opt.format == "text") {
      out << "T(" << n << ") =\n";
      std::size_t w = 1;
      for (const Rational& x : t.data()) w = std::max(w, x.get_str().size());
      for (std::size_t r = 0; r < t.rows(); ++r) {
        out << " ";
        for (const Rational& x : t.row(r)) out << " " << std::setw(static_cast<int>(w)) << x.get_str();
        out << "\n";
      }
    } else {
      list.push_back({{"n", n}, {"matrix", matrix_to_json(t)}});
    }
  }
  if (opt.format != "text") emit(out, list);
  return kExitOk;
}

int theta(const Options& opt, std::ostream& out) {
  if (opt.prec < 0) throw ConfigError("--prec must be nonnegative");
  JobConfig cfg = load(opt);
  BrandtSeries bs = brandt_series(right_equivalence_classes(*cfg.order, cfg.oprime, cfg.budget), opt.prec);
  const std::size_t r = bs.size();
  if (opt.i > r || opt.j > r) throw ConfigError("--i and --j must lie in 1.." + std::to_string(r));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (opt.i > 0 && opt.j > 0) {
    pairs.push_back({opt.i - 1, opt.j - 1});
  } else {
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b)
        if ((opt.i == 0 || opt.i - 1 == a) && (opt.j == 0 || opt.j - 1 == b)) pairs.push_back({a, b});
  }
  json list = json::array();
  for (auto [a, b] : pairs) {
    std::vector<Rational> c = theta_series(bs, a, b, opt.prec);
    if (opt.format == "text") {
      out << "Theta_{" << a + 1 << "," << b + 1 << "}(q) = " << theta_text(c) << "\n";
    } else {
      json coeffs = json::array();
      for (const Rational& x : c) coeffs.push_back(x.get_str());
      list.push_back({{"i", a + 1}, {"j", b + 1}, {"coefficients", coeffs}});
    }
  }
  if (opt.format != "text") emit(out, list);
  return kExitOk;
}

int fixtures(const Options& opt, std::ostream& out) {
  std::vector<FixtureResult> results = run_fixtures();
  bool all = true;
  json list = json::array();
  for (const FixtureResult& r : results) {
    all = all && r.passed;
    if (opt.format == "json") {
      list.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
    } else {
      out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(24) << r.name << std::right << std::fixed
          << std::setprecision(3) << r.seconds << "s  " << r.detail << "\n";
    }
  }
  if (opt.format == "json") emit(out, list);
  return all ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattices, ideal classes and Brandt matrices in quaternion and matrix algebras"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "job configuration (JSON)")->required();
    sub->add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--budget", opt.budget, "enumeration budget: max nodes and max functionals");
  };
  CLI::App* weak = app.add_subcommand("weak-classes", "weak right equivalence classes of lattices with right order O");
  add_common(weak);
  CLI::App* cls = app.add_subcommand("classes", "right equivalence classes with right order O");
  add_common(cls);
  CLI::App* br = app.add_subcommand("brandt", "Brandt matrices T(n) over the class set");
  add_common(br);
  br->add_option("--n", opt.range, "N or A..B (default 1..5)");
  CLI::App* th = app.add_subcommand("theta", "theta series of the Brandt matrix entries");
  add_common(th);
  th->add_option("--prec", opt.prec, "last power of q (default 15)");
  th->add_option("--i", opt.i, "row class, 1-based (default all)");
  th->add_option("--j", opt.j, "column class, 1-based (default all)");
  CLI::App* fx = app.add_subcommand("fixtures", "run the built-in reference checks");
  fx->add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  fx->add_option("--input", opt.input, "ignored");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitConfig;
  }
  if (fx->parsed() && fx->count("--format") == 0) opt.format = "text";

  try {
    if (weak->parsed()) return weak_classes(opt, out);
    if (cls->parsed()) return classes(opt, out);
    if (br->parsed()) return brandt(opt, out);
    if (th->parsed()) return theta(opt, out);
    return fixtures(opt, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const ResourceError& e) {
    err << "resource budget exceeded: " << e.what() << "\n";
    return kExitResource;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace quatlat
