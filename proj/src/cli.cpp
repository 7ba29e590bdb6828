#include "xop/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "xop/asymptotics.hpp"
#include "xop/errors.hpp"
#include "xop/family.hpp"

namespace xop::cli {

namespace {

std::string num(double x) { return fmt::format("{:.17g}", x); }

struct Options {
  std::string family;
  double alpha = std::numeric_limits<double>::quiet_NaN();
  std::optional<double> beta;
  int m = 0;
  std::string n;
  std::string j;
  std::string z;
  std::optional<double> zmax;
  int points = 600;
  int index = 1;
  int nmax = -1;
  std::optional<int> quad_order;
  std::string output;
};

Family make_family(const Options& o) {
  if (!std::isfinite(o.alpha)) throw InvalidParameter("--alpha must be finite");
  const bool jac = o.family == "jacobi" || o.family == "classical-jacobi";
  if (jac && !o.beta) throw InvalidParameter("--beta is required for family " + o.family);
  if (!jac && o.beta) throw InvalidParameter("--beta applies to Jacobi families only");
  if (o.beta && !std::isfinite(*o.beta)) throw InvalidParameter("--beta must be finite");
  if (o.m < 0) throw InvalidParameter("--m must be nonnegative");
  const bool classical = o.family.rfind("classical-", 0) == 0;
  if (classical && o.m != 0) throw InvalidParameter("classical families have m = 0");

  if (o.family == "lag1" || o.family == "lag2") {
    const LagType t = o.family == "lag1" ? LagType::I : LagType::II;
    (void)LagParams(t, o.alpha, o.m, o.m);
    return LagFamily{t, o.alpha, o.m};
  }
  if (o.family == "jacobi") {
    (void)JacParams(o.alpha, *o.beta, o.m, o.m);
    return JacFamily{o.alpha, *o.beta, o.m};
  }
  if (!(o.alpha > -1.0)) throw InvalidParameter("classical families require alpha > -1");
  if (o.family == "classical-laguerre") return ClassicalLaguerre{o.alpha};
  if (!(*o.beta > -1.0)) throw InvalidParameter("classical families require beta > -1");
  return ClassicalJacobi{o.alpha, *o.beta};
}

std::string canonical_range(const std::vector<int>& r) {
  if (r.size() == 1) return std::to_string(r.front());
  const int step = r[1] - r[0];
  return fmt::format("{}:{}:{}", r.front(), r.back(), step);
}

std::string canonical_reals(const std::vector<double>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + num(v[k]);
  return s;
}

void check_degrees(const Family& f, const std::vector<int>& ns) {
  const int m = codimension(f);
  for (int n : ns)
    if (n < m) throw InvalidParameter(fmt::format("degree n={} is below the codimension m={}", n, m));
}

struct Identity {
  std::string name;
  double residual;
  double contract;
};

double rel(double closed, double computed) {
  return closed == 0.0 ? std::abs(computed) : std::abs(closed - computed) / std::abs(closed);
}

double recurrence_vs_coefficients(const Family& f, int n) {
  const Polynomial p = polynomial(f, n);
  const auto [lo, hi] = interval(f);
  const double top = std::isfinite(hi) ? hi : 4.0 * std::max(n, 1);
  double diff = 0.0;
  double scale = 0.0;
  for (double z : chebyshev_points(2 * n + 3, lo, top)) {
    const double v = value(f, n, z);
    diff = std::max(diff, std::abs(p(z) - v));
    scale = std::max(scale, std::abs(v));
  }
  return scale == 0.0 ? diff : diff / scale;
}

std::vector<Identity> identities(const Family& f, int n) {
  std::vector<Identity> out;
  if (const auto* g = std::get_if<LagFamily>(&f)) {
    const LagParams p(g->type, g->alpha, g->m, n);
    if (g->type == LagType::I) {
      out.push_back({"eigen", xlag1_eigen_residual(p), 1e-8});
      out.push_back({"flag", xlag1_flag_residual(p), 1e-8});
      out.push_back({"representation", xlag1_proof_chain_residual(p), 1e-8});
      out.push_back({"value-at-zero", rel(xlag1_at_zero(p), xlag_value(p, 0.0)), 1e-10});
    } else {
      const ShapeResiduals s = xlag2_shape_residuals(p);
      out.push_back({"eigen", xlag2_eigen_residual(p), 1e-8});
      out.push_back({"lowering", xlag2_lowering_residual(p), 1e-8});
      out.push_back({"shape-lower", s.lower, 1e-8});
      out.push_back({"shape-raise", s.raise, 1e-8});
      out.push_back({"dual-representation", xlag2_dual_residual(p), 1e-8});
      out.push_back({"pearson", xlag2_pearson_residual(p), 1e-6});
      out.push_back({"value-at-zero", rel(xlag2_at_zero(p), xlag_value(p, 0.0)), 1e-10});
      out.push_back({"leading-coefficient", rel(xlag2_leading(p), xlag(p).leading()), 1e-10});
    }
  } else if (const auto* g = std::get_if<JacFamily>(&f)) {
    const JacParams p(g->alpha, g->beta, g->m, n);
    const JacShapeResiduals s = xjac_shape_residuals(p);
    out.push_back({"eigen", xjac_eigen_residual(p), 1e-8});
    out.push_back({"b-identity", xjac_b_identity_residual(p), 1e-8});
    out.push_back({"shape-lower", s.lower, 1e-8});
    out.push_back({"shape-raise", s.raise, 1e-8});
    out.push_back({"symmetric-representation", xjac_symmetric_residual(p), 1e-8});
    out.push_back({"flag", xjac_flag_residual(p), 1e-8});
    out.push_back({"value-at-plus-one", rel(xjac_at_plus_one(p), xjac_value(p.alpha, p.beta, p.m, p.j(), 1.0)), 1e-10});
    out.push_back(
        {"value-at-minus-one", rel(xjac_at_minus_one(p), xjac_value(p.alpha, p.beta, p.m, p.j(), -1.0)), 1e-10});
  }
  out.push_back({"recurrence-vs-coefficients", recurrence_vs_coefficients(f, n), 1e-8});
  return out;
}

void emit_track(std::ostream& os, const char* index_name, const char* error_name, const ConvergenceTrack& t) {
  os << index_name << ',' << error_name << '\n';
  for (const auto& p : t.points) os << p.index << ',' << num(p.error) << '\n';
}

struct Command {
  CLI::App* app = nullptr;
  std::function<std::string(const Options&, std::ostream&, std::ostream&, bool&)> body;
};

}  // namespace

std::vector<int> parse_range(const std::string& spec) {
  std::vector<long> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = spec.find(':', start);
    const std::string tok = spec.substr(start, colon == std::string::npos ? std::string::npos : colon - start);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      throw InvalidParameter("malformed range '" + spec + "'");
    }
    if (used != tok.size() || tok.empty()) throw InvalidParameter("malformed range '" + spec + "'");
    parts.push_back(v);
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (parts.size() > 3) throw InvalidParameter("range '" + spec + "' has more than three fields");
  const long lo = parts[0];
  const long hi = parts.size() >= 2 ? parts[1] : lo;
  const long step = parts.size() == 3 ? parts[2] : 1;
  if (step <= 0) throw InvalidParameter("range step must be positive in '" + spec + "'");
  if (hi < lo) throw InvalidParameter("range '" + spec + "' is empty");
  if (lo < 0 || hi > 100000) throw InvalidParameter("range '" + spec + "' is outside [0, 100000]");
  std::vector<int> out;
  for (long v = lo; v <= hi; v += step) out.push_back(static_cast<int>(v));
  return out;
}

std::vector<double> parse_reals(const std::string& spec) {
  std::vector<double> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw InvalidParameter("malformed real '" + tok + "'");
    }
    if (used != tok.size() || !std::isfinite(v)) throw InvalidParameter("malformed real '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidParameter("empty list of reals");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exceptional Laguerre and Jacobi polynomial toolkit", "xop-kit"};
  app.require_subcommand(1);

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--family", o.family, "lag1, lag2, jacobi, classical-laguerre or classical-jacobi")
        ->required()
        ->check(CLI::IsMember({"lag1", "lag2", "jacobi", "classical-laguerre", "classical-jacobi"}));
    sub->add_option("--alpha", o.alpha, "parameter alpha")->required();
    sub->add_option("--beta", o.beta, "parameter beta (Jacobi families)");
    sub->add_option("--m", o.m, "codimension");
    sub->add_option("-o,--output", o.output, "write CSV to this path instead of stdout");
  };

  std::map<std::string, Command> commands;
  auto add = [&](const std::string& name, const std::string& help) -> CLI::App* {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    commands[name].app = sub;
    return sub;
  };

  add("eval", "evaluate X_n at points")->add_option("--n", o.n, "degree or range")->required();
  commands["eval"].app->add_option("--z", o.z, "comma-separated evaluation points")->required();
  commands["eval"].body = [](const Options& op, std::ostream& os, std::ostream&, bool&) {
    const Family f = make_family(op);
    const auto ns = parse_range(op.n);
    const auto zs = parse_reals(op.z);
    check_degrees(f, ns);
    os << "n,z,value\n";
    for (int n : ns)
      for (double z : zs) os << n << ',' << num(z) << ',' << num(value(f, n, z)) << '\n';
    return fmt::format("--n {} --z {}", canonical_range(ns), canonical_reals(zs));
  };

  add("coeffs", "monomial coefficients of X_n")->add_option("--n", o.n, "degree or range")->required();
  commands["coeffs"].body = [](const Options& op, std::ostream& os, std::ostream&, bool&) {
    const Family f = make_family(op);
    const auto ns = parse_range(op.n);
    check_degrees(f, ns);
    os << "n,k,coefficient\n";
    for (int n : ns) {
      const Polynomial p = polynomial(f, n);
      for (int k = 0; k <= p.degree(); ++k) os << n << ',' << k << ',' << num(p[static_cast<std::size_t>(k)]) << '\n';
    }
    return fmt::format("--n {}", canonical_range(ns));
  };

  add("zeros", "classified zeros of X_n")->add_option("--n", o.n, "degree or range")->required();
  commands["zeros"].body = [](const Options& op, std::ostream& os, std::ostream&, bool&) {
    const Family f = make_family(op);
    const auto ns = parse_range(op.n);
    check_degrees(f, ns);
    os << "n,index,re,im,class\n";
    for (int n : ns) {
      const ZeroSet z = family_zeros(f, n);
      int idx = 0;
      for (double x : z.regular) os << n << ',' << ++idx << ',' << num(x) << ",0,regular\n";
      for (double x : z.exceptional_real) os << n << ',' << ++idx << ',' << num(x) << ",0,exceptional\n";
      for (const auto& c : z.exceptional_complex) {
        os << n << ',' << ++idx << ',' << num(c.real()) << ',' << num(c.imag()) << ",exceptional\n";
        os << n << ',' << ++idx << ',' << num(c.real()) << ',' << num(-c.imag()) << ",exceptional\n";
      }
    }
    return fmt::format("--n {}", canonical_range(ns));
  };

  add("interlace", "interlacing checks for X_n")->add_option("--n", o.n, "degree or range")->required();
  commands["interlace"].body = [](const Options& op, std::ostream& os, std::ostream&, bool&) {
    const Family f = make_family(op);
    const auto ns = parse_range(op.n);
    check_degrees(f, ns);
    os << "n,check,interlaces,violations\n";
    auto row = [&os](int n, const char* check, const InterlacingReport& r) {
      os << n << ',' << check << ',' << (r.interlaces ? "true" : "false") << ',' << r.violations.size() << '\n';
    };
    for (int n : ns) {
      row(n, "consecutive", consecutive_interlacing(f, n));
      if (const auto* g = std::get_if<LagFamily>(&f); g && g->type == LagType::I) {
        const TypeOnePattern p = type_one_pattern(g->alpha, g->m, n - g->m);
        row(n, "type-one-regular", p.regular);
        row(n, "type-one-exceptional", p.exceptional);
      }
    }
    return fmt::format("--n {}", canonical_range(ns));
  };

  add("verify", "identity residuals for X_n")->add_option("--n", o.n, "degree or range")->required();
  commands["verify"].body = [](const Options& op, std::ostream& os, std::ostream& es, bool& failed) {
    const Family f = make_family(op);
    const auto ns = parse_range(op.n);
    check_degrees(f, ns);
    os << "n,identity,residual,contract,status\n";
    for (int n : ns) {
      for (const Identity& id : identities(f, n)) {
        const bool ok = id.residual <= id.contract;
        if (!ok) {
          failed = true;
          es << fmt::format("identity {} at n={} exceeds its contract: {:.3g} > {:.3g}\n", id.name, n, id.residual,
                            id.contract);
        }
        os << n << ',' << id.name << ',' << num(id.residual) << ',' << num(id.contract) << ','
           << (ok ? "pass" : "fail") << '\n';
      }
    }
    return fmt::format("--n {}", canonical_range(ns));
  };

  CLI::App* hm = add("heine-mehler", "Heine-Mehler sup-error track");
  hm->add_option("--n", o.n, "degree range")->required();
  hm->add_option("--zmax", o.zmax, "right end of the z grid");
  hm->add_option("--points", o.points, "number of grid points")->check(CLI::Range(2, 1000000));
  commands["heine-mehler"].body = [](const Options& op, std::ostream& os, std::ostream&, bool&) {
    const Family f = make_family(op);
    const auto ns = parse_range(op.n);
    const double zmax = op.zmax.value_or(default_zmax(f));
    if (!(zmax > 0.0) || !std::isfinite(zmax)) throw InvalidParameter("--zmax must be positive and finite");
    emit_track(os, "n", "sup_error", heine_mehler_sweep(f, ns, zmax, op.points));
    return fmt::format("--n {} --zmax {} --points {}", canonical_range(ns), num(zmax), op.points);
  };

  CLI::App* tz = add("track-zeros", "scaled hard-edge zero track");
  tz->add_option("--j", o.j, "j range")->required();
  tz->add_option("--i", o.index, "zero index, counted from the hard edge")->check(CLI::PositiveNumber);
  commands["track-zeros"].body = [](const Options& op, std::ostream& os, std::ostream&, bool&) {
    const Family f = make_family(op);
    const auto js = parse_range(op.j);
    emit_track(os, "j", "error", scaled_zero_track(f, op.index, js));
    return fmt::format("--j {} --i {}", canonical_range(js), op.index);
  };

  add("track-exceptional", "exceptional-zero Hausdorff track")->add_option("--j", o.j, "j range")->required();
  commands["track-exceptional"].body = [](const Options& op, std::ostream& os, std::ostream&, bool&) {
    const Family f = make_family(op);
    const auto js = parse_range(op.j);
    emit_track(os, "j", "hausdorff_distance", exceptional_zero_track(f, js));
    return fmt::format("--j {}", canonical_range(js));
  };

  CLI::App* gm = add("gram", "Gram matrix against the orthogonality weight");
  gm->add_option("--nmax", o.nmax, "largest degree")->required();
  gm->add_option("--quad-order", o.quad_order, "Gauss rule order");
  commands["gram"].body = [](const Options& op, std::ostream& os, std::ostream&, bool&) {
    const Family f = make_family(op);
    const int m = codimension(f);
    const int q = op.quad_order.value_or(std::max(120, 2 * (op.nmax + m) + 20));
    const GramReport g = gram_matrix(f, op.nmax, q);
    os << "i,j,value\n";
    for (int a = 0; a < g.size; ++a)
      for (int b = 0; b < g.size; ++b) os << g.degrees[a] << ',' << g.degrees[b] << ',' << num(g.entries[a][b]) << '\n';
    return fmt::format("--nmax {} --quad-order {}", op.nmax, q);
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << msg << '\n';
    return kExitInvalid;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const Command& cmd = commands.at(chosen->get_name());
  try {
    std::ostringstream body;
    bool failed = false;
    const std::string flags = cmd.body(o, body, err, failed);
    std::string family_flags = fmt::format("--family {} --alpha {}", o.family, num(o.alpha));
    if (o.beta) family_flags += " --beta " + num(*o.beta);
    family_flags += fmt::format(" --m {}", o.m);
    const std::string text = fmt::format("# xop-kit {} {} {}\n", chosen->get_name(), family_flags, flags) + body.str();
    if (o.output.empty()) {
      out << text;
      out.flush();
    } else {
      std::ofstream file(o.output, std::ios::binary);
      if (!file) throw InvalidParameter("cannot open output path " + o.output);
      file << text;
      if (!file) throw NumericalFailure("write to " + o.output + " failed");
    }
    if (failed) return kExitNumerical;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace xop::cli
