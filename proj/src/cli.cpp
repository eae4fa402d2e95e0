#include "llv/cli.hpp"

#include "llv/json_io.hpp"
#include "llv/llvcalc.hpp"
#include "llv/qchar.hpp"
#include "llv/repcalc.hpp"
#include "llv/rootsystem.hpp"
#include "llv/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace llv::cli {

namespace {

enum class Format { Text, Json };

struct RunConfig {
  std::string command;
  std::string input_path;
  std::int64_t b2 = 0;
  std::int64_t n = 0;
  std::string mu;
  std::int64_t n_max = 0;
  std::int64_t order = 0;
  std::optional<std::int64_t> odd_k;
  std::int64_t b2_min = 3, b2_max = 9;
  std::string sum_max = "4";
  Format format = Format::Text;
  std::uint64_t orbit_ceiling = kDefaultOrbitCeiling;
  bool dump_f = false;
};

std::uint64_t ceiling_from_env() {
  const char* raw = std::getenv(kCeilingEnv);
  if (raw == nullptr || *raw == '\0') return kDefaultOrbitCeiling;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(raw, &used);
    if (used == std::string(raw).size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw InvalidInput(std::string(kCeilingEnv) + " must be a positive integer, got '" + raw + "'");
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw InvalidInput("cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

Decomposition load_decomposition(const RunConfig& cfg, std::istream& in) {
  const std::string source = cfg.input_path == "-" ? "stdin" : cfg.input_path;
  return decomposition_from_json(parse_json_text(read_input(cfg.input_path, in), source));
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].get_str();
  return s;
}

bool is_leading(const Weight& mu) {
  const auto& c = mu.coords2();
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] != 0) return false;
  }
  return c[0] % 2 == 0;
}

// Orbit route when it fits under the ceiling, harmonic route for (m) otherwise.
GradedProfile profile_for(const RootSystem& rs, const Weight& mu, std::uint64_t ceiling,
                          std::string& route) {
  BigInt projected = 0;
  for (const auto& lambda : dominant_weights_below(rs, mu)) projected += orbit_size(rs, lambda);
  if (projected <= BigInt(static_cast<unsigned long>(ceiling))) {
    route = "orbit";
    return graded_profile(rs, freudenthal(rs, mu), ceiling);
  }
  if (is_leading(mu)) {
    route = "harmonic";
    return verbitsky_profile(mu.twice(0) / 2, rs.b2());
  }
  throw CeilingExceeded("profile of V" + to_string(mu) + " needs " + projected.get_str() +
                        " orbit weights, above the ceiling " + std::to_string(ceiling));
}

int cmd_dims(const RunConfig& cfg, std::ostream& out) {
  const RootSystem rs = build_root_system(cfg.b2);
  const Weight mu = weight_from_list(cfg.mu, rs.rank());
  const BigInt dim = weyl_dimension(rs, mu);
  const WeightSystem ws = freudenthal(rs, mu);
  std::optional<LaurentPoly> f;
  if (cfg.dump_f) f = principal_character(rs, mu);
  if (cfg.format == Format::Json) {
    Json j = {{"b2", cfg.b2},
              {"mu", weight_to_json(mu)},
              {"parity", to_string(mu.parity())},
              {"dim", bigint_to_json(dim)},
              {"weights", weight_system_to_json(ws)}};
    if (f) j["f"] = laurent_to_json(*f);
    emit(out, j);
    return kPass;
  }
  out << "so(" << cfg.b2 + 2 << ") type " << to_string(rs.series()) << rs.rank() << ", V"
      << to_string(mu) << " (" << to_string(mu.parity()) << ")\n";
  out << "dim = " << dim << '\n';
  out << "dominant weights:\n";
  for (auto it = ws.entries.rbegin(); it != ws.entries.rend(); ++it) {
    out << "  " << to_string(it->first) << "  mult " << it->second << "  orbit "
        << orbit_size(rs, it->first) << '\n';
  }
  if (f) out << "f(q) = " << laurent_to_json(*f).dump() << '\n';
  return kPass;
}

int cmd_profile(const RunConfig& cfg, std::ostream& out) {
  const RootSystem rs = build_root_system(cfg.b2);
  const Weight mu = weight_from_list(cfg.mu, rs.rank());
  require_dominant(rs, mu);
  std::string route;
  const GradedProfile p = profile_for(rs, mu, cfg.orbit_ceiling, route);
  if (cfg.format == Format::Json) {
    emit(out, {{"b2", cfg.b2},
               {"mu", weight_to_json(mu)},
               {"route", route},
               {"profile", profile_to_json(p)},
               {"total", bigint_to_json(p.total())}});
    return kPass;
  }
  out << "h-graded profile of V" << to_string(mu) << " over so(" << cfg.b2 + 2 << ") [" << route
      << "]\n";
  for (const auto& [k, d] : p.dims()) out << "  k = " << std::setw(4) << k << "  dim " << d << '\n';
  out << "total " << p.total() << '\n';
  return kPass;
}

int cmd_s(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const RootSystem rs = build_root_system(cfg.b2);
  const Weight mu = weight_from_list(cfg.mu, rs.rank());
  const Rational closed = s_closed(mu, cfg.b2);
  std::optional<Rational> via_q, via_profile;
  std::optional<SSeries> series;
  std::optional<LaurentPoly> f;
  try {
    f = principal_character(rs, mu);
    via_q = s_via_qchar(mu, cfg.b2);
  } catch (const CeilingExceeded& e) {
    err << "note: q-character route skipped: " << e.what() << '\n';
  }
  try {
    std::string route;
    const GradedProfile p = profile_for(rs, mu, cfg.orbit_ceiling, route);
    via_profile = s_of_profile(p);
    if (cfg.order > 0) series = s_series(p, cfg.order);
  } catch (const CeilingExceeded& e) {
    err << "note: profile route skipped: " << e.what() << '\n';
  }
  const bool agree = (!via_q || *via_q == closed) && (!via_profile || *via_profile == closed);

  if (cfg.format == Format::Json) {
    Json j = {{"b2", cfg.b2}, {"mu", weight_to_json(mu)}, {"s_closed", rational_to_json(closed)}};
    j["s_qchar"] = via_q ? rational_to_json(*via_q) : Json(nullptr);
    j["s_profile"] = via_profile ? rational_to_json(*via_profile) : Json(nullptr);
    if (series) {
      Json coeffs = Json::object();
      for (std::size_t i = 0; i < series->even.size(); ++i) {
        coeffs[std::to_string(2 * i)] = rational_to_json(series->even[i]);
      }
      j["series"] = coeffs;
    }
    if (cfg.dump_f && f) j["f"] = laurent_to_json(*f);
    j["agree"] = agree;
    emit(out, j);
  } else {
    out << "s(V" << to_string(mu) << ") over so(" << cfg.b2 + 2 << ")\n";
    out << "  closed form    " << to_string(closed) << '\n';
    out << "  q-character    " << (via_q ? to_string(*via_q) : "skipped") << '\n';
    out << "  graded profile " << (via_profile ? to_string(*via_profile) : "skipped") << '\n';
    if (series) {
      out << "  S(W) =";
      for (std::size_t i = 0; i < series->even.size(); ++i) {
        out << (i ? " + " : " ") << to_string(series->even[i]) << " t^" << 2 * i;
      }
      out << '\n';
    }
    if (cfg.dump_f && f) out << "  f(q) = " << laurent_to_json(*f).dump() << '\n';
    out << (agree ? "AGREE" : "MISMATCH") << '\n';
  }
  return agree ? kPass : kFail;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  VerifyGrid grid;
  grid.b2_min = cfg.b2_min;
  grid.b2_max = cfg.b2_max;
  grid.sum_max = parse_rational(cfg.sum_max);
  grid.orbit_ceiling = cfg.orbit_ceiling;
  const VerifyReport report = verify_grid(grid);
  if (report.entries.empty()) err << "warning: empty verification grid, nothing checked\n";
  for (const auto& e : report.entries) {
    if (e.skipped) err << "notice: skipped b2=" << e.b2 << " V" << to_string(e.mu) << ": " << e.notice << '\n';
  }

  if (cfg.format == Format::Json) {
    Json rows = Json::array();
    for (const auto& e : report.entries) {
      Json row = {{"b2", e.b2}, {"mu", weight_to_json(e.mu)}, {"skipped", e.skipped}};
      if (!e.skipped) {
        row["s_profile"] = rational_to_json(e.s_profile);
        row["s_qchar"] = rational_to_json(e.s_qchar);
        row["s_closed"] = rational_to_json(e.s_closed);
        row["dim"] = bigint_to_json(e.dim_weyl);
        row["agree"] = e.agree();
      }
      rows.push_back(row);
    }
    emit(out, {{"checked", report.checked()},
               {"skipped", report.skipped()},
               {"mismatches", report.mismatches()},
               {"pass", report.pass()},
               {"entries", rows}});
  } else {
    for (const auto& e : report.entries) {
      if (e.skipped) continue;
      out << (e.agree() ? "ok   " : "FAIL ") << "b2=" << e.b2 << " V" << to_string(e.mu)
          << "  dim " << e.dim_weyl << "  s = " << to_string(e.s_closed);
      if (!e.agree()) {
        out << " (profile " << to_string(e.s_profile) << ", q-char " << to_string(e.s_qchar)
            << ", dims " << e.dim_freudenthal << "/" << e.dim_f1 << ")";
      }
      out << '\n';
    }
    out << report.checked() << " checked, " << report.skipped() << " skipped, "
        << report.mismatches() << " mismatches\n";
  }
  return report.pass() ? kPass : kFail;
}

int cmd_salamon(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const Decomposition d = load_decomposition(cfg, in);
  const SalamonVerdict v = salamon_check(d);
  std::optional<std::vector<BigInt>> betti;
  try {
    betti = betti_numbers(d, cfg.orbit_ceiling);
  } catch (const CeilingExceeded& e) {
    err << "note: Betti numbers skipped: " << e.what() << '\n';
  }
  for (const auto& w : v.warnings) err << "warning: " << w << '\n';

  if (cfg.format == Format::Json) {
    Json j = {{"decomposition", decomposition_to_json(d)},
              {"s_form_applicable", v.s_form_applicable},
              {"lhs", rational_to_json(v.lhs)},
              {"rhs", rational_to_json(v.rhs)},
              {"pass", v.pass},
              {"mixed_parity", v.mixed_parity},
              {"warnings", v.warnings}};
    if (betti) {
      Json b = Json::array();
      for (const auto& x : *betti) b.push_back(bigint_to_json(x));
      j["betti"] = b;
    }
    emit(out, j);
  } else {
    if (v.s_form_applicable) {
      out << (v.pass ? "PASS s = " : "FAIL s = ") << to_string(v.lhs)
          << (v.pass ? " = n/3" : " != n/3 = " + to_string(v.rhs)) << '\n';
    } else {
      out << (v.pass ? "PASS" : "FAIL") << " e(X) = 0; sum (-1)^k k^2 b_{2n+k} = "
          << to_string(v.lhs) << (v.pass ? " = " : " != ") << "(n/3) e(X) = " << to_string(v.rhs)
          << '\n';
    }
    if (betti) out << "betti: " << join(*betti) << '\n';
  }
  return v.pass ? kPass : kFail;
}

int cmd_conjecture(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Decomposition d = load_decomposition(cfg, in);
  const ConjectureVerdict v = conjecture_check(d);
  if (cfg.format == Format::Json) {
    Json terms = Json::array();
    for (const auto& t : v.terms) {
      terms.push_back({{"mu", weight_to_json(t.mu)}, {"sum", rational_to_json(t.sum)}, {"pass", t.pass}});
    }
    emit(out, {{"decomposition", decomposition_to_json(d)}, {"terms", terms}, {"pass", v.pass}});
  } else {
    for (const auto& t : v.terms) {
      out << (t.pass ? "ok   " : "FAIL ") << "V" << to_string(t.mu) << "  sum " << to_string(t.sum)
          << (t.pass ? " <= " : " > ") << "n = " << d.n << '\n';
    }
    out << (v.pass ? "PASS" : "FAIL") << '\n';
  }
  return v.pass ? kPass : kFail;
}

int cmd_bound(const RunConfig& cfg, std::ostream& out) {
  const std::int64_t b = b2_bound(cfg.n, cfg.odd_k);
  if (cfg.format == Format::Json) {
    Json j = {{"n", cfg.n}, {"b2_max", b}};
    j["odd_k"] = cfg.odd_k ? Json(*cfg.odd_k) : Json(nullptr);
    emit(out, j);
  } else {
    out << "b2 <= " << b << '\n';
  }
  return kPass;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  const auto rows = bound_table(cfg.n_max);
  if (cfg.format == Format::Json) {
    Json j = Json::array();
    for (const auto& r : rows) {
      j.push_back({{"n", r.n}, {"even_bound", r.even_bound}, {"odd_bound", r.odd_bound},
                   {"b2_max", r.unconditional}});
    }
    emit(out, j);
    return kPass;
  }
  out << std::setw(4) << "n" << std::setw(8) << "even" << std::setw(8) << "4n-1" << std::setw(9)
      << "b2 <=" << '\n';
  for (const auto& r : rows) {
    out << std::setw(4) << r.n << std::setw(8) << r.even_bound << std::setw(8) << r.odd_bound
        << std::setw(9) << r.unconditional << '\n';
  }
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact LLV representation calculator for so(b2+2)", "llv"};
  app.require_subcommand(1);
  std::string format = "text";
  std::optional<std::uint64_t> ceiling_flag;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--orbit-ceiling", ceiling_flag, "Largest orbit enumeration allowed");
  };
  auto weight_opts = [&](CLI::App* sub) {
    sub->add_option("--b2", cfg.b2, "Second Betti number")->required();
    sub->add_option("--mu", cfg.mu, "Highest weight, e.g. 1,0,0 or 1/2,1/2")->required();
  };

  auto* dims = app.add_subcommand("dims", "Weyl dimension and dominant weight multiplicities");
  weight_opts(dims);
  dims->add_flag("--dump-f", cfg.dump_f, "Print the principal character f(q)");
  common(dims);

  auto* profile = app.add_subcommand("profile", "h-graded dimension profile of V_mu");
  weight_opts(profile);
  common(profile);

  auto* s = app.add_subcommand("s", "s(V_mu) by closed form, q-character and graded profile");
  weight_opts(s);
  s->add_option("--order", cfg.order, "Also print S(W) up to this even order");
  s->add_flag("--dump-f", cfg.dump_f, "Print the principal character f(q)");
  common(s);

  auto* verify = app.add_subcommand("verify", "Triple agreement of s(V_mu) over a grid");
  verify->add_option("--b2-min", cfg.b2_min, "Smallest b2 in the grid");
  verify->add_option("--b2-max", cfg.b2_max, "Largest b2 in the grid");
  verify->add_option("--sum-max", cfg.sum_max, "Largest mu_0+...+|mu_r| in the grid");
  common(verify);

  auto* salamon = app.add_subcommand("salamon", "Check s(H*) = n/3 for a decomposition file");
  salamon->add_option("input", cfg.input_path, "Decomposition JSON file, - for stdin")->required();
  common(salamon);

  auto* conjecture = app.add_subcommand("conjecture", "Check mu_0+...+|mu_r| <= n for every term");
  conjecture->add_option("input", cfg.input_path, "Decomposition JSON file, - for stdin")->required();
  common(conjecture);

  auto* bound = app.add_subcommand("bound", "Upper bound on b2 in dimension 2n");
  bound->add_option("--n", cfg.n, "Half the real dimension")->required();
  bound->add_option("--odd-k", cfg.odd_k, "Odd degree with nonzero cohomology");
  common(bound);

  auto* table = app.add_subcommand("table", "Bound table for n = 1..n_max");
  table->add_option("--n-max", cfg.n_max, "Largest n")->required();
  common(table);

  std::vector<const char*> argv{"llv"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    cfg.format = format == "json" ? Format::Json : Format::Text;
    cfg.orbit_ceiling = ceiling_flag ? *ceiling_flag : ceiling_from_env();
    if (cfg.orbit_ceiling == 0) throw InvalidInput("--orbit-ceiling must be positive");
    if (*dims) return cmd_dims(cfg, out);
    if (*profile) return cmd_profile(cfg, out);
    if (*s) return cmd_s(cfg, out, err);
    if (*verify) return cmd_verify(cfg, out, err);
    if (*salamon) return cmd_salamon(cfg, in, out, err);
    if (*conjecture) return cmd_conjecture(cfg, in, out);
    if (*bound) return cmd_bound(cfg, out);
    if (*table) return cmd_table(cfg, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace llv::cli
