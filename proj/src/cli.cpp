#include "cfauto/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "cfauto/backbone.hpp"
#include "cfauto/equation.hpp"
#include "cfauto/error.hpp"
#include "cfauto/json_io.hpp"
#include "cfauto/poly_literal.hpp"
#include "cfauto/reference_examples.hpp"
#include "cfauto/verification.hpp"

namespace cfauto {

namespace {

struct Options {
  std::string prefix;
  std::string period;
  std::vector<std::string> assign;
  std::int64_t precision = 0;
  unsigned deg_x = 0;
  unsigned deg_t = 8;
  unsigned q = 0;
  std::size_t count = 0;
  std::size_t column = 0;
  bool json = false;
};

std::vector<std::string> split_letters(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(std::remove(token.begin(), token.end(), ' '), token.end());
    if (token.empty()) throw Error(ErrorCode::InvalidBackbone, "empty letter in \"" + text + "\"");
    out.push_back(token);
  }
  return out;
}

BackboneSpec spec_from(const Options& o) {
  return BackboneSpec::from_names(split_letters(o.prefix), split_letters(o.period));
}

std::map<std::string, std::string> assignments(const Options& o) {
  std::map<std::string, std::string> out;
  for (const auto& a : o.assign) {
    const auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::ParseError, "assignment \"" + a + "\" is not letter=value");
    }
    out[a.substr(0, eq)] = a.substr(eq + 1);
  }
  return out;
}

std::vector<UniPoly> poly_assignment(const BackboneSpec& spec, const Options& o) {
  const auto raw = assignments(o);
  const Alphabet& alphabet = *spec.alphabet();
  for (const auto& [name, _] : raw) {
    if (!alphabet.find(name)) throw Error(ErrorCode::SymbolUniverseMismatch, "unknown letter '" + name + "'");
  }
  std::vector<UniPoly> images;
  for (const auto& name : alphabet.names()) {
    const auto it = raw.find(name);
    if (it == raw.end()) throw Error(ErrorCode::ConstantLetterAssignment, "letter '" + name + "' is unassigned");
    images.push_back(parse_poly_literal(it->second));
  }
  require_nonconstant_images(images, alphabet);
  return images;
}

std::string join_word(const BackboneSpec& spec, const std::vector<std::size_t>& symbols) {
  const Alphabet& alphabet = *spec.alphabet();
  const bool compact = std::all_of(alphabet.names().begin(), alphabet.names().end(),
                                   [](const std::string& n) { return n.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (!compact && i) out += ',';
    out += alphabet.name(symbols[i]);
  }
  return out;
}

int cmd_derive(const Options& o, std::ostream& out) {
  const BackboneSpec spec = spec_from(o);
  const AlgebraicEquation eq = derive_equation(spec, o.column);
  if (o.json) {
    out << equation_to_json(eq).dump() << '\n';
    return kExitOk;
  }
  out << "backbone " << spec.to_string() << " of type (" << spec.prefix_length() << ","
      << spec.period_length() << ")\n";
  for (unsigned i = 0; i <= spec.period_length(); ++i) {
    out << "z_" << i << " = " << compute_z(spec, i).to_string() << '\n';
  }
  out << "Delta = " << eq.delta.to_string() << '\n';
  out << "A = " << eq.A.to_string() << '\n';
  for (std::size_t k = 0; k < eq.d(); ++k) out << "B_" << k << " = " << eq.B[k].to_string() << '\n';
  out << eq.to_string() << '\n';
  return kExitOk;
}

int cmd_specialize(const Options& o, std::ostream& out) {
  const BackboneSpec spec = spec_from(o);
  const SpecializedEquation eq = specialize_equation(derive_equation(spec), poly_assignment(spec, o));
  if (o.json) {
    out << specialized_to_json(eq, spec).dump() << '\n';
    return kExitOk;
  }
  out << "A = " << eq.A.to_string() << '\n';
  for (std::size_t k = 0; k < eq.d(); ++k) out << "B_" << k << " = " << eq.B[k].to_string() << '\n';
  out << eq.to_string() << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const BackboneSpec spec = spec_from(o);
  const std::int64_t precision = o.precision > 0 ? o.precision : 256;
  const SpecializedEquation eq = specialize_equation(derive_equation(spec), poly_assignment(spec, o));
  const ResidualReport report = residual_valuation(eq, spec, precision);
  if (o.json) {
    ordered_json j;
    j["status"] = report.clean() ? "CLEAN" : "RESIDUAL";
    j["precision"] = report.checked_precision;
    j["valuation"] = report.clean() ? ordered_json(nullptr) : ordered_json(*report.valuation);
    j["denominator"] = report.cleared_denominator;
    out << j.dump() << '\n';
  } else if (report.clean()) {
    out << "CLEAN at precision " << report.checked_precision << '\n';
  } else {
    out << "RESIDUAL valuation " << *report.valuation << " at precision " << report.checked_precision << '\n';
  }
  return report.clean() ? kExitOk : kExitVerificationFailed;
}

int cmd_seq(const Options& o, std::ostream& out) {
  const BackboneSpec spec = spec_from(o);
  const std::size_t count = o.count > 0 ? o.count : 32;
  const auto prefix = s_prefix(spec, count);
  if (o.json) {
    ordered_json j;
    std::vector<std::string> names;
    for (std::size_t s : prefix) names.push_back(spec.alphabet()->name(s));
    j["count"] = count;
    j["letters"] = names;
    out << j.dump() << '\n';
  } else {
    out << join_word(spec, prefix) << '\n';
  }
  return kExitOk;
}

int cmd_kernel(const Options& o, std::ostream& out) {
  const BackboneSpec spec = spec_from(o);
  const std::size_t count = o.count > 0 ? o.count : (std::size_t{1} << 16);
  const TwoDFA dfa = kernel_automaton(spec);
  std::optional<std::size_t> first_mismatch;
  for (std::size_t n = 0; n < count && !first_mismatch; ++n) {
    if (automaton_eval(dfa, n) != s_at(spec, n)) first_mismatch = n;
  }
  const bool within_bound = dfa.state_count() <= spec.prefix_length() + spec.period_length();
  const bool ok = !first_mismatch && within_bound;
  if (o.json) {
    ordered_json j;
    j["states"] = dfa.state_count();
    ordered_json states = ordered_json::array();
    for (std::size_t c = 0; c < dfa.state_count(); ++c) {
      states.push_back({{"next", dfa.next[c]}, {"emit", spec.alphabet()->name(dfa.output[c])}});
    }
    j["transitions"] = std::move(states);
    j["checked"] = count;
    j["match"] = ok;
    out << j.dump() << '\n';
  } else {
    out << dfa.describe();
    if (first_mismatch) {
      out << "MISMATCH at n = " << *first_mismatch << '\n';
    } else {
      out << "automaton agrees with s(eps) for n < " << count << '\n';
    }
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_search(const Options& o, std::ostream& out) {
  const BackboneSpec spec = spec_from(o);
  const Alphabet& alphabet = *spec.alphabet();
  unsigned q = o.q;
  if (q == 0) {
    q = 2;
    while (q < alphabet.size()) q *= 2;
  }
  if (q < 2 || (q & (q - 1)) != 0) throw Error(ErrorCode::UnsupportedFieldSize, "q must be a power of 2");
  const FieldPtr field = gf2s_field(static_cast<unsigned>(std::countr_zero(q)));

  const auto raw = assignments(o);
  for (const auto& [name, _] : raw) {
    if (!alphabet.find(name)) throw Error(ErrorCode::SymbolUniverseMismatch, "unknown letter '" + name + "'");
  }
  std::vector<Elem> values;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    const auto it = raw.find(alphabet.name(i));
    std::uint64_t v = i;
    if (it != raw.end()) {
      std::size_t used = 0;
      try {
        v = std::stoull(it->second, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != it->second.size()) {
        throw Error(ErrorCode::ParseError, "field value \"" + it->second + "\" is not an integer");
      }
    }
    if (v >= field->order()) throw Error(ErrorCode::FieldMismatch, "value " + std::to_string(v) + " outside " + field->name());
    values.push_back(static_cast<Elem>(v));
  }
  std::vector<Elem> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  const unsigned deg_x = o.deg_x > 0 ? o.deg_x : (1u << (spec.period_length() - 1));
  const unsigned deg_t = o.deg_t;
  const std::int64_t needed = 2 * static_cast<std::int64_t>(deg_x + 1) * (deg_t + 1);
  const std::int64_t precision = o.precision > 0 ? o.precision : needed;
  const LaurentSeries gamma = gamma_series(spec, field, values, 2 * precision + deg_t + 1);
  const RelationSearch result = relation_search(gamma, deg_x, deg_t, precision);

  if (o.json) {
    if (result.certificate) {
      out << certificate_to_json(*result.certificate).dump() << '\n';
    } else {
      ordered_json j;
      j["status"] = "NONE";
      j["q"] = q;
      j["max_deg_x"] = deg_x;
      j["max_deg_t"] = deg_t;
      j["precision"] = precision;
      j["injective"] = injective;
      out << j.dump() << '\n';
    }
  } else {
    out << "field GF(" << q << "), letters";
    for (std::size_t i = 0; i < alphabet.size(); ++i) out << ' ' << alphabet.name(i) << '=' << values[i];
    out << (injective ? " (injective)" : " (not injective)") << '\n';
    if (result.certificate) {
      out << "relation of degree " << result.certificate->deg_x() << " in x, " << result.certificate->deg_t()
          << " in t: " << result.certificate->to_string() << " = 0\n";
      out << "verified to precision " << result.certificate->verified_precision << '\n';
    } else {
      out << "NONE within deg_x <= " << deg_x << ", deg_t <= " << deg_t << ", precision " << precision << '\n';
    }
  }
  return result.certificate ? kExitOk : kExitNoRelation;
}

int cmd_examples(std::ostream& out) {
  std::size_t matched = 0;
  const auto& examples = reference_examples();
  for (const auto& ex : examples) {
    const ExampleCheck check = check_reference_example(ex);
    out << (check.ok() ? "match    " : "MISMATCH ") << check.name << '\n';
    for (const auto& m : check.mismatches) out << "  " << m << '\n';
    if (check.ok()) ++matched;
  }
  out << matched << "/" << examples.size() << " examples match\n";
  return matched == examples.size() ? kExitOk : kExitVerificationFailed;
}

void add_backbone(CLI::App* cmd, Options& o) {
  cmd->add_option("--prefix", o.prefix, "comma-separated prefix letters (empty for l = 0)");
  cmd->add_option("--period", o.period, "comma-separated period letters")->required();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Algebraic continued fractions from ultimately periodic backbones", "cfauto"};
  app.require_subcommand(1);
  Options o;

  auto* derive = app.add_subcommand("derive", "derive the algebraic equation for beta symbolically");
  add_backbone(derive, o);
  derive->add_option("--column", o.column, "Laplace column used for det M(d)");
  derive->add_flag("--json", o.json);

  auto* specialize = app.add_subcommand("specialize", "evaluate the equation for polynomial letters");
  add_backbone(specialize, o);
  specialize->add_option("--assign", o.assign, "letter=poly, e.g. a=t^2+1")->required();
  specialize->add_flag("--json", o.json);

  auto* verify = app.add_subcommand("verify", "check the equation against the continued fraction");
  add_backbone(verify, o);
  verify->add_option("--assign", o.assign, "letter=poly")->required();
  verify->add_option("--precision", o.precision, "number of coefficients checked (>= 64)");
  verify->add_flag("--json", o.json);

  auto* seq = app.add_subcommand("seq", "print a prefix of s(eps)");
  add_backbone(seq, o);
  seq->add_option("--count", o.count, "number of letters");
  seq->add_flag("--json", o.json);

  auto* kernel = app.add_subcommand("kernel", "describe the 2-kernel automaton and check it");
  add_backbone(kernel, o);
  kernel->add_option("--count", o.count, "positions checked against s(eps)");
  kernel->add_flag("--json", o.json);

  auto* search = app.add_subcommand("search", "search a polynomial relation for gamma over GF(q)");
  add_backbone(search, o);
  search->add_option("--assign", o.assign, "letter=field element (integer)");
  search->add_option("--q", o.q, "field size 2^s");
  search->add_option("--deg-x", o.deg_x, "maximal degree in x (default 2^(d-1))");
  search->add_option("--deg-t", o.deg_t, "maximal degree in t of each coefficient");
  search->add_option("--precision", o.precision, "coefficients forced to vanish");
  search->add_flag("--json", o.json);

  app.add_subcommand("examples", "rerun the three worked examples against stored values");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: UsageError: " << msg << '\n';
    return kExitUsage;
  }

  try {
    if (derive->parsed()) return cmd_derive(o, out);
    if (specialize->parsed()) return cmd_specialize(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (seq->parsed()) return cmd_seq(o, out);
    if (kernel->parsed()) return cmd_kernel(o, out);
    if (search->parsed()) return cmd_search(o, out);
    return cmd_examples(out);
  } catch (const Error& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << msg << '\n';
    return kExitUsage;
  }
}

}  // namespace cfauto
