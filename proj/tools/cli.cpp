#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "morse/checks.hpp"
#include "morse/error.hpp"
#include "morse/io.hpp"

namespace morse::cli {

namespace {

using io::Json;

struct Options {
  std::string complex_path;
  std::string scheme = "inc-max";
  std::string tiebreak = "lex";
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string output;
  std::string sequence_path;
  std::string field_path;
  std::string function_path;
  std::string emit = "sequence";
  std::size_t samples = 32;
};

/// A user-supplied sequence or field that fails validation.
struct Rejected {
  Json report;
};

MorseSequence computed_sequence(const Complex& k, const Options& o) {
  const TieBreak tie = o.tiebreak == "seeded" ? TieBreak::seeded(o.seed) : TieBreak::lex();
  return o.scheme == "dec-max" ? decreasing_scheme(k, tie) : increasing_scheme(k, tie);
}

MorseSequence user_sequence(const Complex& k, const std::string& path) {
  MorseSequence seq = io::read_sequence_file(path, k);
  const Validation v = validate(seq);
  if (!v) {
    Json report{{"valid", false}, {"violation", v.violation}};
    if (v.failed_item) report["failed_item"] = *v.failed_item;
    throw Rejected{report};
  }
  return seq;
}

MorseSequence load_sequence(const Complex& k, const Options& o) {
  return o.sequence_path.empty() ? computed_sequence(k, o) : user_sequence(k, o.sequence_path);
}

Json counts_json(const std::vector<std::size_t>& v) { return Json(v); }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_build(const Complex& k, const Options& o, std::ostream& out) {
  std::vector<std::size_t> f;
  long long euler = 0;
  for (int p = 0; p <= k.dim(); ++p) {
    f.push_back(k.count(p));
    euler += (p % 2 ? -1 : 1) * static_cast<long long>(k.count(p));
  }
  if (o.format == "text") {
    out << "dimension " << k.dim() << "\nfaces " << k.size() << "\neuler " << euler << '\n';
    io::write_cplx(out, k);
    return kExitOk;
  }
  Json facets = Json::array();
  for (const Simplex& s : k.facets()) facets.push_back(io::simplex_json(s));
  emit(out, Json{{"dimension", k.dim()},
                 {"f_vector", counts_json(f)},
                 {"euler_characteristic", euler},
                 {"betti", counts_json(betti_numbers(k))},
                 {"facets", facets}});
  return kExitOk;
}

Json items_json(const MorseSequence& seq) {
  std::ostringstream lines_out;
  io::write_sequence(lines_out, seq);
  Json items = Json::array();
  std::istringstream lines(lines_out.str());
  for (std::string line; std::getline(lines, line);) items.push_back(Json::parse(line));
  return items;
}

/// The sequence itself goes to --output when given; the summary always goes
/// to the report stream.
int cmd_morse(const Complex& k, const Options& o, std::ostream& out, std::ostream* file) {
  const IndexedSequence seq(load_sequence(k, o));
  if (o.format != "json") {
    std::ostream& dest = file ? *file : out;
    if (o.format == "text") {
      io::write_text(dest, seq.sequence());
    } else {
      io::write_dot(dest, seq);
    }
    return kExitOk;
  }
  if (file) io::write_sequence(*file, seq.sequence());
  const auto counts = seq.critical_counts();
  const auto betti = betti_numbers(k);
  bool inequalities = true;
  for (std::size_t p = 0; p < betti.size(); ++p) inequalities = inequalities && counts[p] >= betti[p];
  Json summary{{"items", seq.sequence().items.size()},
               {"critical_counts", counts_json(counts)},
               {"betti", counts_json(betti)},
               {"morse_inequalities", inequalities}};
  if (!file) summary["sequence"] = items_json(seq.sequence());
  emit(out, summary);
  return inequalities ? kExitOk : kExitCheckFailed;
}

int cmd_betti(const Complex& k, const Options& o, std::ostream& out) {
  const IndexedSequence seq(load_sequence(k, o));
  const Frame ref = reference_map(seq);
  const Frame coref = coreference_map(seq);
  const CriticalComplex crit = critical_complex(seq, ref, coref);
  const auto betti = betti_numbers(k);
  const auto critical = crit.betti_numbers();
  const auto extension = extension_complex(seq, extension_map(seq, coref)).homology;
  const bool agree = betti == critical && betti == extension;
  const Json j{{"betti", counts_json(betti)},
               {"critical_counts", counts_json(seq.critical_counts())},
               {"critical_betti", counts_json(critical)},
               {"extension_betti", counts_json(extension)},
               {"agree", agree}};
  if (o.format == "text") {
    for (const auto& [key, value] : j.items()) out << key << ' ' << value.dump() << '\n';
  } else {
    emit(out, j);
  }
  return agree ? kExitOk : kExitCheckFailed;
}

int cmd_reference(const Complex& k, const Options& o, std::ostream& out) {
  const IndexedSequence seq(load_sequence(k, o));
  const Frame ref = reference_map(seq);
  const Frame coref = coreference_map(seq);
  const CriticalComplex crit = critical_complex(seq, ref, coref);
  emit(out, Json{{"frames", io::frames_json(seq, ref, coref)}, {"critical_complex", io::presented_json(crit.presented())}});
  return kExitOk;
}

int cmd_flow(const Complex& k, const Options& o, std::ostream& out) {
  const IndexedSequence seq(load_sequence(k, o));
  const Frame ref = reference_map(seq);
  const Frame coref = coreference_map(seq);
  const ExtensionMap ext = extension_map(seq, coref);
  const ExtensionMap coext = coextension_map(seq, ref);
  const FlowOperator phi(seq);
  Json stable = Json::array();
  for (FaceId id = 0; id < k.size(); ++id) {
    const IdChain c = IdChain::single(id);
    stable.push_back(Json{{"simplex", io::simplex_json(k.face(id))},
                          {"flow", io::chain_json(k, phi.stabilize(c))},
                          {"coflow", io::chain_json(k, phi.costabilize(c))}});
  }
  emit(out, Json{{"tables", io::extension_tables_json(seq, ext, coext)},
                 {"extension_betti", counts_json(extension_complex(seq, ext).homology)},
                 {"coextension_cobetti", counts_json(coextension_complex(seq, coext).homology)},
                 {"stabilized", stable}});
  return kExitOk;
}

int cmd_convert(const Complex& k, const Options& o, std::ostream& out) {
  const int sources = !o.field_path.empty() + !o.function_path.empty() + !o.sequence_path.empty();
  if (sources != 1) throw CLI::ValidationError("convert-vf needs exactly one of --field, --function, --sequence");
  MorseSequence seq;
  if (!o.field_path.empty()) {
    std::ifstream in(o.field_path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + o.field_path);
    const VectorField v = io::read_vector_field(in);
    if (!is_acyclic(v, k)) throw Rejected{Json{{"valid", false}, {"violation", "the vector field has a closed V-path"}}};
    seq = vf_to_morse_sequence(v, k);
  } else if (!o.function_path.empty()) {
    std::ifstream in(o.function_path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + o.function_path);
    const MorseFunction f = io::read_morse_function(in, k);
    const BasicCheck b = is_basic_morse_function(f);
    if (!b.ok) throw Rejected{Json{{"valid", false}, {"violation", "not a basic Morse function: " + b.violated}}};
    seq = basic_function_to_sequence(f);
  } else {
    seq = user_sequence(k, o.sequence_path);
  }
  if (o.emit == "field") {
    emit(out, io::vector_field_json(gradient_vector_field(seq)));
  } else if (o.emit == "function") {
    io::write_morse_function(out, canonical_morse_function(IndexedSequence(seq)));
  } else {
    io::write_sequence(out, seq);
  }
  return kExitOk;
}

int cmd_check(const Complex& k, const Options& o, std::ostream& out) {
  const IndexedSequence seq(load_sequence(k, o));
  SuiteOptions so;
  so.samples = o.samples;
  const auto results = run_invariant_suite(seq, so);
  Json checks = Json::array();
  for (const CheckResult& r : results) {
    Json row{{"name", r.name}, {"passed", r.passed}};
    if (!r.detail.empty()) row["detail"] = r.detail;
    checks.push_back(row);
  }
  const bool ok = all_passed(results);
  if (o.format == "text") {
    for (const CheckResult& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.detail.empty()) out << ": " << r.detail;
      out << '\n';
    }
  } else {
    emit(out, Json{{"valid", true}, {"passed", ok}, {"checks", checks}});
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_export(const Complex& k, const Options& o, std::ostream& out) {
  const IndexedSequence seq(load_sequence(k, o));
  if (o.format == "dot") {
    io::write_dot(out, seq);
    return kExitOk;
  }
  if (o.format == "text") {
    io::write_text(out, seq.sequence());
    return kExitOk;
  }
  const CriticalComplex crit = critical_complex(seq, reference_map(seq), coreference_map(seq));
  emit(out, Json{{"sequence", items_json(seq.sequence())},
                 {"gradient_field", io::vector_field_json(gradient_vector_field(seq.sequence()))},
                 {"critical_complex", io::presented_json(crit.presented())}});
  return kExitOk;
}

using Command = std::function<int(const Complex&, const Options&, std::ostream&, std::ostream*)>;

Command to_report(int (*f)(const Complex&, const Options&, std::ostream&)) {
  return [f](const Complex& k, const Options& o, std::ostream& out, std::ostream* file) { return f(k, o, file ? *file : out); };
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Morse sequences on simplicial complexes", "morse"};
  app.require_subcommand(1);
  Options o;

  auto add = [&](const std::string& name, const std::string& help, bool sequence_source) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("complex", o.complex_path, "facet list (.cplx)")->required();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "dot", "text"}));
    sub->add_option("-o,--output", o.output, "write the result to this file");
    if (sequence_source) {
      sub->add_option("--scheme", o.scheme, "sequence builder")->check(CLI::IsMember({"inc-max", "dec-max"}));
      sub->add_option("--tiebreak", o.tiebreak, "tie-break policy")->check(CLI::IsMember({"lex", "seeded"}));
      sub->add_option("--seed", o.seed, "seed for --tiebreak seeded");
      sub->add_option("--sequence", o.sequence_path, "use this sequence (JSON lines) instead of building one");
    }
    return sub;
  };

  std::vector<std::pair<CLI::App*, Command>> commands;
  commands.emplace_back(add("build", "read a complex and report its size and homology", false), to_report(cmd_build));
  commands.emplace_back(add("morse", "build a maximal Morse sequence", true), cmd_morse);
  commands.emplace_back(add("betti", "homology of K and of the critical complex", true), to_report(cmd_betti));
  commands.emplace_back(add("reference", "reference and coreference frames, critical complex", true), to_report(cmd_reference));
  commands.emplace_back(add("flow", "extension maps and the stabilized flow", true), to_report(cmd_flow));
  CLI::App* convert = add("convert-vf", "convert between vector fields, Morse functions and sequences", false);
  convert->add_option("--field", o.field_path, "gradient vector field (JSON)");
  convert->add_option("--function", o.function_path, "Morse function, one `value vertices...` line per face");
  convert->add_option("--sequence", o.sequence_path, "Morse sequence (JSON lines)");
  convert->add_option("--emit", o.emit, "what to write")->check(CLI::IsMember({"sequence", "field", "function"}));
  commands.emplace_back(convert, to_report(cmd_convert));
  CLI::App* check = add("check", "run every invariant on a sequence", true);
  check->add_option("--samples", o.samples, "random chains per sampled check");
  commands.emplace_back(check, to_report(cmd_check));
  commands.emplace_back(add("export", "sequence, gradient field and critical complex", true), to_report(cmd_export));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (const auto& [sub, command] : commands) {
    if (!sub->parsed() || !sub->get_option_no_throw("--tiebreak")) continue;
    const bool seeded = o.tiebreak == "seeded";
    if (seeded != (sub->count("--seed") > 0)) {
      err << "error: --seed is required with --tiebreak seeded and only then\n";
      return kExitUsage;
    }
  }

  std::unique_ptr<std::ofstream> file;
  if (!o.output.empty()) {
    file = std::make_unique<std::ofstream>(o.output);
    if (!*file) {
      err << "error: cannot write " << o.output << '\n';
      return kExitUsage;
    }
  }

  try {
    const Complex k = io::read_cplx_file(o.complex_path);
    for (const auto& [sub, command] : commands) {
      if (sub->parsed()) return command(k, o, out, file.get());
    }
  } catch (const Rejected& r) {
    emit(file ? *file : out, r.report);
    err << "error: " << r.report.value("violation", "rejected") << '\n';
    return kExitCheckFailed;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Parse ? kExitUsage : kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace morse::cli
