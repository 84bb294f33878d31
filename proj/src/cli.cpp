#include "ringlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>

#include "ringlab/report.hpp"
#include "ringlab/ringfile.hpp"
#include "ringlab/witnesses.hpp"

namespace ringlab::cli {

namespace {

long long default_probe_bound() {
  if (const char* env = std::getenv("RINGLAB_BOUND")) {
    try {
      long long v = std::stoll(env);
      if (v >= 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 8;
}

struct FiniteConstruction {
  std::string description;
  bool takes_p;
  long long default_p;
  std::function<FiniteRing(long long)> build;
};

struct InfiniteConstruction {
  std::string description;
  std::function<ComputableRing()> build;
};

const std::map<std::string, FiniteConstruction>& finite_constructions() {
  static const std::map<std::string, FiniteConstruction> table = {
      {"zero", {"zero multiplication on Z_p", true, 2,
                [](long long p) { return zero_ring({p}); }}},
      {"zero2x2", {"zero multiplication on Z_2 x Z_2", false, 0,
                   [](long long) { return zero_ring({2, 2}); }}},
      {"zn", {"Z_p with its usual multiplication", true, 4,
              [](long long p) { return unital_cyclic(p); }}},
      {"fp", {"the field with p elements", true, 2,
              [](long long p) { return prime_field(p); }}},
      {"pairs-left", {"pairs with (a,b)(c,d) = (ac,ad) over F_p", true, 2,
                      [](long long p) { return pairs_left(p); }}},
      {"pairs-right", {"pairs with (a,b)(c,d) = (ac,bc) over F_p", true, 2,
                       [](long long p) { return pairs_right(p); }}},
      {"twisted", {"twisted semigroup ring over F_p x F_p", true, 2,
                   [](long long p) { return twisted_semigroup_ring(p); }}},
      {"matrix", {"2x2 matrices over F_p", true, 2,
                  [](long long p) { return matrix_ring(prime_field(p), 2); }}},
      {"f2xf2", {"F_2 x F_2, componentwise", false, 0,
                 [](long long) {
                   return direct_sum({prime_field(2), prime_field(2)});
                 }}},
      {"z4-ideal-2", {"the ideal generated by 2 in Z_4, as a ring", false, 0,
                      [](long long) {
                        FiniteRing z4 = unital_cyclic(4);
                        return principal_ideal_subring(z4, z4.element({2}));
                      }}},
  };
  return table;
}

const std::map<std::string, InfiniteConstruction>& infinite_constructions() {
  static const std::map<std::string, InfiniteConstruction> table = {
      {"sum-pairs-left", {"countable direct sum of pairs-left(F2) copies",
                          [] { return supported_direct_sum(pairs_left(2)); }}},
      {"sum-pairs-right", {"countable direct sum of pairs-right(F2) copies",
                           [] { return supported_direct_sum(pairs_right(2)); }}},
      {"sum-f2", {"countable direct sum of F_2 copies (finitely supported 0/1 functions)",
                  [] { return supported_direct_sum(prime_field(2)); }}},
      {"finrank-f2", {"finitely supported N x N matrices over F_2",
                      [] { return finite_rank_matrix_ring(prime_field(2)); }}},
      {"funring", {"continuous compactly supported piecewise polynomials",
                   [] { return piecewise_function_ring(); }}},
  };
  return table;
}

std::vector<RingElement> parse_element_list(const FiniteRing& ring,
                                            const std::string& text) {
  std::vector<RingElement> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t semi = text.find(';', start);
    std::string piece = text.substr(
        start, semi == std::string::npos ? std::string::npos : semi - start);
    if (!piece.empty()) out.push_back(parse_element(ring, piece));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  if (out.empty()) throw EmptyInput("--elements");
  return out;
}

Json trace_json(const FiniteRing& ring, const UnitTrace<RingElement>& trace) {
  Json steps = Json::array();
  for (const auto& step : trace.steps) {
    Json s;
    s["target"] = render_element(ring, step.target);
    s["base_unit"] = render_element(ring, step.base_unit);
    Json residuals = Json::array();
    for (const auto& v : step.residuals) residuals.push_back(render_element(ring, v));
    s["residuals"] = std::move(residuals);
    s["combined"] = render_element(ring, step.combined);
    steps.push_back(std::move(s));
  }
  Json j;
  j["side"] = to_string(trace.side);
  j["steps"] = std::move(steps);
  return j;
}

Json trace_json(const FiniteRing& ring, const RegularTrace<RingElement>& trace) {
  Json steps = Json::array();
  for (const auto& step : trace.steps) {
    Json s;
    s["target"] = render_element(ring, step.target);
    s["residual"] = render_element(ring, step.residual);
    s["quasi_inverse"] = render_element(ring, step.quasi_inverse);
    s["projection"] = render_element(ring, step.projection);
    s["orthogonal"] = render_element(ring, step.orthogonal);
    s["combined"] = render_element(ring, step.combined);
    steps.push_back(std::move(s));
  }
  Json j;
  j["side"] = to_string(trace.side);
  j["steps"] = std::move(steps);
  return j;
}

int cmd_validate(const std::string& file, std::ostream& out) {
  FiniteRing ring = load_ring_file(file);
  out << "ok: ring " << ring.name() << ", " << ring.rank() << " generators, "
      << ring.size() << " elements\n";
  return 0;
}

int cmd_classify(const std::string& file, const std::string& format,
                 std::ostream& out) {
  FiniteRing ring = load_ring_file(file);
  Classification c = classify(ring);
  if (format == "json")
    out << classification_to_json(c).dump(2) << '\n';
  else
    out << classification_text(c);
  return 0;
}

int cmd_table(const std::string& file, const std::string& op, std::ostream& out,
              std::ostream& err) {
  FiniteRing ring = load_ring_file(file);
  if (ring.size() > 64) {
    err << "error: table printing is limited to 64 elements\n";
    return 1;
  }
  std::vector<RingElement> elems = ring.element_list();
  std::size_t width = 1;
  for (const RingElement& e : elems)
    width = std::max(width, render_element(ring, e).size());
  auto pad = [&](const std::string& s) {
    return s + std::string(width - std::min(width, s.size()), ' ');
  };
  out << op << " table for " << ring.name() << '\n';
  out << pad("") << " |";
  for (const RingElement& e : elems) out << ' ' << pad(render_element(ring, e));
  out << '\n';
  for (const RingElement& r : elems) {
    out << pad(render_element(ring, r)) << " |";
    for (const RingElement& s : elems) {
      RingElement v = op == "add" ? r + s : ring.mul(r, s);
      out << ' ' << pad(render_element(ring, v));
    }
    out << '\n';
  }
  return 0;
}

int cmd_idempotents(const std::string& file, std::ostream& out) {
  FiniteRing ring = load_ring_file(file);
  std::vector<RingElement> idem = ring.idempotents();
  out << ring.name() << ": " << idem.size() << " idempotents\n";
  for (const RingElement& e : idem) out << "  " << render_element(ring, e) << '\n';
  return 0;
}

int cmd_witness(const std::string& file, const std::string& kind,
                const std::string& elements_text, const std::string& side_text,
                bool want_trace, std::ostream& out) {
  FiniteRing ring = load_ring_file(file);
  std::vector<RingElement> elements = parse_element_list(ring, elements_text);
  RingOps<RingElement> ops = ops_of(ring);
  auto render = [&](const RingElement& e) { return render_element(ring, e); };

  if (kind == "join") {
    if (elements.size() != 2)
      throw Error("--kind join needs exactly two elements");
    JoinReport<RingElement> rep = join_analysis(ring, elements[0], elements[1]);
    out << "e'  = " << render(rep.first) << '\n';
    out << "e'' = " << render(rep.second) << '\n';
    out << "e = e'' v e' = " << render(rep.joined) << '\n';
    out << "e^2 = " << render(rep.square) << "  ("
        << (rep.defect_zero ? "idempotent" : "not idempotent") << ")\n";
    out << "expansion identity: " << (rep.expansion_holds ? "holds" : "VIOLATED")
        << '\n';
    static const char* names[5] = {"(i) e'e''=e'", "(ii) e'e''=e''",
                                   "(iii) e''e'=e''", "(iv) e''e'=e'",
                                   "(v) e'e''=e''e'"};
    for (int i = 0; i < 5; ++i)
      out << names[i] << ": " << (rep.conditions[i] ? "yes" : "no") << '\n';
    return 0;
  }

  if (kind == "common-unit") {
    UnitOracle<RingElement> oracle = brute_force_unit_oracle(ring);
    if (side_text == "both") {
      UnitTrace<RingElement> lt, rt;
      RingElement e = common_two_sided_unit(
          ops, std::span<const RingElement>(elements), oracle, &lt, &rt);
      out << "two-sided unit: " << render(e) << '\n';
      if (want_trace) {
        Json j;
        j["kind"] = "common-unit";
        j["left"] = trace_json(ring, lt);
        j["right"] = trace_json(ring, rt);
        j["result"] = render(e);
        out << j.dump(2) << '\n';
      }
      return 0;
    }
    Side side = side_text == "left" ? Side::left : Side::right;
    UnitTrace<RingElement> trace;
    RingElement e = common_one_sided_unit(
        ops, std::span<const RingElement>(elements), side, oracle, &trace);
    out << to_string(side) << " unit: " << render(e) << '\n';
    if (want_trace) {
      Json j;
      j["kind"] = "common-unit";
      j["trace"] = trace_json(ring, trace);
      j["result"] = render(e);
      out << j.dump(2) << '\n';
    }
    return 0;
  }

  if (kind == "regular-unit") {
    if (side_text == "both") throw Error("--kind regular-unit is one-sided");
    Side side = side_text == "left" ? Side::left : Side::right;
    QuasiInverseOracle<RingElement> oracle = brute_force_quasi_inverse_oracle(ring);
    RegularTrace<RingElement> trace;
    RingElement e = regular_local_unit(ops, side, std::span<const RingElement>(elements),
                                       oracle, &trace);
    out << to_string(side) << " idempotent unit: " << render(e) << '\n';
    if (want_trace) {
      Json j;
      j["kind"] = "regular-unit";
      j["trace"] = trace_json(ring, trace);
      j["result"] = render(e);
      out << j.dump(2) << '\n';
    }
    return 0;
  }

  if (kind == "promote") {
    if (side_text != "left" && side_text != "right")
      throw Error("--kind promote needs --side left or --side right (the unital side)");
    Side side = side_text == "left" ? Side::left : Side::right;
    RingElement e = promote_to_identity(ring, side);
    out << "two-sided identity: " << render(e) << '\n';
    return 0;
  }

  throw Error("unknown witness kind '" + kind + "'");
}

int cmd_construct(const std::string& name, long long p, const std::string& out_file,
                  long long bound, std::ostream& out, std::ostream& err) {
  const auto& finite = finite_constructions();
  if (auto it = finite.find(name); it != finite.end()) {
    long long param = p >= 0 ? p : it->second.default_p;
    FiniteRing ring = it->second.build(param);
    std::string text = render_ring_file(ring);
    if (!out_file.empty()) {
      std::ofstream f(out_file);
      if (!f) {
        err << "error: cannot write " << out_file << '\n';
        return 1;
      }
      f << text;
      out << "wrote " << out_file << " (ring " << ring.name() << ", " << ring.size()
          << " elements)\n";
    } else {
      out << text;
    }
    return 0;
  }
  const auto& infinite = infinite_constructions();
  if (auto it = infinite.find(name); it != infinite.end()) {
    if (!out_file.empty()) {
      err << "error: infinite constructions have no file format\n";
      return 1;
    }
    ComputableRing ring = it->second.build();
    ClassifyOptions opts;
    opts.probe_bound = bound;
    Classification c = classify(ring, opts);
    out << classification_text(c);
    return 0;
  }
  err << "error: unknown construction '" << name << "'. Available:\n";
  for (const auto& [n, c] : finite) err << "  " << n << " - " << c.description << '\n';
  for (const auto& [n, c] : infinite) err << "  " << n << " - " << c.description << '\n';
  return 1;
}

void print_stage(std::ostream& out, int number, const Classification& c,
                 const std::string& headline, const std::string& inclusion) {
  out << "[" << number << "/6] " << c.ring_name << " -- " << headline << '\n';
  out << classification_text(c);
  if (!inclusion.empty()) out << "  " << inclusion << '\n';
  out << '\n';
}

int cmd_demo(long long bound, std::ostream& out) {
  ClassifyOptions opts;
  opts.probe_bound = bound;

  out << "Hierarchy demo: each stage separates one class of the chain\n"
      << "  unital < enough idempotents < sets of local units < locally unital\n"
      << "        < s-unital < idempotent < rings\n"
      << "(probe bound " << bound << "; [computational] = witnessed here, "
      << "[documented] = known but non-constructive)\n\n";

  print_stage(out, 1, classify(zero_ring({2})),
              "a ring that is not idempotent",
              "=> {idempotent rings} is strictly smaller than {rings} [computational]");

  print_stage(out, 2, classify(twisted_semigroup_ring(2)),
              "idempotent but neither left nor right s-unital",
              "=> {s-unital} is strictly smaller than {idempotent} [computational]");

  {
    Classification c = classify(supported_direct_sum(pairs_left(2)), opts);
    print_stage(out, 3, c,
                "left s-unital but not left unital (and not right s-unital)",
                "the one-sided phenomena survive the infinite sum; the mirrored "
                "sum over pairs-right(F2) swaps every left/right verdict "
                "[computational]");
  }

  print_stage(out, 4, classify(piecewise_function_ring(), opts),
              "s-unital but not locally unital (no nonzero idempotents)",
              "=> {locally unital} is strictly smaller than {s-unital} "
              "[computational]");

  {
    Classification c = classify(finite_rank_matrix_ring(prime_field(2)), opts);
    print_stage(
        out, 5, c,
        "locally unital, with local unit sets and enough idempotents, not unital",
        "=> {unital} is strictly smaller than {enough idempotents} [computational].\n"
        "  Further non-unital rings with enough idempotents: infinite direct sums\n"
        "  of unital rings (sum-f2 here), category rings over infinitely many\n"
        "  objects, Leavitt path algebras on infinitely many vertices (pointers\n"
        "  only, not modeled).\n"
        "  The two remaining strict steps are witnessed only non-constructively:\n"
        "  - {sets of local units} < {locally unital}: there are regular rings\n"
        "    without sets of local units [documented]\n"
        "  - {enough idempotents} < {sets of local units}: a maximal ideal M of\n"
        "    the ring of all functions N -> F_2, containing the ideal I of\n"
        "    finitely supported functions, has E = M as local units but no\n"
        "    complete idempotent family; M requires Zorn's lemma [documented].\n"
        "    The ideal I itself is computable here as sum-f2, with E = I.");
  }

  print_stage(out, 6, classify(matrix_ring(prime_field(2), 2)),
              "unital: the top of the chain", "");

  out << "demo complete: 4 inclusions witnessed computationally, 2 documented\n";
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ringlab: executable examples and deciders for weak-identity ring classes"};
  app.name("ringlab");
  app.require_subcommand(1);

  std::string file, format = "text", op, kind, elements_text, side = "both",
              construct_name, out_file;
  bool want_trace = false;
  long long p = -1;
  long long bound = default_probe_bound();

  CLI::App* validate = app.add_subcommand("validate", "parse and validate a ring file");
  validate->add_option("file", file)->required();

  CLI::App* classify_cmd = app.add_subcommand("classify", "decide class membership");
  classify_cmd->add_option("file", file)->required();
  classify_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* table = app.add_subcommand("table", "print a Cayley table");
  table->add_option("file", file)->required();
  table->add_option("--op", op)->required()->check(CLI::IsMember({"add", "mul"}));

  CLI::App* idem = app.add_subcommand("idempotents", "list all idempotents");
  idem->add_option("file", file)->required();

  CLI::App* witness = app.add_subcommand("witness", "run a constructive witness algorithm");
  witness->add_option("file", file)->required();
  witness->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"join", "common-unit", "regular-unit", "promote"}));
  witness->add_option("--elements", elements_text)->required();
  witness->add_option("--side", side)->check(CLI::IsMember({"left", "right", "both"}));
  witness->add_flag("--trace", want_trace);

  CLI::App* construct = app.add_subcommand("construct", "build a named example ring");
  construct->add_option("name", construct_name)->required();
  construct->add_option("--p", p);
  construct->add_option("--out", out_file);
  construct->add_option("--bound", bound);

  CLI::App* demo = app.add_subcommand("demo", "executable tour of the hierarchy");
  std::string demo_what;
  demo->add_option("what", demo_what)->required()->check(CLI::IsMember({"hierarchy"}));
  demo->add_option("--bound", bound);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (validate->parsed()) return cmd_validate(file, out);
    if (classify_cmd->parsed()) return cmd_classify(file, format, out);
    if (table->parsed()) return cmd_table(file, op, out, err);
    if (idem->parsed()) return cmd_idempotents(file, out);
    if (witness->parsed())
      return cmd_witness(file, kind, elements_text, side, want_trace, out);
    if (construct->parsed())
      return cmd_construct(construct_name, p, out_file, bound, out, err);
    if (demo->parsed()) return cmd_demo(bound, out);
  } catch (const OracleFailed& e) {
    err << "refuted: " << e.what() << '\n';
    return 2;
  } catch (const NotRegularAt& e) {
    err << "refuted: " << e.what() << '\n';
    return 2;
  } catch (const HypothesisFailed& e) {
    err << "refuted: " << e.what() << '\n';
    return 2;
  } catch (const NotIdempotentInput& e) {
    err << "refuted: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace ringlab::cli
