#include "asf/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "asf/additive_poly.hpp"
#include "asf/artin_schreier.hpp"
#include "asf/error.hpp"
#include "asf/group_ga.hpp"
#include "asf/laurent.hpp"
#include "asf/parse.hpp"
#include "asf/report.hpp"
#include "asf/valuation.hpp"

namespace asf::cli {

using json = nlohmann::json;

namespace {

constexpr int kSchema = 1;

json strings(const std::vector<Element>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(x.to_string());
  return a;
}

std::string tsv_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + tsv_value(v[i]);
    return s;
  }
  return v.dump();
}

void emit_tsv(const json& v, const std::string& prefix, std::ostream& out) {
  if (v.is_object()) {
    for (const auto& [k, child] : v.items()) emit_tsv(child, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  if (v.is_array() && !v.empty() && v.front().is_object()) {
    for (std::size_t i = 0; i < v.size(); ++i) emit_tsv(v[i], prefix + "." + std::to_string(i), out);
    return;
  }
  out << prefix << '\t' << tsv_value(v) << '\n';
}

void emit_report_tsv(const FullReport& r, std::ostream& out) {
  out << "q\tp\tn\tindex\tindex_oracle\tcount\tcount_oracle\ttrace_zero\tsolvable\tagree\n";
  for (const auto& row : r.rows) {
    out << row.q << '\t' << row.p << '\t' << row.n << '\t' << row.index << '\t' << row.index_oracle << '\t'
        << row.count << '\t' << (row.count_oracle ? std::to_string(*row.count_oracle) : "-") << '\t'
        << row.trace_zero << '\t' << row.solvable << '\t' << (row.agree ? "yes" : "no") << '\n';
  }
  out << '\n' << "check\tok\tdetail\n";
  for (const auto& c : r.checks) out << c.name << '\t' << (c.ok ? "yes" : "no") << '\t' << c.detail << '\n';
}

json report_json(const FullReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"q", row.q},
                    {"p", row.p},
                    {"n", row.n},
                    {"index", row.index},
                    {"index_oracle", row.index_oracle},
                    {"count", row.count},
                    {"count_oracle", row.count_oracle ? json(*row.count_oracle) : json(nullptr)},
                    {"trace_zero", row.trace_zero},
                    {"solvable", row.solvable},
                    {"agree", row.agree}});
  }
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return {{"max_q", r.max_q}, {"rows", rows}, {"checks", checks}, {"ok", r.ok()}};
}

json outcome_json(const SolveOutcome& o, std::int64_t prec) {
  json j{{"tag", std::string(to_string(o.tag))}, {"prec", prec}};
  if (o.root) j["root"] = o.root->to_string();
  if (o.negval_witness) j["witness"] = *o.negval_witness;
  if (o.residue_witness) j["witness"] = o.residue_witness->to_string();
  return j;
}

std::string canonical_string(const CanonicalForm& cf) {
  const auto p = std::to_string(cf.a.field().characteristic());
  return "(" + cf.a.to_string() + ") * (x^" + p + " - x)^(" + p + "^" + std::to_string(cf.n) + ")";
}

FiniteField field_from(const std::string& field_text, std::uint32_t p) {
  if (!field_text.empty()) return parse_field(field_text);
  if (p == 0) raise(ErrorCode::ParseError, "one of --field or --p is required");
  return FiniteField::prime(p);
}

std::vector<Element> units_of(const FiniteField& k) {
  std::vector<Element> units;
  for (const auto& x : k.elements()) {
    if (!x.is_zero()) units.push_back(x);
  }
  return units;
}

struct Options {
  std::string format = "json";
  std::int64_t prec = 32;
  std::string field;
  std::uint32_t p = 0;
  std::string rhs;
  std::string poly;
  std::string poly2;
  std::string target;
  std::string tuple;
  std::string units;
  bool all_units = false;
  int deg = 0;
  std::string series;
  std::uint32_t characteristic = 0;
  std::string residue;
  std::string group = "Z";
  bool alg_maximal = false;
  int bound = 2;
  std::uint64_t max_q = 125;
  bool elements = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Artin-Schreier and valued-field computations over finite fields", "asfield"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--prec", o.prec, "Laurent series precision")->check(CLI::PositiveNumber);

  json payload;
  std::optional<FullReport> report;
  std::function<void()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<void()> fn) {
    auto* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  auto* field = app.add_subcommand("field", "Finite field info")->require_subcommand(1)->fallthrough();
  auto* field_info = leaf(field, "info", "Modulus and order", [&] {
    const FiniteField k = parse_field(o.field);
    payload = {{"field", k.to_string()},
               {"p", k.characteristic()},
               {"n", k.degree()},
               {"modulus", k.modulus().to_string('x')},
               {"order", k.order()}};
    if (o.elements) payload["elements"] = strings(k.elements());
  });
  field_info->add_option("--field", o.field)->required();
  field_info->add_flag("--elements", o.elements);

  auto* asx = app.add_subcommand("asx", "Artin-Schreier extensions")->require_subcommand(1)->fallthrough();
  auto* asx_count = leaf(asx, "count", "Count AS extensions", [&] {
    const FiniteField k = parse_field(o.field);
    const auto cosets = image_subgroup(k);
    payload = {{"field", k.to_string()},
               {"index", cosets.index},
               {"reps", strings(cosets.reps)},
               {"count", count_as_extensions(k)}};
  });
  asx_count->add_option("--field", o.field)->required();
  auto* asx_image = leaf(asx, "image", "The subgroup wp(K)", [&] {
    const FiniteField k = parse_field(o.field);
    const auto cosets = image_subgroup(k);
    payload = {{"field", k.to_string()},
               {"image", strings(cosets.image)},
               {"index", cosets.index},
               {"reps", strings(cosets.reps)}};
  });
  asx_image->add_option("--field", o.field)->required();
  auto* asx_solve = leaf(asx, "solve", "Solve x^p - x = rhs", [&] {
    const FiniteField k = parse_field(o.field);
    const Element a = parse_element(o.rhs, k);
    const auto root = has_as_root(k, a);
    payload = {{"field", k.to_string()},
               {"rhs", a.to_string()},
               {"trace", trace_to_prime(a).to_string()},
               {"root", root ? json(root->to_string()) : json(nullptr)}};
  });
  asx_solve->add_option("--field", o.field)->required();
  asx_solve->add_option("--rhs", o.rhs)->required();
  auto* asx_extend = leaf(asx, "extend", "Build K(alpha), alpha^p - alpha = rhs", [&] {
    const FiniteField k = parse_field(o.field);
    const auto ext = build_as_extension(k, parse_element(o.rhs, k));
    payload = {{"field", k.to_string()},
               {"rhs", parse_element(o.rhs, k).to_string()},
               {"extension", ext.extension.to_string()},
               {"extension_modulus", ext.extension.modulus().to_string('x')},
               {"root", ext.alpha.to_string()},
               {"generator_image", ext.embedding.generator_image().to_string()},
               {"defining_poly", ext.defining_poly.to_string()}};
  });
  asx_extend->add_option("--field", o.field)->required();
  asx_extend->add_option("--rhs", o.rhs)->required();

  auto* ore = app.add_subcommand("ore", "Additive polynomials")->require_subcommand(1)->fallthrough();
  auto additive = [&](const std::string& text) {
    return from_general_poly(parse_fq_poly(text, field_from(o.field, o.p)));
  };
  auto* ore_canon = leaf(ore, "canon", "Canonical form a*(x^p - x)^(p^n)", [&] {
    const auto f = additive(o.poly);
    const auto cf = canonical_form(f);
    payload = {{"poly", f.to_string()},
               {"a", cf ? json(cf->a.to_string()) : json(nullptr)},
               {"n", cf ? json(cf->n) : json(nullptr)},
               {"form", cf ? json(canonical_string(*cf)) : json(nullptr)}};
  });
  auto* ore_kernel = leaf(ore, "kernel", "Roots of an additive polynomial", [&] {
    const auto f = additive(o.poly);
    const FiniteField k = o.target.empty() ? f.field() : parse_field(o.target);
    const auto ker = kernel(f, k);
    payload = {{"poly", f.to_string()}, {"field", k.to_string()}, {"roots", strings(ker.roots)},
               {"dimension", ker.dimension}};
  });
  ore_kernel->add_option("--in", o.target, "Field to take roots in");
  auto* ore_compose = leaf(ore, "compose", "f o g", [&] {
    const auto f = additive(o.poly);
    const auto g = additive(o.poly2);
    payload = {{"f", f.to_string()}, {"g", g.to_string()}, {"composite", asf::ore_compose(f, g).to_string()}};
  });
  ore_compose->add_option("--g", o.poly2)->required();
  auto* ore_surj = leaf(ore, "surjective", "Is f onto K", [&] {
    const auto f = additive(o.poly);
    const FiniteField k = o.target.empty() ? f.field() : parse_field(o.target);
    const auto s = is_surjective_on(f, k);
    payload = {{"poly", f.to_string()}, {"field", k.to_string()}, {"surjective", s.surjective},
               {"witness", s.witness ? json(s.witness->to_string()) : json(nullptr)}};
  });
  ore_surj->add_option("--in", o.target, "Field to test on");
  for (auto* sub : {ore_canon, ore_kernel, ore_compose, ore_surj}) {
    sub->add_option("--field", o.field);
    sub->add_option("--p", o.p);
    sub->add_option("--poly,--f", o.poly)->required();
  }

  auto* ga = app.add_subcommand("ga", "The group G_a")->require_subcommand(1)->fallthrough();
  auto* ga_pts = leaf(ga, "points", "Points and projection", [&] {
    const FiniteField k = parse_field(o.field);
    const GaGroupSpec spec(k, parse_element_list(o.tuple, k));
    const auto rep = first_coord_image(spec);
    json pts = json::array();
    for (const auto& pt : ga_points(spec)) {
      json row = json::array({pt.t.to_string()});
      for (const auto& x : pt.x) row.push_back(x.to_string());
      pts.push_back(row);
    }
    payload = {{"field", k.to_string()},
               {"tuple", strings(spec.tuple())},
               {"point_count", rep.point_count},
               {"fiber_size", rep.fiber_size},
               {"fibers_regular", rep.fibers_regular},
               {"image", strings(rep.image)},
               {"intersection", strings(rep.intersection)},
               {"points", pts}};
  });
  ga_pts->add_option("--field", o.field)->required();
  ga_pts->add_option("--tuple", o.tuple)->required();
  auto* ga_bs = leaf(ga, "baldwin-saxl", "Stabilization index", [&] {
    const FiniteField k = parse_field(o.field);
    if (o.all_units == !o.units.empty()) raise(ErrorCode::ParseError, "give exactly one of --all-units or --units");
    const auto units = o.all_units ? units_of(k) : parse_element_list(o.units, k);
    payload = {{"field", k.to_string()},
               {"units", units.size()},
               {"n", k.degree()},
               {"index", baldwin_saxl_index(k, units)}};
  });
  ga_bs->add_option("--field", o.field)->required();
  ga_bs->add_flag("--all-units", o.all_units);
  ga_bs->add_option("--units", o.units);
  auto* ga_lemma = leaf(ga, "lemma-search", "Search X(h^p - h g^(p-1)) = g^p", [&] {
    if (!is_prime(o.p)) raise(ErrorCode::NotPrime, std::to_string(o.p));
    const auto hit = rational_as_inverse_search(o.p, o.deg);
    payload = {{"p", o.p},
               {"deg", o.deg},
               {"found", hit.has_value()},
               {"g", hit ? json(hit->first.to_string('X')) : json(nullptr)},
               {"h", hit ? json(hit->second.to_string('X')) : json(nullptr)}};
  });
  ga_lemma->add_option("--p", o.p)->required();
  ga_lemma->add_option("--deg", o.deg)->required()->check(CLI::NonNegativeNumber);

  auto* laurent = app.add_subcommand("laurent", "Laurent series")->require_subcommand(1)->fallthrough();
  auto* laurent_solve = leaf(laurent, "solve", "Solve x^p - x = series", [&] {
    const FiniteField k = field_from(o.field, o.p);
    const auto terms = parse_series_terms(o.series, k);
    // A literal is exact, so it is known to any precision.
    std::int64_t known = o.prec;
    if (!terms.empty()) known = std::max(known, terms.rbegin()->first + 1);
    const auto a = LaurentSeries::from_terms(k, terms, known);
    payload = outcome_json(as_solve(a, o.prec), o.prec);
    payload["field"] = k.to_string();
    payload["series"] = a.to_string();
  });
  laurent_solve->add_option("--field", o.field);
  laurent_solve->add_option("--p", o.p);
  laurent_solve->add_option("--series", o.series)->required();

  auto* valued = app.add_subcommand("valued", "Valued-field descriptors")->require_subcommand(1)->fallthrough();
  auto* valued_check = leaf(valued, "check", "Kaplansky, tame and NIP verdicts", [&] {
    const auto residue = parse_residue(o.residue);
    if (o.characteristic != 0 && o.characteristic != residue.p) {
      raise(ErrorCode::InvalidArgument, "characteristic " + std::to_string(o.characteristic) +
                                            " does not match residue " + residue.to_string());
    }
    const auto desc = ValuedFieldDescriptor::make(residue, parse_value_group(o.group), o.alg_maximal);
    const auto v = classify(desc, o.bound);
    json witness{{"c1", v.kaplansky.c1_witness ? json(*v.kaplansky.c1_witness) : json(nullptr)},
                 {"c2", nullptr}};
    if (v.kaplansky.c2_poly) {
      witness["c2"] = {{"f", v.kaplansky.c2_poly->to_string()}, {"a", v.kaplansky.c2_target->to_string()}};
    }
    json kap{{"c1", v.kaplansky.c1},
             {"c2", v.kaplansky.c2 && v.kaplansky.verified_to_bound ? json("verified-to-bound") : json(v.kaplansky.c2)},
             {"kaplansky", v.kaplansky.kaplansky()},
             {"witness", witness},
             {"instances_checked", v.kaplansky.instances_checked}};
    json wits = json::array();
    for (const auto& w : v.vfchar.witnesses) {
      json j{{"type", std::string(to_string(w.type))}, {"value", w.value}};
      if (w.outcome) j["outcome"] = std::string(to_string(w.outcome->tag));
      wits.push_back(j);
    }
    payload = {{"descriptor", desc.to_string()},
               {"residue_nip", std::string(to_string(desc.residue_nip))},
               {"kaplansky", kap},
               {"tame", v.tame},
               {"perfect", v.perfect_residue},
               {"vfchar", {{"verdict", std::string(to_string(v.vfchar.kind))}, {"witnesses", wits}}},
               {"bound", o.bound}};
  });
  valued_check->add_option("--char", o.characteristic);
  valued_check->add_option("--residue", o.residue)->required();
  valued_check->add_option("--group", o.group);
  valued_check->add_flag("--alg-maximal", o.alg_maximal);
  valued_check->add_option("--bound", o.bound)->check(CLI::PositiveNumber);

  auto* rep = app.add_subcommand("report", "Counting tables and property checks")->require_subcommand(1)->fallthrough();
  auto* rep_all = leaf(rep, "all", "Full table", [&] {
    report = report_all(o.max_q);
    payload = report_json(*report);
  });
  rep_all->add_option("--max-q", o.max_q);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    action();
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    if (e.code() == ErrorCode::ParseError) return kParseError;
    if (e.code() == ErrorCode::CrossCheckFailure) return kCrossCheckFailure;
    return kComputationError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kComputationError;
  }

  payload["schema"] = kSchema;
  if (o.format == "tsv") {
    if (report) {
      emit_report_tsv(*report, out);
    } else {
      emit_tsv(payload, "", out);
    }
  } else {
    out << payload.dump(2) << '\n';
  }
  if (report && !report->ok()) {
    err << "error: report cross-check failed\n";
    return kCrossCheckFailure;
  }
  return kOk;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace asf::cli
