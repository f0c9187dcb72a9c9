// segal-cli: build, check, count and export finite simplicial objects.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "segal/comparison.hpp"
#include "segal/errors.hpp"
#include "segal/filtration.hpp"
#include "segal/nerve.hpp"
#include "segal/segal_checker.hpp"
#include "segal/serialization.hpp"

using namespace segal;
namespace fs = std::filesystem;

namespace {

  struct Output {
    std::string format = "json";
    std::string file;
    std::string dir;
  };

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ArgumentError("cannot read '" + path + "'");
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  void emit(Output const& out, std::string const& content) {
    if (out.file.empty()) {
      std::cout << content;
      return;
    }
    fs::path target = out.file;
    if (target.is_relative()) {
      target = fs::path(out.dir) / target;
    }
    if (target.has_parent_path()) {
      fs::create_directories(target.parent_path());
    }
    fs::path tmp = target;
    tmp += ".partial";
    {
      std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
      if (!f) {
        throw ArgumentError("cannot write '" + tmp.string() + "'");
      }
      f << content;
    }
    fs::rename(tmp, target);
  }

  std::vector<std::string> numbered(std::size_t count) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < count; ++i) {
      names.push_back(std::to_string(i));
    }
    return names;
  }

  // A simplicial set document is read as its transpose, with one object
  // per vertex.
  SegalPrecategory load_space(Json const& doc, std::size_t inner = 0) {
    if (doc.value("kind", "") == "simplicial_set") {
      auto set = simplicial_set_from_json(doc);
      return make_precategory(transpose(set, inner), numbered(set.size(0)));
    }
    return precategory_from_json(doc);
  }

  std::string text_of(Json const& report) {
    std::ostringstream s;
    for (auto const& [k, v] : report.items()) {
      s << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    return s.str();
  }

  std::string render(Output const& out, Json const& report) {
    if (out.format == "text") {
      return text_of(report);
    }
    return canonical_dump(report);
  }

  std::vector<Id> parse_labels(std::vector<std::size_t> const& x) {
    return {x.begin(), x.end()};
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite truncations of simplicial monoids and Segal categories"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  char const* env = std::getenv("SEGAL_OUT_DIR");
  out.dir         = env ? env : ".";
  app.add_option("--format", out.format, "json, text, csv or dot")
      ->check(CLI::IsMember({"json", "text", "csv", "dot"}));
  app.add_option("-o,--output", out.file, "write to this file (relative to --out-dir)");
  app.add_option("--out-dir", out.dir, "output directory (default $SEGAL_OUT_DIR or .)");

  int status = 0;

  // build
  auto*                    build = app.add_subcommand("build", "construct an object");
  std::string              kind;
  std::size_t              n = 1, k = 0, m = 0, trunc = 3, outer = 2, inner = 1, objects = 1;
  std::size_t              jmax = 3, order = 2, max_size = 5;
  std::uint64_t            seed = 1;
  bool                     pushout_route = false;
  std::vector<std::size_t> labels;
  build->add_option("--kind", kind,
                    "simplex, boundary, horn, labeled, g, P, Q, R, psi, cyclic, random-monoid")
      ->required();
  build->add_option("--n", n);
  build->add_option("--k", k);
  build->add_option("--m", m);
  build->add_option("--trunc", trunc);
  build->add_option("--outer", outer);
  build->add_option("--inner", inner);
  build->add_option("--objects", objects);
  build->add_option("--x", labels, "object labels of the vertices");
  build->add_option("--jmax", jmax);
  build->add_option("--order", order);
  build->add_option("--seed", seed);
  build->add_option("--max-size", max_size);
  build->add_flag("--pushout", pushout_route, "psi: build by attaching simplices");
  build->callback([&] {
    Json doc;
    auto x = labels.empty() ? std::vector<Id>(n + 1, 0) : parse_labels(labels);
    if (kind == "simplex" || kind == "boundary" || kind == "horn") {
      auto sk = kind == "simplex" ? StandardKind::simplex
                : kind == "boundary" ? StandardKind::boundary : StandardKind::horn;
      doc = to_json(generate(sk, n, kind == "horn" ? std::optional<std::size_t>(k) : std::nullopt,
                             trunc));
    } else if (kind == "labeled") {
      doc = to_json(labeled_simplex(n, x, numbered(objects), outer, inner));
    } else if (kind == "g") {
      doc = to_json(g_object(n, x, numbered(objects), outer, inner).object);
    } else if (kind == "P" || kind == "Q" || kind == "R") {
      auto gk = kind == "P" ? GeneratingKind::P : kind == "Q" ? GeneratingKind::Q : GeneratingKind::R;
      doc = to_json(generating_object(gk, m, n, kind == "R" ? std::optional<std::size_t>(k)
                                                            : std::nullopt,
                                      x, numbered(objects), outer, inner));
    } else if (kind == "psi") {
      doc = to_json(pushout_route ? psi_pushout(n, k, jmax).stages[k].set
                                  : psi_formula(n, k, jmax).set);
    } else if (kind == "cyclic") {
      doc = to_json(cyclic_monoid(order));
    } else if (kind == "random-monoid") {
      std::mt19937_64 rng(seed);
      doc         = to_json(random_monoid(rng, max_size));
      doc["seed"] = seed;
    } else {
      throw ArgumentError("field 'kind': unknown kind '" + kind + "'");
    }
    emit(out, out.format == "dot" ? to_dot(load_space(doc)) : canonical_dump(doc));
  });

  // validate
  auto*       val = app.add_subcommand("validate", "check the simplicial identities");
  std::string input;
  val->add_option("--input", input)->required();
  val->callback([&] {
    auto const doc = parse_document(read_file(input));
    Json       report;
    report["input"] = input;
    std::vector<std::string> violations;
    if (doc.value("kind", "") == "simplicial_set") {
      for (auto const& v : validate(simplicial_set_from_json(doc)).violations) {
        violations.push_back(v.describe());
      }
    } else {
      try {
        precategory_from_json(doc);
      } catch (ArgumentError const& e) {
        violations.push_back(e.what());
      }
    }
    report["violations"] = violations;
    report["ok"]         = violations.empty();
    status               = violations.empty() ? 0 : 1;
    emit(out, render(out, report));
  });

  // segal
  auto*       seg  = app.add_subcommand("segal", "strict Segal check");
  std::size_t kmax = 2;
  seg->add_option("--input", input)->required();
  seg->add_option("--kmax", kmax);
  seg->callback([&] {
    auto const x     = load_space(parse_document(read_file(input)));
    auto const check = strict_segal_check(x, kmax);
    Json       rows  = Json::array();
    std::ostringstream csv;
    csv << "k,inner,domain,codomain,verdict,witness\n";
    for (auto const& r : check.rows) {
      rows.push_back({{"k", r.k}, {"inner", r.inner}, {"domain", r.domain},
                      {"codomain", r.codomain}, {"verdict", to_string(r.verdict)},
                      {"witness", r.witness}});
      csv << r.k << "," << r.inner << "," << r.domain << "," << r.codomain << ","
          << to_string(r.verdict) << ",\"" << r.witness << "\"\n";
    }
    Json report{{"input", input}, {"bounds", {{"kmax", kmax}}}, {"rows", rows},
                {"passed", check.passed}};
    status = check.passed ? 0 : 1;
    emit(out, out.format == "csv" ? csv.str() : render(out, report));
  });

  // nerve
  auto*       ner = app.add_subcommand("nerve", "nerve of a monoid, free monoid or free category");
  std::string monoid_file, graph_file;
  std::size_t L = 4, letters = 0, N = 3;
  bool        as_space_flag = false;
  ner->add_option("--monoid", monoid_file);
  ner->add_option("--graph", graph_file);
  ner->add_option("--free", letters, "number of letters of a free monoid");
  ner->add_option("--L", L);
  ner->add_option("--N", N);
  ner->add_option("--inner", inner);
  ner->add_flag("--space", as_space_flag, "emit the transposed precategory");
  ner->callback([&] {
    NerveObject              nerve;
    std::vector<std::string> objs = point_object();
    if (!monoid_file.empty()) {
      nerve = nerve_monoid(monoid_from_json(parse_document(read_file(monoid_file))), N);
    } else if (!graph_file.empty()) {
      auto g = graph_from_json(parse_document(read_file(graph_file)));
      nerve  = nerve_category(free_category(g, L), N);
      objs   = numbered(g.objects);
    } else if (letters > 0) {
      nerve = nerve_free_monoid(letters, N, L);
    } else {
      throw ArgumentError("field 'nerve': give --monoid, --graph or --free");
    }
    if (out.format == "text") {
      std::ostringstream s;
      s << nerve.provenance << "\n";
      for (std::size_t lvl = 0; lvl < nerve.bar.size(); ++lvl) {
        for (auto const& b : nerve.bar[lvl]) {
          s << lvl << " " << b << "\n";
        }
      }
      emit(out, s.str());
      return;
    }
    if (as_space_flag || out.format == "dot") {
      auto sp = nerve_space(nerve, objs, inner);
      emit(out, out.format == "dot" ? to_dot(sp) : canonical_dump(to_json(sp)));
    } else {
      emit(out, canonical_dump(to_json(nerve.set)));
    }
  });

  // j-check
  auto*       jc   = app.add_subcommand("j-check", "cosimplicial identities and Yoneda pairing");
  std::size_t nmax = 5;
  bool        swapped = false;
  jc->add_option("--nmax", nmax);
  jc->add_option("--monoid", monoid_file)->required();
  jc->add_flag("--swapped", swapped, "use the swapped case split of the coface rule");
  jc->callback([&] {
    auto const reading =
        build_J(nmax, swapped ? CofaceReading::swapped : CofaceReading::standard, false);
    auto const bad     = cosimplicial_violations(reading);
    Json       report{{"bounds", {{"nmax", nmax}}},
                      {"reading", swapped ? "swapped" : "standard"},
                      {"identity_violations", bad}};
    bool ok = bad.empty();
    try {
      auto const y = yoneda_compat(monoid_from_json(parse_document(read_file(monoid_file))),
                                   reading);
      report["orientation"]        = y.orientation;
      report["face_pairing"]       = y.face_pairing;
      report["degeneracy_pairing"] = y.degeneracy_pairing;
    } catch (ValidationError const& e) {
      report["yoneda_error"] = e.what();
      ok                     = false;
    }
    report["passed"] = ok;
    status           = ok ? 0 : 1;
    emit(out, render(out, report));
  });

  // kan
  auto*       kan = app.add_subcommand("kan", "truncated left Kan extension along J");
  std::size_t m_max = 1, d_max = 2;
  bool        raise = false;
  kan->add_option("--input", input)->required();
  kan->add_option("--m-max", m_max);
  kan->add_option("--L", L);
  kan->add_option("--d-max", d_max);
  kan->add_flag("--raise", raise, "also run with every bound raised by one and diff");
  kan->callback([&] {
    auto const x   = load_space(parse_document(read_file(input)));
    auto       job = [&](KanBounds b) {
      auto const k = kan_extend(x, b);
      Json       counts = Json::array();
      for (auto const& v : k.values) {
        counts.push_back(v.sizes());
      }
      return Json{{"bounds", {{"m_max", b.m_max}, {"L", b.L}, {"d_max", b.d_max}}},
                  {"class_counts", counts},
                  {"partition_stable", k.partition_stable},
                  {"certified", k.certified},
                  {"certificate", k.certificate}};
    };
    KanBounds b{m_max, L, d_max};
    Json      report = job(b);
    if (raise) {
      KanBounds wider{std::min(m_max + 1, x.space.outer_truncation()), L + 1, d_max + 1};
      Json      r2   = job(wider);
      Json      diff = Json::array();
      for (std::size_t d = 0; d <= d_max; ++d) {
        if (report["class_counts"][d] != r2["class_counts"][d]) {
          diff.push_back({{"d", d}, {"before", report["class_counts"][d]},
                          {"after", r2["class_counts"][d]}});
        }
      }
      report["raised"] = r2;
      report["diff"]   = diff;
    }
    emit(out, render(out, report));
  });

  // filtration
  auto*       fil = app.add_subcommand("filtration", "Ψ_k by formula and by attaching cells");
  bool        compare = false;
  std::size_t stab = 0;
  fil->add_option("--n", n);
  fil->add_option("--k", k);
  fil->add_option("--jmax", jmax);
  fil->add_flag("--compare", compare, "check formula against pushout");
  fil->add_option("--stabilize", stab, "also run the stabilization check at this L");
  fil->callback([&] {
    auto const rows = filtration_counts(n, k, jmax);
    Json       table = Json::array();
    std::ostringstream csv;
    csv << "n,k,j,count_formula,count_pushout,nerve_count,nondegenerate,agree\n";
    bool ok = true;
    for (auto const& r : rows) {
      bool const agree = r.iso && r.formula == r.pushout && r.nerve == r.pushout;
      ok               = ok && agree;
      table.push_back({{"n", r.n}, {"k", r.k}, {"j", r.j}, {"count_formula", r.formula},
                       {"count_pushout", r.pushout}, {"nerve_count", r.nerve},
                       {"nondegenerate", r.nondegenerate}, {"agree", agree}});
      csv << r.n << "," << r.k << "," << r.j << "," << r.formula << "," << r.pushout << ","
          << r.nerve << "," << r.nondegenerate << "," << (agree ? "yes" : "no") << "\n";
    }
    Json report{{"bounds", {{"n", n}, {"k", k}, {"jmax", jmax}}}, {"rows", table}};
    if (stab > 0) {
      auto s = stabilization_check(n, stab, std::max(k, stab), jmax);
      report["stabilization"] = {{"L", stab}, {"equal_by_k", s.equal},
                                 {"threshold", s.threshold ? Json(*s.threshold) : Json()},
                                 {"nerve_sizes", s.sizes}};
      ok = ok && s.threshold == stab;
    }
    report["passed"] = ok;
    status           = compare && !ok ? 1 : 0;
    emit(out, out.format == "csv" ? csv.str() : render(out, report));
  });

  // count
  auto*       cnt  = app.add_subcommand("count", "enumerate words, hom-sets and free-category homs");
  std::string mode = "total";
  bool        list = false;
  cnt->add_option("--m", m);
  cnt->add_option("--n", n);
  cnt->add_option("--L", L);
  cnt->add_option("--mode", mode)->check(CLI::IsMember({"total", "per-entry"}));
  cnt->add_option("--graph", graph_file);
  cnt->add_flag("--list", list);
  cnt->callback([&] {
    Json report;
    if (!graph_file.empty()) {
      auto const c = free_category(graph_from_json(parse_document(read_file(graph_file))), L);
      Json       homs = Json::array();
      for (Id a = 0; a < c.graph.objects; ++a) {
        for (Id b = 0; b < c.graph.objects; ++b) {
          Json entry{{"source", a}, {"target", b}, {"count", c.hom(a, b).size()}};
          if (list) {
            Json paths = Json::array();
            for (auto const& p : c.hom(a, b)) {
              paths.push_back(format_path(p));
            }
            entry["paths"] = paths;
          }
          homs.push_back(entry);
        }
      }
      report = {{"bounds", {{"L", L}}}, {"homs", homs}};
    } else {
      auto const lb   = mode == "total" ? LengthBound::total : LengthBound::per_entry;
      auto const homs = enumerate_morphisms(m, n, L, lb);
      report = {{"bounds", {{"m", m}, {"n", n}, {"L", L}, {"mode", mode}}},
                {"words", enumerate_words(m, L).size()},
                {"morphisms", homs.size()}};
      if (list) {
        Json all = Json::array();
        for (auto const& f : homs) {
          all.push_back(f.components);
        }
        report["list"] = all;
      }
    }
    emit(out, render(out, report));
  });

  // export / import
  auto* exp = app.add_subcommand("export", "canonical JSON or DOT of a document");
  exp->add_option("--input", input)->required();
  exp->callback([&] {
    auto const doc = parse_document(read_file(input));
    if (out.format == "dot") {
      emit(out, to_dot(load_space(doc)));
      return;
    }
    auto const kind_name = doc.value("kind", "");
    Json       canon;
    if (kind_name == "simplicial_set") {
      canon = to_json(simplicial_set_from_json(doc));
    } else if (kind_name == "simplicial_space") {
      canon = to_json(precategory_from_json(doc));
    } else if (kind_name == "monoid") {
      canon = to_json(monoid_from_json(doc));
    } else if (kind_name == "graph") {
      canon = to_json(graph_from_json(doc));
    } else {
      throw ArgumentError("field 'kind': unknown kind '" + kind_name + "'");
    }
    emit(out, canonical_dump(canon));
  });
  auto* imp = app.add_subcommand("import", "read, validate and re-emit a document");
  imp->add_option("--input", input)->required();
  imp->callback([&] {
    auto const doc       = parse_document(read_file(input));
    auto const kind_name = doc.value("kind", "");
    Json       canon;
    if (kind_name == "simplicial_set") {
      auto x = simplicial_set_from_json(doc);
      auto v = validate(x);
      if (!v.ok()) {
        throw ValidationError(v.violations.front().describe());
      }
      canon = to_json(x);
    } else if (kind_name == "simplicial_space") {
      canon = to_json(precategory_from_json(doc));
    } else if (kind_name == "monoid") {
      canon = to_json(monoid_from_json(doc));
    } else if (kind_name == "graph") {
      canon = to_json(graph_from_json(doc));
    } else {
      throw ArgumentError("field 'kind': unknown kind '" + kind_name + "'");
    }
    emit(out, canonical_dump(canon));
  });

  // diff
  auto*       dif = app.add_subcommand("diff", "compare two documents");
  std::string first, second;
  dif->add_option("first", first)->required();
  dif->add_option("second", second)->required();
  dif->callback([&] {
    auto const a = parse_document(read_file(first));
    auto const b = parse_document(read_file(second));
    Json       report{{"first", first}, {"second", second}};
    if (a == b) {
      report["result"] = "identical";
    } else if (a.value("kind", "") == "simplicial_set" && b.value("kind", "") == "simplicial_set") {
      auto r           = iso_check(simplicial_set_from_json(a), simplicial_set_from_json(b));
      report["result"] = r.map ? "isomorphic" : "different";
      report["witness"] = r.witness;
    } else if (a.value("kind", "") == "simplicial_space"
               && b.value("kind", "") == "simplicial_space") {
      auto r = iso_check(precategory_from_json(a).space, precategory_from_json(b).space);
      report["result"]  = r.map ? "isomorphic" : "different";
      report["witness"] = r.witness;
    } else {
      report["result"] = "different";
    }
    status = report["result"] == "different" ? 1 : 0;
    emit(out, render(out, report));
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (ArgumentError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (ValidationError const& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return 2;
  } catch (ConstructionError const& e) {
    std::cerr << "construction failed: " << e.what() << "\n";
    return 3;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
