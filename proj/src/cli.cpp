#include "circiso/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "circiso/error.hpp"
#include "circiso/report.hpp"
#include "circiso/theta.hpp"

namespace circiso {

namespace {

void print_classification(std::ostream& out, const Classification& c) {
  out << c.summary() << '\n';
  if (const auto* w = std::get_if<Type2>(&c.verdict)) {
    out << "witness: theta(n=" << w->chain.front().order() << ",m=" << w->m << ",t=" << w->t << ") "
        << to_text(w->chain.front()) << " -> " << to_text(w->chain.back()) << '\n';
  } else if (const auto* ni = std::get_if<NonIsomorphic>(&c.verdict)) {
    out << "certificate: " << ni->certificate.serialize() << '\n';
  }
  out << "orbit:";
  for (const auto& m : c.orbit.members) out << ' ' << to_text(m);
  out << '\n';
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circulant graph isomorphism toolkit: multipliers, theta maps, classification"};
  app.require_subcommand(1);

  std::string orbit_set;
  auto* orbit = app.add_subcommand("orbit", "print the Adam orbit of a connection set");
  orbit->add_option("set", orbit_set, "e.g. C54(1,3,17,19)")->required();

  int theta_m = 0, theta_t = 0;
  std::string theta_set;
  auto* theta = app.add_subcommand("theta", "image of a circulant graph under theta_{n,m,t}");
  theta->add_option("--m", theta_m)->required();
  theta->add_option("--t", theta_t)->required();
  theta->add_option("set", theta_set)->required();

  std::vector<std::string> classify_sets;
  std::string expect;
  std::uint64_t classify_budget = kDefaultIsoBudget;
  auto* classify = app.add_subcommand("classify", "classify two or more connection sets of one order");
  classify->add_option("sets", classify_sets)->required()->expected(2, 64);
  classify->add_option("--expect", expect, "exit 1 unless the verdict kind matches (Type1, Type2, ...)");
  classify->add_option("--budget", classify_budget, "oracle node budget");

  std::string family_name, family_csv, family_jsonl;
  auto* fam = app.add_subcommand("enumerate-family", "enumerate the 511 triples of an order-54 family");
  fam->add_option("--family", family_name)->required()->check(CLI::IsMember({"a", "b"}));
  fam->add_option("--out", family_csv, "CSV output (stdout when omitted)");
  fam->add_option("--jsonl", family_jsonl, "JSON-lines output");

  int scan_n = 0;
  std::string scan_out;
  std::optional<int> scan_max;
  auto* scan = app.add_subcommand("scan", "exhaustive Type-2 scan for one order");
  scan->add_option("--n", scan_n)->required();
  scan->add_option("--out", scan_out, "JSON report");
  scan->add_option("--max-jumps", scan_max, "skip sets with more jumps");

  std::vector<int> a17c, c1;
  auto* gen = app.add_subcommand("generate", "closed-form Type-2 constructions");
  auto* a17c_opt = gen->add_option("--a17c", a17c, "k s")->expected(2);
  auto* c1_opt = gen->add_option("--c1", c1, "base p x y")->expected(4);
  a17c_opt->excludes(c1_opt);
  gen->require_option(1);

  std::uint64_t probe_budget = kDefaultIsoBudget;
  std::string probe_out;
  auto* probe = app.add_subcommand("probe-open", "run the oracle on the open-problem pairs");
  probe->add_option("--budget", probe_budget);
  probe->add_option("--out", probe_out, "JSON output");

  std::string golden_file;
  auto* goldens = app.add_subcommand("verify-goldens", "compare the enumeration with the transcribed tables");
  goldens->add_option("--file", golden_file, "golden TSV (the embedded copy when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*orbit) {
      for (const auto& cs : adam_orbit(parse_connection_set(orbit_set)).members) out << to_text(cs) << '\n';
      return 0;
    }

    if (*theta) {
      const ConnectionSet cs = parse_connection_set(theta_set);
      auto image = theta_image(cs, theta_m, theta_t);
      out << (image ? to_text(*image) : std::string("not circulant")) << '\n';
      return 0;
    }

    if (*classify) {
      std::vector<ConnectionSet> sets;
      for (const auto& s : classify_sets) sets.push_back(parse_connection_set(s));
      std::string_view kind;
      if (sets.size() == 2) {
        auto c = classify_pair(sets[0], sets[1], classify_budget);
        print_classification(out, c);
        kind = verdict_kind(c.verdict);
      } else {
        auto rec = classify_tuple(sets, classify_budget);
        print_classification(out, rec.classification);
        for (const auto& [t, img] : rec.theta_images) out << "t=" << t << ": " << to_text(img) << '\n';
        kind = verdict_kind(rec.classification.verdict);
      }
      return !expect.empty() && expect != kind ? 1 : 0;
    }

    if (*fam) {
      Timer timer;
      auto rows = enumerate_family(family(family_name[0]));
      std::size_t t1 = 0, t2 = 0;
      for (const auto& r : rows) {
        const auto cell = verdict_cell(r.classification);
        t1 += cell == "T1";
        t2 += cell == "T2";
      }
      if (family_csv.empty())
        out << to_csv(rows);
      else
        export_csv(rows, family_csv);
      if (!family_jsonl.empty()) export_jsonl(rows, family_jsonl);
      err << "family " << family_name << ": " << rows.size() << " rows, " << t2 << " T2, " << t1 << " T1 ("
          << timer.seconds() << " s)\n";
      return 0;
    }

    if (*scan) {
      Timer timer;
      ScanOptions opt;
      opt.max_jump_count = scan_max;
      auto report = full_scan(scan_n, opt);
      for (const auto& [k, v] : report.counts) out << k << ' ' << v << '\n';
      if (!scan_out.empty()) write_file(scan_out, to_json(report).dump(1) + "\n");
      err << "scan n=" << scan_n << " finished in " << timer.seconds() << " s\n";
      return 0;
    }

    if (*gen) {
      if (!a17c.empty()) {
        auto [r, s] = generate_a17c(a17c[0], a17c[1]);
        out << to_text(r) << ' ' << to_text(s) << '\n';
        print_classification(out, classify_pair(r, s));
      } else {
        auto tuple = generate_c1_tuple(c1[0], c1[1], c1[2], c1[3]);
        for (const auto& cs : tuple) out << to_text(cs) << '\n';
        print_classification(out, classify_tuple(tuple).classification);
      }
      return 0;
    }

    if (*probe) {
      auto entries = probe_open_problems(probe_budget);
      for (const auto& e : entries)
        out << e.problem << " s=" << e.s << ' ' << to_text(e.a) << ' ' << to_text(e.b) << ' '
            << e.verdict.serialize() << '\n';
      if (!probe_out.empty()) write_file(probe_out, to_json(entries).dump(1) + "\n");
      return 0;
    }

    if (*goldens) {
      const std::string text = golden_file.empty() ? std::string(embedded_goldens()) : read_file(golden_file);
      auto report = verify_goldens(parse_goldens(text));
      for (const auto& w : report.warnings) out << "warning: " << w << '\n';
      for (const auto& m : report.mismatches) out << "MISMATCH: " << m << '\n';
      out << "rows " << report.rows << ", verdict matches " << report.matches << ", mismatches "
          << report.mismatches.size() << ", warnings " << report.warnings.size() << '\n';
      return report.ok() ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace circiso
