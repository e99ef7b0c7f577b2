#include "circiso/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "circiso/error.hpp"

namespace circiso {

namespace {

Json sets_json(const std::vector<ConnectionSet>& sets) {
  Json out = Json::array();
  for (const auto& cs : sets) out.push_back(to_text(cs));
  return out;
}

std::string join_orbit(const AdamOrbit& orbit) {
  std::string out;
  for (const auto& cs : orbit.members) {
    if (!out.empty()) out += ';';
    out += to_text(cs);
  }
  return out;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::optional<ConnectionSet> try_parse(const std::string& text) {
  try {
    return parse_connection_set(text);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

Json to_json(const IsoVerdict& v) {
  Json out;
  out["kind"] = std::string(to_string(v.kind));
  switch (v.kind) {
    case IsoVerdict::Kind::Isomorphic:
      out["permutation"] = v.permutation;
      break;
    case IsoVerdict::Kind::NonIsomorphic:
      out["invariant"] = v.invariant;
      if (v.invariant == "spectrum") out["index"] = v.index;
      break;
    case IsoVerdict::Kind::Timeout:
      out["reason"] = v.invariant;
      break;
  }
  return out;
}

Json to_json(const Classification& c) {
  Json out;
  out["verdict"] = std::string(c.kind());
  if (const auto* w = std::get_if<Type1>(&c.verdict)) {
    out["x"] = w->x;
  } else if (const auto* w2 = std::get_if<Type2>(&c.verdict)) {
    out["m"] = w2->m;
    out["t"] = w2->t;
    out["chain"] = sets_json(w2->chain);
  } else if (const auto* ni = std::get_if<NonIsomorphic>(&c.verdict)) {
    out["certificate"] = to_json(ni->certificate);
  } else if (const auto* u = std::get_if<Unknown>(&c.verdict)) {
    out["reason"] = u->reason;
  }
  out["orbit"] = sets_json(c.orbit.members);
  return out;
}

Json to_json(const TupleRecord& r, std::optional<std::size_t> row) {
  Json out;
  if (row) out["row"] = *row;
  out["members"] = sets_json(r.members);
  Json images = Json::object();
  for (const auto& [t, cs] : r.theta_images) images[std::to_string(t)] = to_text(cs);
  out["theta_images"] = std::move(images);
  out["classification"] = to_json(r.classification);
  return out;
}

Json to_json(const ScanReport& r) {
  Json out;
  out["n"] = r.n;
  out["convention"] = r.convention;
  Json counts = Json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  out["counts"] = std::move(counts);
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    Json j;
    j["R"] = to_text(p.r);
    j["S"] = to_text(p.s);
    j["m"] = p.m;
    j["t"] = p.t;
    j["source"] = p.reversed ? "S" : "R";
    pairs.push_back(std::move(j));
  }
  out["pairs"] = std::move(pairs);
  Json records = Json::array();
  for (const auto& rec : r.records) records.push_back(to_json(rec));
  out["records"] = std::move(records);
  return out;
}

Json to_json(const std::vector<ProbeEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) {
    Json j;
    j["problem"] = e.problem;
    j["s"] = e.s;
    j["a"] = to_text(e.a);
    j["b"] = to_text(e.b);
    j["verdict"] = to_json(e.verdict);
    j["certificate"] = e.verdict.serialize();
    out.push_back(std::move(j));
  }
  return out;
}

std::string verdict_cell(const Classification& c) {
  if (std::holds_alternative<Type1>(c.verdict)) return "T1";
  if (std::holds_alternative<Type2>(c.verdict)) return "T2";
  if (std::holds_alternative<NonIsomorphic>(c.verdict)) return "NI";
  return "U";
}

std::string csv_row(std::size_t row, const TupleRecord& r) {
  auto image = [&](int t) {
    auto it = r.theta_images.find(t);
    return it == r.theta_images.end() ? std::string() : to_text(it->second);
  };
  std::ostringstream os;
  os << row << ',' << to_text(r.members.front()) << ',' << image(2) << ',' << image(4) << ",\""
     << join_orbit(r.classification.orbit) << "\"," << verdict_cell(r.classification);
  return os.str();
}

std::string to_csv(const std::vector<TupleRecord>& records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (std::size_t i = 0; i < records.size(); ++i) {
    out += csv_row(i + 1, records[i]);
    out += '\n';
  }
  return out;
}

std::string to_jsonl(const std::vector<TupleRecord>& records) {
  std::string out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    out += to_json(records[i], i + 1).dump();
    out += '\n';
  }
  return out;
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!f) throw Error(ErrorCode::Io, "write failed: " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void export_csv(const std::vector<TupleRecord>& records, const std::filesystem::path& path) {
  if (records.empty()) throw Error(ErrorCode::InvalidParams, "no records to export");
  write_file(path, to_csv(records));
}

void export_jsonl(const std::vector<TupleRecord>& records, const std::filesystem::path& path) {
  if (records.empty()) throw Error(ErrorCode::InvalidParams, "no records to export");
  write_file(path, to_jsonl(records));
}

// ---------------------------------------------------------------- goldens

std::vector<GoldenRow> parse_goldens(std::string_view text) {
  std::vector<GoldenRow> out;
  std::size_t line_no = 0;
  for (const auto& raw : split(text, '\n')) {
    ++line_no;
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto cells = split(line, '\t');
    auto fail = [&](const std::string& why) {
      return Error(ErrorCode::Parse, "goldens line " + std::to_string(line_no) + ": " + why);
    };
    if (cells.size() != 8) throw fail("expected 8 tab-separated cells, got " + std::to_string(cells.size()));
    GoldenRow row;
    try {
      row.table_no = std::stoi(cells[0]);
      row.row_no = std::stoi(cells[1]);
    } catch (const std::exception&) {
      throw fail("bad table or row number");
    }
    if (cells[2] != "a" && cells[2] != "b") throw fail("family must be a or b");
    row.family = cells[2][0];
    row.r = cells[3];
    row.theta_t2 = cells[4];
    row.theta_t4 = cells[5];
    row.adam_orbit = split(cells[6], ';');
    row.expected_verdict = cells[7];
    if (row.expected_verdict != "T1" && row.expected_verdict != "T2") throw fail("verdict must be T1 or T2");
    out.push_back(std::move(row));
  }
  return out;
}

GoldenReport verify_goldens(const std::vector<GoldenRow>& rows, int workers) {
  GoldenReport report;
  report.rows = rows.size();
  std::vector<TupleRecord> fam[2];
  bool need[2] = {false, false};
  for (const auto& g : rows) need[g.family == 'b'] = true;
  for (int f = 0; f < 2; ++f)
    if (need[f]) fam[f] = enumerate_family(family(f == 0 ? 'a' : 'b'), workers);

  for (const auto& g : rows) {
    const std::string where =
        "table " + std::to_string(g.table_no) + " row " + std::to_string(g.row_no) + " (family " + g.family + ")";
    const auto& records = fam[g.family == 'b'];
    if (g.row_no < 1 || static_cast<std::size_t>(g.row_no) > records.size()) {
      report.mismatches.push_back(where + ": no such row");
      continue;
    }
    const TupleRecord& rec = records[static_cast<std::size_t>(g.row_no - 1)];

    auto compare = [&](const std::string& column, const std::string& printed, const ConnectionSet& computed) {
      auto parsed = try_parse(printed);
      if (!parsed)
        report.warnings.push_back(where + ": unparsable printed " + column + " '" + printed + "'");
      else if (*parsed != computed)
        report.warnings.push_back(where + ": printed " + column + " " + printed + ", computed " +
                                  to_text(computed));
    };
    compare("R", g.r, rec.members[0]);
    compare("theta_t2", g.theta_t2, rec.theta_images.at(2));
    compare("theta_t4", g.theta_t4, rec.theta_images.at(4));

    std::vector<ConnectionSet> printed_orbit;
    bool orbit_parsed = true;
    for (const auto& cell : g.adam_orbit) {
      auto p = try_parse(cell);
      if (!p) {
        report.warnings.push_back(where + ": unparsable printed orbit member '" + cell + "'");
        orbit_parsed = false;
        continue;
      }
      printed_orbit.push_back(*p);
    }
    std::sort(printed_orbit.begin(), printed_orbit.end());
    printed_orbit.erase(std::unique(printed_orbit.begin(), printed_orbit.end()), printed_orbit.end());
    if (orbit_parsed && printed_orbit != rec.classification.orbit.members)
      report.warnings.push_back(where + ": printed orbit differs from computed orbit of " +
                                to_text(rec.members[0]));

    const std::string got = verdict_cell(rec.classification);
    if (got != g.expected_verdict)
      report.mismatches.push_back(where + ": expected " + g.expected_verdict + ", computed " + got + " (" +
                                  rec.classification.summary() + ")");
    else
      ++report.matches;
  }
  return report;
}

}  // namespace circiso
