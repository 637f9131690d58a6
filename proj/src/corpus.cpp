// SPDX-License-Identifier: Apache-2.0
#include "nacll/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <sstream>

#include "nacll/classical.hpp"
#include "nacll/intuitionistic.hpp"

namespace nacll {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int to_int(const std::string& v, const std::string& where) {
  try {
    std::size_t used = 0;
    int n = std::stoi(v, &used);
    if (used == v.size() && n >= 0) return n;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::Parse, where + ": expected a non-negative number, got '" + v + "'");
}

fs::path relative_to(const std::string& file, const std::string& p) {
  return fs::path(file).parent_path() / p;
}

}  // namespace

std::vector<CorpusCase> parse_cases(const std::string& text, const std::string& file) {
  std::vector<CorpusCase> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::string where = file + ":" + std::to_string(lineno);
    auto sp = line.find_first_of(" \t");
    std::string key = line.substr(0, sp);
    std::string val = sp == std::string::npos ? "" : trim(line.substr(sp));
    if (key == "case") {
      out.emplace_back();
      out.back().name = val;
      out.back().file = file;
      continue;
    }
    if (out.empty()) throw Error(ErrorCode::Parse, where + ": '" + key + "' before any 'case' line");
    CorpusCase& c = out.back();
    if (key == "source") c.source = val;
    else if (key == "system") {
      if (val != "classical" && val != "int" && val != "int-plus")
        throw Error(ErrorCode::Parse, where + ": unknown system '" + val + "'");
      c.system = val;
    } else if (key == "zero") c.zero = val == "yes";
    else if (key == "sig") c.sig_path = val;
    else if (key == "sequent") c.sequent = val;
    else if (key == "proof") c.proof_path = val;
    else if (key == "mode") {
      if (val != "strict" && val != "modulo") throw Error(ErrorCode::Parse, where + ": unknown mode '" + val + "'");
      c.mode = val;
    } else if (key == "expect") {
      static const char* const kOk[] = {"Proved", "Exhausted", "BudgetExceeded", "CheckOk", "CheckFails"};
      if (std::find(std::begin(kOk), std::end(kOk), val) == std::end(kOk))
        throw Error(ErrorCode::Parse, where + ": unknown expectation '" + val + "'");
      c.expect = val;
    } else if (key == "depth") c.budget.max_depth = to_int(val, where);
    else if (key == "contractions") c.budget.max_contractions = to_int(val, where);
    else if (key == "visited") c.budget.max_visited = static_cast<std::size_t>(to_int(val, where));
    else throw Error(ErrorCode::Parse, where + ": unknown key '" + key + "'");
  }
  for (const CorpusCase& c : out) {
    if (c.expect.empty()) throw Error(ErrorCode::Parse, file + ": case '" + c.name + "' has no expectation");
    bool check = c.expect == "CheckOk" || c.expect == "CheckFails";
    if (check && c.proof_path.empty()) throw Error(ErrorCode::Parse, file + ": case '" + c.name + "' needs a proof");
    if (!check && !c.sequent) throw Error(ErrorCode::Parse, file + ": case '" + c.name + "' needs a sequent");
  }
  return out;
}

std::vector<CorpusCase> load_cases(const std::string& dir) {
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& e : fs::directory_iterator(dir, ec))
    if (e.is_regular_file() && e.path().extension() == ".case") files.push_back(e.path());
  if (ec) throw Error(ErrorCode::Io, "cannot read directory " + dir + ": " + ec.message());
  std::sort(files.begin(), files.end());
  std::vector<CorpusCase> out;
  for (const auto& f : files) {
    auto cs = parse_cases(read_file(f), f.string());
    out.insert(out.end(), cs.begin(), cs.end());
  }
  return out;
}

CaseResult run_case(const CorpusCase& c) {
  CaseResult r;
  r.name = c.name;
  r.expected = c.expect;
  auto t0 = std::chrono::steady_clock::now();
  try {
    Signature sig;
    if (!c.sig_path.empty()) sig = load_signature(read_file(relative_to(c.file, c.sig_path)));
    IConfig cfg{c.system == "int-plus" ? ISystem::ALL_PLUS : ISystem::ALL, c.zero};
    bool classical = c.system == "classical";
    if (c.expect == "CheckOk" || c.expect == "CheckFails") {
      Proof p = parse_proof(read_file(relative_to(c.file, c.proof_path)));
      std::optional<Violation> v =
          classical ? check_proof(p, sig, c.mode == "modulo" ? Mode::Modulo : Mode::Strict) : check_proof_i(p, sig, cfg);
      if (!v && c.sequent && !(parse_sequent(*c.sequent) == p.conclusion))
        v = Violation{"proof concludes " + p.conclusion.text() + ", not " + *c.sequent, {}};
      r.actual = v ? "CheckFails" : "CheckOk";
      if (v) r.detail = v->where() + ": " + v->message;
    } else {
      Sequent s = parse_sequent(*c.sequent);
      SearchOutcome o = classical ? prove_classical(s, sig, c.budget) : prove_intuitionistic(s, sig, cfg, c.budget);
      r.actual = status_name(o.status);
      r.detail = o.report;
    }
  } catch (const Error& e) {
    r.actual = "Error";
    r.detail = e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.pass = r.actual == r.expected;
  return r;
}

std::vector<CaseResult> run_corpus(const std::vector<CorpusCase>& cases) {
  std::vector<std::future<CaseResult>> jobs;
  for (const CorpusCase& c : cases) jobs.push_back(std::async(std::launch::async, run_case, std::cref(c)));
  std::vector<CaseResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

std::string format_report(const std::vector<CaseResult>& results) {
  std::ostringstream os;
  int passed = 0;
  for (const CaseResult& r : results) {
    passed += r.pass;
    os << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(32) << r.name << " expected " << std::setw(14)
       << r.expected << " got " << std::setw(14) << r.actual << std::right << std::fixed << std::setprecision(1)
       << std::setw(9) << r.millis << " ms";
    if (!r.pass && !r.detail.empty()) os << "  (" << r.detail << ")";
    os << "\n";
  }
  os << passed << "/" << results.size() << " cases passed\n";
  return os.str();
}

}  // namespace nacll
