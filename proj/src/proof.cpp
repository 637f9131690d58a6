// SPDX-License-Identifier: Apache-2.0
#include "nacll/proof.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace nacll {

namespace {

struct RuleEntry {
  Rule rule;
  const char* name;
};

constexpr RuleEntry kRules[] = {
    {Rule::Tensor, "Tensor"}, {Rule::Par, "Par"},         {Rule::PlusL, "PlusL"},     {Rule::PlusR, "PlusR"},
    {Rule::With, "With"},     {Rule::BotIntro, "BotIntro"}, {Rule::OneAx, "OneAx"},   {Rule::TopAx, "TopAx"},
    {Rule::Init, "Init"},     {Rule::Cut, "Cut"},         {Rule::E, "E"},             {Rule::A1, "A1"},
    {Rule::A2, "A2"},         {Rule::Prom, "Prom"},       {Rule::Der, "Der"},         {Rule::QA1, "QA1"},
    {Rule::QA2, "QA2"},       {Rule::QE, "QE"},           {Rule::QW, "QW"},           {Rule::QC, "QC"},
    {Rule::Id, "Id"},         {Rule::TensorL, "TensorL"}, {Rule::TensorR, "TensorR"}, {Rule::ArrowL, "ArrowL"},
    {Rule::ArrowR, "ArrowR"}, {Rule::BackL, "BackL"},     {Rule::BackR, "BackR"},     {Rule::WithL1, "WithL1"},
    {Rule::WithL2, "WithL2"}, {Rule::WithR, "WithR"},     {Rule::OplusL, "OplusL"},   {Rule::OplusR1, "OplusR1"},
    {Rule::OplusR2, "OplusR2"}, {Rule::OneL, "OneL"},     {Rule::OneR, "OneR"},       {Rule::TopR, "TopR"},
    {Rule::ZeroL, "ZeroL"},   {Rule::BangL, "BangL"},     {Rule::BangR, "BangR"},     {Rule::BangW, "BangW"},
    {Rule::BangC, "BangC"},   {Rule::BangE, "BangE"},     {Rule::A1L, "A1L"},         {Rule::A1M, "A1M"},
    {Rule::A1R, "A1R"},       {Rule::A2L, "A2L"},         {Rule::A2M, "A2M"},         {Rule::A2R, "A2R"},
};

}  // namespace

const char* rule_name(Rule r) {
  for (const auto& e : kRules)
    if (e.rule == r) return e.name;
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (const auto& e : kRules)
    if (name == e.name) return e.rule;
  if (name == "IA1") return Rule::A1L;
  if (name == "IA2") return Rule::A2R;
  return std::nullopt;
}

bool is_classical_rule(Rule r) { return static_cast<int>(r) <= static_cast<int>(Rule::QC); }

std::size_t Proof::size() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.size();
  return n;
}

std::size_t Proof::height() const {
  std::size_t h = 0;
  for (const auto& p : premises) h = std::max(h, p.height());
  return h + 1;
}

std::size_t Proof::count(Rule r) const {
  std::size_t n = rule == r ? 1 : 0;
  for (const auto& p : premises) n += p.count(r);
  return n;
}

// ---------------------------------------------------------------------------
// Writer

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

void write(const Proof& p, int indent, std::string& out) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  out += pad + "(rule " + rule_name(p.rule) + " :seq " + quote(p.conclusion.text());
  if (!p.at.empty()) {
    out += " :at (";
    for (std::size_t i = 0; i < p.at.size(); ++i) out += (i ? " " : "") + quote(p.at[i].str());
    out += ")";
  }
  if (p.label) out += " :label " + *p.label;
  if (!p.note.empty()) out += " :note " + quote(p.note);
  if (!p.premises.empty()) {
    out += "\n" + pad + "  :premises (\n";
    for (const auto& q : p.premises) {
      write(q, indent + 4, out);
      out += "\n";
    }
    out += pad + "  ))";
  } else {
    out += ")";
  }
}

}  // namespace

std::string to_sexp(const Proof& p) {
  std::string out;
  write(p, 0, out);
  out += "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Reader

namespace {

struct SExp {
  enum class Kind { Atom, String, List } kind = Kind::Atom;
  std::string text;
  std::vector<SExp> items;
  std::size_t pos = 0;
};

class Reader {
 public:
  explicit Reader(std::string_view t) : t_(t) {}

  void skip() {
    while (i_ < t_.size()) {
      if (std::isspace(static_cast<unsigned char>(t_[i_]))) {
        ++i_;
      } else if (t_[i_] == ';') {
        while (i_ < t_.size() && t_[i_] != '\n') ++i_;
      } else {
        break;
      }
    }
  }

  SExp read() {
    skip();
    if (i_ >= t_.size()) throw ParseError(i_, "unexpected end of proof");
    SExp e;
    e.pos = i_;
    char c = t_[i_];
    if (c == '(') {
      ++i_;
      e.kind = SExp::Kind::List;
      for (;;) {
        skip();
        if (i_ >= t_.size()) throw ParseError(i_, "unterminated list");
        if (t_[i_] == ')') {
          ++i_;
          break;
        }
        e.items.push_back(read());
      }
    } else if (c == '"') {
      ++i_;
      e.kind = SExp::Kind::String;
      for (;;) {
        if (i_ >= t_.size()) throw ParseError(e.pos, "unterminated string");
        char d = t_[i_++];
        if (d == '"') break;
        if (d == '\\' && i_ < t_.size()) d = t_[i_++];
        e.text.push_back(d);
      }
    } else if (c == ')') {
      throw ParseError(i_, "unexpected ')'");
    } else {
      std::size_t start = i_;
      while (i_ < t_.size() && !std::isspace(static_cast<unsigned char>(t_[i_])) && t_[i_] != '(' &&
             t_[i_] != ')' && t_[i_] != '"')
        ++i_;
      e.text = std::string(t_.substr(start, i_ - start));
    }
    return e;
  }

  void finish() {
    skip();
    if (i_ != t_.size()) throw ParseError(i_, "trailing input after proof");
  }

 private:
  std::string_view t_;
  std::size_t i_ = 0;
};

Proof from_sexp(const SExp& e) {
  auto fail = [&](const std::string& msg) -> Proof { throw ParseError(e.pos, msg); };
  if (e.kind != SExp::Kind::List || e.items.size() < 2 || e.items[0].text != "rule")
    return fail("expected (rule NAME ...)");
  Proof p;
  auto r = rule_from_name(e.items[1].text);
  if (!r) return fail("unknown rule '" + e.items[1].text + "'");
  p.rule = *r;
  bool have_seq = false;
  for (std::size_t i = 2; i < e.items.size(); i += 2) {
    const SExp& key = e.items[i];
    if (i + 1 >= e.items.size()) throw ParseError(key.pos, "missing value for " + key.text);
    const SExp& val = e.items[i + 1];
    if (key.text == ":seq") {
      if (val.kind != SExp::Kind::String) throw ParseError(val.pos, ":seq expects a string");
      try {
        p.conclusion = parse_sequent(val.text);
      } catch (const ParseError& err) {
        throw ParseError(val.pos + 1 + err.position(), err.what());
      }
      have_seq = true;
    } else if (key.text == ":at") {
      if (val.kind != SExp::Kind::List) throw ParseError(val.pos, ":at expects a list");
      for (const auto& item : val.items) p.at.push_back(Path::parse(item.text));
    } else if (key.text == ":label") {
      p.label = val.text;
    } else if (key.text == ":note") {
      p.note = val.text;
    } else if (key.text == ":premises") {
      if (val.kind != SExp::Kind::List) throw ParseError(val.pos, ":premises expects a list");
      for (const auto& item : val.items) p.premises.push_back(from_sexp(item));
    } else {
      throw ParseError(key.pos, "unknown key " + key.text);
    }
  }
  if (!have_seq) return fail("missing :seq");
  return p;
}

}  // namespace

Proof parse_proof(std::string_view text) {
  Reader r(text);
  SExp e = r.read();
  r.finish();
  return from_sexp(e);
}

}  // namespace nacll
