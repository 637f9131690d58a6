// SPDX-License-Identifier: Apache-2.0
#include "nacll/signature.hpp"

#include <cctype>
#include <sstream>

namespace nacll {

namespace {
constexpr Axiom kAllAxioms[] = {Axiom::C, Axiom::W, Axiom::E, Axiom::A1, Axiom::A2};

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool is_label(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}
}  // namespace

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::C: return "C";
    case Axiom::W: return "W";
    case Axiom::E: return "E";
    case Axiom::A1: return "A1";
    case Axiom::A2: return "A2";
  }
  return "?";
}

std::optional<Axiom> axiom_from_name(std::string_view name) {
  for (Axiom a : kAllAxioms)
    if (name == axiom_name(a)) return a;
  return std::nullopt;
}

std::string AxiomSet::str() const {
  std::string out = "{";
  for (Axiom a : kAllAxioms)
    if (contains(a)) {
      if (out.size() > 1) out += ",";
      out += axiom_name(a);
    }
  return out + "}";
}

void Signature::add_label(const std::string& label, AxiomSet axioms) {
  auto it = index_.find(label);
  if (it != index_.end()) {
    axioms_[it->second] = axioms;
    return;
  }
  int id = static_cast<int>(names_.size());
  index_.emplace(label, id);
  names_.push_back(label);
  axioms_.push_back(axioms);
  for (auto& row : leq_) row.push_back(false);
  leq_.emplace_back(names_.size(), false);
  leq_[id][id] = true;
}

void Signature::add_order(const std::string& lower, const std::string& upper) {
  auto lo = index_.find(lower), up = index_.find(upper);
  if (lo == index_.end()) throw Error(ErrorCode::Signature, "undeclared label in order: " + lower);
  if (up == index_.end()) throw Error(ErrorCode::Signature, "undeclared label in order: " + upper);
  leq_[lo->second][up->second] = true;
}

void Signature::close() {
  const std::size_t n = names_.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k][j]) leq_[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq_[i][j] && !axioms_[i].subset_of(axioms_[j])) {
        for (Axiom a : kAllAxioms)
          if (axioms_[i].contains(a) && !axioms_[j].contains(a))
            throw Error(ErrorCode::Signature, "upward closure violated: " + names_[i] + " <= " + names_[j] +
                                                  " but " + axiom_name(a) + " is missing from " + names_[j]);
      }
}

AxiomSet Signature::axioms(const std::string& label) const {
  auto it = index_.find(label);
  return it == index_.end() ? AxiomSet{} : axioms_[it->second];
}

bool Signature::leq(const std::string& i, const std::string& j) const {
  if (i == j) return true;
  auto a = index_.find(i), b = index_.find(j);
  if (a == index_.end() || b == index_.end()) return false;
  return leq_[a->second][b->second];
}

bool Signature::axioms_within(AxiomSet allowed) const {
  for (AxiomSet s : axioms_)
    if (!s.subset_of(allowed)) return false;
  return true;
}

std::string Signature::text() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    out << "label " << names_[i] << " :";
    bool first = true;
    for (Axiom a : kAllAxioms)
      if (axioms_[i].contains(a)) {
        out << (first ? " " : ", ") << axiom_name(a);
        first = false;
      }
    out << "\n";
  }
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = 0; j < names_.size(); ++j)
      if (i != j && leq_[i][j]) out << "order " << names_[i] << " <= " << names_[j] << "\n";
  return out.str();
}

Signature load_signature(std::string_view text) {
  Signature sig;
  std::vector<std::pair<std::string, std::string>> orders;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    auto where = [&] { return "line " + std::to_string(lineno) + ": "; };
    if (line.rfind("label", 0) == 0 && line.size() > 5 && std::isspace(static_cast<unsigned char>(line[5]))) {
      std::size_t colon = line.find(':');
      if (colon == std::string::npos) throw Error(ErrorCode::Signature, where() + "expected ':'");
      std::string name = trim(std::string_view(line).substr(5, colon - 5));
      if (!is_label(name)) throw Error(ErrorCode::Signature, where() + "bad label '" + name + "'");
      AxiomSet axioms;
      std::string rest = line.substr(colon + 1);
      std::istringstream items(rest);
      std::string item;
      while (std::getline(items, item, ',')) {
        std::string ax = trim(item);
        if (ax.empty()) {
          if (trim(rest).empty()) break;
          throw Error(ErrorCode::Signature, where() + "empty axiom name");
        }
        auto a = axiom_from_name(ax);
        if (!a) throw Error(ErrorCode::Signature, where() + "unknown axiom '" + ax + "'");
        axioms.insert(*a);
      }
      sig.add_label(name, axioms);
    } else if (line.rfind("order", 0) == 0 && line.size() > 5 &&
               std::isspace(static_cast<unsigned char>(line[5]))) {
      std::size_t le = line.find("<=");
      if (le == std::string::npos) throw Error(ErrorCode::Signature, where() + "expected '<='");
      std::string lo = trim(std::string_view(line).substr(5, le - 5));
      std::string up = trim(std::string_view(line).substr(le + 2));
      if (!is_label(lo) || !is_label(up)) throw Error(ErrorCode::Signature, where() + "bad order declaration");
      orders.emplace_back(lo, up);
    } else {
      throw Error(ErrorCode::Signature, where() + "expected 'label' or 'order'");
    }
  }
  for (const auto& [lo, up] : orders) sig.add_order(lo, up);
  sig.close();
  return sig;
}

UpsetResult upset_restrict(const Signature& sig, const Structure& context, const std::string& label,
                           Connective modality) {
  std::vector<std::pair<Path, Structure>> erase;
  bool undefined = false;
  for (const auto& [path, f] : leaves(context)) {
    if (f.kind() != modality) return {UpsetResult::Status::NotApplicable, {}};
    if (sig.leq(label, f.label())) continue;
    if (sig.licenses(f.label(), Axiom::W)) erase.emplace_back(path, Structure::empty());
    else undefined = true;
  }
  if (undefined) return {UpsetResult::Status::Undefined, {}};
  return {UpsetResult::Status::Defined, erase.empty() ? context : replace_many(context, erase)};
}

bool is_licensed_structure(const Signature& sig, const Structure& s, Connective modality, Axiom axiom) {
  if (s.is_empty()) return false;
  for (const auto& [path, f] : leaves(s))
    if (f.kind() != modality || !sig.licenses(f.label(), axiom)) return false;
  return true;
}

}  // namespace nacll
