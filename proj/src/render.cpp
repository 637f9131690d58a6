// SPDX-License-Identifier: Apache-2.0
#include "nacll/render.hpp"

#include <sstream>

namespace nacll {

std::optional<RenderFormat> render_format_from_name(std::string_view name) {
  if (name == "text") return RenderFormat::Text;
  if (name == "unicode") return RenderFormat::Unicode;
  if (name == "latex") return RenderFormat::Latex;
  return std::nullopt;
}

namespace {

const char* symbol(Connective c, RenderFormat fmt) {
  if (fmt == RenderFormat::Text) return connective_symbol(c);
  bool tex = fmt == RenderFormat::Latex;
  switch (c) {
    case Connective::Tensor: return tex ? "\\otimes" : "⊗";
    case Connective::Par: return tex ? "\\parr" : "⅋";
    case Connective::Plus: return tex ? "\\oplus" : "⊕";
    case Connective::With: return tex ? "\\with" : "&";
    case Connective::ImplR: return tex ? "\\rightarrow" : "→";
    case Connective::ImplL: return tex ? "\\leftarrow" : "←";
    case Connective::One: return "1";
    case Connective::Bot: return tex ? "\\bot" : "⊥";
    case Connective::Zero: return "0";
    case Connective::Top: return tex ? "\\top" : "⊤";
    case Connective::Bang: return "!";
    case Connective::Quest: return "?";
    default: return "";
  }
}

void formula(std::ostream& os, const Formula& f, RenderFormat fmt) {
  bool tex = fmt == RenderFormat::Latex;
  switch (f.kind()) {
    case Connective::Atom: os << f.name(); return;
    case Connective::NegAtom:
      os << f.name() << (fmt == RenderFormat::Text ? "^" : tex ? "^{\\perp}" : "⊥");
      return;
    case Connective::One:
    case Connective::Bot:
    case Connective::Zero:
    case Connective::Top: os << symbol(f.kind(), fmt); return;
    case Connective::Bang:
    case Connective::Quest:
      os << symbol(f.kind(), fmt);
      if (fmt == RenderFormat::Text) os << "[" << f.label() << "]";
      else if (tex) os << "^{" << f.label() << "}";
      else os << f.label() << " ";
      formula(os, f.body(), fmt);
      return;
    default:
      os << "(";
      formula(os, f.lhs(), fmt);
      os << " " << symbol(f.kind(), fmt) << " ";
      formula(os, f.rhs(), fmt);
      os << ")";
  }
}

void structure(std::ostream& os, const Structure& s, RenderFormat fmt) {
  switch (s.kind()) {
    case Structure::Kind::Empty: os << (fmt == RenderFormat::Latex ? "\\cdot" : "()"); return;
    case Structure::Kind::Leaf: formula(os, s.formula(), fmt); return;
    case Structure::Kind::Pair:
      os << "(";
      structure(os, s.left(), fmt);
      os << ", ";
      structure(os, s.right(), fmt);
      os << ")";
  }
}

void sequent(std::ostream& os, const Sequent& s, RenderFormat fmt) {
  const char* turnstile = fmt == RenderFormat::Text ? "|-" : fmt == RenderFormat::Latex ? "\\vdash" : "⊢";
  if (s.goal) {
    if (!s.context.is_empty()) {
      structure(os, s.context, fmt);
      os << " ";
    }
    os << turnstile << " ";
    formula(os, *s.goal, fmt);
  } else {
    os << turnstile << " ";
    if (!s.context.is_empty()) structure(os, s.context, fmt);
  }
}

void tree(std::ostream& os, const Proof& p, RenderFormat fmt, int depth) {
  os << std::string(static_cast<std::size_t>(2 * depth), ' ') << rule_name(p.rule);
  if (p.label) os << "[" << *p.label << "]";
  os << "  ";
  sequent(os, p.conclusion, fmt);
  if (!p.note.empty()) os << "    ; " << p.note;
  os << "\n";
  for (const Proof& q : p.premises) tree(os, q, fmt, depth + 1);
}

std::string tex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '#' || c == '%') out += '\\';
    out += c;
  }
  return out;
}

void bussproofs(std::ostream& os, const Proof& p) {
  if (p.premises.empty()) os << "\\AxiomC{}\n";
  for (const Proof& q : p.premises) bussproofs(os, q);
  std::string label = tex_escape(rule_name(p.rule));
  if (p.label) label += "$^{" + tex_escape(*p.label) + "}$";
  os << "\\RightLabel{\\scriptsize " << label << "}\n";
  static const char* const kInf[] = {"UnaryInfC", "UnaryInfC", "BinaryInfC", "TrinaryInfC"};
  std::size_t n = p.premises.size();
  if (n > 3) throw Error(ErrorCode::Internal, "cannot typeset more than three premises");
  os << "\\" << kInf[n] << "{$";
  sequent(os, p.conclusion, RenderFormat::Latex);
  os << "$}\n";
}

}  // namespace

std::string render_formula(const Formula& f, RenderFormat format) {
  std::ostringstream os;
  formula(os, f, format);
  return os.str();
}

std::string render_sequent(const Sequent& s, RenderFormat format) {
  std::ostringstream os;
  sequent(os, s, format);
  return os.str();
}

std::string render(const Proof& p, RenderFormat format) {
  std::ostringstream os;
  if (format == RenderFormat::Latex) {
    os << "% \\usepackage{bussproofs,cmll}\n\\begin{prooftree}\n";
    bussproofs(os, p);
    os << "\\end{prooftree}\n";
  } else {
    tree(os, p, format, 0);
  }
  return os.str();
}

}  // namespace nacll
