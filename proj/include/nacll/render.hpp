// SPDX-License-Identifier: Apache-2.0
//
// Human-readable proof output.
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "nacll/proof.hpp"

namespace nacll {

enum class RenderFormat {
  Text,     // indented tree, ASCII
  Unicode,  // indented tree with the usual connective glyphs
  Latex,    // bussproofs; needs the bussproofs and cmll packages
};

std::optional<RenderFormat> render_format_from_name(std::string_view name);

std::string render(const Proof& p, RenderFormat format);

/// Formula and sequent printers used by the renderer.
std::string render_formula(const Formula& f, RenderFormat format);
std::string render_sequent(const Sequent& s, RenderFormat format);

}  // namespace nacll
