#include "normord/diagrams.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

namespace normord {

std::string default_colour(std::uint32_t mode) {
  static constexpr std::array<const char*, 8> cycle = {"#2060c0", "#20a040", "#c08020", "#8040c0",
                                                       "#20a0a0", "#c04090", "#606060", "#80a020"};
  if (mode == 0) return "#000000";
  if (mode == 1) return "#c02020";
  return cycle[(mode - 2) % cycle.size()];
}

DiagramSpec make_diagram(const Word& word, const Matching& matching, std::size_t modes) {
  DiagramSpec spec{word, matching, modes, {}, {}, false};
  for (std::uint32_t m = 0; m < modes; ++m) spec.palette[m] = default_colour(m);
  return spec;
}

void validate(const DiagramSpec& spec) {
  if (spec.word.mode_span() > spec.modes) throw std::invalid_argument("word uses a mode outside the system");
  if (!spec.shape_encoding)
    for (const auto& g : spec.word.letters())
      if (!spec.palette.contains(g.mode))
        throw std::invalid_argument("palette has no colour for mode " + std::to_string(g.mode + 1));
  // Couplings do not matter for drawing; only the pair structure is checked.
  if (!is_valid_matching(spec.word, spec.matching, ModeSystem::coupled(std::max<std::size_t>(spec.modes, 1))))
    throw std::invalid_argument("matching is not valid for the word");
}

namespace {

std::string marker(const DiagramSpec& spec, const Generator& g, int cx, int cy) {
  const int r = spec.geometry.radius;
  const std::string colour = spec.shape_encoding ? "#000000" : spec.palette.at(g.mode);
  const std::string fill = g.dagger ? colour : "#ffffff";
  const std::string style = " fill=\"" + fill + "\" stroke=\"" + colour + "\" stroke-width=\"2\"/>\n";
  const int shape = spec.shape_encoding ? static_cast<int>(g.mode % 4) : 0;
  auto pt = [](int x, int y) { return std::to_string(x) + "," + std::to_string(y); };
  switch (shape) {
    case 1:
      return "  <rect x=\"" + std::to_string(cx - r) + "\" y=\"" + std::to_string(cy - r) + "\" width=\"" +
             std::to_string(2 * r) + "\" height=\"" + std::to_string(2 * r) + "\"" + style;
    case 2:
      return "  <polygon points=\"" + pt(cx, cy - r) + " " + pt(cx + r, cy) + " " + pt(cx, cy + r) + " " +
             pt(cx - r, cy) + "\"" + style;
    case 3:
      return "  <polygon points=\"" + pt(cx, cy - r) + " " + pt(cx + r, cy + r) + " " + pt(cx - r, cy + r) +
             "\"" + style;
    default:
      return "  <circle cx=\"" + std::to_string(cx) + "\" cy=\"" + std::to_string(cy) + "\" r=\"" +
             std::to_string(r) + "\"" + style;
  }
}

}  // namespace

std::string render_svg(const DiagramSpec& spec) {
  validate(spec);
  const auto& geo = spec.geometry;
  const int count = static_cast<int>(spec.word.size());

  int max_apex = 0;
  for (const auto& [p, q] : spec.matching.pairs)
    max_apex = std::max(max_apex, geo.arc_scale * static_cast<int>(q - p));
  const int top = 10 + max_apex;
  const int baseline = top + geo.radius + 4;
  const int width = geo.pitch * (count + 1);
  const int height = baseline + geo.radius + 24;
  auto x_of = [&](std::size_t pos) { return geo.pitch * (static_cast<int>(pos) + 1); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\">\n";
  if (count > 0)
    out += "  <line x1=\"" + std::to_string(x_of(0)) + "\" y1=\"" + std::to_string(baseline) + "\" x2=\"" +
           std::to_string(x_of(count - 1)) + "\" y2=\"" + std::to_string(baseline) +
           "\" stroke=\"#c0c0c0\" stroke-width=\"1\"/>\n";
  // A quadratic Bezier peaks at half its control-point offset.
  for (const auto& [p, q] : spec.matching.pairs) {
    const int x1 = x_of(p), x2 = x_of(q);
    const int apex = geo.arc_scale * static_cast<int>(q - p);
    out += "  <path class=\"arc\" d=\"M " + std::to_string(x1) + " " + std::to_string(baseline - geo.radius) +
           " Q " + std::to_string((x1 + x2) / 2) + " " + std::to_string(baseline - geo.radius - 2 * apex) + " " +
           std::to_string(x2) + " " + std::to_string(baseline - geo.radius) +
           "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
  }
  for (std::size_t i = 0; i < spec.word.size(); ++i) {
    out += marker(spec, spec.word[i], x_of(i), baseline);
    out += "  <text x=\"" + std::to_string(x_of(i)) + "\" y=\"" + std::to_string(baseline + geo.radius + 18) +
           "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"14\">" + std::to_string(i + 1) +
           "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string render_ascii(const DiagramSpec& spec) {
  validate(spec);
  std::vector<std::string> tokens;
  std::size_t cell = 2;
  for (const auto& g : spec.word.letters()) {
    tokens.push_back(mode_name(g.mode, spec.modes) + (g.dagger ? "+" : ""));
    cell = std::max(cell, tokens.back().size() + 1);
  }
  const std::size_t width = tokens.empty() ? 0 : cell * (tokens.size() - 1) + tokens.back().size();
  auto col = [&](std::size_t pos) { return pos * cell; };

  std::string symbols(width, ' ');
  for (std::size_t i = 0; i < tokens.size(); ++i) symbols.replace(col(i), tokens[i].size(), tokens[i]);

  // Shorter arcs sit lower; each arc owns one level.
  auto arcs = spec.matching.pairs;
  std::stable_sort(arcs.begin(), arcs.end(), [](const auto& a, const auto& b) {
    return a.second - a.first < b.second - b.first;
  });
  const std::size_t levels = arcs.size();
  std::vector<std::string> rows(levels == 0 ? 0 : levels + 1, std::string(width, ' '));
  for (std::size_t level = 1; level <= levels; ++level) {
    const auto [p, q] = arcs[level - 1];
    const std::size_t top = levels - level;
    for (std::size_t c = col(p) + 1; c < col(q); ++c) rows[top][c] = '_';
  }
  for (std::size_t level = 1; level <= levels; ++level) {
    const auto [p, q] = arcs[level - 1];
    for (std::size_t r = levels - level + 1; r <= levels; ++r) rows[r][col(p)] = rows[r][col(q)] = '|';
  }

  std::string out;
  for (auto& row : rows) {
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row + "\n";
  }
  out += symbols + "\n";
  return out;
}

}  // namespace normord
