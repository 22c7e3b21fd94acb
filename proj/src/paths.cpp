#include "hsec/paths.hpp"

#include <algorithm>

namespace hsec {

bool PathCandidate::crosses_top() const {
  return std::find(moves.begin(), moves.end(), Move::Top) != moves.end();
}

std::vector<std::string> PathCandidate::labels() const {
  std::vector<std::string> out;
  for (int r : rects) out.push_back("R" + std::to_string(r));
  return out;
}

std::string PathCandidate::notation() const {
  std::string s = "(";
  for (std::size_t i = 0; i < rects.size(); ++i) {
    if (i) s += moves[i - 1] == Move::Top ? " ^ " : ", ";
    s += "R" + std::to_string(rects[i]);
  }
  return s + ")";
}

SaddleConnection SaddleConnection::from_path(const PathCandidate& p) {
  SaddleConnection c;
  c.start = p.start_vertex;
  c.end = p.end_vertex();
  c.dx = p.dx;
  c.dy = p.dy;
  c.slope = p.dy / p.dx;
  c.path = p;
  return c;
}

bool path_less(const PathCandidate& x, const PathCandidate& y) {
  int c = cmp(x.slope(), y.slope());
  if (c != 0) return c < 0;
  c = cmp(x.dx, y.dx);
  if (c != 0) return c < 0;
  if (x.rects != y.rects) return x.rects < y.rects;
  return x.moves < y.moves;
}

bool connection_less(const SaddleConnection& x, const SaddleConnection& y) { return path_less(x.path, y.path); }

bool same_path(const PathCandidate& x, const PathCandidate& y) {
  return x.start_vertex == y.start_vertex && x.rects == y.rects && x.moves == y.moves && x.dx == y.dx &&
         x.dy == y.dy;
}

}  // namespace hsec
