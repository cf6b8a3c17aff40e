#pragma once

#include "dyck.hpp"
#include "path.hpp"
#include "zelevinsky.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace dyckgrass {

// Draws a set of labeled boxes as touching diamonds: each box center carries
// its label, the four sides are drawn with / and \ so that neighbors share
// edges. Returns the canvas lines top to bottom.
inline std::vector<std::string> render_boxes(const std::vector<Box>& boxes,
                                             const std::vector<char>& labels) {
  if (boxes.empty()) return {"(empty region)"};
  int ymin = boxes[0].y, ymax = boxes[0].y, xmax = boxes[0].x;
  for (const Box& b : boxes) {
    ymin = std::min(ymin, b.y);
    ymax = std::max(ymax, b.y);
    xmax = std::max(xmax, b.x);
  }
  int rows = 2 * (ymax - ymin) + 3;
  int cols = 2 * xmax + 2;
  std::vector<std::string> canvas(rows, std::string(cols, ' '));
  for (size_t k = 0; k < boxes.size(); ++k) {
    const Box& b = boxes[k];
    int r = 2 * (ymax - b.y) + 1;
    int c = 2 * b.x;
    canvas[r][c] = labels[k];
    canvas[r - 1][c - 1] = '/';
    canvas[r - 1][c + 1] = '\\';
    canvas[r + 1][c - 1] = '\\';
    canvas[r + 1][c + 1] = '/';
  }
  for (std::string& line : canvas) {
    size_t e = line.find_last_not_of(' ');
    line.erase(e == std::string::npos ? 0 : e + 1);
  }
  return canvas;
}

inline char column_label(int x) {
  return x < 10 ? static_cast<char>('0' + x) : static_cast<char>('a' + (x - 10));
}

// Region between two paths, every box labeled by its column.
inline std::vector<std::string> render_region(const Path& lower, const Path& upper) {
  Region r = region_boxes(lower, upper);
  std::vector<char> labels;
  for (const Box& b : r.boxes) labels.push_back(column_label(b.x));
  return render_boxes(r.boxes, labels);
}

// A partition of a region, each strip painted with its own letter.
inline std::vector<std::string> render_partition(const DyckPartition& p) {
  std::vector<Box> boxes;
  std::vector<char> labels;
  for (size_t k = 0; k < p.size(); ++k)
    for (const Box& b : p[k]) {
      boxes.push_back(b);
      labels.push_back(static_cast<char>('A' + (k % 26)));
    }
  return render_boxes(boxes, labels);
}

inline std::string label_set_text(const std::set<int>& s) {
  std::ostringstream ss;
  bool first = true;
  for (int k : s) {
    if (!first) ss << ',';
    ss << k;
    first = false;
  }
  return ss.str();
}

// Tensor-notation line for a translation pair:
// R (x)_{R^{1,3}} R^{1} (x)_{R^{1,2}} R^{1} (x)_{R^{1,3}} R^{1,3} (3)
inline std::string render_pair(const TranslationPair& tp) {
  std::ostringstream ss;
  auto factor = [&](const std::set<int>& I) {
    if (I.empty())
      ss << "R";
    else
      ss << "R^{" << label_set_text(I) << "}";
  };
  factor(tp.Ivec.front());
  for (size_t h = 0; h < tp.Jvec.size(); ++h) {
    ss << " (x)_{R^{" << label_set_text(tp.Jvec[h]) << "}} ";
    factor(tp.Ivec[h + 1]);
  }
  ss << " (" << tp.shift << ")";
  return ss.str();
}

}  // namespace dyckgrass
