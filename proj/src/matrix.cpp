#include "dimdata/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace dimdata {

void SparseMat::sort_rows() {
  for (auto& r : row) {
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge duplicate columns
    std::vector<std::pair<int, Rat>> merged;
    for (auto& [c, v] : r) {
      if (!merged.empty() && merged.back().first == c)
        merged.back().second += v;
      else
        merged.emplace_back(c, std::move(v));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& t) { return t.second == 0; }),
                 merged.end());
    r = std::move(merged);
  }
}

namespace {

// c = a - f*b for sorted sparse rows
std::vector<std::pair<int, Rat>> axpy(const std::vector<std::pair<int, Rat>>& a,
                                      const Rat& f,
                                      const std::vector<std::pair<int, Rat>>& b) {
  std::vector<std::pair<int, Rat>> c;
  c.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      c.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Rat v = -f * b[j].second;
      if (v != 0) c.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      Rat v = a[i].second - f * b[j].second;
      if (v != 0) c.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return c;
}

}  // namespace

void SparseEliminator::add_row(std::vector<std::pair<int, Rat>> terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  {
    std::vector<std::pair<int, Rat>> merged;
    for (auto& [c, v] : terms) {
      if (!merged.empty() && merged.back().first == c)
        merged.back().second += v;
      else
        merged.emplace_back(c, std::move(v));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& t) { return t.second == 0; }),
                 merged.end());
    terms = std::move(merged);
  }
  while (!terms.empty()) {
    auto it = pivot_of_col_.find(terms.front().first);
    if (it == pivot_of_col_.end()) break;
    terms = axpy(terms, terms.front().second, pivot_rows_[it->second]);
  }
  if (terms.empty()) return;
  Rat lead = terms.front().second;
  for (auto& [c, v] : terms) v /= lead;
  pivot_of_col_[terms.front().first] = static_cast<int>(pivot_rows_.size());
  pivot_rows_.push_back(std::move(terms));
}

GaussRat gauss_from_string(const std::string& s) {
  // forms accepted: "a", "bi", "a+bi", "a-bi" with rational a, b
  auto pos = s.find_first_of("+-", 1);
  while (pos != std::string::npos && s[pos - 1] == '/') pos = s.find_first_of("+-", pos + 1);
  if (s.size() >= 2 && s.back() == 'i') {
    if (pos == std::string::npos) {
      std::string im = s.substr(0, s.size() - 1);
      if (im.empty() || im == "+") im = "1";
      if (im == "-") im = "-1";
      return GaussRat(Rat(0), rat_from_string(im));
    }
    std::string re = s.substr(0, pos);
    std::string im = s.substr(pos, s.size() - 1 - pos);
    if (im == "+") im = "1";
    if (im == "-") im = "-1";
    return GaussRat(rat_from_string(re), rat_from_string(im));
  }
  return GaussRat(rat_from_string(s));
}

}  // namespace dimdata
