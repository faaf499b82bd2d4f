// Copyright 2026 The imprecise-ror Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ror/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ror/error.hpp"

namespace ror {

Scale Scale::quantitative(std::optional<std::pair<double, double>> range) {
  Scale s;
  s.kind = ScaleKind::quantitative;
  s.range = range;
  return s;
}

Scale Scale::qualitative(std::vector<std::string> labels) {
  Scale s;
  s.kind = ScaleKind::qualitative;
  s.labels = std::move(labels);
  return s;
}

std::optional<double> Scale::rank_of(std::string_view label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<double>(it - labels.begin() + 1);
}

std::optional<std::pair<double, double>> Scale::effective_range() const {
  if (range) return range;
  if (kind == ScaleKind::qualitative && !labels.empty())
    return std::pair{1.0, static_cast<double>(labels.size())};
  return std::nullopt;
}

IntervalEvaluation::IntervalEvaluation(std::vector<double> points)
    : points_(std::move(points)), missing_(false) {}

bool IntervalEvaluation::is_precise() const noexcept {
  if (missing_) return false;
  return std::adjacent_find(points_.begin(), points_.end(),
                            std::not_equal_to<>()) == points_.end();
}

std::size_t PerformanceTable::index_of(std::string_view id) const {
  if (auto a = find(id)) return *a;
  throw Error(ErrorCode::unknown_alternative,
              "unknown alternative '" + std::string(id) + "'");
}

std::optional<std::size_t> PerformanceTable::find(std::string_view id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t PerformanceTable::criterion_index(std::string_view id) const {
  for (std::size_t j = 0; j < criteria_.size(); ++j)
    if (criteria_[j].id == id) return j;
  throw Error(ErrorCode::unknown_criterion,
              "unknown criterion '" + std::string(id) + "'");
}

double PerformanceTable::value(std::size_t a, std::size_t j, int i) const {
  if (i < 1 || i > n_)
    throw Error(ErrorCode::index_out_of_range,
                "indicator index " + std::to_string(i) + " outside 1.." +
                    std::to_string(n_));
  const auto& cell = evaluation(a, j);
  if (cell.is_missing())
    throw Error(ErrorCode::missing_evaluation_unsupported,
                "alternative '" + ids_.at(a) + "' has no evaluation on '" +
                    criteria_.at(j).id + "'");
  return cell.point(i);
}

bool PerformanceTable::has_missing() const noexcept {
  return std::any_of(cells_.begin(), cells_.end(),
                     [](const IntervalEvaluation& c) { return c.is_missing(); });
}

bool PerformanceTable::has_missing(std::size_t a) const {
  for (std::size_t j = 0; j < criteria_.size(); ++j)
    if (evaluation(a, j).is_missing()) return true;
  return false;
}

std::vector<std::size_t> PerformanceTable::reference_set() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < reference_.size(); ++a)
    if (reference_[a]) out.push_back(a);
  return out;
}

void PerformanceTable::require_complete(std::size_t a) const {
  if (a >= ids_.size())
    throw Error(ErrorCode::unknown_alternative,
                "alternative index " + std::to_string(a) + " out of range");
  if (has_missing(a))
    throw Error(ErrorCode::missing_evaluation_unsupported,
                "alternative '" + ids_[a] +
                    "' has missing evaluations; collapse the table to two "
                    "points first");
}

namespace {

std::string cell_path(const std::string& alt, const std::string& crit) {
  return "alternatives." + alt + "." + crit;
}

}  // namespace

PerformanceTable validate_table(const RawProblem& raw) {
  std::vector<std::string> errors;

  if (raw.n < 1) errors.push_back("n: point count must be >= 1");
  if (raw.criteria.empty()) errors.push_back("criteria: at least one criterion required");
  if (raw.alternatives.empty())
    errors.push_back("alternatives: at least one alternative required");

  std::set<std::string> crit_ids;
  for (const auto& c : raw.criteria) {
    if (c.id.empty()) errors.push_back("criteria: empty criterion id");
    if (!crit_ids.insert(c.id).second)
      errors.push_back("criteria." + c.id + ": duplicate criterion id");
    if (c.scale.kind == ScaleKind::qualitative) {
      if (c.scale.labels.size() < 2)
        errors.push_back("criteria." + c.id + ": qualitative scale needs >= 2 labels");
      std::set<std::string> seen(c.scale.labels.begin(), c.scale.labels.end());
      if (seen.size() != c.scale.labels.size())
        errors.push_back("criteria." + c.id + ": duplicate scale label");
    }
    if (c.scale.range && c.scale.range->first > c.scale.range->second)
      errors.push_back("criteria." + c.id + ": range lower bound exceeds upper bound");
  }

  PerformanceTable t;
  t.n_ = raw.n;
  t.criteria_ = raw.criteria;

  std::set<std::string> alt_ids;
  for (const auto& alt : raw.alternatives) {
    if (alt.id.empty()) errors.push_back("alternatives: empty alternative id");
    if (!alt_ids.insert(alt.id).second)
      errors.push_back("alternatives." + alt.id + ": duplicate alternative id");
    t.ids_.push_back(alt.id);
    if (alt.cells.size() != raw.criteria.size()) {
      errors.push_back("alternatives." + alt.id + ": expected " +
                       std::to_string(raw.criteria.size()) + " evaluations, got " +
                       std::to_string(alt.cells.size()));
      for (std::size_t j = 0; j < raw.criteria.size(); ++j)
        t.cells_.push_back(IntervalEvaluation::missing());
      continue;
    }
    for (std::size_t j = 0; j < raw.criteria.size(); ++j) {
      const auto& crit = raw.criteria[j];
      const auto& cell = alt.cells[j];
      const std::string path = cell_path(alt.id, crit.id);
      if (!cell) {
        t.cells_.push_back(IntervalEvaluation::missing());
        continue;
      }
      std::vector<double> pts;
      bool ok = true;
      if (static_cast<int>(cell->size()) != raw.n) {
        errors.push_back(path + ": length " + std::to_string(cell->size()) +
                         " differs from n = " + std::to_string(raw.n));
        ok = false;
      }
      for (const auto& p : *cell) {
        if (const auto* label = std::get_if<std::string>(&p)) {
          if (crit.scale.kind != ScaleKind::qualitative) {
            errors.push_back(path + ": label '" + *label +
                             "' on a quantitative scale");
            ok = false;
          } else if (auto r = crit.scale.rank_of(*label)) {
            pts.push_back(*r);
          } else {
            errors.push_back(path + ": unknown label '" + *label + "'");
            ok = false;
          }
        } else {
          if (crit.scale.kind == ScaleKind::qualitative) {
            errors.push_back(path + ": numeric value on a qualitative scale");
            ok = false;
          } else {
            pts.push_back(std::get<double>(p));
          }
        }
      }
      if (ok && !std::is_sorted(pts.begin(), pts.end())) {
        errors.push_back(path + ": unsorted interval, points must be non-decreasing");
        ok = false;
      }
      t.cells_.push_back(ok ? IntervalEvaluation(std::move(pts))
                            : IntervalEvaluation::missing());
    }
  }

  t.reference_.assign(t.ids_.size(), raw.reference ? false : true);
  if (raw.reference) {
    for (const auto& id : *raw.reference) {
      auto it = std::find(t.ids_.begin(), t.ids_.end(), id);
      if (it == t.ids_.end())
        errors.push_back("reference: unknown alternative '" + id + "'");
      else
        t.reference_[static_cast<std::size_t>(it - t.ids_.begin())] = true;
    }
  }

  if (!errors.empty()) {
    std::ostringstream msg;
    msg << "invalid problem: " << errors.size() << " violation(s), first: " << errors.front();
    throw Error(ErrorCode::validation, msg.str(), std::move(errors));
  }
  return t;
}

PerformanceTable numeric_table(
    int n, const std::vector<std::string>& criteria,
    const std::vector<std::pair<std::string, std::vector<std::vector<double>>>>& rows) {
  RawProblem raw;
  raw.n = n;
  for (const auto& c : criteria) raw.criteria.push_back({c, Scale::quantitative()});
  for (const auto& [id, cells] : rows) {
    RawAlternative alt{id, {}};
    for (const auto& pts : cells) {
      std::vector<RawPoint> p(pts.begin(), pts.end());
      alt.cells.emplace_back(std::move(p));
    }
    raw.alternatives.push_back(std::move(alt));
  }
  return validate_table(raw);
}

int Realization::index_for(std::size_t criterion) const {
  if (const int* i = std::get_if<int>(&selector)) return *i;
  const auto& v = std::get<std::vector<int>>(selector);
  return v.at(criterion);
}

std::vector<double> realize(const PerformanceTable& table, const Realization& r) {
  if (r.base >= table.num_alternatives())
    throw Error(ErrorCode::unknown_alternative,
                "alternative index " + std::to_string(r.base) + " out of range");
  if (const auto* v = std::get_if<std::vector<int>>(&r.selector);
      v && v->size() != table.num_criteria())
    throw Error(ErrorCode::index_out_of_range,
                "per-criterion selector needs " + std::to_string(table.num_criteria()) +
                    " indices");
  std::vector<double> out;
  out.reserve(table.num_criteria());
  for (std::size_t j = 0; j < table.num_criteria(); ++j) {
    const int i = r.index_for(j);
    if (i < 1 || i > table.n())
      throw Error(ErrorCode::index_out_of_range,
                  "indicator index " + std::to_string(i) + " outside 1.." +
                      std::to_string(table.n()));
    const auto& cell = table.evaluation(r.base, j);
    if (!cell.is_missing()) {
      out.push_back(cell.point(i));
      continue;
    }
    if (i != 1 && i != table.n())
      throw Error(ErrorCode::missing_evaluation_unsupported,
                  "only the worst and best realizations exist for missing cell '" +
                      table.alternative_id(r.base) + "'/'" + table.criteria()[j].id + "'");
    auto range = table.criteria()[j].scale.effective_range();
    if (!range)
      throw Error(ErrorCode::range_undeclared,
                  "criterion '" + table.criteria()[j].id + "' has no declared range");
    out.push_back(i == 1 ? range->first : range->second);
  }
  return out;
}

PerformanceTable collapse_to_two_point(const PerformanceTable& table) {
  PerformanceTable t;
  t.n_ = 2;
  t.criteria_ = table.criteria_;
  t.ids_ = table.ids_;
  t.reference_ = table.reference_;
  t.cells_.reserve(table.cells_.size());
  const std::size_t m = table.num_criteria();
  for (std::size_t a = 0; a < table.num_alternatives(); ++a) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto& cell = table.evaluation(a, j);
      if (!cell.is_missing()) {
        auto pts = cell.points();
        t.cells_.emplace_back(std::vector<double>{pts.front(), pts.back()});
        continue;
      }
      auto range = table.criteria_[j].scale.effective_range();
      if (!range)
        throw Error(ErrorCode::range_undeclared,
                    "criterion '" + table.criteria_[j].id +
                        "' has missing cells but no declared range");
      t.cells_.emplace_back(std::vector<double>{range->first, range->second});
    }
  }
  return t;
}

}  // namespace ror
