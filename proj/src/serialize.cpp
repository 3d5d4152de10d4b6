#include "weyldual/serialize.hpp"

#include <sstream>

#include "weyldual/errors.hpp"

namespace weyldual {

Json label_to_json(const Label& a) { return Json(a.coords()); }

Label label_from_json(const Json& j) {
  if (j.is_number_integer()) return Label{j.get<int>()};
  return Label(j.get<std::vector<int>>());
}

Json window_to_json(const Window& w) {
  return Json{{"lo", label_to_json(w.lo)},
              {"hi", label_to_json(w.hi)},
              {"vanish_below", w.vanish_below},
              {"vanish_above", w.vanish_above}};
}

Window window_from_json(const Json& j) {
  Window w{label_from_json(j.at("lo")), label_from_json(j.at("hi")),
           j.at("vanish_below").get<std::vector<bool>>(),
           j.at("vanish_above").get<std::vector<bool>>()};
  if (w.lo.rank() != w.hi.rank() || w.vanish_below.size() != w.lo.rank() ||
      w.vanish_above.size() != w.lo.rank()) {
    throw ParseError("window fields have inconsistent ranks");
  }
  return w;
}

Json matrix_to_json(const ExactMatrix& m) {
  Json entries = Json::array();
  for (const auto& t : m.triplets()) entries.push_back({t.row, t.col, to_string(t.value)});
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ExactMatrix matrix_from_json(const Json& j) {
  std::vector<ExactMatrix::Triplet> t;
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  for (const auto& e : j.at("entries")) {
    const auto r = e.at(0).get<std::size_t>();
    const auto c = e.at(1).get<std::size_t>();
    if (r >= rows || c >= cols) throw ParseError("matrix entry out of range");
    t.push_back({r, c, parse_rational(e.at(2).get<std::string>())});
  }
  return ExactMatrix::from_triplets(rows, cols, std::move(t));
}

namespace {

Json action_to_json(const std::vector<ActionMaps>& maps) {
  Json out = Json::array();
  for (const auto& per_var : maps) {
    Json list = Json::array();
    for (const auto& [a, mat] : per_var) {
      Json item = matrix_to_json(mat);
      item["label"] = label_to_json(a);
      list.push_back(std::move(item));
    }
    out.push_back(std::move(list));
  }
  return out;
}

std::vector<ActionMaps> action_from_json(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw ParseError("action list must have one entry per variable");
  std::vector<ActionMaps> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& item : j[i]) out[i].emplace(label_from_json(item.at("label")), matrix_from_json(item));
  }
  return out;
}

}  // namespace

Json presentation_to_json(const GradedPresentation& m) {
  Json dims = Json::array();
  for (const auto& [a, k] : m.dims()) dims.push_back({{"label", label_to_json(a)}, {"dim", k}});
  Json names = nullptr;
  if (m.basis_names()) {
    names = Json::array();
    for (const auto& [a, list] : *m.basis_names()) {
      names.push_back({{"label", label_to_json(a)}, {"names", list}});
    }
  }
  Json defects = nullptr;
  if (m.euler_defects()) {
    defects = Json::array();
    for (const auto& c : *m.euler_defects()) defects.push_back(label_to_json(c));
  }
  return Json{{"spec", {{"n", m.n()}, {"mode", to_string(m.spec().mode)}}},
              {"window", window_to_json(m.window())},
              {"dims", std::move(dims)},
              {"basis_names", std::move(names)},
              {"euler_defects", std::move(defects)},
              {"x", action_to_json(m.x_maps())},
              {"d", action_to_json(m.d_maps())}};
}

GradedPresentation presentation_from_json(const Json& j) {
  try {
    const GradingSpec spec{j.at("spec").at("n").get<std::size_t>(),
                           parse_grading_mode(j.at("spec").at("mode").get<std::string>())};
    std::map<Label, std::size_t> dims;
    for (const auto& item : j.at("dims")) {
      dims[label_from_json(item.at("label"))] = item.at("dim").get<std::size_t>();
    }
    std::optional<BasisNames> names;
    if (j.contains("basis_names") && !j["basis_names"].is_null()) {
      names.emplace();
      for (const auto& item : j["basis_names"]) {
        (*names)[label_from_json(item.at("label"))] = item.at("names").get<std::vector<std::string>>();
      }
    }
    std::optional<std::set<Label>> defects;
    if (j.contains("euler_defects") && !j["euler_defects"].is_null()) {
      defects.emplace();
      for (const auto& c : j["euler_defects"]) defects->insert(label_from_json(c));
    }
    return GradedPresentation(spec, window_from_json(j.at("window")), std::move(dims),
                              action_from_json(j.at("x"), spec.n),
                              action_from_json(j.at("d"), spec.n), std::move(names),
                              std::move(defects));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

Json table_to_json(const CohomologyTable& t) {
  Json entries = Json::array();
  for (const auto& [key, e] : t.entries) {
    entries.push_back({{"label", label_to_json(key.first)},
                       {"i", key.second},
                       {"dim", e.dim},
                       {"certified", e.certified}});
  }
  Json totals = Json::object();
  for (const auto& [i, tot] : t.totals) {
    totals[std::to_string(i)] = {{"dim", tot.dim}, {"complete", tot.complete}};
  }
  return Json{{"grading_mode", to_string(t.spec.mode)},
              {"n", t.spec.n},
              {"indexing", t.homological ? "homological" : "cohomological"},
              {"window", window_to_json(t.window)},
              {"labels_computed", t.labels_computed},
              {"labels_certified", t.labels_certified},
              {"entries", std::move(entries)},
              {"totals", std::move(totals)}};
}

namespace {

std::string csv_label(const Label& a) {
  std::string s;
  for (std::size_t k = 0; k < a.rank(); ++k) {
    if (k) s += ";";
    s += std::to_string(a[k]);
  }
  return s;
}

}  // namespace

std::string table_to_csv(const CohomologyTable& t) {
  std::ostringstream os;
  os << "label,i,dim,certified\n";
  for (const auto& [key, e] : t.entries) {
    os << csv_label(key.first) << ',' << key.second << ',' << e.dim << ','
       << (e.certified ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string table_to_text(const CohomologyTable& t) {
  std::ostringstream os;
  const char* h = t.homological ? "h_" : "H^";
  os << "grading " << to_string(t.spec.mode) << ", n = " << t.spec.n << ", box "
     << t.window.lo.str() << ".." << t.window.hi.str() << '\n';
  os << "labels: " << t.labels_certified << " certified of " << t.labels_computed << '\n';
  for (const auto& [key, e] : t.entries) {
    os << "  " << h << key.second << " at " << key.first.str() << ": " << e.dim
       << (e.certified ? "" : " (uncertified)") << '\n';
  }
  for (const auto& [i, tot] : t.totals) {
    os << h << i << " = " << tot.dim << (tot.complete ? "" : " (incomplete)") << '\n';
  }
  return os.str();
}

}  // namespace weyldual
